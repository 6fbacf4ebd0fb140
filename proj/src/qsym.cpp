#include "pqsym/qsym.hpp"

#include <stdexcept>

namespace pqsym {

QSymElement QSymElement::unit() {
    QSymElement f(QBasis::M);
    f.add_term(Composition{}, 1);
    return f;
}

QSymElement QSymElement::monomial(const Composition& alpha, Rat coef, QBasis basis) {
    QSymElement f(basis);
    f.add_term(alpha, coef);
    return f;
}

int QSymElement::max_weight() const {
    int w = 0;
    for (const auto& [alpha, c] : terms_) w = std::max(w, alpha.weight());
    return w;
}

bool QSymElement::integral() const {
    for (const auto& [alpha, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

void QSymElement::add_term(const Composition& alpha, const Rat& coef) {
    if (coef == 0) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElement QSymElement::to_basis(QBasis target) const {
    if (target == basis_) return *this;
    return target == QBasis::M ? f_to_m(*this) : m_to_f(*this);
}

QSymElement QSymElement::operator+(const QSymElement& o) const {
    QSymElement rhs = o.to_basis(basis_);
    QSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, c);
    return out;
}

QSymElement QSymElement::operator-(const QSymElement& o) const {
    QSymElement rhs = o.to_basis(basis_);
    QSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, -c);
    return out;
}

QSymElement QSymElement::operator*(const QSymElement& o) const {
    QSymElement a = to_basis(QBasis::M);
    QSymElement b = o.to_basis(QBasis::M);
    QSymElement out(QBasis::M);
    for (const auto& [alpha, ca] : a.terms_)
        for (const auto& [beta, cb] : b.terms_) {
            if (alpha.empty()) {
                out.add_term(beta, ca * cb);
                continue;
            }
            if (beta.empty()) {
                out.add_term(alpha, ca * cb);
                continue;
            }
            for (const auto& [gamma, mult] : qshuffle(alpha, beta))
                out.add_term(gamma, ca * cb * Rat(mult));
        }
    return out;
}

QSymElement operator*(const Rat& c, const QSymElement& f) {
    QSymElement out(f.basis());
    if (c == 0) return out;
    for (const auto& [alpha, v] : f.terms()) out.add_term(alpha, c * v);
    return out;
}

bool QSymElement::operator==(const QSymElement& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return terms_ == o.to_basis(basis_).terms_;
}

QSymElement f_to_m(const QSymElement& f) {
    if (f.basis() == QBasis::M) return f;
    QSymElement out(QBasis::M);
    for (const auto& [alpha, c] : f.terms()) {
        const Rat& coef = c;
        for_each_refinement(alpha, [&](const std::vector<int>& beta) {
            out.add_term(Composition(beta), coef);
        });
    }
    return out;
}

QSymElement m_to_f(const QSymElement& f) {
    if (f.basis() == QBasis::F) return f;
    QSymElement out(QBasis::F);
    for (const auto& [alpha, c] : f.terms()) {
        const Rat& coef = c;
        int len = alpha.length();
        for_each_refinement(alpha, [&](const std::vector<int>& beta) {
            Rat signed_coef = (static_cast<int>(beta.size()) - len) % 2 == 0 ? coef : -coef;
            out.add_term(Composition(beta), signed_coef);
        });
    }
    return out;
}

QSymElement adams_psi(int n, const QSymElement& f) {
    if (n < 1) throw std::invalid_argument("adams_psi requires n >= 1");
    QSymElement g = f.to_basis(QBasis::M);
    QSymElement out(QBasis::M);
    for (const auto& [alpha, c] : g.terms()) out.add_term(alpha.dilated(n), c);
    return out;
}

QSymElement lambda_qsym(int n, const QSymElement& f) {
    if (n < 0) throw std::invalid_argument("lambda_qsym requires n >= 0");
    if (n == 0) return QSymElement::unit();
    QSymElement g = f.to_basis(QBasis::M);
    std::vector<QSymElement> adams;
    adams.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) adams.push_back(adams_psi(i, g));
    return lambda_newton(adams).back();
}

QSymElement sym_e(int n) {
    if (n < 1) throw std::invalid_argument("symmetric injections require n >= 1");
    return QSymElement::monomial(Composition(std::vector<int>(static_cast<size_t>(n), 1)));
}

QSymElement sym_h(int n) {
    if (n < 1) throw std::invalid_argument("symmetric injections require n >= 1");
    QSymElement out(QBasis::M);
    for (const auto& alpha : enumerate_compositions(n)) out.add_term(alpha, 1);
    return out;
}

QSymElement sym_p(int n) {
    if (n < 1) throw std::invalid_argument("symmetric injections require n >= 1");
    return QSymElement::monomial(Composition({n}));
}

QSymElement sym_q(int n) {
    if (n < 1) throw std::invalid_argument("symmetric injections require n >= 1");
    QSymElement out(QBasis::M);
    for (const auto& alpha : enumerate_compositions(n)) {
        Rat coef = 1;
        for (int i = 0; i < alpha.length(); ++i) coef *= 2;
        out.add_term(alpha, coef);
    }
    return out;
}

}  // namespace pqsym

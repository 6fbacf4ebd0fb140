#include "pqsym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pqsym {

TruncatedPolynomial::TruncatedPolynomial(int numvars, int maxdeg)
    : numvars_(numvars), maxdeg_(maxdeg) {
    if (numvars < 0 || maxdeg < 0)
        throw std::invalid_argument("numvars and maxdeg must be >= 0");
}

TruncatedPolynomial TruncatedPolynomial::unit(int numvars, int maxdeg) {
    TruncatedPolynomial p(numvars, maxdeg);
    p.add_term(Exponents(static_cast<size_t>(numvars), 0), 1);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(int numvars, int maxdeg, int index, int power) {
    if (index < 1 || index > numvars) throw std::invalid_argument("variable index out of range");
    TruncatedPolynomial p(numvars, maxdeg);
    Exponents e(static_cast<size_t>(numvars), 0);
    e[static_cast<size_t>(index - 1)] = power;
    p.add_term(std::move(e), 1);
    return p;
}

void TruncatedPolynomial::add_term(Exponents e, const Rat& coef) {
    if (static_cast<int>(e.size()) != numvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    int deg = std::accumulate(e.begin(), e.end(), 0);
    for (int v : e)
        if (v < 0) throw std::invalid_argument("negative exponent");
    if (deg > maxdeg_ || coef == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void check_compatible(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    if (a.numvars() != b.numvars() || a.maxdeg() != b.maxdeg())
        throw std::invalid_argument("mismatched truncation parameters");
}

}  // namespace

TruncatedPolynomial TruncatedPolynomial::operator+(const TruncatedPolynomial& o) const {
    check_compatible(*this, o);
    TruncatedPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::operator-(const TruncatedPolynomial& o) const {
    check_compatible(*this, o);
    TruncatedPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::operator*(const TruncatedPolynomial& o) const {
    check_compatible(*this, o);
    TruncatedPolynomial out(numvars_, maxdeg_);
    std::vector<std::pair<const Exponents*, int>> rhs;
    rhs.reserve(o.terms_.size());
    for (const auto& [eb, cb] : o.terms_)
        rhs.emplace_back(&eb, std::accumulate(eb.begin(), eb.end(), 0));
    Exponents e(static_cast<size_t>(numvars_));
    for (const auto& [ea, ca] : terms_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        size_t idx = 0;
        for (const auto& [eb, cb] : o.terms_) {
            int db = rhs[idx++].second;
            if (da + db > maxdeg_) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

TruncatedPolynomial operator*(const Rat& c, const TruncatedPolynomial& f) {
    TruncatedPolynomial out(f.numvars(), f.maxdeg());
    if (c == 0) return out;
    for (const auto& [e, v] : f.terms()) out.add_term(e, c * v);
    return out;
}

namespace {

void combinations_rec(int k, int r, int start, std::vector<int>& pick,
                      const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(pick.size()) == r) {
        visit(pick);
        return;
    }
    for (int i = start; i <= k - (r - static_cast<int>(pick.size())) + 1; ++i) {
        pick.push_back(i);
        combinations_rec(k, r, i + 1, pick, visit);
        pick.pop_back();
    }
}

}  // namespace

namespace {

// Realization without the faithfulness guard: used for the extraction
// cross-check, where k may be smaller than the weight.
TruncatedPolynomial realize_m_at(const QSymElement& g, int k, int maxdeg);

}  // namespace

TruncatedPolynomial realize_qsym(const QSymElement& f, int k) {
    QSymElement g = f.to_basis(QBasis::M);
    int maxdeg = g.max_weight();
    if (k < maxdeg)
        throw std::invalid_argument("need k >= " + std::to_string(maxdeg) +
                                    " variables for a faithful realization");
    return realize_m_at(g, k, maxdeg);
}

namespace {

TruncatedPolynomial realize_m_at(const QSymElement& g, int k, int maxdeg) {
    TruncatedPolynomial out(k, maxdeg);
    for (const auto& [alpha, c] : g.terms()) {
        int r = alpha.length();
        if (r == 0) {
            out.add_term(TruncatedPolynomial::Exponents(static_cast<size_t>(k), 0), c);
            continue;
        }
        if (r > k) continue;  // no strictly increasing support in k variables
        std::vector<int> pick;
        combinations_rec(k, r, 1, pick, [&](const std::vector<int>& idx) {
            TruncatedPolynomial::Exponents e(static_cast<size_t>(k), 0);
            for (int j = 0; j < r; ++j)
                e[static_cast<size_t>(idx[static_cast<size_t>(j)] - 1)] = alpha.parts()[static_cast<size_t>(j)];
            out.add_term(std::move(e), c);
        });
    }
    return out;
}

}  // namespace

TruncatedPolynomial realize_pqsym(const PQSymElement& f, int k) {
    return realize_qsym(embed_to_qsym(f), k);
}

QSymElement extract_qsym(const TruncatedPolynomial& p, int k) {
    if (k != p.numvars()) throw std::invalid_argument("variable count mismatch");
    QSymElement out(QBasis::M);
    for (const auto& [e, c] : p.terms()) {
        // Canonical support: exponents positive on a prefix 1..r.
        int r = 0;
        bool canonical = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                if (static_cast<int>(i) != r) {
                    canonical = false;
                    break;
                }
                ++r;
            }
        }
        if (!canonical) continue;
        std::vector<int> parts(e.begin(), e.begin() + r);
        out.add_term(Composition(std::move(parts)), c);
    }
    // Quasisymmetry check: the canonical-support readings must reproduce
    // the whole polynomial.
    TruncatedPolynomial back(k, p.maxdeg());
    TruncatedPolynomial realized = realize_m_at(out.to_basis(QBasis::M), k, p.maxdeg());
    for (const auto& [e, c] : realized.terms()) back.add_term(e, c);
    if (!(back == p)) {
        TruncatedPolynomial diff = p - back;
        std::ostringstream msg;
        msg << "input is not quasisymmetric: offending exponent vector (";
        const auto& [e, c] = *diff.terms().begin();
        for (size_t i = 0; i < e.size(); ++i) msg << (i ? "," : "") << e[i];
        msg << ") with coefficient mismatch " << rat_to_string(c);
        throw std::invalid_argument(msg.str());
    }
    return out;
}

TruncatedPolynomial adams_substitute(const TruncatedPolynomial& p, int n) {
    if (n < 1) throw std::invalid_argument("adams_substitute requires n >= 1");
    TruncatedPolynomial out(p.numvars(), p.maxdeg() * n);
    for (const auto& [e, c] : p.terms()) {
        TruncatedPolynomial::Exponents scaled = e;
        for (int& v : scaled) v *= n;
        out.add_term(std::move(scaled), c);
    }
    return out;
}

bool check_identity(const QSymElement& lhs, const QSymElement& rhs, int k) {
    int deg = std::max(lhs.max_weight(), rhs.max_weight());
    if (k < deg) throw std::invalid_argument("k too small for the weights involved");
    // Realize both at the common degree bound.
    auto pad = [&](const QSymElement& f) {
        TruncatedPolynomial p = realize_qsym(f, k);
        TruncatedPolynomial q(k, deg);
        for (const auto& [e, c] : p.terms()) q.add_term(e, c);
        return q;
    };
    return pad(lhs) == pad(rhs);
}

bool check_identity(const PQSymElement& lhs, const PQSymElement& rhs, int k) {
    return check_identity(embed_to_qsym(lhs), embed_to_qsym(rhs), k);
}

std::vector<TruncatedPolynomial> q_generating_series(int k, int maxdeg) {
    // Series in z with truncated-polynomial coefficients; each variable
    // contributes (1+x_i z)/(1-x_i z) = 1 + 2 Σ_{m>=1} x_i^m z^m.
    std::vector<TruncatedPolynomial> series;
    series.reserve(static_cast<size_t>(maxdeg) + 1);
    series.push_back(TruncatedPolynomial::unit(k, maxdeg));
    for (int d = 1; d <= maxdeg; ++d) series.emplace_back(k, maxdeg);
    for (int i = 1; i <= k; ++i) {
        std::vector<TruncatedPolynomial> next;
        next.reserve(series.size());
        for (int d = 0; d <= maxdeg; ++d) {
            TruncatedPolynomial acc = series[static_cast<size_t>(d)];
            for (int m = 1; m <= d; ++m) {
                acc = acc + Rat(2) * (series[static_cast<size_t>(d - m)] *
                                      TruncatedPolynomial::variable(k, maxdeg, i, m));
            }
            next.push_back(std::move(acc));
        }
        series = std::move(next);
    }
    return series;
}

}  // namespace pqsym

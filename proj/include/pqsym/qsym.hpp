#ifndef PQSYM_QSYM_HPP
#define PQSYM_QSYM_HPP

#include "pqsym/composition.hpp"
#include "pqsym/quasishuffle.hpp"
#include "pqsym/symfun.hpp"

#include <map>

namespace pqsym {

enum class QBasis { M, F };

// Element of QSym over exact rationals, tagged with its basis. M is the
// computational basis; F exists for input/output and for the
// descent-to-peak map.
class QSymElement {
public:
    using Terms = std::map<Composition, Rat, WllLess>;

    explicit QSymElement(QBasis basis = QBasis::M) : basis_(basis) {}

    static QSymElement zero(QBasis basis = QBasis::M) { return QSymElement(basis); }
    static QSymElement unit();
    static QSymElement monomial(const Composition& alpha, Rat coef = 1,
                                QBasis basis = QBasis::M);

    QBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_weight() const;
    bool integral() const;

    void add_term(const Composition& alpha, const Rat& coef);

    QSymElement to_basis(QBasis target) const;

    QSymElement operator+(const QSymElement& o) const;
    QSymElement operator-(const QSymElement& o) const;
    QSymElement operator*(const QSymElement& o) const;
    friend QSymElement operator*(const Rat& c, const QSymElement& f);
    bool operator==(const QSymElement& o) const;

private:
    QBasis basis_;
    Terms terms_;
};

QSymElement f_to_m(const QSymElement& f);
QSymElement m_to_f(const QSymElement& f);

// Adams operation Ψ^n: M_α -> M_{n·α}.
QSymElement adams_psi(int n, const QSymElement& f);

// λ^n(f) via the Newton recursion over the QSym carrier; λ^n(M_α) is the
// Hazewinkel generator e_n(α).
QSymElement lambda_qsym(int n, const QSymElement& f);

// Λ inside QSym: e_n = M_{(1^n)}, h_n = Σ M_α, p_n = M_{(n)},
// q_n = Σ 2^{ℓ(α)} M_α.
QSymElement sym_e(int n);
QSymElement sym_h(int n);
QSymElement sym_p(int n);
QSymElement sym_q(int n);

}  // namespace pqsym

#endif

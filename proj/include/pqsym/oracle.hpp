#ifndef PQSYM_ORACLE_HPP
#define PQSYM_ORACLE_HPP

#include "pqsym/pqsym.hpp"

#include <map>
#include <vector>

namespace pqsym {

// Exact truncated polynomial in x_1..x_k: the ground-truth realization
// of every algebraic claim. Keys are full-length exponent vectors; terms
// above the degree bound are dropped on multiplication.
class TruncatedPolynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rat>;

    TruncatedPolynomial(int numvars, int maxdeg);

    static TruncatedPolynomial unit(int numvars, int maxdeg);
    static TruncatedPolynomial variable(int numvars, int maxdeg, int index, int power = 1);

    int numvars() const { return numvars_; }
    int maxdeg() const { return maxdeg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents e, const Rat& coef);

    TruncatedPolynomial operator+(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator-(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator*(const TruncatedPolynomial& o) const;
    friend TruncatedPolynomial operator*(const Rat& c, const TruncatedPolynomial& f);
    friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

private:
    int numvars_;
    int maxdeg_;
    Terms terms_;
};

// M_α = Σ_{i_1<...<i_r} x^{α}; requires k >= weight so the expansion is
// faithful. Degree bound = max component weight.
TruncatedPolynomial realize_qsym(const QSymElement& f, int k);
TruncatedPolynomial realize_pqsym(const PQSymElement& f, int k);

// Reads M-coefficients off the canonical supports x_1^{a_1}...x_r^{a_r}
// and verifies the input was quasisymmetric by re-realizing.
QSymElement extract_qsym(const TruncatedPolynomial& p, int k);

// x_j -> x_j^n.
TruncatedPolynomial adams_substitute(const TruncatedPolynomial& p, int n);

bool check_identity(const QSymElement& lhs, const QSymElement& rhs, int k);
bool check_identity(const PQSymElement& lhs, const PQSymElement& rhs, int k);

// Coefficients of z^0..z^maxdeg in Π_{i<=k} (1+x_i z)/(1-x_i z); the
// generating-function side of the q_n definition.
std::vector<TruncatedPolynomial> q_generating_series(int k, int maxdeg);

}  // namespace pqsym

#endif

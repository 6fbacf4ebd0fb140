#ifndef PQSYM_STRUCTURE_HPP
#define PQSYM_STRUCTURE_HPP

#include "pqsym/pqsym.hpp"

#include <map>
#include <string>
#include <vector>

namespace pqsym {

// q_n(α) as an abstract symbol: α an elementary odd composition, n >= 1.
struct GeneratorSymbol {
    Composition alpha;
    int degree = 1;

    GeneratorSymbol(Composition a, int n);
    int weight() const { return degree * alpha.weight(); }
    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

// Product Π q_{λ_α}(α): finitely many base compositions, each carrying an
// exponent partition. Factors are kept sorted (wll on α) for canonical
// equality.
class GeneratorMonomial {
public:
    using Factors = std::vector<std::pair<Composition, Partition>>;

    GeneratorMonomial() = default;  // the empty product
    explicit GeneratorMonomial(const GeneratorSymbol& s);
    static GeneratorMonomial from_factors(Factors factors);

    const Factors& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int weight() const;
    bool all_strict() const;  // every λ_α strict
    bool all_odd() const;     // every λ_α with odd parts

    GeneratorMonomial operator*(const GeneratorMonomial& o) const;
    friend bool operator==(const GeneratorMonomial&, const GeneratorMonomial&) = default;

private:
    Factors factors_;
};

int generator_monomial_compare(const GeneratorMonomial& a, const GeneratorMonomial& b);

struct GeneratorMonomialLess {
    bool operator()(const GeneratorMonomial& a, const GeneratorMonomial& b) const {
        return generator_monomial_compare(a, b) < 0;
    }
};

// Rational combination of generator monomials.
class GeneratorPolynomial {
public:
    using Terms = std::map<GeneratorMonomial, Rat, GeneratorMonomialLess>;

    GeneratorPolynomial() = default;
    static GeneratorPolynomial zero() { return {}; }
    static GeneratorPolynomial unit();
    static GeneratorPolynomial monomial(GeneratorMonomial m, Rat coef = 1);
    static GeneratorPolynomial symbol(const GeneratorSymbol& s, Rat coef = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool integral() const;

    void add_term(GeneratorMonomial m, const Rat& coef);

    GeneratorPolynomial operator+(const GeneratorPolynomial& o) const;
    GeneratorPolynomial operator-(const GeneratorPolynomial& o) const;
    GeneratorPolynomial operator*(const GeneratorPolynomial& o) const;
    friend GeneratorPolynomial operator*(const Rat& c, const GeneratorPolynomial& f);
    friend bool operator==(const GeneratorPolynomial&, const GeneratorPolynomial&) = default;

private:
    Terms terms_;
};

// Lyndon elementary odd compositions of the given weight, descending wll.
// This is the resolved index set of the structure theorem: the counting
// bijection β -> (gcd, reduced β) runs over Lyndon words, and the
// rank/lattice checks adjudicate the choice.
std::vector<Composition> lyndon_elementary_odd(int weight);

// Weight-n monomials with every λ_α strict over the resolved index set;
// the count matches f_{n-1} (checked by verify_completeness).
std::vector<GeneratorMonomial> enumerate_zb_basis(int n);

// Weight-n monomials over all elementary odd α read literally, Lyndon or
// not. Strictly larger than the basis; retained so the coincidences can
// be exhibited rather than assumed.
std::vector<GeneratorMonomial> enumerate_zb_candidates(int n);

// Weight-n monomials in odd-degree generators (the rational-basis form).
std::vector<GeneratorMonomial> enumerate_odd_monomials(int n);

// Weight-n monomials with strict exponent partitions over a fixed list
// of base compositions.
std::vector<GeneratorMonomial> enumerate_strict_monomials_over(
    const std::vector<Composition>& bases, int n);

// Rank over Q of the L-expansions of homogeneous weight-n monomials.
int expansion_rank(const std::vector<GeneratorMonomial>& monomials, int n);

// Substitute q_n(α) = λ̃^n(L_α) and multiply out in PQSym (L basis).
PQSymElement expand_generator_poly(const GeneratorPolynomial& p);
PQSymElement expand_generator_monomial(const GeneratorMonomial& m);

// Reducer for the wll-largest index: a generator polynomial whose
// L-expansion has leading term L_beta with coefficient exactly 1,
// assembled case-by-case from the CFL factorization of beta.
GeneratorPolynomial leading_reducer(const Composition& beta);

// Proof-following decomposition: peel the wll-largest surviving index
// with its reducer until nothing is left. expand(result) == input.
GeneratorPolynomial decompose_inductive(const PQSymElement& f);

// Canonical form: every exponent partition straightened strict via the
// Euler relations (per base composition).
GeneratorPolynomial straighten_generator(const GeneratorPolynomial& p);

// Exact linear solve against the L-expansions of the weight-graded basis
// monomials. Integer inputs must yield integer coordinates.
GeneratorPolynomial decompose_zb(const PQSymElement& f);

// Σ_{i=0}^n (-1)^i q_i(α) q_{n-i}(α) == 0 in the L basis.
bool verify_euler_relations(const Composition& alpha, int n);

struct CompletenessReport {
    int n = 0;
    Int expected_rank;   // f_{n-1}
    int basis_size = 0;  // enumerated monomials
    int rank = 0;        // rank of the L-expansion matrix over Q
    Int det;             // determinant of the square matrix
    bool lattice_full = false;
    bool pass = false;
};

// Rank f_{n-1} plus full-integer-lattice check (|det| = 1) for the
// weight-n basis monomials.
CompletenessReport verify_completeness(int n);

}  // namespace pqsym

#endif

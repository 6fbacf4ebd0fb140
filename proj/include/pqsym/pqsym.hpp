#ifndef PQSYM_PQSYM_HPP
#define PQSYM_PQSYM_HPP

#include "pqsym/qsym.hpp"

#include <optional>

namespace pqsym {

enum class PBasis { L, K };

// Element of PQSym over exact rationals, indexed by odd compositions.
// L (monomial peak functions, L_α = ϑ(M_α)) is the computational basis;
// K (Stembridge peak functions, K_α = K_{S_α}) is for input/output.
class PQSymElement {
public:
    using Terms = std::map<Composition, Rat, WllLess>;

    explicit PQSymElement(PBasis basis = PBasis::L) : basis_(basis) {}

    static PQSymElement zero(PBasis basis = PBasis::L) { return PQSymElement(basis); }
    static PQSymElement unit();
    static PQSymElement monomial(const Composition& alpha, Rat coef = 1,
                                 PBasis basis = PBasis::L);

    PBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_weight() const;
    bool integral() const;

    void add_term(const Composition& alpha, const Rat& coef);

    PQSymElement to_basis(PBasis target) const;

    PQSymElement operator+(const PQSymElement& o) const;
    PQSymElement operator-(const PQSymElement& o) const;
    PQSymElement operator*(const PQSymElement& o) const;
    friend PQSymElement operator*(const Rat& c, const PQSymElement& f);
    bool operator==(const PQSymElement& o) const;

private:
    PBasis basis_;
    Terms terms_;
};

// Stembridge's descent-to-peak map, from its defining formula
// F_α -> K_{P(α)}; M-basis input goes through the (streamed) expansion
// over refinements. Output in the K basis.
PQSymElement theta(const QSymElement& f);

// The signed subset-sum conversion over peak-set containment; it is an
// involution, so both directions share one implementation.
PQSymElement k_to_l(const PQSymElement& f);
PQSymElement l_to_k(const PQSymElement& f);

// Injective algebra map into QSym via
// K_P = Σ_{P ⊆ D(α) ∪ (D(α)+1)} 2^{ℓ(α)} M_α.
QSymElement embed_to_qsym(const PQSymElement& f);

// Adams operation Φ^n: L_α -> L_{n·α} for odd n, 0 for even n.
PQSymElement adams_phi(int n, const PQSymElement& f);

// λ̃^n(f) via the Newton recursion with Adams values Φ^i(f).
PQSymElement lambda_tilde(int n, const PQSymElement& f);

// q_n(α) := λ̃^n(L_α); memoized, α odd.
PQSymElement qn_generator(const Composition& alpha, int n);

// Stembridge's peak function through the fundamental basis:
// K_P = 2^{|P|+1} Σ_{P ⊆ D(α) △ (D(α)+1)} F_α. Cross-checked against the
// M-basis formula in the verification suites.
QSymElement k_in_fundamental(const PeakSet& p);

// Composition-level image of ϑ: nullopt when the last part is even,
// otherwise the block-sum composition with its sign
// (-1)^{ℓ(γ)+ℓ(ϑ(γ))}. This is the reference form of the kernel law;
// the map itself is computed from the F-basis definition.
std::optional<std::pair<int, Composition>> theta_block_image(const Composition& gamma);

// (-1)^{|S_α|}, the sign relating L_α to Hsiao's η_α.
int eta_sign(const Composition& alpha);

}  // namespace pqsym

#endif

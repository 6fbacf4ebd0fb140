#ifndef PQSYM_SYMFUN_HPP
#define PQSYM_SYMFUN_HPP

#include "pqsym/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pqsym {

// Partition = multiset of positive integers, kept sorted descending.
using Partition = std::vector<int>;

Partition normalized_partition(Partition p);
bool is_strict_partition(const Partition& p);
bool is_odd_partition(const Partition& p);
int partition_weight(const Partition& p);
std::vector<Partition> strict_partitions_of(int n);
std::vector<Partition> odd_partitions_of(int n);

// Polynomial in the Newton power sums p_1, p_2, ...; keys are the index
// multisets of the monomials. The Γ_Q coordinates use only odd indices.
class PowerSumPolynomial {
public:
    using Terms = std::map<Partition, Rat>;

    PowerSumPolynomial() = default;
    static PowerSumPolynomial zero() { return {}; }
    static PowerSumPolynomial unit();
    static PowerSumPolynomial monomial(Partition p, Rat coef = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool odd_support() const;

    void add_term(Partition p, const Rat& coef);

    PowerSumPolynomial operator+(const PowerSumPolynomial& o) const;
    PowerSumPolynomial operator-(const PowerSumPolynomial& o) const;
    PowerSumPolynomial operator*(const PowerSumPolynomial& o) const;
    friend PowerSumPolynomial operator*(const Rat& c, const PowerSumPolynomial& f);
    friend bool operator==(const PowerSumPolynomial&, const PowerSumPolynomial&) = default;

private:
    Terms terms_;
};

using OddPowerSumPolynomial = PowerSumPolynomial;

// Formal polynomial in the generators q_1, q_2, ...; same container with
// keys read as q-index multisets.
class QGeneratorPolynomial {
public:
    using Terms = std::map<Partition, Rat>;

    QGeneratorPolynomial() = default;
    static QGeneratorPolynomial zero() { return {}; }
    static QGeneratorPolynomial unit();
    static QGeneratorPolynomial monomial(Partition p, Rat coef = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Partition p, const Rat& coef);

    QGeneratorPolynomial operator+(const QGeneratorPolynomial& o) const;
    QGeneratorPolynomial operator-(const QGeneratorPolynomial& o) const;
    QGeneratorPolynomial operator*(const QGeneratorPolynomial& o) const;
    friend QGeneratorPolynomial operator*(const Rat& c, const QGeneratorPolynomial& f);
    friend bool operator==(const QGeneratorPolynomial&, const QGeneratorPolynomial&) = default;

private:
    Terms terms_;
};

// q_n in odd power sums, via the recursion n·q_n = Σ_{i odd} 2 p_i q_{n-i}
// (logarithmic derivative of the generating function).
OddPowerSumPolynomial q_in_p(int n);

// p_n (n odd) as a rational polynomial in q_1, q_3, q_5, ...
QGeneratorPolynomial p_in_q(int n);

// Σ_{i=0}^n (-1)^i q_i q_{n-i} as a formal q-polynomial (q_0 = 1).
QGeneratorPolynomial euler_relation(int n);

// Rewrite repeated q-indices with the Euler relations until every
// monomial is indexed by a strict partition. Value-preserving modulo the
// relation ideal; idempotent.
QGeneratorPolynomial straighten_strict(const QGeneratorPolynomial& f);

// p_m -> p_{mg}; g must be odd so Γ coordinates are preserved.
OddPowerSumPolynomial plethysm_pg(const OddPowerSumPolynomial& f, int g);

// θ at the power-sum level: p_n -> (1-(-1)^n) p_n, extended as a ring map.
PowerSumPolynomial theta_p(const PowerSumPolynomial& f);

// Expand a q-polynomial into power sums (each q_m via q_in_p).
PowerSumPolynomial substitute_q_to_p(const QGeneratorPolynomial& f);

// q_n ∘ p_g written back in the odd q generators (rational coefficients).
QGeneratorPolynomial q_compose_pg_in_q(int n, int g);

// Ψ_n as the integral Newton polynomial in λ_1..λ_n (keys reused as
// λ-index multisets).
QGeneratorPolynomial psi_in_lambda(int n);

// Newton recursion n·λ^n = Σ_{i=1}^n (-1)^{i-1} λ^{n-i} Ψ^i over any
// commutative Q-algebra carrier: adams[i-1] = Ψ^i, returns λ^1..λ^n.
// The carrier needs +, * and Rat scaling via operator*(Rat, T).
template <class T>
std::vector<T> lambda_newton(const std::vector<T>& adams) {
    std::vector<T> lam;
    lam.reserve(adams.size());
    for (size_t k = 1; k <= adams.size(); ++k) {
        T acc = adams[k - 1];  // i = k term: λ^0 Ψ^k
        if (k % 2 == 0) acc = Rat(-1) * acc;
        for (size_t i = 1; i < k; ++i) {
            T term = lam[k - i - 1] * adams[i - 1];
            if (i % 2 == 0) term = Rat(-1) * term;
            acc = acc + term;
        }
        lam.push_back(Rat(1, static_cast<long>(k)) * acc);
    }
    return lam;
}

// Inverse direction, division-free:
// Ψ^n = (-1)^{n-1} (n λ^n - Σ_{i=1}^{n-1} (-1)^{i-1} λ^{n-i} Ψ^i).
template <class T>
std::vector<T> adams_from_lambda(const std::vector<T>& lambdas) {
    std::vector<T> psi;
    psi.reserve(lambdas.size());
    for (size_t n = 1; n <= lambdas.size(); ++n) {
        T acc = Rat(static_cast<long>(n)) * lambdas[n - 1];
        for (size_t i = 1; i < n; ++i) {
            T term = lambdas[n - i - 1] * psi[i - 1];
            if (i % 2 == 1) term = Rat(-1) * term;
            acc = acc + term;
        }
        if (n % 2 == 0) acc = Rat(-1) * acc;
        psi.push_back(acc);
    }
    return psi;
}

}  // namespace pqsym

#endif

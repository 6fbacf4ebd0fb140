#ifndef PQSYM_COMPOSITION_HPP
#define PQSYM_COMPOSITION_HPP

#include "pqsym/rational.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqsym {

// Ordered tuple of positive integers; the universal index type of the
// library. The empty composition is the unit index.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition parse(std::string_view text);  // "[1,4,2,3]" or "[]"

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool all_odd() const;
    bool last_part_even() const;  // membership in C_e
    int parts_gcd() const;        // 0 for the empty composition

    Composition concat(const Composition& other) const;
    Composition dilated(int k) const;   // k·α
    Composition repeated(int r) const;  // α^{*r}

    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// Lexicographic order from the Lyndon-word machinery: first strict
// difference decides, otherwise the longer word is the larger one.
int lex_compare(const Composition& a, const Composition& b);

// Total order: weight first, then length, then lexicographic.
int wll_compare(const Composition& a, const Composition& b);

struct WllLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return wll_compare(a, b) < 0;
    }
};

struct DescentSet {
    int n = 0;
    std::vector<int> elements;  // strictly increasing subset of [n-1]
    friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

// Subset of [2, n-1] with no two consecutive members.
struct PeakSet {
    int n = 0;
    std::vector<int> elements;
    friend bool operator==(const PeakSet&, const PeakSet&) = default;
};

DescentSet descent_set(const Composition& alpha);
Composition composition_from_descents(const DescentSet& d);
PeakSet peak_set(const Composition& alpha);

// Bijection machinery between odd compositions of n and peak subsets of
// [n-1]. hat() maps each part 2i+1 to i twos followed by a one.
Composition hat(const Composition& alpha);
PeakSet odd_to_peak(const Composition& alpha);
Composition peak_to_odd(const PeakSet& p);

// Λ(α): the unique odd composition with the same peak set as α.
Composition lambda_odd(const Composition& alpha);

bool is_lyndon(const Composition& alpha);

struct CFLFactorization {
    // Nonincreasing Lyndon factors grouped as (word, multiplicity),
    // strictly decreasing in lex order.
    std::vector<std::pair<Composition, int>> factors;
};

CFLFactorization cfl_factorize(const Composition& alpha);

// (gcd of parts, composition divided by it).
std::pair<int, Composition> reduce_elementary(const Composition& alpha);

bool is_elementary(const Composition& alpha);

// All compositions of n, in ascending wll order.
std::vector<Composition> enumerate_compositions(int n);

// All odd compositions of n, in descending wll order; count is f_{n-1}.
std::vector<Composition> enumerate_odd_compositions(int n);

// f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}.
Int fibonacci(int n);

// Visit every refinement β ≤ γ (each part split into a composition of
// itself), streaming; β buffers are reused between calls.
void for_each_refinement(const Composition& gamma,
                         const std::function<void(const std::vector<int>&)>& visit);

}  // namespace pqsym

#endif

#ifndef PQSYM_SUITES_HPP
#define PQSYM_SUITES_HPP

#include "pqsym/structure.hpp"

#include <string>
#include <vector>

namespace pqsym {

// One verification property: how many instances ran and which failed.
// Failures carry reproducer expressions in the CLI syntax.
struct CheckResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Fibonacci dimensions |C_od(n)| = f_{n-1}.
CheckResult check_fibonacci_dimensions(int max_n);
// Rank + integer-lattice completeness of the weight-graded basis.
CheckResult check_basis_completeness(int max_n);
// decompose round-trips plus agreement of the two routes.
CheckResult check_decomposition_roundtrip(int max_weight);
// Generator Euler relations Σ (-1)^i q_i(α) q_{n-i}(α) = 0.
CheckResult check_euler_relations(int max_weight);
// Leading-term law for q_n(α), Lyndon α: top term α^{*n}, coefficient 1,
// all coefficients integral.
CheckResult check_leading_term_law(int max_weight);
// ϑ is multiplicative on M-basis products.
CheckResult check_theta_ring_hom(int max_pair_weight);
// Kernel/sign law for ϑ(M_γ).
CheckResult check_theta_kernel_law(int max_weight);
// Ψ^m Ψ^n = Ψ^{mn}, ϑΨ^n = Φ^n ϑ, Φ^even = 0.
CheckResult check_adams_laws(int max_weight, int max_mn);
// Realization concordance: extract/realize round-trips, realized
// products in both rings, realized Adams substitution. vars = 0 uses
// twice the weight bound (enough for every product realized).
CheckResult check_oracle_concordance(int max_weight, int vars = 0);
// Π (1+x_i z)/(1-x_i z) against the q_n injections.
CheckResult check_generating_function(int maxdeg);
// Stembridge K_P: fundamental-basis form against the M-basis form.
CheckResult check_peak_function_forms(int max_n);
// Σ (-1)^i q_i q_{n-i} realizes to zero.
CheckResult check_scalar_euler_realized(int max_n);
// Pinned values: λ̃^n(q_1) = q_n, the L_(3) decomposition, ϑ(h_n) = q_n.
CheckResult check_named_values();
// Mixed monomials over two distinct bases stay independent.
CheckResult check_tensor_independence(int alpha_weight, int max_weight);
// Odd-degree generator monomials reach full rank f_{n-1}.
CheckResult check_odd_generator_freeness(int max_n);

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> results;
    int total_checks() const;
    bool pass() const;
};

std::vector<std::string> suite_names();

// max_weight = 0 picks each suite's standard range; vars = 0 sizes the
// oracle's variable count from the weights involved.
SuiteResult run_suite(const std::string& name, int max_weight, int vars = 0);

}  // namespace pqsym

#endif

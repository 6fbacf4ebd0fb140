// Acceptance suite: every structural claim the library stands on, run at
// the standard desk-scale ranges with exact arithmetic. Prints one line
// per criterion; exits nonzero if any fail.

#include "pqsym/suites.hpp"

#include <chrono>
#include <iostream>
#include <vector>

using namespace pqsym;

namespace {

int failures_total = 0;

void report(int number, const std::string& title, const std::vector<CheckResult>& results) {
    int checks = 0;
    std::vector<std::string> failures;
    for (const auto& r : results) {
        checks += r.checks;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    bool ok = failures.empty();
    if (!ok) ++failures_total;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " ("
              << checks << " checks)\n";
    for (size_t i = 0; i < failures.size() && i < 5; ++i)
        std::cout << "        " << failures[i] << "\n";
    if (failures.size() > 5)
        std::cout << "        ... and " << failures.size() - 5 << " more\n";
    std::cout.flush();
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();

    report(1, "Fibonacci dimensions of the odd-composition grading, n <= 14",
           {check_fibonacci_dimensions(14)});

    report(2, "integer-lattice completeness of the generator basis, n <= 9",
           {check_basis_completeness(9)});

    report(3, "decomposition round-trips with integral coordinates, weight <= 9",
           {check_decomposition_roundtrip(9)});

    report(4, "generator Euler relations vanish, n*wt(alpha) <= 10",
           {check_euler_relations(10)});

    report(5, "leading-term law for q_n(alpha), Lyndon alpha, n*wt <= 10",
           {check_leading_term_law(10)});

    report(6, "theta is a ring map with the kernel sign law (pairs wt <= 5, kernel wt <= 8)",
           {check_theta_ring_hom(5), check_theta_kernel_law(8)});

    report(7, "Adams laws: composition, the theta square, and even annihilation (wt <= 6, m,n <= 4)",
           {check_adams_laws(6, 4)});

    report(8, "oracle concordance: realizations, products, generating function, K_P forms, Euler",
           {check_oracle_concordance(5), check_generating_function(6),
            check_peak_function_forms(7), check_scalar_euler_realized(8)});

    report(9, "named values: lambda-tilde^n(q_1) = q_n, the L_(3) decomposition, theta(h_n) = q_n",
           {check_named_values()});

    report(10, "tensor-factor independence for mixed generator monomials, weight <= 9",
           {check_tensor_independence(4, 9)});

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << (failures_total == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << elapsed / 1000.0 << " s)\n";
    return failures_total == 0 ? 0 : 1;
}

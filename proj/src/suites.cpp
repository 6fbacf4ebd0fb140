#include "pqsym/suites.hpp"

#include "pqsym/expr.hpp"
#include "pqsym/oracle.hpp"

#include <random>
#include <sstream>

namespace pqsym {

namespace {

std::string comp_inner(const Composition& alpha) {
    std::string s;
    for (int i = 0; i < alpha.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(alpha.parts()[static_cast<size_t>(i)]);
    }
    return s;
}

std::string atom(char letter, const Composition& alpha) {
    return std::string(1, letter) + "[" + comp_inner(alpha) + "]";
}

std::vector<Composition> compositions_up_to(int max_weight) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_weight; ++n) {
        auto batch = enumerate_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<Composition> odd_compositions_up_to(int max_weight) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_weight; ++n) {
        auto batch = enumerate_odd_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

TruncatedPolynomial pad(const TruncatedPolynomial& p, int maxdeg) {
    TruncatedPolynomial out(p.numvars(), maxdeg);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

}  // namespace

CheckResult check_fibonacci_dimensions(int max_n) {
    CheckResult res{"fibonacci-dimensions"};
    for (int n = 1; n <= max_n; ++n) {
        ++res.checks;
        Int expected = fibonacci(n - 1);
        size_t got = enumerate_odd_compositions(n).size();
        if (Int(got) != expected)
            res.failures.push_back("|C_od(" + std::to_string(n) + ")| = " + std::to_string(got) +
                                   " but f_" + std::to_string(n - 1) + " = " + expected.str());
    }
    return res;
}

CheckResult check_basis_completeness(int max_n) {
    CheckResult res{"basis-completeness"};
    for (int n = 1; n <= max_n; ++n) {
        ++res.checks;
        CompletenessReport rep = verify_completeness(n);
        if (!rep.pass) {
            std::ostringstream msg;
            msg << "weight " << n << ": basis size " << rep.basis_size << ", rank " << rep.rank
                << ", expected " << rep.expected_rank.str() << ", det " << rep.det.str();
            res.failures.push_back(msg.str());
        }
    }
    return res;
}

CheckResult check_decomposition_roundtrip(int max_weight) {
    CheckResult res{"decomposition-roundtrip"};
    std::mt19937 rng(20240711);
    for (int n = 1; n <= max_weight; ++n) {
        for (const auto& beta : enumerate_odd_compositions(n)) {
            ++res.checks;
            PQSymElement l = PQSymElement::monomial(beta);
            try {
                GeneratorPolynomial p = decompose_inductive(l);
                if (!(expand_generator_poly(p) == l)) {
                    res.failures.push_back("expand(decompose_inductive(" + atom('L', beta) +
                                           ")) != " + atom('L', beta));
                    continue;
                }
                GeneratorPolynomial z = decompose_zb(l);
                if (!z.integral()) {
                    res.failures.push_back("decompose_zb(" + atom('L', beta) +
                                           ") has non-integer coordinates");
                    continue;
                }
                if (!(expand_generator_poly(z) == l)) {
                    res.failures.push_back("expand(decompose_zb(" + atom('L', beta) + ")) != " +
                                           atom('L', beta));
                    continue;
                }
                if (!(straighten_generator(p) == z)) {
                    res.failures.push_back("routes disagree on " + atom('L', beta) + ": " +
                                           format_generator(straighten_generator(p)) + " vs " +
                                           format_generator(z));
                }
            } catch (const std::exception& e) {
                res.failures.push_back("decompose(" + atom('L', beta) + ") raised: " + e.what());
            }
        }
        // A few random integer combinations per weight.
        auto indices = enumerate_odd_compositions(n);
        for (int trial = 0; trial < 3; ++trial) {
            ++res.checks;
            PQSymElement f(PBasis::L);
            for (const auto& idx : indices) {
                int c = static_cast<int>(rng() % 7) - 3;
                if (c != 0) f.add_term(idx, c);
            }
            try {
                if (!(expand_generator_poly(decompose_inductive(f)) == f)) {
                    res.failures.push_back("random round-trip failed at weight " +
                                           std::to_string(n));
                    continue;
                }
                GeneratorPolynomial z = decompose_zb(f);
                if (!z.integral() || !(expand_generator_poly(z) == f))
                    res.failures.push_back("random zb round-trip failed at weight " +
                                           std::to_string(n));
            } catch (const std::exception& e) {
                res.failures.push_back(std::string("random round-trip raised: ") + e.what());
            }
        }
    }
    return res;
}

CheckResult check_euler_relations(int max_weight) {
    CheckResult res{"euler-relations"};
    for (int w = 1; w <= max_weight; ++w) {
        for (const auto& alpha : enumerate_odd_compositions(w)) {
            if (!is_elementary(alpha)) continue;
            for (int n = 1; n * w <= max_weight; ++n) {
                ++res.checks;
                if (!verify_euler_relations(alpha, n)) {
                    std::ostringstream msg;
                    msg << "sum_{i=0}^" << n << " (-1)^i Q[i; " << comp_inner(alpha) << "]*Q["
                        << n << "-i; " << comp_inner(alpha) << "] != 0";
                    res.failures.push_back(msg.str());
                }
            }
        }
    }
    return res;
}

CheckResult check_leading_term_law(int max_weight) {
    CheckResult res{"leading-term-law"};
    for (int w = 1; w <= max_weight; ++w) {
        for (const auto& alpha : enumerate_odd_compositions(w)) {
            if (!is_lyndon(alpha)) continue;
            for (int n = 1; n * w <= max_weight; ++n) {
                ++res.checks;
                PQSymElement q = qn_generator(alpha, n);
                if (!q.integral()) {
                    res.failures.push_back("q_" + std::to_string(n) + "(" + alpha.str() +
                                           ") has non-integer coefficients");
                    continue;
                }
                const auto& [lead, coef] = *q.terms().rbegin();
                Composition expected = alpha.repeated(n);
                if (!(lead == expected) || coef != 1)
                    res.failures.push_back("q_" + std::to_string(n) + "(" + alpha.str() +
                                           ") leads with " + rat_to_string(coef) + "*" +
                                           atom('L', lead) + ", expected " +
                                           atom('L', expected));
            }
        }
    }
    return res;
}

CheckResult check_theta_ring_hom(int max_pair_weight) {
    CheckResult res{"theta-ring-hom"};
    auto comps = compositions_up_to(max_pair_weight);
    for (const auto& a : comps)
        for (const auto& b : comps) {
            ++res.checks;
            QSymElement ma = QSymElement::monomial(a);
            QSymElement mb = QSymElement::monomial(b);
            PQSymElement lhs = theta(ma * mb);
            PQSymElement rhs = theta(ma) * theta(mb);
            if (!(lhs == rhs))
                res.failures.push_back("theta(" + atom('M', a) + "*" + atom('M', b) +
                                       ") != theta(" + atom('M', a) + ")*theta(" + atom('M', b) +
                                       ")");
        }
    return res;
}

CheckResult check_theta_kernel_law(int max_weight) {
    CheckResult res{"theta-kernel-law"};
    for (const auto& gamma : compositions_up_to(max_weight)) {
        ++res.checks;
        PQSymElement img = theta(QSymElement::monomial(gamma));
        auto expected = theta_block_image(gamma);
        if (!expected) {
            if (!img.is_zero())
                res.failures.push_back("theta(" + atom('M', gamma) +
                                       ") != 0 despite the even last part");
            continue;
        }
        const auto& [sign, block] = *expected;
        if (!(img == PQSymElement::monomial(block, sign)))
            res.failures.push_back("theta(" + atom('M', gamma) + ") != " +
                                   (sign < 0 ? std::string("-") : std::string()) +
                                   atom('L', block));
    }
    return res;
}

CheckResult check_adams_laws(int max_weight, int max_mn) {
    CheckResult res{"adams-laws"};
    auto comps = compositions_up_to(max_weight);
    for (const auto& alpha : comps) {
        QSymElement m = QSymElement::monomial(alpha);
        for (int a = 1; a <= max_mn; ++a)
            for (int b = 1; b <= max_mn; ++b) {
                ++res.checks;
                if (!(adams_psi(a, adams_psi(b, m)) == adams_psi(a * b, m)))
                    res.failures.push_back("Psi^" + std::to_string(a) + " Psi^" +
                                           std::to_string(b) + " != Psi^" +
                                           std::to_string(a * b) + " on " + atom('M', alpha));
            }
        for (int n = 1; n <= max_mn; ++n) {
            ++res.checks;
            PQSymElement lhs = theta(adams_psi(n, m));  // K basis
            PQSymElement rhs = adams_phi(n, theta(m));
            if (!(lhs == rhs))
                res.failures.push_back("theta(Psi^" + std::to_string(n) + " " + atom('M', alpha) +
                                       ") != Phi^" + std::to_string(n) + " theta(" +
                                       atom('M', alpha) + ")");
        }
    }
    for (const auto& beta : odd_compositions_up_to(max_weight)) {
        for (int n = 2; n <= max_mn; n += 2) {
            ++res.checks;
            if (!adams_phi(n, PQSymElement::monomial(beta)).is_zero())
                res.failures.push_back("Phi^" + std::to_string(n) + "(" + atom('L', beta) +
                                       ") != 0");
        }
    }
    return res;
}

CheckResult check_oracle_concordance(int max_weight, int vars) {
    CheckResult res{"oracle-concordance"};
    int k = vars >= 2 * max_weight ? vars : 2 * max_weight;
    auto comps = compositions_up_to(max_weight);
    // Realize/extract round-trips.
    for (const auto& alpha : comps) {
        ++res.checks;
        QSymElement m = QSymElement::monomial(alpha);
        try {
            if (!(extract_qsym(pad(realize_qsym(m, max_weight + 1), max_weight + 1),
                               max_weight + 1) == m))
                res.failures.push_back("extract(realize(" + atom('M', alpha) + ")) mismatch");
        } catch (const std::exception& e) {
            res.failures.push_back("round-trip raised on " + atom('M', alpha) + ": " + e.what());
        }
    }
    // Realized products, QSym side (factor realizations computed once).
    std::vector<TruncatedPolynomial> mfac;
    mfac.reserve(comps.size());
    for (const auto& a : comps)
        mfac.push_back(pad(realize_qsym(QSymElement::monomial(a), k), k));
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = 0; j < comps.size(); ++j) {
            ++res.checks;
            QSymElement ma = QSymElement::monomial(comps[i]);
            QSymElement mb = QSymElement::monomial(comps[j]);
            TruncatedPolynomial lhs = pad(realize_qsym(ma * mb, k), k);
            if (!(lhs == mfac[i] * mfac[j]))
                res.failures.push_back("realize(" + atom('M', comps[i]) + "*" +
                                       atom('M', comps[j]) + ") != realize(" +
                                       atom('M', comps[i]) + ")*realize(" +
                                       atom('M', comps[j]) + ")");
        }
    // Realized products, PQSym side.
    auto odds = odd_compositions_up_to(max_weight);
    std::vector<TruncatedPolynomial> lfac;
    lfac.reserve(odds.size());
    for (const auto& a : odds)
        lfac.push_back(pad(realize_pqsym(PQSymElement::monomial(a), k), k));
    for (size_t i = 0; i < odds.size(); ++i)
        for (size_t j = 0; j < odds.size(); ++j) {
            ++res.checks;
            PQSymElement la = PQSymElement::monomial(odds[i]);
            PQSymElement lb = PQSymElement::monomial(odds[j]);
            TruncatedPolynomial lhs = pad(realize_pqsym(la * lb, k), k);
            if (!(lhs == lfac[i] * lfac[j]))
                res.failures.push_back("realize(" + atom('L', odds[i]) + "*" +
                                       atom('L', odds[j]) + ") != realize(" +
                                       atom('L', odds[i]) + ")*realize(" +
                                       atom('L', odds[j]) + ")");
        }
    // Adams substitution against index dilation.
    for (const auto& alpha : comps) {
        for (int n = 1; n * alpha.weight() <= max_weight + 3; ++n) {
            ++res.checks;
            QSymElement m = QSymElement::monomial(alpha);
            int kk = n * alpha.weight();
            TruncatedPolynomial lhs = realize_qsym(adams_psi(n, m), kk);
            TruncatedPolynomial rhs = pad(adams_substitute(realize_qsym(m, kk), n), kk);
            if (!(lhs == rhs))
                res.failures.push_back("realize(Psi^" + std::to_string(n) + " " +
                                       atom('M', alpha) + ") != substituted realization");
        }
    }
    return res;
}

CheckResult check_generating_function(int maxdeg) {
    CheckResult res{"generating-function"};
    auto series = q_generating_series(maxdeg, maxdeg);
    for (int n = 0; n <= maxdeg; ++n) {
        ++res.checks;
        TruncatedPolynomial expected =
            n == 0 ? TruncatedPolynomial::unit(maxdeg, maxdeg)
                   : pad(realize_qsym(sym_q(n), maxdeg), maxdeg);
        if (!(series[static_cast<size_t>(n)] == expected))
            res.failures.push_back("z^" + std::to_string(n) +
                                   " coefficient of prod (1+x z)/(1-x z) != realize(q[" +
                                   std::to_string(n) + "])");
    }
    return res;
}

CheckResult check_peak_function_forms(int max_n) {
    CheckResult res{"peak-function-forms"};
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& alpha : enumerate_odd_compositions(n)) {
            ++res.checks;
            PeakSet p = odd_to_peak(alpha);
            QSymElement via_f = k_in_fundamental(p).to_basis(QBasis::M);
            QSymElement via_m = embed_to_qsym(PQSymElement::monomial(alpha, 1, PBasis::K));
            if (!(via_f == via_m)) {
                res.failures.push_back("K_{S} forms disagree for " + atom('K', alpha));
                continue;
            }
            if (!(realize_qsym(via_f, n) == realize_qsym(via_m, n)))
                res.failures.push_back("K_{S} realizations disagree for " + atom('K', alpha));
        }
    }
    return res;
}

CheckResult check_scalar_euler_realized(int max_n) {
    CheckResult res{"scalar-euler"};
    for (int n = 1; n <= max_n; ++n) {
        ++res.checks;
        QSymElement acc(QBasis::M);
        for (int i = 0; i <= n; ++i) {
            QSymElement term = (i == 0 ? QSymElement::unit() : sym_q(i)) *
                               (n - i == 0 ? QSymElement::unit() : sym_q(n - i));
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        bool zero_as_element = acc.is_zero();
        bool zero_realized = acc.is_zero() || realize_qsym(acc, max_n).is_zero();
        if (!zero_as_element || !zero_realized)
            res.failures.push_back("sum_{i=0}^" + std::to_string(n) +
                                   " (-1)^i q[i]*q[" + std::to_string(n) + "-i] != 0");
    }
    return res;
}

CheckResult check_named_values() {
    CheckResult res{"named-values"};
    for (int n = 1; n <= 10; ++n) {
        ++res.checks;
        Composition ones(std::vector<int>(static_cast<size_t>(n), 1));
        if (!(qn_generator(Composition({1}), n) == PQSymElement::monomial(ones)))
            res.failures.push_back("lambda-tilde^" + std::to_string(n) + "(q[1]) != " +
                                   atom('L', ones));
    }
    {
        ++res.checks;
        // L_(3) = 3 q_3((1)) - q_2((1)) q_1((1)) in canonical coordinates.
        GeneratorPolynomial expected;
        expected.add_term(GeneratorMonomial::from_factors({{Composition({1}), {3}}}), 3);
        expected.add_term(GeneratorMonomial::from_factors({{Composition({1}), {2, 1}}}), -1);
        PQSymElement l3 = PQSymElement::monomial(Composition({3}));
        GeneratorPolynomial inductive = straighten_generator(decompose_inductive(l3));
        GeneratorPolynomial zb = decompose_zb(l3);
        if (!(inductive == expected) || !(zb == expected))
            res.failures.push_back("decompose(L[3]) != 3*Q[3; 1] - Q[2; 1]*Q[1; 1], got " +
                                   format_generator(zb));
    }
    for (int n = 1; n <= 8; ++n) {
        ++res.checks;
        Composition ones(std::vector<int>(static_cast<size_t>(n), 1));
        if (!(theta(sym_h(n)) == PQSymElement::monomial(ones)))
            res.failures.push_back("theta(h[" + std::to_string(n) + "]) != q[" +
                                   std::to_string(n) + "]");
    }
    return res;
}

CheckResult check_tensor_independence(int alpha_weight, int max_weight) {
    CheckResult res{"tensor-independence"};
    std::vector<Composition> bases;
    for (int w = 1; w <= alpha_weight; ++w) {
        auto batch = lyndon_elementary_odd(w);
        bases.insert(bases.end(), batch.begin(), batch.end());
    }
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            for (int n = 1; n <= max_weight; ++n) {
                auto monos = enumerate_strict_monomials_over({bases[i], bases[j]}, n);
                if (monos.empty()) continue;
                ++res.checks;
                int rank = expansion_rank(monos, n);
                if (rank != static_cast<int>(monos.size()))
                    res.failures.push_back("monomials over {" + bases[i].str() + ", " +
                                           bases[j].str() + "} at weight " + std::to_string(n) +
                                           " have rank " + std::to_string(rank) + " < " +
                                           std::to_string(monos.size()));
            }
        }
    return res;
}

CheckResult check_odd_generator_freeness(int max_n) {
    CheckResult res{"odd-generator-freeness"};
    for (int n = 1; n <= max_n; ++n) {
        ++res.checks;
        auto monos = enumerate_odd_monomials(n);
        Int expected = fibonacci(n - 1);
        if (Int(monos.size()) != expected) {
            res.failures.push_back("weight " + std::to_string(n) + ": " +
                                   std::to_string(monos.size()) + " odd monomials, expected " +
                                   expected.str());
            continue;
        }
        int rank = expansion_rank(monos, n);
        if (Int(rank) != expected)
            res.failures.push_back("odd monomials at weight " + std::to_string(n) +
                                   " have rank " + std::to_string(rank) + ", expected " +
                                   expected.str());
    }
    return res;
}

int SuiteResult::total_checks() const {
    int total = 0;
    for (const auto& r : results) total += r.checks;
    return total;
}

bool SuiteResult::pass() const {
    for (const auto& r : results)
        if (!r.pass()) return false;
    return true;
}

std::vector<std::string> suite_names() {
    return {"euler", "theta-hom", "adams", "ranks", "decompose", "oracle", "all"};
}

SuiteResult run_suite(const std::string& name, int max_weight, int vars) {
    SuiteResult out;
    out.suite = name;
    auto mw = [&](int standard) { return max_weight > 0 ? max_weight : standard; };
    if (name == "euler") {
        out.results.push_back(check_euler_relations(mw(10)));
    } else if (name == "theta-hom") {
        int w = mw(8);
        out.results.push_back(check_theta_ring_hom(std::max(2, w - 3)));
        out.results.push_back(check_theta_kernel_law(w));
    } else if (name == "adams") {
        out.results.push_back(check_adams_laws(mw(6), 4));
    } else if (name == "ranks") {
        int w = mw(9);
        out.results.push_back(check_fibonacci_dimensions(std::max(14, w)));
        out.results.push_back(check_basis_completeness(w));
        out.results.push_back(check_odd_generator_freeness(std::min(10, w + 1)));
    } else if (name == "decompose") {
        int w = mw(9);
        out.results.push_back(check_decomposition_roundtrip(w));
        out.results.push_back(check_leading_term_law(w + 1));
        out.results.push_back(check_named_values());
        out.results.push_back(check_tensor_independence(4, w));
    } else if (name == "oracle") {
        int w = mw(5);
        out.results.push_back(check_oracle_concordance(w, vars));
        out.results.push_back(check_generating_function(w + 1));
        out.results.push_back(check_peak_function_forms(w + 2));
        out.results.push_back(check_scalar_euler_realized(w + 3));
    } else if (name == "all") {
        for (const auto& sub : suite_names()) {
            if (sub == "all") continue;
            SuiteResult part = run_suite(sub, max_weight, vars);
            out.results.insert(out.results.end(), part.results.begin(), part.results.end());
        }
    } else {
        throw std::invalid_argument("unknown suite '" + name +
                                    "' (expected euler, theta-hom, adams, ranks, decompose, "
                                    "oracle, or all)");
    }
    return out;
}

}  // namespace pqsym

#include "pqsym/quasishuffle.hpp"

#include <doctest.h>

#include <random>

using namespace pqsym;

namespace {

Composition c(std::vector<int> parts) { return Composition(std::move(parts)); }

CompositionSum sum_of(std::vector<std::pair<Composition, Int>> terms) {
    CompositionSum s;
    for (auto& [comp, mult] : terms) s[comp] += mult;
    return s;
}

std::vector<Composition> comps_up_to(int w) {
    std::vector<Composition> out;
    for (int n = 1; n <= w; ++n) {
        auto batch = enumerate_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace

TEST_CASE("base cases and small products") {
    CHECK(qshuffle(c({1}), Composition{}) == sum_of({{c({1}), 1}}));
    CHECK(qshuffle(Composition{}, c({1})) == sum_of({{c({1}), 1}}));
    CHECK(qshuffle(c({1}), c({1})) == sum_of({{c({1, 1}), 2}, {c({2}), 1}}));
    CHECK(qshuffle(c({1}), c({1, 1})) ==
          sum_of({{c({1, 1, 1}), 3}, {c({1, 2}), 1}, {c({2, 1}), 1}}));
    CHECK(qshuffle(c({3}), c({1})) == sum_of({{c({3, 1}), 1}, {c({1, 3}), 1}, {c({4}), 1}}));
}

TEST_CASE("commutativity without the cache") {
    auto comps = comps_up_to(6);
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i; j < comps.size(); ++j)
            CHECK(qshuffle_uncached(comps[i], comps[j]) ==
                  qshuffle_uncached(comps[j], comps[i]));
    // And the memoized front door agrees with the raw computation.
    CHECK(qshuffle(c({2, 1}), c({1, 3})) == qshuffle_uncached(c({2, 1}), c({1, 3})));
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(11);
    auto random_comp = [&](int maxw) {
        std::vector<int> parts;
        int w = 0;
        while (true) {
            int p = 1 + static_cast<int>(rng() % 3);
            if (w + p > maxw) break;
            parts.push_back(p);
            w += p;
            if (rng() % 2 == 0) break;
        }
        if (parts.empty()) parts.push_back(1);
        return Composition(parts);
    };
    for (int trial = 0; trial < 40; ++trial) {
        Composition a = random_comp(4), b = random_comp(4), d = random_comp(4);
        CompositionSum ab;
        ab.emplace(a, 1);
        CompositionSum bc;
        bc.emplace(b, 1);
        CompositionSum dd;
        dd.emplace(d, 1);
        CHECK(qsum_multiply(qsum_multiply(ab, bc), dd) ==
              qsum_multiply(ab, qsum_multiply(bc, dd)));
    }
}

TEST_CASE("weight grading") {
    auto comps = comps_up_to(5);
    for (const auto& a : comps)
        for (const auto& b : comps) {
            int w = a.weight() + b.weight();
            for (const auto& [gamma, mult] : qshuffle(a, b)) {
                CHECK(gamma.weight() == w);
                CHECK(mult > 0);
            }
        }
}

TEST_CASE("power leading coefficient for Lyndon words") {
    // ((1), 2): leading term (1,1) with multiplicity 2!.
    auto p = qshuffle_power(c({1}), 2);
    CHECK(p == sum_of({{c({1, 1}), 2}, {c({2}), 1}}));
    CHECK(qshuffle_power(c({1, 3}), 1) == sum_of({{c({1, 3}), 1}}));
    auto p33 = qshuffle_power(c({3}), 2);
    CHECK(p33 == sum_of({{c({3, 3}), 2}, {c({6}), 1}}));

    Int factorial = 1;
    for (int w = 1; w <= 4; ++w) {
        for (const auto& alpha : enumerate_compositions(w)) {
            if (!is_lyndon(alpha)) continue;
            for (int n = 1; n <= 3; ++n) {
                auto power = qshuffle_power(alpha, n);
                factorial = 1;
                for (int i = 2; i <= n; ++i) factorial *= i;
                Composition concat = alpha.repeated(n);
                REQUIRE(power.count(concat));
                CHECK(power.at(concat) == factorial);
                // And the concatenation power is the wll-largest term.
                CHECK(power.rbegin()->first == concat);
            }
        }
    }
}

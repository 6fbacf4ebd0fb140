#include "pqsym/composition.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pqsym;

namespace {

Composition c(std::vector<int> parts) { return Composition(std::move(parts)); }

std::vector<Composition> all_odd_up_to(int max_weight) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_weight; ++n) {
        auto batch = enumerate_odd_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// Exhaustive factorizations into Lyndon words, for the CFL uniqueness check.
void all_lyndon_factorizations(const std::vector<int>& word, size_t start,
                               std::vector<Composition>& current,
                               std::vector<std::vector<Composition>>& out) {
    if (start == word.size()) {
        out.push_back(current);
        return;
    }
    for (size_t end = start + 1; end <= word.size(); ++end) {
        Composition piece{std::vector<int>(word.begin() + static_cast<long>(start),
                                           word.begin() + static_cast<long>(end))};
        if (!is_lyndon(piece)) continue;
        if (!current.empty() && lex_compare(current.back(), piece) < 0) continue;
        current.push_back(piece);
        all_lyndon_factorizations(word, end, current, out);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("descent sets") {
    CHECK(descent_set(c({2, 1})) == DescentSet{3, {2}});
    CHECK(descent_set(c({1, 4, 2, 3})) == DescentSet{10, {1, 5, 7}});
    CHECK(descent_set(c({7})) == DescentSet{7, {}});
    CHECK(descent_set(Composition{}) == DescentSet{0, {}});
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : enumerate_compositions(n))
            CHECK(composition_from_descents(descent_set(alpha)) == alpha);
}

TEST_CASE("peak sets") {
    CHECK(peak_set(c({1, 4, 2, 3})) == PeakSet{10, {5, 7}});
    CHECK(peak_set(c({1, 1, 1, 1})) == PeakSet{4, {}});
    CHECK(peak_set(c({2, 1})) == PeakSet{3, {2}});
}

TEST_CASE("hat construction") {
    CHECK(hat(c({3})) == c({2, 1}));
    CHECK(hat(c({1, 5})) == c({1, 2, 2, 1}));
    CHECK(hat(c({1, 1, 1, 5, 1, 1})) == c({1, 1, 1, 2, 2, 1, 1, 1}));
    CHECK_THROWS_AS(hat(c({2})), std::invalid_argument);
}

TEST_CASE("odd composition / peak set bijection") {
    CHECK(odd_to_peak(c({3})) == PeakSet{3, {2}});
    CHECK(odd_to_peak(c({1, 1, 1, 1})) == PeakSet{4, {}});
    CHECK(peak_to_odd(PeakSet{3, {2}}) == c({3}));
    CHECK(lambda_odd(c({1, 4, 2, 3})) == c({1, 1, 1, 5, 1, 1}));
    CHECK_THROWS_AS(odd_to_peak(c({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(peak_to_odd(PeakSet{5, {2, 3}}), std::invalid_argument);

    for (const auto& alpha : all_odd_up_to(12)) {
        int n = alpha.weight();
        // Lemma: P(hat(α)) = S_α, and the round trips are identities.
        CHECK(peak_set(hat(alpha)) == odd_to_peak(alpha));
        CHECK(peak_to_odd(odd_to_peak(alpha)) == alpha);

        // |S_α| = (wt - ℓ)/2 and D(α) = [n-1] \ (S ∪ (S-1)).
        PeakSet s = odd_to_peak(alpha);
        CHECK(static_cast<int>(s.elements.size()) * 2 == n - alpha.length());
        std::set<int> blocked;
        for (int e : s.elements) {
            blocked.insert(e);
            blocked.insert(e - 1);
        }
        std::vector<int> expected_descents;
        for (int i = 1; i < n; ++i)
            if (!blocked.count(i)) expected_descents.push_back(i);
        CHECK(descent_set(alpha).elements == expected_descents);
    }

    // Every peak set of [n-1] is hit, exhaustively for n <= 12.
    for (int n = 1; n <= 12; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& alpha : enumerate_odd_compositions(n))
            images.insert(odd_to_peak(alpha).elements);
        CHECK(Int(images.size()) == fibonacci(n - 1));
    }
}

TEST_CASE("peak-set containment mirrors refinement of hats") {
    for (int n = 1; n <= 10; ++n) {
        auto odds = enumerate_odd_compositions(n);
        for (const auto& a : odds)
            for (const auto& b : odds) {
                auto sa = odd_to_peak(a).elements;
                auto sb = odd_to_peak(b).elements;
                bool contained = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
                // hat(a) <= hat(b) in refinement order: D(hat b) ⊆ D(hat a).
                auto da = descent_set(hat(a)).elements;
                auto db = descent_set(hat(b)).elements;
                bool refines = std::includes(da.begin(), da.end(), db.begin(), db.end());
                CHECK(contained == refines);
            }
    }
}

TEST_CASE("paper lexicographic order") {
    CHECK(lex_compare(c({1, 1}), c({1})) > 0);
    CHECK(lex_compare(c({1}), c({1, 1})) < 0);
    CHECK(lex_compare(c({2, 1, 3}), c({2, 1, 3})) == 0);
    CHECK(lex_compare(c({1, 3}), c({2})) < 0);
}

TEST_CASE("lyndon predicate") {
    CHECK(is_lyndon(c({1, 2, 1, 3})));
    CHECK(is_lyndon(c({3})));
    CHECK_FALSE(is_lyndon(c({2, 1, 3})));
    CHECK_FALSE(is_lyndon(c({1, 1})));
    CHECK(is_lyndon(Composition{}));
}

TEST_CASE("wll order") {
    CHECK(wll_compare(c({5}), c({1, 1, 2})) > 0);
    CHECK(wll_compare(c({1, 1, 2}), c({2, 2})) > 0);
    CHECK(wll_compare(c({2, 2}), c({1, 3})) > 0);

    std::mt19937 rng(7);
    auto random_comp = [&]() {
        std::vector<int> parts;
        int len = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i) parts.push_back(1 + static_cast<int>(rng() % 5));
        return Composition(parts);
    };
    for (int trial = 0; trial < 500; ++trial) {
        Composition a = random_comp(), b = random_comp(), d = random_comp();
        CHECK(wll_compare(a, b) == -wll_compare(b, a));
        if (wll_compare(a, b) <= 0 && wll_compare(b, d) <= 0) CHECK(wll_compare(a, d) <= 0);
        if (wll_compare(a, b) == 0) CHECK(a == b);
    }
}

TEST_CASE("cfl factorization") {
    auto f = cfl_factorize(c({3, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair{c({3}), 1});
    CHECK(f.factors[1] == std::pair{c({1}), 1});

    f = cfl_factorize(c({1, 3, 1, 3}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair{c({1, 3}), 2});

    f = cfl_factorize(c({5}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair{c({5}), 1});

    for (int n = 1; n <= 8; ++n) {
        for (const auto& alpha : enumerate_compositions(n)) {
            auto fact = cfl_factorize(alpha);
            std::vector<int> rebuilt;
            for (const auto& [word, mult] : fact.factors) {
                CHECK(is_lyndon(word));
                for (int i = 0; i < mult; ++i)
                    rebuilt.insert(rebuilt.end(), word.parts().begin(), word.parts().end());
            }
            CHECK(Composition(rebuilt) == alpha);
            for (size_t i = 0; i + 1 < fact.factors.size(); ++i)
                CHECK(lex_compare(fact.factors[i].first, fact.factors[i + 1].first) > 0);

            // Uniqueness against exhaustive search.
            std::vector<std::vector<Composition>> all;
            std::vector<Composition> current;
            all_lyndon_factorizations(alpha.parts(), 0, current, all);
            CHECK(all.size() == 1);
        }
    }
}

TEST_CASE("elementary reduction") {
    CHECK(reduce_elementary(c({3, 9})) == std::pair{3, c({1, 3})});
    CHECK(reduce_elementary(c({1, 3})) == std::pair{1, c({1, 3})});
    CHECK(reduce_elementary(c({5})) == std::pair{5, c({1})});
    CHECK(is_elementary(c({1, 3})));
    CHECK_FALSE(is_elementary(c({3, 3})));
}

TEST_CASE("odd composition enumeration") {
    auto v = enumerate_odd_compositions(4);
    REQUIRE(v.size() == 3);
    // Descending wll: (1,1,1,1) > (3,1) > (1,3).
    CHECK(v[0] == c({1, 1, 1, 1}));
    CHECK(v[1] == c({3, 1}));
    CHECK(v[2] == c({1, 3}));
    CHECK(enumerate_odd_compositions(1) == std::vector<Composition>{c({1})});
    CHECK(enumerate_odd_compositions(10).size() == 55);

    for (int n = 1; n <= 20; ++n)
        CHECK(Int(enumerate_odd_compositions(n).size()) == fibonacci(n - 1));
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(0) == 1);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(3) == 3);
    CHECK(fibonacci(9) == 55);
}

TEST_CASE("refinement enumeration matches descent supersets") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& alpha : enumerate_compositions(n)) {
            std::set<std::vector<int>> via_stream;
            for_each_refinement(alpha, [&](const std::vector<int>& beta) {
                CHECK(via_stream.insert(beta).second);  // no duplicates
            });
            auto da = descent_set(alpha).elements;
            size_t expected = 0;
            for (const auto& beta : enumerate_compositions(n)) {
                auto db = descent_set(beta).elements;
                if (std::includes(db.begin(), db.end(), da.begin(), da.end())) {
                    ++expected;
                    CHECK(via_stream.count(beta.parts()));
                }
            }
            CHECK(via_stream.size() == expected);
        }
    }
}

TEST_CASE("composition text form") {
    CHECK(c({1, 4, 2, 3}).str() == "[1,4,2,3]");
    CHECK(Composition::parse("[1,4,2,3]") == c({1, 4, 2, 3}));
    CHECK(Composition::parse("[]") == Composition{});
    CHECK_THROWS_AS(Composition::parse("[0]"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,2"), std::invalid_argument);
}

#include "pqsym/quasishuffle.hpp"

#include <mutex>
#include <utility>

namespace pqsym {

namespace {

CompositionSum prepend(int head, const CompositionSum& tail) {
    CompositionSum out;
    for (const auto& [comp, mult] : tail) {
        std::vector<int> parts;
        parts.reserve(comp.parts().size() + 1);
        parts.push_back(head);
        parts.insert(parts.end(), comp.parts().begin(), comp.parts().end());
        out.emplace(Composition(std::move(parts)), mult);
    }
    return out;
}

void add_into(CompositionSum& acc, const CompositionSum& other) {
    for (const auto& [comp, mult] : other) {
        Int& slot = acc[comp];
        slot += mult;
        if (slot == 0) acc.erase(comp);
    }
}

}  // namespace

CompositionSum qsum_add(const CompositionSum& a, const CompositionSum& b) {
    CompositionSum out = a;
    add_into(out, b);
    return out;
}

CompositionSum qsum_multiply(const CompositionSum& a, const CompositionSum& b) {
    CompositionSum out;
    for (const auto& [alpha, ma] : a)
        for (const auto& [beta, mb] : b)
            for (const auto& [gamma, mg] : qshuffle(alpha, beta)) {
                Int& slot = out[gamma];
                slot += ma * mb * mg;
                if (slot == 0) out.erase(gamma);
            }
    return out;
}

CompositionSum qshuffle_uncached(const Composition& alpha, const Composition& beta) {
    const auto& a = alpha.parts();
    const auto& b = beta.parts();
    size_t la = a.size(), lb = b.size();
    // table[i][j] = suffix(α,i) ⋈ suffix(β,j), filled from the tails.
    std::vector<std::vector<CompositionSum>> table(la + 1, std::vector<CompositionSum>(lb + 1));
    table[la][lb].emplace(Composition{}, 1);
    for (size_t i = la; i-- > 0;) {
        table[i][lb] = prepend(a[i], table[i + 1][lb]);
    }
    for (size_t j = lb; j-- > 0;) {
        table[la][j] = prepend(b[j], table[la][j + 1]);
    }
    for (size_t i = la; i-- > 0;) {
        for (size_t j = lb; j-- > 0;) {
            CompositionSum cell = prepend(a[i], table[i + 1][j]);
            add_into(cell, prepend(b[j], table[i][j + 1]));
            add_into(cell, prepend(a[i] + b[j], table[i + 1][j + 1]));
            table[i][j] = std::move(cell);
        }
    }
    return std::move(table[0][0]);
}

CompositionSum qshuffle(const Composition& alpha, const Composition& beta) {
    // Products recur heavily in the generator expansions; cache on the
    // wll-smaller-first pair (the product is commutative).
    const Composition* lo = &alpha;
    const Composition* hi = &beta;
    if (wll_compare(*lo, *hi) > 0) std::swap(lo, hi);

    static std::mutex mu;
    static std::map<std::pair<Composition, Composition>,
                    CompositionSum,
                    bool (*)(const std::pair<Composition, Composition>&,
                             const std::pair<Composition, Composition>&)>
        cache([](const auto& x, const auto& y) {
            int c = wll_compare(x.first, y.first);
            if (c != 0) return c < 0;
            return wll_compare(x.second, y.second) < 0;
        });

    std::pair<Composition, Composition> key{*lo, *hi};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CompositionSum value = qshuffle_uncached(*lo, *hi);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

CompositionSum qshuffle_power(const Composition& alpha, int n) {
    if (n < 1) throw std::invalid_argument("qshuffle_power requires n >= 1");
    CompositionSum acc;
    acc.emplace(alpha, 1);
    for (int i = 1; i < n; ++i) {
        CompositionSum next;
        for (const auto& [comp, mult] : acc)
            for (const auto& [gamma, mg] : qshuffle(comp, alpha)) next[gamma] += mult * mg;
        acc = std::move(next);
    }
    return acc;
}

}  // namespace pqsym

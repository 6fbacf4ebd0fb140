#include "pqsym/composition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pqsym {

Rat rat_from_string(std::string_view text) {
    auto pos = text.find('/');
    try {
        if (pos == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num(std::string(text.substr(0, pos)));
        Int den(std::string(text.substr(pos + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: " + std::string(text));
    }
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
}

Composition Composition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("composition text must look like [1,2,3]");
    std::string body(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t idx = 0;
        int v = std::stoi(item, &idx);
        while (idx < item.size() && std::isspace(static_cast<unsigned char>(item[idx]))) ++idx;
        if (idx != item.size()) throw std::invalid_argument("bad composition part: " + item);
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::all_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Composition::last_part_even() const {
    return !parts_.empty() && parts_.back() % 2 == 0;
}

int Composition::parts_gcd() const {
    int g = 0;
    for (int p : parts_) g = std::gcd(g, p);
    return g;
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(parts));
}

Composition Composition::dilated(int k) const {
    if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
    std::vector<int> parts = parts_;
    for (int& p : parts) p *= k;
    return Composition(std::move(parts));
}

Composition Composition::repeated(int r) const {
    if (r < 0) throw std::invalid_argument("repetition count must be >= 0");
    std::vector<int> parts;
    parts.reserve(parts_.size() * static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) parts.insert(parts.end(), parts_.begin(), parts_.end());
    return Composition(std::move(parts));
}

std::string Composition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

int lex_compare(const Composition& a, const Composition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    size_t m = std::min(x.size(), y.size());
    for (size_t i = 0; i < m; ++i) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() < y.size() ? -1 : 1;
}

int wll_compare(const Composition& a, const Composition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    return lex_compare(a, b);
}

DescentSet descent_set(const Composition& alpha) {
    DescentSet d;
    d.n = alpha.weight();
    int sum = 0;
    const auto& parts = alpha.parts();
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        sum += parts[i];
        d.elements.push_back(sum);
    }
    return d;
}

Composition composition_from_descents(const DescentSet& d) {
    std::vector<int> parts;
    int prev = 0;
    for (int e : d.elements) {
        if (e <= prev || e >= d.n) throw std::invalid_argument("invalid descent set");
        parts.push_back(e - prev);
        prev = e;
    }
    if (d.n > 0) parts.push_back(d.n - prev);
    return Composition(std::move(parts));
}

PeakSet peak_set(const Composition& alpha) {
    DescentSet d = descent_set(alpha);
    PeakSet p;
    p.n = d.n;
    for (size_t i = 0; i < d.elements.size(); ++i) {
        int e = d.elements[i];
        if (e < 2) continue;
        bool pred_descent = i > 0 && d.elements[i - 1] == e - 1;
        if (!pred_descent) p.elements.push_back(e);
    }
    return p;
}

Composition hat(const Composition& alpha) {
    if (!alpha.all_odd()) throw std::invalid_argument("hat requires odd parts");
    std::vector<int> parts;
    for (int p : alpha.parts()) {
        for (int i = 0; i < (p - 1) / 2; ++i) parts.push_back(2);
        parts.push_back(1);
    }
    return Composition(std::move(parts));
}

PeakSet odd_to_peak(const Composition& alpha) {
    Composition h = hat(alpha);
    PeakSet s;
    s.n = alpha.weight();
    int w = 0;
    for (int p : h.parts()) {
        w += p;
        if (p == 2) s.elements.push_back(w);
    }
    return s;
}

namespace {

void validate_peak_set(const PeakSet& p) {
    int prev = 0;
    for (int e : p.elements) {
        if (e < 2 || e > p.n - 1) throw std::invalid_argument("peak element out of [2, n-1]");
        if (prev != 0 && e <= prev + 1) throw std::invalid_argument("peak set has consecutive members");
        prev = e;
    }
}

}  // namespace

Composition peak_to_odd(const PeakSet& p) {
    validate_peak_set(p);
    // Rebuild the hat word, then merge each maximal 2-run with the
    // following 1 into an odd part.
    std::vector<int> word;
    int prev = 0;
    for (int e : p.elements) {
        for (int i = 0; i < e - prev - 2; ++i) word.push_back(1);
        word.push_back(2);
        prev = e;
    }
    for (int i = 0; i < p.n - prev; ++i) word.push_back(1);

    std::vector<int> parts;
    int twos = 0;
    for (int c : word) {
        if (c == 2) {
            ++twos;
        } else {
            parts.push_back(2 * twos + 1);
            twos = 0;
        }
    }
    return Composition(std::move(parts));
}

Composition lambda_odd(const Composition& alpha) {
    return peak_to_odd(peak_set(alpha));
}

bool is_lyndon(const Composition& alpha) {
    const auto& w = alpha.parts();
    if (w.size() <= 1) return true;
    for (size_t i = 1; i < w.size(); ++i) {
        Composition tail{std::vector<int>(w.begin() + static_cast<long>(i), w.end())};
        if (lex_compare(alpha, tail) >= 0) return false;
    }
    return true;
}

CFLFactorization cfl_factorize(const Composition& alpha) {
    // Duval's linear scan, factors grouped by multiplicity.
    const auto& s = alpha.parts();
    size_t n = s.size();
    std::vector<Composition> raw;
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && s[k] <= s[j]) {
            if (s[k] < s[j])
                k = i;
            else
                ++k;
            ++j;
        }
        size_t len = j - k;
        while (i <= k) {
            raw.emplace_back(std::vector<int>(s.begin() + static_cast<long>(i),
                                              s.begin() + static_cast<long>(i + len)));
            i += len;
        }
    }
    CFLFactorization f;
    for (auto& w : raw) {
        if (!f.factors.empty() && f.factors.back().first == w)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(std::move(w), 1);
    }
    return f;
}

std::pair<int, Composition> reduce_elementary(const Composition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("cannot reduce the empty composition");
    int g = alpha.parts_gcd();
    std::vector<int> parts = alpha.parts();
    for (int& p : parts) p /= g;
    return {g, Composition(std::move(parts))};
}

bool is_elementary(const Composition& alpha) {
    return alpha.parts_gcd() == 1;
}

namespace {

void enumerate_rec(int n, int min_allowed, bool odd_only, std::vector<int>& buf,
                   std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(buf);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        if (odd_only && first % 2 == 0) continue;
        (void)min_allowed;
        buf.push_back(first);
        enumerate_rec(n - first, 1, odd_only, buf, out);
        buf.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<Composition> out;
    std::vector<int> buf;
    enumerate_rec(n, 1, false, buf, out);
    std::sort(out.begin(), out.end(), WllLess{});
    return out;
}

std::vector<Composition> enumerate_odd_compositions(int n) {
    if (n < 1) throw std::invalid_argument("weight must be >= 1");
    std::vector<Composition> out;
    std::vector<int> buf;
    enumerate_rec(n, 1, true, buf, out);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return wll_compare(a, b) > 0;
    });
    return out;
}

Int fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci index must be >= 0");
    Int a = 1, b = 1;
    for (int i = 0; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

namespace {

// State (idx, remaining): part `idx` still has `remaining` weight to split.
void refine_rec(const std::vector<int>& parts, size_t idx, int remaining,
                std::vector<int>& buf,
                const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        if (idx + 1 == parts.size()) {
            visit(buf);
            return;
        }
        refine_rec(parts, idx + 1, parts[idx + 1], buf, visit);
        return;
    }
    for (int piece = 1; piece <= remaining; ++piece) {
        buf.push_back(piece);
        refine_rec(parts, idx, remaining - piece, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

void for_each_refinement(const Composition& gamma,
                         const std::function<void(const std::vector<int>&)>& visit) {
    const auto& parts = gamma.parts();
    std::vector<int> buf;
    buf.reserve(static_cast<size_t>(gamma.weight()));
    if (parts.empty()) {
        visit(buf);
        return;
    }
    refine_rec(parts, 0, parts[0], buf, visit);
}

}  // namespace pqsym

#include "pqsym/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace pqsym {

Partition normalized_partition(Partition p) {
    for (int v : p)
        if (v < 1) throw std::invalid_argument("partition parts must be >= 1");
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

bool is_strict_partition(const Partition& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] <= p[i + 1]) return false;
    return true;
}

bool is_odd_partition(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 1; });
}

int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

namespace {

void partitions_rec(int n, int max_part, bool strict, bool odd, Partition& buf,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(buf);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        if (odd && part % 2 == 0) continue;
        buf.push_back(part);
        partitions_rec(n - part, strict ? part - 1 : part, strict, odd, buf, out);
        buf.pop_back();
    }
}

}  // namespace

std::vector<Partition> strict_partitions_of(int n) {
    std::vector<Partition> out;
    Partition buf;
    partitions_rec(n, n, true, false, buf, out);
    return out;
}

std::vector<Partition> odd_partitions_of(int n) {
    std::vector<Partition> out;
    Partition buf;
    partitions_rec(n, n, false, true, buf, out);
    return out;
}

// ---------------------------------------------------------------------------
// Shared sparse-map plumbing for the two polynomial types.

namespace {

template <class Terms>
void add_term_impl(Terms& terms, Partition p, const Rat& coef) {
    if (coef == 0) return;
    p = normalized_partition(std::move(p));
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(std::move(p), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms.erase(it);
    }
}

template <class Terms>
Terms add_impl(const Terms& a, const Terms& b, int sign) {
    Terms out = a;
    for (const auto& [p, c] : b) {
        auto it = out.find(p);
        Rat v = sign < 0 ? Rat(-c) : c;
        if (it == out.end()) {
            if (v != 0) out.emplace(p, v);
        } else {
            it->second += v;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

template <class Terms>
Terms mul_impl(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            Partition merged = pa;
            merged.insert(merged.end(), pb.begin(), pb.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            auto it = out.find(merged);
            if (it == out.end()) {
                out.emplace(std::move(merged), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

template <class Terms>
Terms scale_impl(const Terms& a, const Rat& c) {
    Terms out;
    if (c == 0) return out;
    for (const auto& [p, v] : a) out.emplace(p, c * v);
    return out;
}

}  // namespace

PowerSumPolynomial PowerSumPolynomial::unit() {
    PowerSumPolynomial f;
    f.terms_.emplace(Partition{}, 1);
    return f;
}

PowerSumPolynomial PowerSumPolynomial::monomial(Partition p, Rat coef) {
    PowerSumPolynomial f;
    f.add_term(std::move(p), coef);
    return f;
}

bool PowerSumPolynomial::odd_support() const {
    for (const auto& [p, c] : terms_)
        if (!is_odd_partition(p)) return false;
    return true;
}

void PowerSumPolynomial::add_term(Partition p, const Rat& coef) {
    add_term_impl(terms_, std::move(p), coef);
}

PowerSumPolynomial PowerSumPolynomial::operator+(const PowerSumPolynomial& o) const {
    PowerSumPolynomial f;
    f.terms_ = add_impl(terms_, o.terms_, +1);
    return f;
}

PowerSumPolynomial PowerSumPolynomial::operator-(const PowerSumPolynomial& o) const {
    PowerSumPolynomial f;
    f.terms_ = add_impl(terms_, o.terms_, -1);
    return f;
}

PowerSumPolynomial PowerSumPolynomial::operator*(const PowerSumPolynomial& o) const {
    PowerSumPolynomial f;
    f.terms_ = mul_impl(terms_, o.terms_);
    return f;
}

PowerSumPolynomial operator*(const Rat& c, const PowerSumPolynomial& f) {
    PowerSumPolynomial g;
    g.terms_ = scale_impl(f.terms_, c);
    return g;
}

QGeneratorPolynomial QGeneratorPolynomial::unit() {
    QGeneratorPolynomial f;
    f.terms_.emplace(Partition{}, 1);
    return f;
}

QGeneratorPolynomial QGeneratorPolynomial::monomial(Partition p, Rat coef) {
    QGeneratorPolynomial f;
    f.add_term(std::move(p), coef);
    return f;
}

void QGeneratorPolynomial::add_term(Partition p, const Rat& coef) {
    add_term_impl(terms_, std::move(p), coef);
}

QGeneratorPolynomial QGeneratorPolynomial::operator+(const QGeneratorPolynomial& o) const {
    QGeneratorPolynomial f;
    f.terms_ = add_impl(terms_, o.terms_, +1);
    return f;
}

QGeneratorPolynomial QGeneratorPolynomial::operator-(const QGeneratorPolynomial& o) const {
    QGeneratorPolynomial f;
    f.terms_ = add_impl(terms_, o.terms_, -1);
    return f;
}

QGeneratorPolynomial QGeneratorPolynomial::operator*(const QGeneratorPolynomial& o) const {
    QGeneratorPolynomial f;
    f.terms_ = mul_impl(terms_, o.terms_);
    return f;
}

QGeneratorPolynomial operator*(const Rat& c, const QGeneratorPolynomial& f) {
    QGeneratorPolynomial g;
    g.terms_ = scale_impl(f.terms_, c);
    return g;
}

// ---------------------------------------------------------------------------

OddPowerSumPolynomial q_in_p(int n) {
    if (n < 0) throw std::invalid_argument("q_in_p requires n >= 0");
    static std::mutex mu;
    static std::vector<PowerSumPolynomial> cache{PowerSumPolynomial::unit()};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        PowerSumPolynomial acc;
        for (int i = 1; i <= m; i += 2) {
            acc = acc + PowerSumPolynomial::monomial({i}, 2) * cache[static_cast<size_t>(m - i)];
        }
        cache.push_back(Rat(1, m) * acc);
    }
    return cache[static_cast<size_t>(n)];
}

QGeneratorPolynomial p_in_q(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("p_in_q is defined for odd n only");
    static std::mutex mu;
    static std::map<int, QGeneratorPolynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto compute = [](auto&& self, int m) -> const QGeneratorPolynomial& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        // q_m = (2/m) p_m + lower terms; solve for p_m and push the lower
        // monomials (odd indices < m) through recursively.
        QGeneratorPolynomial result = QGeneratorPolynomial::monomial({m}, Rat(m, 2));
        PowerSumPolynomial qm = q_in_p(m);
        for (const auto& [part, coef] : qm.terms()) {
            if (part == Partition{m}) continue;
            QGeneratorPolynomial mono = QGeneratorPolynomial::unit();
            for (int idx : part) mono = mono * self(self, idx);
            result = result - Rat(m, 2) * (coef * mono);
        }
        return cache.emplace(m, std::move(result)).first->second;
    };
    return compute(compute, n);
}

QGeneratorPolynomial euler_relation(int n) {
    if (n < 1) throw std::invalid_argument("euler_relation requires n >= 1");
    QGeneratorPolynomial out;
    for (int i = 0; i <= n; ++i) {
        Partition p;
        if (i > 0) p.push_back(i);
        if (n - i > 0) p.push_back(n - i);
        out.add_term(std::move(p), (i % 2 == 0) ? 1 : -1);
    }
    return out;
}

QGeneratorPolynomial straighten_strict(const QGeneratorPolynomial& f) {
    QGeneratorPolynomial out;
    std::vector<std::pair<Partition, Rat>> work(f.terms().begin(), f.terms().end());
    // Each rewrite spreads a repeated pair {m,m} further apart, strictly
    // increasing the sum of squares within a fixed weight, so the loop
    // terminates; the step bound guards against a broken rewrite rule.
    long long budget = 0;
    for (const auto& [p, c] : work) {
        int w = partition_weight(p);
        budget += 4LL * w * w + 64;
    }
    budget *= 1024;
    while (!work.empty()) {
        if (budget-- < 0)
            throw std::logic_error("straighten_strict exceeded its termination bound");
        auto [p, c] = std::move(work.back());
        work.pop_back();
        // Smallest repeated index (parts are sorted descending).
        int m = 0;
        size_t pos = 0;
        for (size_t i = p.size(); i-- > 1;) {
            if (p[i] == p[i - 1]) {
                m = p[i];
                pos = i;
                break;
            }
        }
        if (m == 0) {
            out.add_term(std::move(p), c);
            continue;
        }
        Partition rest;
        rest.reserve(p.size() - 2);
        for (size_t i = 0; i < p.size(); ++i)
            if (i != pos && i != pos - 1) rest.push_back(p[i]);
        // q_m^2 = 2 Σ_{j=1}^m (-1)^{j-1} q_{m-j} q_{m+j}.
        for (int j = 1; j <= m; ++j) {
            Partition np = rest;
            if (m - j > 0) np.push_back(m - j);
            np.push_back(m + j);
            Rat coef = c * Rat((j % 2 == 1) ? 2 : -2);
            work.emplace_back(normalized_partition(std::move(np)), coef);
        }
    }
    return out;
}

OddPowerSumPolynomial plethysm_pg(const OddPowerSumPolynomial& f, int g) {
    if (g < 1 || g % 2 == 0)
        throw std::invalid_argument("plethysm_pg requires odd g: p_m -> p_{mg} must stay inside the odd coordinates");
    OddPowerSumPolynomial out;
    for (const auto& [p, c] : f.terms()) {
        Partition np = p;
        for (int& v : np) v *= g;
        out.add_term(std::move(np), c);
    }
    return out;
}

PowerSumPolynomial theta_p(const PowerSumPolynomial& f) {
    PowerSumPolynomial out;
    for (const auto& [p, c] : f.terms()) {
        bool killed = false;
        int doublings = 0;
        for (int v : p) {
            if (v % 2 == 0) {
                killed = true;
                break;
            }
            ++doublings;
        }
        if (killed) continue;
        Rat factor = 1;
        for (int i = 0; i < doublings; ++i) factor *= 2;
        out.add_term(p, c * factor);
    }
    return out;
}

PowerSumPolynomial substitute_q_to_p(const QGeneratorPolynomial& f) {
    PowerSumPolynomial out;
    for (const auto& [p, c] : f.terms()) {
        PowerSumPolynomial mono = PowerSumPolynomial::unit();
        for (int idx : p) mono = mono * q_in_p(idx);
        out = out + c * mono;
    }
    return out;
}

QGeneratorPolynomial q_compose_pg_in_q(int n, int g) {
    OddPowerSumPolynomial composed = plethysm_pg(q_in_p(n), g);
    QGeneratorPolynomial out;
    for (const auto& [p, c] : composed.terms()) {
        QGeneratorPolynomial mono = QGeneratorPolynomial::unit();
        for (int idx : p) mono = mono * p_in_q(idx);
        out = out + c * mono;
    }
    return out;
}

QGeneratorPolynomial psi_in_lambda(int n) {
    if (n < 1) throw std::invalid_argument("psi_in_lambda requires n >= 1");
    static std::mutex mu;
    static std::vector<QGeneratorPolynomial> cache;  // cache[k-1] = Ψ^k
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) < n) {
        int k = static_cast<int>(cache.size()) + 1;
        QGeneratorPolynomial acc = QGeneratorPolynomial::monomial({k}, k);
        for (int i = 1; i < k; ++i) {
            QGeneratorPolynomial term =
                QGeneratorPolynomial::monomial({k - i}, 1) * cache[static_cast<size_t>(i - 1)];
            acc = acc + ((i % 2 == 1) ? Rat(-1) : Rat(1)) * term;
        }
        if (k % 2 == 0) acc = Rat(-1) * acc;
        for (const auto& [p, c] : acc.terms())
            if (!is_integer(c)) throw std::logic_error("psi_in_lambda produced a non-integer coefficient");
        cache.push_back(std::move(acc));
    }
    return cache[static_cast<size_t>(n - 1)];
}

}  // namespace pqsym

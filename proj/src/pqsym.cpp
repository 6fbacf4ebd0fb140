#include "pqsym/pqsym.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pqsym {

namespace {

void require_odd(const Composition& alpha) {
    if (!alpha.all_odd())
        throw std::invalid_argument("PQSym indices must have odd parts, got " + alpha.str());
}

// ϑ(M_γ) in integer K coordinates:
// M_γ = Σ_{β≤γ} (-1)^{ℓ(β)-ℓ(γ)} F_β and F_β -> K_{Λ(β)}. Refinements of
// γ are exactly the descent supersets D(γ) ∪ T, so the expansion runs
// over the submasks of the complement, entirely in bit arithmetic.
std::map<Composition, Int, WllLess> theta_m_term_uncached(const Composition& gamma) {
    int n = gamma.weight();
    if (n > 62) throw std::invalid_argument("theta expansion limited to weight <= 62");
    uint64_t dmask = 0;
    {
        int w = 0;
        const auto& parts = gamma.parts();
        for (size_t i = 0; i + 1 < parts.size(); ++i) {
            w += parts[i];
            dmask |= uint64_t(1) << w;
        }
    }
    uint64_t all = n >= 2 ? ((uint64_t(1) << (n - 1)) - 1) << 1 : 0;  // bits 1..n-1
    uint64_t free_bits = all & ~dmask;

    std::unordered_map<uint64_t, long long> acc;
    uint64_t sub = free_bits;
    while (true) {
        uint64_t d = dmask | sub;
        uint64_t peaks = d & ~(d << 1) & ~uint64_t(2);  // i in D, i-1 not, i >= 2
        acc[peaks] += (std::popcount(sub) % 2 == 0) ? 1 : -1;
        if (sub == 0) break;
        sub = (sub - 1) & free_bits;
    }

    std::map<Composition, Int, WllLess> out;
    for (const auto& [mask, count] : acc) {
        if (count == 0) continue;
        PeakSet s{n, {}};
        for (int b = 2; b < n; ++b)
            if (mask & (uint64_t(1) << b)) s.elements.push_back(b);
        out.emplace(peak_to_odd(s), Int(count));
    }
    return out;
}

const std::map<Composition, Int, WllLess>& theta_m_term(const Composition& gamma) {
    // The streamed expansion is the expensive part; the cancelled results
    // stay small (a single L term in K coordinates), so the memo is cheap.
    static std::mutex mu;
    static std::map<Composition, std::map<Composition, Int, WllLess>, WllLess> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(gamma);
    if (it != cache.end()) return it->second;
    auto value = theta_m_term_uncached(gamma);
    return cache.emplace(gamma, std::move(value)).first->second;
}

}  // namespace

PQSymElement PQSymElement::unit() {
    PQSymElement f(PBasis::L);
    f.add_term(Composition{}, 1);
    return f;
}

PQSymElement PQSymElement::monomial(const Composition& alpha, Rat coef, PBasis basis) {
    PQSymElement f(basis);
    f.add_term(alpha, coef);
    return f;
}

int PQSymElement::max_weight() const {
    int w = 0;
    for (const auto& [alpha, c] : terms_) w = std::max(w, alpha.weight());
    return w;
}

bool PQSymElement::integral() const {
    for (const auto& [alpha, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

void PQSymElement::add_term(const Composition& alpha, const Rat& coef) {
    require_odd(alpha);
    if (coef == 0) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

PQSymElement PQSymElement::to_basis(PBasis target) const {
    if (target == basis_) return *this;
    return target == PBasis::L ? k_to_l(*this) : l_to_k(*this);
}

PQSymElement PQSymElement::operator+(const PQSymElement& o) const {
    PQSymElement rhs = o.to_basis(basis_);
    PQSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, c);
    return out;
}

PQSymElement PQSymElement::operator-(const PQSymElement& o) const {
    PQSymElement rhs = o.to_basis(basis_);
    PQSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, -c);
    return out;
}

PQSymElement PQSymElement::operator*(const PQSymElement& o) const {
    // L_α L_β = ϑ(M_α M_β): lift to the M basis, quasi-shuffle, and push
    // each term through ϑ. Unconditionally correct because ϑ is a ring
    // map; the sign bookkeeping comes out of ϑ itself.
    PQSymElement a = to_basis(PBasis::L);
    PQSymElement b = o.to_basis(PBasis::L);
    PQSymElement out_k(PBasis::K);
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [beta, cb] : b.terms()) {
            Rat cab = ca * cb;
            if (alpha.empty() || beta.empty()) {
                const Composition& other = alpha.empty() ? beta : alpha;
                for (const auto& [idx, m] : theta_m_term(other)) out_k.add_term(idx, cab * Rat(m));
                continue;
            }
            for (const auto& [gamma, mult] : qshuffle(alpha, beta)) {
                for (const auto& [idx, m] : theta_m_term(gamma))
                    out_k.add_term(idx, cab * Rat(mult) * Rat(m));
            }
        }
    return k_to_l(out_k);
}

PQSymElement operator*(const Rat& c, const PQSymElement& f) {
    PQSymElement out(f.basis());
    if (c == 0) return out;
    for (const auto& [alpha, v] : f.terms()) out.add_term(alpha, c * v);
    return out;
}

bool PQSymElement::operator==(const PQSymElement& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return terms_ == o.to_basis(basis_).terms_;
}

PQSymElement theta(const QSymElement& f) {
    PQSymElement out(PBasis::K);
    if (f.basis() == QBasis::F) {
        for (const auto& [alpha, c] : f.terms()) {
            if (alpha.empty()) {
                out.add_term(alpha, c);
                continue;
            }
            out.add_term(lambda_odd(alpha), c);
        }
        return out;
    }
    for (const auto& [gamma, c] : f.terms()) {
        if (gamma.empty()) {
            out.add_term(gamma, c);
            continue;
        }
        for (const auto& [idx, m] : theta_m_term(gamma)) out.add_term(idx, c * Rat(m));
    }
    return out;
}

namespace {

// Shared signed subset-sum over peak-set containment; the conversion
// matrix is an involution, so K->L and L->K coincide.
PQSymElement peak_mobius(const PQSymElement& f, PBasis target) {
    PQSymElement out(target);
    for (const auto& [alpha, c] : f.terms()) {
        if (alpha.empty()) {
            out.add_term(alpha, c);
            continue;
        }
        PeakSet s = odd_to_peak(alpha);
        int n = s.n;
        size_t bits = s.elements.size();
        for (size_t mask = 0; mask < (size_t(1) << bits); ++mask) {
            PeakSet sub{n, {}};
            for (size_t i = 0; i < bits; ++i)
                if (mask & (size_t(1) << i)) sub.elements.push_back(s.elements[i]);
            int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
            out.add_term(peak_to_odd(sub), c * Rat(sign));
        }
    }
    return out;
}

}  // namespace

PQSymElement k_to_l(const PQSymElement& f) {
    if (f.basis() == PBasis::L) return f;
    return peak_mobius(f, PBasis::L);
}

PQSymElement l_to_k(const PQSymElement& f) {
    if (f.basis() == PBasis::K) return f;
    return peak_mobius(f, PBasis::K);
}

QSymElement embed_to_qsym(const PQSymElement& f) {
    PQSymElement k = f.to_basis(PBasis::K);
    QSymElement out(QBasis::M);
    for (const auto& [alpha, c] : k.terms()) {
        if (alpha.empty()) {
            out.add_term(alpha, c);
            continue;
        }
        PeakSet p = odd_to_peak(alpha);
        int n = p.n;
        for (const auto& comp : enumerate_compositions(n)) {
            DescentSet d = descent_set(comp);
            // P ⊆ D ∪ (D+1)?
            bool ok = true;
            for (int e : p.elements) {
                bool hit = std::binary_search(d.elements.begin(), d.elements.end(), e) ||
                           std::binary_search(d.elements.begin(), d.elements.end(), e - 1);
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Rat coef = c;
            for (int i = 0; i < comp.length(); ++i) coef *= 2;
            out.add_term(comp, coef);
        }
    }
    return out;
}

PQSymElement adams_phi(int n, const PQSymElement& f) {
    if (n < 1) throw std::invalid_argument("adams_phi requires n >= 1");
    PQSymElement g = f.to_basis(PBasis::L);
    PQSymElement out(PBasis::L);
    for (const auto& [alpha, c] : g.terms()) {
        if (alpha.empty()) {
            out.add_term(alpha, c);  // Φ^n fixes the unit
            continue;
        }
        if (n % 2 == 0) continue;
        out.add_term(alpha.dilated(n), c);
    }
    return out;
}

PQSymElement lambda_tilde(int n, const PQSymElement& f) {
    if (n < 0) throw std::invalid_argument("lambda_tilde requires n >= 0");
    if (n == 0) return PQSymElement::unit();
    PQSymElement g = f.to_basis(PBasis::L);
    std::vector<PQSymElement> adams;
    adams.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) adams.push_back(adams_phi(i, g));
    return lambda_newton(adams).back();
}

PQSymElement qn_generator(const Composition& alpha, int n) {
    require_odd(alpha);
    if (n < 0) throw std::invalid_argument("qn_generator requires n >= 0");
    if (n == 0) return PQSymElement::unit();
    static std::mutex mu;
    static std::map<std::pair<Composition, int>, PQSymElement,
                    bool (*)(const std::pair<Composition, int>&,
                             const std::pair<Composition, int>&)>
        cache([](const auto& x, const auto& y) {
            int c = wll_compare(x.first, y.first);
            if (c != 0) return c < 0;
            return x.second < y.second;
        });
    std::pair<Composition, int> key{alpha, n};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PQSymElement value = lambda_tilde(n, PQSymElement::monomial(alpha));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

QSymElement k_in_fundamental(const PeakSet& p) {
    QSymElement out(QBasis::F);
    int n = p.n;
    Rat factor = 2;
    for (size_t i = 0; i < p.elements.size(); ++i) factor *= 2;
    for (const auto& comp : enumerate_compositions(n)) {
        DescentSet d = descent_set(comp);
        // D △ (D+1)
        std::vector<int> symdiff;
        for (int e : d.elements)
            if (!std::binary_search(d.elements.begin(), d.elements.end(), e - 1))
                symdiff.push_back(e);
        for (int e : d.elements)
            if (!std::binary_search(d.elements.begin(), d.elements.end(), e + 1))
                symdiff.push_back(e + 1);
        std::sort(symdiff.begin(), symdiff.end());
        bool ok = true;
        for (int e : p.elements)
            if (!std::binary_search(symdiff.begin(), symdiff.end(), e)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        out.add_term(comp, factor);
    }
    return out;
}

std::optional<std::pair<int, Composition>> theta_block_image(const Composition& gamma) {
    if (gamma.empty()) return std::make_pair(1, Composition{});
    if (gamma.last_part_even()) return std::nullopt;
    std::vector<int> sums;
    int block = 0;
    for (int p : gamma.parts()) {
        block += p;
        if (p % 2 == 1) {
            sums.push_back(block);
            block = 0;
        }
    }
    Composition image{std::move(sums)};
    int sign = (gamma.length() + image.length()) % 2 == 0 ? 1 : -1;
    return std::make_pair(sign, std::move(image));
}

int eta_sign(const Composition& alpha) {
    return odd_to_peak(alpha).elements.size() % 2 == 0 ? 1 : -1;
}

}  // namespace pqsym

#include "pqsym/structure.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pqsym {

GeneratorSymbol::GeneratorSymbol(Composition a, int n) : alpha(std::move(a)), degree(n) {
    if (alpha.empty()) throw std::invalid_argument("generator base must be nonempty");
    if (!alpha.all_odd())
        throw std::invalid_argument("generator base must have odd parts: " + alpha.str());
    if (!is_elementary(alpha))
        throw std::invalid_argument("generator base must be elementary: " + alpha.str());
    if (degree < 1) throw std::invalid_argument("generator degree must be >= 1");
}

GeneratorMonomial::GeneratorMonomial(const GeneratorSymbol& s) {
    factors_.emplace_back(s.alpha, Partition{s.degree});
}

GeneratorMonomial GeneratorMonomial::from_factors(Factors factors) {
    GeneratorMonomial m;
    for (auto& [alpha, lam] : factors) {
        if (lam.empty()) continue;
        GeneratorSymbol check(alpha, lam.front());  // validates the base
        (void)check;
        lam = normalized_partition(std::move(lam));
        bool merged = false;
        for (auto& [a, l] : m.factors_)
            if (a == alpha) {
                l.insert(l.end(), lam.begin(), lam.end());
                l = normalized_partition(std::move(l));
                merged = true;
                break;
            }
        if (!merged) m.factors_.emplace_back(std::move(alpha), std::move(lam));
    }
    std::sort(m.factors_.begin(), m.factors_.end(),
              [](const auto& x, const auto& y) { return wll_compare(x.first, y.first) < 0; });
    return m;
}

int GeneratorMonomial::weight() const {
    int w = 0;
    for (const auto& [alpha, lam] : factors_) w += partition_weight(lam) * alpha.weight();
    return w;
}

bool GeneratorMonomial::all_strict() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return is_strict_partition(f.second); });
}

bool GeneratorMonomial::all_odd() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return is_odd_partition(f.second); });
}

GeneratorMonomial GeneratorMonomial::operator*(const GeneratorMonomial& o) const {
    Factors merged = factors_;
    merged.insert(merged.end(), o.factors_.begin(), o.factors_.end());
    return from_factors(std::move(merged));
}

int generator_monomial_compare(const GeneratorMonomial& a, const GeneratorMonomial& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t m = std::min(fa.size(), fb.size());
    for (size_t i = 0; i < m; ++i) {
        int c = wll_compare(fa[i].first, fb[i].first);
        if (c != 0) return c;
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
    }
    if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
    return 0;
}

GeneratorPolynomial GeneratorPolynomial::unit() {
    GeneratorPolynomial p;
    p.terms_.emplace(GeneratorMonomial{}, 1);
    return p;
}

GeneratorPolynomial GeneratorPolynomial::monomial(GeneratorMonomial m, Rat coef) {
    GeneratorPolynomial p;
    p.add_term(std::move(m), coef);
    return p;
}

GeneratorPolynomial GeneratorPolynomial::symbol(const GeneratorSymbol& s, Rat coef) {
    return monomial(GeneratorMonomial(s), coef);
}

bool GeneratorPolynomial::integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

void GeneratorPolynomial::add_term(GeneratorMonomial m, const Rat& coef) {
    if (coef == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

GeneratorPolynomial GeneratorPolynomial::operator+(const GeneratorPolynomial& o) const {
    GeneratorPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

GeneratorPolynomial GeneratorPolynomial::operator-(const GeneratorPolynomial& o) const {
    GeneratorPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

GeneratorPolynomial GeneratorPolynomial::operator*(const GeneratorPolynomial& o) const {
    GeneratorPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

GeneratorPolynomial operator*(const Rat& c, const GeneratorPolynomial& f) {
    GeneratorPolynomial out;
    if (c == 0) return out;
    for (const auto& [m, v] : f.terms()) out.add_term(m, c * v);
    return out;
}

std::vector<Composition> lyndon_elementary_odd(int weight) {
    std::vector<Composition> out;
    for (const auto& alpha : enumerate_odd_compositions(weight))
        if (is_elementary(alpha) && is_lyndon(alpha)) out.push_back(alpha);
    return out;
}

namespace {

std::vector<Composition> elementary_odd(int weight) {
    std::vector<Composition> out;
    for (const auto& alpha : enumerate_odd_compositions(weight))
        if (is_elementary(alpha)) out.push_back(alpha);
    return out;
}

// Assign to each base composition an exponent partition (possibly empty)
// with total weight n.
void monomial_rec(const std::vector<Composition>& bases, size_t idx, int remaining,
                  const std::vector<std::vector<Partition>>& choices,
                  GeneratorMonomial::Factors& buf, std::vector<GeneratorMonomial>& out) {
    if (remaining == 0) {
        out.push_back(GeneratorMonomial::from_factors(buf));
        return;
    }
    if (idx == bases.size()) return;
    int w = bases[idx].weight();
    monomial_rec(bases, idx + 1, remaining, choices, buf, out);  // skip this base
    for (int d = 1; d * w <= remaining; ++d) {
        for (const auto& lam : choices[static_cast<size_t>(d)]) {
            buf.emplace_back(bases[idx], lam);
            monomial_rec(bases, idx + 1, remaining - d * w, choices, buf, out);
            buf.pop_back();
        }
    }
}

std::vector<GeneratorMonomial> enumerate_monomials(int n, bool lyndon_only, bool strict) {
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<Composition> bases;
    for (int w = 1; w <= n; ++w) {
        auto batch = lyndon_only ? lyndon_elementary_odd(w) : elementary_odd(w);
        bases.insert(bases.end(), batch.begin(), batch.end());
    }
    std::vector<std::vector<Partition>> choices(static_cast<size_t>(n) + 1);
    for (int d = 1; d <= n; ++d)
        choices[static_cast<size_t>(d)] = strict ? strict_partitions_of(d) : odd_partitions_of(d);
    std::vector<GeneratorMonomial> out;
    GeneratorMonomial::Factors buf;
    monomial_rec(bases, 0, n, choices, buf, out);
    std::sort(out.begin(), out.end(), GeneratorMonomialLess{});
    return out;
}

}  // namespace

std::vector<GeneratorMonomial> enumerate_zb_basis(int n) {
    return enumerate_monomials(n, true, true);
}

std::vector<GeneratorMonomial> enumerate_zb_candidates(int n) {
    return enumerate_monomials(n, false, true);
}

std::vector<GeneratorMonomial> enumerate_odd_monomials(int n) {
    return enumerate_monomials(n, true, false);
}

std::vector<GeneratorMonomial> enumerate_strict_monomials_over(
    const std::vector<Composition>& bases, int n) {
    std::vector<std::vector<Partition>> choices(static_cast<size_t>(n) + 1);
    for (int d = 1; d <= n; ++d) choices[static_cast<size_t>(d)] = strict_partitions_of(d);
    std::vector<GeneratorMonomial> out;
    GeneratorMonomial::Factors buf;
    monomial_rec(bases, 0, n, choices, buf, out);
    std::sort(out.begin(), out.end(), GeneratorMonomialLess{});
    return out;
}

PQSymElement expand_generator_monomial(const GeneratorMonomial& m) {
    static std::mutex mu;
    static std::map<GeneratorMonomial, PQSymElement, GeneratorMonomialLess> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    PQSymElement value = PQSymElement::unit();
    for (const auto& [alpha, lam] : m.factors())
        for (int d : lam) value = value * qn_generator(alpha, d);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(value)).first->second;
}

PQSymElement expand_generator_poly(const GeneratorPolynomial& p) {
    PQSymElement out(PBasis::L);
    for (const auto& [m, c] : p.terms()) out = out + c * expand_generator_monomial(m);
    return out;
}

namespace {

// Lift a polynomial in abstract q_j symbols to generator symbols q_j(α).
GeneratorPolynomial attach_base(const QGeneratorPolynomial& q, const Composition& alpha) {
    GeneratorPolynomial out;
    for (const auto& [lam, c] : q.terms()) {
        if (lam.empty()) {
            out.add_term(GeneratorMonomial{}, c);
            continue;
        }
        out.add_term(GeneratorMonomial::from_factors({{alpha, lam}}), c);
    }
    return out;
}

}  // namespace

GeneratorPolynomial leading_reducer(const Composition& beta) {
    if (beta.empty()) return GeneratorPolynomial::unit();
    if (!beta.all_odd())
        throw std::invalid_argument("reducers are indexed by odd compositions");

    static std::mutex mu;
    static std::map<Composition, GeneratorPolynomial, WllLess> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(beta);
        if (it != cache.end()) return it->second;
    }

    CFLFactorization cfl = cfl_factorize(beta);
    GeneratorPolynomial value;
    if (cfl.factors.size() == 1) {
        const auto& [word, mult] = cfl.factors.front();
        auto [g, alpha] = reduce_elementary(word);
        if (mult == 1) {
            // β Lyndon: L_β = Φ^g(L_α), the integral Newton polynomial in
            // the q_j(α).
            value = attach_base(psi_in_lambda(g), alpha);
        } else {
            // β = word^{*r}: λ̃^r(L_{g·α}) = (q_r ∘ p_g) evaluated at α.
            QGeneratorPolynomial q =
                g == 1 ? QGeneratorPolynomial::monomial({mult}, 1) : q_compose_pg_in_q(mult, g);
            value = attach_base(q, alpha);
        }
    } else {
        const auto& [word, mult] = cfl.factors.front();
        Composition head = word.repeated(mult);
        std::vector<int> tail_parts;
        for (size_t i = 1; i < cfl.factors.size(); ++i) {
            Composition piece = cfl.factors[i].first.repeated(cfl.factors[i].second);
            tail_parts.insert(tail_parts.end(), piece.parts().begin(), piece.parts().end());
        }
        value = leading_reducer(head) * leading_reducer(Composition(std::move(tail_parts)));
    }

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(beta, std::move(value)).first->second;
}

namespace {

const PQSymElement& reducer_expansion(const Composition& beta) {
    static std::mutex mu;
    static std::map<Composition, PQSymElement, WllLess> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    PQSymElement value = expand_generator_poly(leading_reducer(beta));
    // The wll-leading coefficient must be exactly 1; this is what keeps
    // the inductive decomposition integral.
    if (value.is_zero()) throw std::logic_error("reducer expanded to zero");
    const auto& [lead, coef] = *value.terms().rbegin();
    if (!(lead == beta) || coef != 1)
        throw std::logic_error("reducer for " + beta.str() + " has leading term " + lead.str() +
                               " with coefficient " + rat_to_string(coef));
    return cache.emplace(beta, std::move(value)).first->second;
}

}  // namespace

GeneratorPolynomial decompose_inductive(const PQSymElement& f) {
    PQSymElement work = f.to_basis(PBasis::L);
    GeneratorPolynomial out;
    long long guard = 1000000;
    while (!work.is_zero()) {
        if (guard-- < 0)
            throw std::logic_error("decompose_inductive failed to terminate");
        Composition beta = work.terms().rbegin()->first;
        Rat c = work.terms().rbegin()->second;
        if (beta.empty()) {
            out.add_term(GeneratorMonomial{}, c);
            work.add_term(beta, -c);
            continue;
        }
        out = out + c * leading_reducer(beta);
        work = work - c * reducer_expansion(beta);
        if (work.terms().count(beta))
            throw std::logic_error("reducer failed to cancel " + beta.str());
    }
    return out;
}

GeneratorPolynomial straighten_generator(const GeneratorPolynomial& p) {
    GeneratorPolynomial out;
    for (const auto& [mono, coef] : p.terms()) {
        std::vector<std::pair<GeneratorMonomial::Factors, Rat>> acc{{{}, coef}};
        for (const auto& [alpha, lam] : mono.factors()) {
            QGeneratorPolynomial straight =
                straighten_strict(QGeneratorPolynomial::monomial(lam, 1));
            std::vector<std::pair<GeneratorMonomial::Factors, Rat>> next;
            for (const auto& [factors, c] : acc)
                for (const auto& [lam2, c2] : straight.terms()) {
                    auto f2 = factors;
                    f2.emplace_back(alpha, lam2);
                    next.emplace_back(std::move(f2), c * c2);
                }
            acc = std::move(next);
        }
        for (auto& [factors, c] : acc)
            out.add_term(GeneratorMonomial::from_factors(std::move(factors)), c);
    }
    return out;
}

namespace {

// Exact Gaussian elimination; returns the rank and, for square systems,
// the determinant.
struct GaussResult {
    int rank = 0;
    Rat det = 1;
};

GaussResult gauss(std::vector<std::vector<Rat>>& m) {
    GaussResult res;
    if (m.empty()) return res;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) {
            res.det = 0;
            continue;
        }
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            res.det = -res.det;
        }
        res.det *= m[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat factor = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    res.rank = static_cast<int>(r);
    if (rows != cols || r < rows) {
        if (r < std::min(rows, cols)) res.det = 0;
    }
    return res;
}

// Solve x^T A = v where rows of A are the basis expansions.
std::vector<Rat> solve_transposed(const std::vector<std::vector<Rat>>& a,
                                  const std::vector<Rat>& v) {
    size_t n = a.size();
    if (n == 0) {
        for (const Rat& x : v)
            if (x != 0) throw std::logic_error("inconsistent linear system");
        return {};
    }
    size_t cols = a[0].size();
    // Augmented system A^T x = v.
    std::vector<std::vector<Rat>> m(cols, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cols; ++j) m[j][i] = a[i][j];
    for (size_t j = 0; j < cols; ++j) m[j][n] = v[j];

    std::vector<long> pivot_col(m.size(), -1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m.size(); ++c) {
        size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[r]);
        Rat lead = m[r][c];
        for (size_t j = c; j <= n; ++j) m[r][j] /= lead;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat factor = m[i][c];
            for (size_t j = c; j <= n; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_col[r] = static_cast<long>(c);
        ++r;
    }
    for (size_t i = r; i < m.size(); ++i)
        if (m[i][n] != 0) throw std::logic_error("inconsistent linear system");
    std::vector<Rat> x(n, 0);
    for (size_t i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[i])] = m[i][n];
    return x;
}

}  // namespace

GeneratorPolynomial decompose_zb(const PQSymElement& f) {
    PQSymElement g = f.to_basis(PBasis::L);
    bool want_integral = g.integral();
    std::map<int, PQSymElement> components;
    for (const auto& [alpha, c] : g.terms())
        components.try_emplace(alpha.weight(), PBasis::L).first->second.add_term(alpha, c);

    GeneratorPolynomial out;
    for (const auto& [n, comp] : components) {
        if (n == 0) {
            out.add_term(GeneratorMonomial{}, comp.terms().begin()->second);
            continue;
        }
        auto basis = enumerate_zb_basis(n);
        auto indices = enumerate_odd_compositions(n);
        std::map<Composition, size_t, WllLess> col;
        for (size_t j = 0; j < indices.size(); ++j) col.emplace(indices[j], j);
        std::vector<std::vector<Rat>> a(basis.size(), std::vector<Rat>(indices.size(), 0));
        for (size_t i = 0; i < basis.size(); ++i) {
            PQSymElement e = expand_generator_monomial(basis[i]);
            for (const auto& [alpha, c] : e.terms()) a[i][col.at(alpha)] = c;
        }
        std::vector<Rat> v(indices.size(), 0);
        for (const auto& [alpha, c] : comp.terms()) v[col.at(alpha)] = c;
        std::vector<Rat> x = solve_transposed(a, v);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (x[i] == 0) continue;
            if (want_integral && !is_integer(x[i]))
                throw std::logic_error("non-integral coordinate " + rat_to_string(x[i]) +
                                       " in the weight-" + std::to_string(n) + " basis");
            out.add_term(basis[i], x[i]);
        }
    }
    return out;
}

bool verify_euler_relations(const Composition& alpha, int n) {
    PQSymElement acc(PBasis::L);
    for (int i = 0; i <= n; ++i) {
        PQSymElement term = qn_generator(alpha, i) * qn_generator(alpha, n - i);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc.is_zero();
}

int expansion_rank(const std::vector<GeneratorMonomial>& monomials, int n) {
    auto indices = enumerate_odd_compositions(n);
    std::map<Composition, size_t, WllLess> col;
    for (size_t j = 0; j < indices.size(); ++j) col.emplace(indices[j], j);
    std::vector<std::vector<Rat>> m(monomials.size(), std::vector<Rat>(indices.size(), 0));
    for (size_t i = 0; i < monomials.size(); ++i) {
        if (monomials[i].weight() != n)
            throw std::invalid_argument("expansion_rank expects weight-n monomials");
        PQSymElement e = expand_generator_monomial(monomials[i]);
        for (const auto& [alpha, c] : e.terms()) m[i][col.at(alpha)] = c;
    }
    return gauss(m).rank;
}

CompletenessReport verify_completeness(int n) {
    if (n < 1) throw std::invalid_argument("verify_completeness requires n >= 1");
    CompletenessReport rep;
    rep.n = n;
    rep.expected_rank = fibonacci(n - 1);

    auto basis = enumerate_zb_basis(n);
    auto indices = enumerate_odd_compositions(n);
    rep.basis_size = static_cast<int>(basis.size());

    std::map<Composition, size_t, WllLess> col;
    for (size_t j = 0; j < indices.size(); ++j) col.emplace(indices[j], j);
    std::vector<std::vector<Rat>> m(basis.size(), std::vector<Rat>(indices.size(), 0));
    for (size_t i = 0; i < basis.size(); ++i) {
        PQSymElement e = expand_generator_monomial(basis[i]);
        if (!e.integral())
            throw std::logic_error("basis monomial expanded with non-integer coefficients");
        for (const auto& [alpha, c] : e.terms()) m[i][col.at(alpha)] = c;
    }
    bool square = basis.size() == indices.size();
    GaussResult gr = gauss(m);
    rep.rank = gr.rank;
    rep.det = square ? to_integer(gr.det) : Int(0);
    rep.lattice_full = square && (rep.det == 1 || rep.det == -1);
    rep.pass = rep.lattice_full && Int(rep.rank) == rep.expected_rank &&
               Int(rep.basis_size) == rep.expected_rank;
    return rep;
}

}  // namespace pqsym

#pragma once

#include "jackps/qalpha.hpp"
#include "jackps/spart.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace jackps {

using ExpVec = std::vector<int>;

// Graded lexicographic, largest first (leading term = map begin()).
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da > db;
        return a > b;
    }
};

enum class SymmetryType { AS, AA, SA, SS };

std::string to_string(SymmetryType t);
SymmetryType parse_symmetry_type(const std::string& s);

template <class C>
struct NotDivisible;

// Multivariate polynomial in x_1..x_N, sparse exponent-vector map.
template <class C>
class SparsePoly {
public:
    using Terms = std::map<ExpVec, C, GradedLexGreater>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : n_(nvars) {
        if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    }

    static SparsePoly constant(int nvars, C c) {
        SparsePoly p(nvars);
        p.add_term(ExpVec(nvars, 0), std::move(c));
        return p;
    }
    static SparsePoly monomial(int nvars, ExpVec e, C c = C(1)) {
        SparsePoly p(nvars);
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("exponent vector length mismatch");
        p.add_term(std::move(e), std::move(c));
        return p;
    }
    static SparsePoly variable(int nvars, int i, int power = 1) {
        ExpVec e(nvars, 0);
        e.at(i - 1) = power;
        return monomial(nvars, std::move(e));
    }

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    C coeff(const ExpVec& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(ExpVec e, C c) {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (jackps::is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (jackps::is_zero(it->second)) t_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly r(n_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.t_) {
            auto [it, inserted] = t_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (jackps::is_zero(it->second)) t_.erase(it);
            }
        }
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.t_) {
            auto it = t_.find(e);
            if (it == t_.end()) {
                t_.emplace(e, -c);
            } else {
                it->second -= c;
                if (jackps::is_zero(it->second)) t_.erase(it);
            }
        }
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check_ring(b);
        SparsePoly r(a.n_);
        ExpVec e(a.n_);
        for (const auto& [ea, ca] : a.t_) {
            for (const auto& [eb, cb] : b.t_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly scaled(const C& c) const {
        SparsePoly r(n_);
        if (jackps::is_zero(c)) return r;
        for (const auto& [e, k] : t_) r.add_term(e, k * c);
        return r;
    }

    SparsePoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        SparsePoly acc = constant(n_, C(1));
        SparsePoly base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = (k >>= 1) ? base * base : base;
        }
        return acc;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

    const std::pair<const ExpVec, C>& leading() const {
        if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *t_.begin();
    }

private:
    int n_ = 1;
    Terms t_;
    void check_ring(const SparsePoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("mixed variable counts");
    }
};

template <class C>
struct NotDivisible : std::runtime_error {
    SparsePoly<C> remainder;
    explicit NotDivisible(SparsePoly<C> rem)
        : std::runtime_error("not divisible"), remainder(std::move(rem)) {}
};

// ------------------------------------------------------------- basic transforms

// K_{i,j}: swap variables i and j (1-based).
template <class C>
SparsePoly<C> transpose_vars(const SparsePoly<C>& p, int i, int j) {
    if (i < 1 || j < 1 || i > p.nvars() || j > p.nvars())
        throw std::out_of_range("transposition index out of range");
    if (i == j) return p;
    SparsePoly<C> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        std::swap(f[i - 1], f[j - 1]);
        r.add_term(std::move(f), c);
    }
    return r;
}

template <class C>
SparsePoly<C> derivative(const SparsePoly<C>& p, int i) {
    SparsePoly<C> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i - 1] == 0) continue;
        ExpVec f = e;
        --f[i - 1];
        r.add_term(std::move(f), c * C(e[i - 1]));
    }
    return r;
}

// x_i * d/dx_i
template <class C>
SparsePoly<C> euler_term(const SparsePoly<C>& p, int i) {
    SparsePoly<C> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i - 1] == 0) continue;
        r.add_term(e, c * C(e[i - 1]));
    }
    return r;
}

// Exact division: returns t with p = q*t, else throws NotDivisible with the
// nonzero remainder reached.  Leading-term elimination in graded-lex order.
template <class C>
SparsePoly<C> exact_div(const SparsePoly<C>& p, const SparsePoly<C>& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("mixed variable counts");
    SparsePoly<C> rem = p, quot(p.nvars());
    const auto& [qe, qc] = q.leading();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        ExpVec me(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) {
            me[i] = re[i] - qe[i];
            if (me[i] < 0) throw NotDivisible<C>(std::move(rem));
        }
        C mc = rc / qc;
        auto mono = SparsePoly<C>::monomial(p.nvars(), me, mc);
        quot += mono;
        rem -= mono * q;
    }
    return quot;
}

template <class C>
bool divides(const SparsePoly<C>& q, const SparsePoly<C>& p, SparsePoly<C>* quotient = nullptr) {
    try {
        SparsePoly<C> t = exact_div(p, q);
        if (quotient) *quotient = std::move(t);
        return true;
    } catch (const NotDivisible<C>&) {
        return false;
    }
}

// x_i := 0 (terms with positive i-exponent drop; variable count unchanged).
template <class C>
SparsePoly<C> substitute_zero(const SparsePoly<C>& p, int i) {
    SparsePoly<C> r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (e[i - 1] == 0) r.add_term(e, c);
    return r;
}

// Remove the last variable; requires no term to use it.
template <class C>
SparsePoly<C> drop_last_var(const SparsePoly<C>& p) {
    if (p.nvars() < 2) throw std::invalid_argument("cannot drop the only variable");
    SparsePoly<C> r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e.back() != 0) throw std::logic_error("dropped variable still occurs");
        r.add_term(ExpVec(e.begin(), e.end() - 1), c);
    }
    return r;
}

// Remove variable at position i (1-based); requires no term to use it.
template <class C>
SparsePoly<C> drop_var(const SparsePoly<C>& p, int i) {
    if (p.nvars() < 2) throw std::invalid_argument("cannot drop the only variable");
    SparsePoly<C> r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[i - 1] != 0) throw std::logic_error("dropped variable still occurs");
        ExpVec f;
        f.reserve(e.size() - 1);
        for (size_t t = 0; t < e.size(); ++t)
            if (static_cast<int>(t) != i - 1) f.push_back(e[t]);
        r.add_term(std::move(f), c);
    }
    return r;
}

// Append extra (unused) variables on the right.
template <class C>
SparsePoly<C> embed_vars(const SparsePoly<C>& p, int new_nvars) {
    if (new_nvars < p.nvars()) throw std::invalid_argument("embed cannot shrink");
    SparsePoly<C> r(new_nvars);
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f.resize(new_nvars, 0);
        r.add_term(std::move(f), c);
    }
    return r;
}

// Cluster collapse: x_t = x_{t+1} = ... = x_N =: z, z stored as variable t.
// Result has t variables.
template <class C>
SparsePoly<C> collapse_from(const SparsePoly<C>& p, int t) {
    if (t < 1 || t > p.nvars()) throw std::out_of_range("collapse index out of range");
    SparsePoly<C> r(t);
    for (const auto& [e, c] : p.terms()) {
        ExpVec f(e.begin(), e.begin() + t);
        for (int i = t; i < p.nvars(); ++i) f[t - 1] += e[i];
        r.add_term(std::move(f), c);
    }
    return r;
}

// x_i -> x_i + s for every variable, s a scalar.
template <class C>
SparsePoly<C> translate_all(const SparsePoly<C>& p, const C& s) {
    const int n = p.nvars();
    // binomial rows up to the maximum exponent
    int maxe = 0;
    for (const auto& [e, c] : p.terms())
        for (int x : e) maxe = std::max(maxe, x);
    std::vector<std::vector<Int>> binom(maxe + 1);
    for (int a = 0; a <= maxe; ++a) {
        binom[a].resize(a + 1);
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : Int(0));
    }
    std::vector<C> spow(maxe + 1, C(1));
    for (int a = 1; a <= maxe; ++a) spow[a] = spow[a - 1] * s;

    SparsePoly<C> r(n);
    ExpVec f(n);
    std::function<void(int, const ExpVec&, C)> rec = [&](int i, const ExpVec& e, C acc) {
        if (i == n) {
            r.add_term(f, acc);
            return;
        }
        for (int b = 0; b <= e[i]; ++b) {
            f[i] = e[i] - b;
            C term = acc * C(Rational(binom[e[i]][b])) * spow[b];
            rec(i + 1, e, std::move(term));
        }
    };
    for (const auto& [e, c] : p.terms()) rec(0, e, c);
    return r;
}

// x_i -> x_i - x_n for i < n, with x_n untouched (the cluster variable z).
template <class C>
SparsePoly<C> shift_by_minus_last(const SparsePoly<C>& p) {
    const int n = p.nvars();
    SparsePoly<C> r(n);
    for (const auto& [e, c] : p.terms()) {
        SparsePoly<C> prod = SparsePoly<C>::constant(n, c);
        for (int i = 0; i + 1 < n; ++i) {
            if (e[i] == 0) continue;
            SparsePoly<C> lin(n);
            ExpVec xi(n, 0), z(n, 0);
            xi[i] = 1;
            z[n - 1] = 1;
            lin.add_term(xi, C(1));
            lin.add_term(z, C(-1));
            prod = prod * lin.pow(e[i]);
        }
        if (e[n - 1] != 0) {
            ExpVec z(n, 0);
            z[n - 1] = e[n - 1];
            prod = prod * SparsePoly<C>::monomial(n, z);
        }
        r += prod;
    }
    return r;
}

// ------------------------------------------------- symmetrizers and monomials

namespace detail {
inline int inversions_desc(const std::vector<int>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++inv;
    return inv;
}
}  // namespace detail

// Sym_K: sum over the full subgroup S_K (not normalized).
template <class C>
SparsePoly<C> sym(const SparsePoly<C>& p, const std::vector<int>& K) {
    for (int i : K)
        if (i < 1 || i > p.nvars()) throw std::out_of_range("symmetrizer index out of range");
    SparsePoly<C> r(p.nvars());
    const size_t k = K.size();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> sub(k);
        for (size_t t = 0; t < k; ++t) sub[t] = e[K[t] - 1];
        std::sort(sub.begin(), sub.end());
        // stabilizer order = prod of multiplicities factorial
        Int stab(1);
        for (size_t t = 0; t < k;) {
            size_t u = t;
            while (u < k && sub[u] == sub[t]) ++u;
            for (size_t f = 2; f <= u - t; ++f) stab *= static_cast<long>(f);
            t = u;
        }
        C w = c * C(Rational(stab));
        do {
            ExpVec f = e;
            for (size_t t = 0; t < k; ++t) f[K[t] - 1] = sub[t];
            r.add_term(std::move(f), w);
        } while (std::next_permutation(sub.begin(), sub.end()));
    }
    return r;
}

// Asym_K: signed sum over the full subgroup S_K.
template <class C>
SparsePoly<C> asym(const SparsePoly<C>& p, const std::vector<int>& K) {
    for (int i : K)
        if (i < 1 || i > p.nvars()) throw std::out_of_range("symmetrizer index out of range");
    SparsePoly<C> r(p.nvars());
    const size_t k = K.size();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> sub(k);
        for (size_t t = 0; t < k; ++t) sub[t] = e[K[t] - 1];
        std::vector<int> sorted = sub;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const int base_sign = detail::inversions_desc(sub) % 2;
        do {
            ExpVec f = e;
            for (size_t t = 0; t < k; ++t) f[K[t] - 1] = sorted[t];
            int sgn = (base_sign + detail::inversions_desc(sorted)) % 2;
            r.add_term(std::move(f), sgn ? -c : c);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return r;
}

inline std::vector<int> index_range(int lo, int hi) {  // inclusive 1-based
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

// Delta_K = prod_{i<j in K} (x_i - x_j)
template <class C>
SparsePoly<C> vandermonde(int nvars, const std::vector<int>& K) {
    SparsePoly<C> r = SparsePoly<C>::constant(nvars, C(1));
    for (size_t a = 0; a < K.size(); ++a)
        for (size_t b = a + 1; b < K.size(); ++b) {
            SparsePoly<C> lin(nvars);
            ExpVec ei(nvars, 0), ej(nvars, 0);
            ei[K[a] - 1] = 1;
            ej[K[b] - 1] = 1;
            lin.add_term(std::move(ei), C(1));
            lin.add_term(std::move(ej), C(-1));
            r = r * lin;
        }
    return r;
}

template <class C>
bool symmetric_in(const SparsePoly<C>& p, int i, int j) {
    return transpose_vars(p, i, j) == p;
}
template <class C>
bool antisymmetric_in(const SparsePoly<C>& p, int i, int j) {
    return transpose_vars(p, i, j) == -p;
}

// Checks membership in the symmetry class of type T with block split m.
// Returns the witness transposition on failure.
template <class C>
std::optional<std::pair<int, int>> symmetry_class_witness(const SparsePoly<C>& p, SymmetryType T,
                                                          int m) {
    const int N = p.nvars();
    bool anti_I = (T == SymmetryType::AS || T == SymmetryType::AA);
    bool anti_J = (T == SymmetryType::AA || T == SymmetryType::SA);
    for (int i = 1; i < m; ++i) {
        bool ok = anti_I ? antisymmetric_in(p, i, i + 1) : symmetric_in(p, i, i + 1);
        if (!ok) return std::make_pair(i, i + 1);
    }
    for (int i = m + 1; i < N; ++i) {
        bool ok = anti_J ? antisymmetric_in(p, i, i + 1) : symmetric_in(p, i, i + 1);
        if (!ok) return std::make_pair(i, i + 1);
    }
    return std::nullopt;
}

// m_Lambda^T: product of the (anti)symmetric monomials of the two blocks.
template <class C>
SparsePoly<C> prescribed_monomial(const Superpartition& sp, SymmetryType T) {
    const int N = sp.N(), m = sp.m();
    bool anti_I = (T == SymmetryType::AS || T == SymmetryType::AA);
    bool anti_J = (T == SymmetryType::AA || T == SymmetryType::SA);
    if (anti_I && !sp.is_strict())
        throw std::invalid_argument("antisymmetric block needs strictly decreasing parts");
    if (anti_J && !sp.sym_strict())
        throw std::invalid_argument("antisymmetric block needs strictly decreasing parts");
    ExpVec e(N, 0);
    for (int i = 0; i < m; ++i) e[i] = sp.antisym()[i];
    for (int i = 0; i < N - m; ++i) e[m + i] = sp.sym()[i];
    auto p = SparsePoly<C>::monomial(N, std::move(e));
    auto I = index_range(1, m), J = index_range(m + 1, N);

    auto block = [&](const SparsePoly<C>& q, const std::vector<int>& K, bool anti,
                     const std::vector<int>& parts) {
        if (K.empty()) return q;
        if (anti) return asym(q, K);
        // monomial sum: distinct rearrangements, without the stabilizer factor
        Int f(1);
        for (size_t t = 0; t < parts.size();) {
            size_t u = t;
            while (u < parts.size() && parts[u] == parts[t]) ++u;
            for (size_t x = 2; x <= u - t; ++x) f *= static_cast<long>(x);
            t = u;
        }
        return sym(q, K).scaled(C(Rational(Int(1), f)));
    };
    auto r = block(p, I, anti_I, sp.antisym());
    return block(r, J, anti_J, sp.sym());
}

// Expansion of p in the m_Lambda^T basis; verifies class membership first.
template <class C>
std::vector<std::pair<Superpartition, C>> monomial_basis_expand(const SparsePoly<C>& p,
                                                                SymmetryType T, int m) {
    if (auto w = symmetry_class_witness(p, T, m)) {
        std::ostringstream os;
        os << "polynomial not in symmetry class " << to_string(T) << " (witness transposition K_{"
           << w->first << "," << w->second << "})";
        throw std::invalid_argument(os.str());
    }
    const int N = p.nvars();
    std::vector<std::pair<Superpartition, C>> out;
    SparsePoly<C> rem = p;
    while (!rem.is_zero()) {
        ExpVec e = rem.leading().first;
        C c = rem.leading().second;
        std::vector<int> anti(e.begin(), e.begin() + m), s(e.begin() + m, e.end());
        std::sort(anti.rbegin(), anti.rend());
        std::sort(s.rbegin(), s.rend());
        Superpartition lab(std::move(anti), std::move(s));
        rem -= prescribed_monomial<C>(lab, T).scaled(c);
        out.emplace_back(std::move(lab), std::move(c));
    }
    (void)N;
    return out;
}

// Rebuild a polynomial from a monomial-basis expansion.
template <class C>
SparsePoly<C> from_monomial_expansion(int nvars,
                                      const std::vector<std::pair<Superpartition, C>>& terms,
                                      SymmetryType T) {
    SparsePoly<C> r(nvars);
    for (const auto& [lab, c] : terms) r += prescribed_monomial<C>(lab, T).scaled(c);
    return r;
}

// Evaluate every coefficient at alpha0 (throws PoleError on a pole).
inline SparsePoly<Rational> specialize_alpha(const SparsePoly<RatFuncAlpha>& p,
                                             const Rational& a0) {
    SparsePoly<Rational> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.eval_at(a0));
    return r;
}

template <class C>
std::string poly_str(const SparsePoly<C>& p, const std::string& varname = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        os << "(" << coeff_str(c) << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << varname << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

}  // namespace jackps

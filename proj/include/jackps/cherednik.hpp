#pragma once

#include "jackps/mpoly.hpp"

namespace jackps {

// The operators act on C[x_1..x_N] with the Jack parameter embedded in the
// coefficient ring: the formal alpha in GENERIC mode (C = RatFuncAlpha), a
// fixed rational in NUMERIC mode (C = Rational).
template <class C>
struct OpContext {
    int nvars;
    C alpha;
};

inline OpContext<RatFuncAlpha> generic_ctx(int nvars) {
    return {nvars, RatFuncAlpha::alpha()};
}
inline OpContext<Rational> numeric_ctx(int nvars, const Rational& a0) { return {nvars, a0}; }

namespace detail {

// x_j - x_i as a polynomial
template <class C>
SparsePoly<C> var_diff(int nvars, int j, int i) {
    SparsePoly<C> d(nvars);
    ExpVec ej(nvars, 0), ei(nvars, 0);
    ej[j - 1] = 1;
    ei[i - 1] = 1;
    d.add_term(std::move(ej), C(1));
    d.add_term(std::move(ei), C(-1));
    return d;
}

}  // namespace detail

// Cherednik operator xi_j.  The divided-difference terms are exact divisions
// of (1 - K_{ij}) p by (x_j - x_i), always divisible by antisymmetry.
template <class C>
SparsePoly<C> xi(const OpContext<C>& ctx, int j, const SparsePoly<C>& p) {
    const int N = ctx.nvars;
    if (j < 1 || j > N) throw std::out_of_range("xi index out of range");
    if (p.nvars() != N) throw std::invalid_argument("variable count mismatch");
    SparsePoly<C> r = euler_term(p, j).scaled(ctx.alpha);
    for (int i = 1; i <= N; ++i) {
        if (i == j) continue;
        SparsePoly<C> diff = p - transpose_vars(p, i, j);
        if (diff.is_zero()) continue;
        SparsePoly<C> quot = exact_div(diff, detail::var_diff<C>(N, j, i));
        // numerator x_j for i<j, x_i for i>j
        int numvar = i < j ? j : i;
        ExpVec e(N, 0);
        e[numvar - 1] = 1;
        r += quot * SparsePoly<C>::monomial(N, std::move(e));
    }
    r -= p.scaled(C(j - 1));
    return r;
}

// Action of xi_j on a single monomial, in closed combinatorial form:
// the diagonal eigen-coefficient (alpha*g_j + integer) plus strictly
// dominance-lower compositions with integer coefficients.
struct XiMonomialAction {
    long alpha_coeff;  // alpha * gamma_j contribution
    long int_coeff;    // integer part of the diagonal coefficient
    std::vector<std::pair<Composition, long>> lower;
};

XiMonomialAction xi_on_monomial(int j, const Composition& gamma);

// Eigenvalue eta-bar_j of E_eta, as a linear polynomial in alpha.
RatFuncAlpha eta_bar(const Composition& eta, int j);
// Same value at a fixed alpha0.
Rational eta_bar_at(const Composition& eta, int j, const Rational& a0);

// Same transform as xi(), computed term-by-term from the closed monomial
// action instead of polynomial division.  The two routes are asserted equal
// in the test suite; composite operators below use this one.
template <class C>
SparsePoly<C> xi_fast(const OpContext<C>& ctx, int j, const SparsePoly<C>& p) {
    if (p.nvars() != ctx.nvars) throw std::invalid_argument("variable count mismatch");
    SparsePoly<C> r(ctx.nvars);
    for (const auto& [e, c] : p.terms()) {
        XiMonomialAction act = xi_on_monomial(j, e);
        C diag = ctx.alpha * C(act.alpha_coeff) + C(act.int_coeff);
        r.add_term(e, c * diag);
        for (const auto& [comp, w] : act.lower) r.add_term(comp, c * C(w));
    }
    return r;
}

// Sekiguchi operators at a sampled parameter value.
// S*(u) = prod_i (u + xi_i);  S~(u,v) = prod_{i<=m} (u + xi_i + alpha) *
// prod_{i>m} (v + xi_i).
template <class C>
SparsePoly<C> sekiguchi_star(const OpContext<C>& ctx, const C& u0, const SparsePoly<C>& p) {
    SparsePoly<C> r = p;
    for (int i = 1; i <= ctx.nvars; ++i) r = xi_fast(ctx, i, r) + r.scaled(u0);
    return r;
}

template <class C>
SparsePoly<C> sekiguchi_circ(const OpContext<C>& ctx, const C& u0, const C& v0, int m,
                             const SparsePoly<C>& p) {
    if (m < 0 || m > ctx.nvars) throw std::invalid_argument("invalid m split");
    SparsePoly<C> r = p;
    for (int i = 1; i <= m; ++i) r = xi_fast(ctx, i, r) + r.scaled(u0 + ctx.alpha);
    for (int i = m + 1; i <= ctx.nvars; ++i) r = xi_fast(ctx, i, r) + r.scaled(v0);
    return r;
}

// Conserved quantities: H = sum xi_i^2, I = sum_{i<=m} xi_i.
template <class C>
SparsePoly<C> op_H(const OpContext<C>& ctx, const SparsePoly<C>& p) {
    SparsePoly<C> r(ctx.nvars);
    for (int i = 1; i <= ctx.nvars; ++i) r += xi_fast(ctx, i, xi_fast(ctx, i, p));
    return r;
}

template <class C>
SparsePoly<C> op_I(const OpContext<C>& ctx, int m, const SparsePoly<C>& p) {
    if (m < 0 || m > ctx.nvars) throw std::invalid_argument("invalid m split");
    SparsePoly<C> r(ctx.nvars);
    for (int i = 1; i <= m; ++i) r += xi_fast(ctx, i, p);
    return r;
}

// The Sutherland operator, built directly from its definition.  Each pair
// contributes (x_i x_j (x_i - x_j)(d_i - d_j) p - 2 x_i x_j ... ) with the
// two singular terms combined into one exact division by (x_i - x_j)^2.
template <class C>
SparsePoly<C> op_D(const OpContext<C>& ctx, const SparsePoly<C>& p) {
    const int N = ctx.nvars;
    SparsePoly<C> r(N);
    for (int i = 1; i <= N; ++i) r += euler_term(euler_term(p, i), i);
    C two_over_alpha = C(2) / ctx.alpha;
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            SparsePoly<C> dd = derivative(p, i) - derivative(p, j);
            SparsePoly<C> diff = detail::var_diff<C>(N, i, j);  // x_i - x_j
            SparsePoly<C> a = diff * dd - (p - transpose_vars(p, i, j));
            if (a.is_zero()) continue;
            ExpVec e(N, 0);
            e[i - 1] = 1;
            e[j - 1] = 1;
            SparsePoly<C> xixj = SparsePoly<C>::monomial(N, std::move(e));
            r += exact_div(xixj * a, diff * diff).scaled(two_over_alpha);
        }
    }
    C nm1_over_alpha = C(N - 1) / ctx.alpha;
    for (int i = 1; i <= N; ++i) r += euler_term(p, i).scaled(nm1_over_alpha);
    return r;
}

// Cross-validation route.  As operators (checked on constants and linear
// monomials, N arbitrary):
//   sum xi_i^2 + (N-1) sum xi_i = alpha^2 D - N(N-1)(N-2)/6.
template <class C>
SparsePoly<C> op_D_via_H(const OpContext<C>& ctx, const SparsePoly<C>& p) {
    const int N = ctx.nvars;
    SparsePoly<C> h1(N);
    for (int i = 1; i <= N; ++i) h1 += xi_fast(ctx, i, p);
    SparsePoly<C> acc = op_H(ctx, p) + h1.scaled(C(N - 1)) +
                        p.scaled(C(static_cast<long>(N) * (N - 1) * (N - 2) / 6));
    return acc.scaled(C(1) / (ctx.alpha * ctx.alpha));
}

// Translation generator L_+ = sum_i d/dx_i.
template <class C>
SparsePoly<C> L_plus(const SparsePoly<C>& p) {
    SparsePoly<C> r(p.nvars());
    for (int i = 1; i <= p.nvars(); ++i) r += derivative(p, i);
    return r;
}

// Q∘ = 1 + sum_{i>m} K_{i,m} on A_I (x) S_J; zero map for m = 0.
// Q□ = (1 - sum_{i<=m} K_{i,m+1}) ∘ d/dx_{m+1}; zero map for m = N.
// Both verify the symmetry-class precondition.
template <class C>
SparsePoly<C> q_circle(const SparsePoly<C>& p, int m) {
    const int N = p.nvars();
    if (m < 0 || m > N) throw std::invalid_argument("invalid m split");
    if (auto w = symmetry_class_witness(p, SymmetryType::AS, m))
        throw std::invalid_argument("q_circle: polynomial not in A_I (x) S_J (witness K_{" +
                                    std::to_string(w->first) + "," + std::to_string(w->second) +
                                    "})");
    if (m == 0) return SparsePoly<C>(N);
    SparsePoly<C> r = p;
    for (int i = m + 1; i <= N; ++i) r += transpose_vars(p, i, m);
    return r;
}

template <class C>
SparsePoly<C> q_box(const SparsePoly<C>& p, int m) {
    const int N = p.nvars();
    if (m < 0 || m > N) throw std::invalid_argument("invalid m split");
    if (auto w = symmetry_class_witness(p, SymmetryType::AS, m))
        throw std::invalid_argument("q_box: polynomial not in A_I (x) S_J (witness K_{" +
                                    std::to_string(w->first) + "," + std::to_string(w->second) +
                                    "})");
    if (m == N) return SparsePoly<C>(N);
    SparsePoly<C> d = derivative(p, m + 1);
    SparsePoly<C> r = d;
    for (int i = 1; i <= m; ++i) r -= transpose_vars(d, i, m + 1);
    return r;
}

}  // namespace jackps

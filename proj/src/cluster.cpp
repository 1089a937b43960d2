#include "jackps/cluster.hpp"

namespace jackps {

namespace {

// prod_{j=1}^{n-1} (x_j - x_n) in an n-variable ring (x_n playing z)
SparsePoly<Rational> cluster_factor(int n) {
    SparsePoly<Rational> f = SparsePoly<Rational>::constant(n, Rational(1));
    for (int j = 1; j < n; ++j) {
        SparsePoly<Rational> lin(n);
        ExpVec a(n, 0), b(n, 0);
        a[j - 1] = 1;
        b[n - 1] = 1;
        lin.add_term(std::move(a), Rational(1));
        lin.add_term(std::move(b), Rational(-1));
        f = f * lin;
    }
    return f;
}

int divide_out(SparsePoly<Rational>& p, const SparsePoly<Rational>& f, int max_tries = 64) {
    int t = 0;
    while (t < max_tries) {
        SparsePoly<Rational> q(p.nvars());
        if (!divides(f, p, &q)) break;
        p = std::move(q);
        ++t;
    }
    return t;
}

}  // namespace

ClusterOrder cluster_order(const SparsePoly<Rational>& p, int k) {
    ClusterOrder out;
    SparsePoly<Rational> s = cluster_specialize(p, k);
    if (s.is_zero()) {
        out.order = std::nullopt;  // vanishes identically
        out.quotient = s;
        return out;
    }
    auto f = cluster_factor(s.nvars());
    int t = divide_out(s, f);
    out.order = t;
    out.quotient = std::move(s);
    return out;
}

ClusterReport verify_clustering_k1(const Superpartition& sp, SymmetryType T, int r) {
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("k = 1 clustering needs even r >= 2");
    const int N = sp.N(), m = sp.m();
    if (!admissible_for_type(sp, T, 1, r, N))
        throw std::invalid_argument("label not (1,r,N)-admissible in the flavor for " +
                                    to_string(T));
    if ((T == SymmetryType::SA || T == SymmetryType::AA) && !sp.sym_strict())
        throw std::invalid_argument("SA/AA clustering needs a strictly decreasing symmetric side");

    ClusterReport rep;
    rep.label = sp;
    rep.type = T;
    rep.k = 1;
    rep.r = r;

    auto P = prescribed_jack_specialized(sp, T, 1, r, /*certify=*/false);

    SparsePoly<Rational> factor = SparsePoly<Rational>::constant(N, Rational(1));
    int needed = r;
    switch (T) {
        case SymmetryType::AS:
            factor = vandermonde<Rational>(N, index_range(m + 1, N));
            break;
        case SymmetryType::SS:
            factor = vandermonde<Rational>(N, index_range(1, m)) *
                     vandermonde<Rational>(N, index_range(m + 1, N));
            break;
        case SymmetryType::SA:
            factor = vandermonde<Rational>(N, index_range(1, m));
            break;
        case SymmetryType::AA:
            factor = vandermonde<Rational>(N, index_range(1, N));
            needed = r - 1;
            break;
    }

    SparsePoly<Rational> work = P;
    rep.measured_power = divide_out(work, factor);
    rep.factor_divides = rep.measured_power >= needed;
    if (rep.factor_divides) {
        rep.quotient = P;
        for (int t = 0; t < needed; ++t) rep.quotient = exact_div(rep.quotient, factor);
    }
    rep.pass = rep.factor_divides;

    if (T == SymmetryType::AS && rep.factor_divides) {
        // cross-check the quotient against the closed construction:
        // Q = Delta_I^{r-1} prod_{i<=m<j}(x_i-x_j)^{r-1}
        //       * Sym_I(Asym_J E_kappa(x;2/(r-1)) / Delta_J)
        Composition eta = sp.antisym();
        eta.insert(eta.end(), sp.sym().begin(), sp.sym().end());
        Composition deltap = twisted_staircase(eta);
        Composition kappa(N);
        bool valid = true;
        for (int i = 0; i < N; ++i) {
            kappa[i] = eta[i] - (r - 1) * deltap[i];
            if (kappa[i] < 0) valid = false;
        }
        if (valid) {
            Rational pos(2, r - 1);
            auto Ek = nonsym_jack_at(kappa, pos);
            auto asymJ = asym(Ek, index_range(m + 1, N));
            auto dJ = vandermonde<Rational>(N, index_range(m + 1, N));
            SparsePoly<Rational> inner(N);
            if (!asymJ.is_zero()) inner = exact_div(asymJ, dJ);
            auto Q = sym(inner, index_range(1, m));
            Q = Q * vandermonde<Rational>(N, index_range(1, m)).pow(r - 1);
            SparsePoly<Rational> cross = SparsePoly<Rational>::constant(N, Rational(1));
            for (int i = 1; i <= m; ++i)
                for (int j = m + 1; j <= N; ++j) {
                    SparsePoly<Rational> lin(N);
                    ExpVec a(N, 0), b(N, 0);
                    a[i - 1] = 1;
                    b[j - 1] = 1;
                    lin.add_term(std::move(a), Rational(1));
                    lin.add_term(std::move(b), Rational(-1));
                    cross = cross * lin.pow(r - 1);
                }
            Q = Q * cross;
            if (!Q.is_zero()) {
                const auto& [qe, qc] = Q.leading();
                Rational c0 = rep.quotient.coeff(qe) / qc;
                if (rep.quotient == Q.scaled(c0)) {
                    rep.exactQ_constant = c0;
                } else {
                    rep.pass = false;
                }
            }
        }
    }
    return rep;
}

Composition twisted_staircase(const Composition& kappa) {
    const int N = static_cast<int>(kappa.size());
    // stable rank of each position under (value desc, position asc)
    std::vector<int> idx(N);
    for (int i = 0; i < N; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return kappa[a] > kappa[b]; });
    Composition deltap(N);
    for (int rank = 0; rank < N; ++rank) deltap[idx[rank]] = N - 1 - rank;
    return deltap;
}

BFReport baratta_forrester(const Composition& kappa, int m, int r) {
    const int N = static_cast<int>(kappa.size());
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("needs even r >= 2");
    if (m < 0 || m > N) throw std::invalid_argument("invalid split");
    for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        if (kappa[i - 1] < kappa[i])
            throw std::invalid_argument("kappa must be a two-partition concatenation");
        if (i > m && kappa[i - 1] == kappa[i])
            throw std::invalid_argument("second block must be strictly decreasing");
    }
    BFReport rep;
    rep.kappa = kappa;
    Composition deltap = twisted_staircase(kappa);
    rep.shifted = kappa;
    for (int i = 0; i < N; ++i) rep.shifted[i] += (r - 1) * deltap[i];

    Rational neg(-2, r - 1), pos(2, r - 1);
    auto lhs = nonsym_jack_at(rep.shifted, neg);
    auto rhs = vandermonde<Rational>(N, index_range(1, N)).pow(r - 1) * nonsym_jack_at(kappa, pos);
    const auto& [re, rc] = rhs.leading();
    rep.constant = lhs.coeff(re) / rc;
    rep.proportional = lhs == rhs.scaled(rep.constant);
    return rep;
}

}  // namespace jackps

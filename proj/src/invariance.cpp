#include "jackps/invariance.hpp"

#include <algorithm>
#include <set>

namespace jackps {

namespace {

// lower hook l_{X*}(s) + 1 + alpha a_{X~}(s) from the partition pair
RatFuncAlpha lower_hook(const Partition& star, const Partition& circ, int i, int l) {
    int leg = 0;
    for (int t = i + 1; t <= star.size(); ++t)
        if (star.part(t) >= l) ++leg;
    return RatFuncAlpha(AlphaPoly::linear(Int(circ.part(i) - l), Int(leg + 1)));
}

// upper hook l_{X~}(s) + alpha (a_{X*}(s) + 1)
RatFuncAlpha upper_hook(const Partition& star, const Partition& circ, int i, int l) {
    int leg = 0;
    for (int t = i + 1; t <= circ.size(); ++t)
        if (circ.part(t) >= l) ++leg;
    return RatFuncAlpha(AlphaPoly::linear(Int(star.part(i) - l + 1), Int(leg)));
}

std::vector<int> minus_at(const Partition& p, int i, int N) {
    std::vector<int> v;
    for (int t = 1; t <= N; ++t) v.push_back(p.part(t));
    v[i - 1] -= 1;
    return v;
}

Superpartition relabel(const Superpartition& sp, int row, bool to_bosonic) {
    // move the part of diagram row `row` between the two sides
    std::vector<int> anti = sp.antisym(), symside = sp.sym();
    int value = sp.star().part(row);
    if (to_bosonic) {
        anti.erase(std::find(anti.begin(), anti.end(), value));
        symside.push_back(value);
    } else {
        symside.erase(std::find(symside.begin(), symside.end(), value - 0));
        anti.push_back(value - 1);
    }
    std::sort(anti.rbegin(), anti.rend());
    std::sort(symside.rbegin(), symside.rend());
    return Superpartition(std::move(anti), std::move(symside));
}

}  // namespace

std::string to_string(CombVerdict v) {
    switch (v) {
        case CombVerdict::D1: return "D1";
        case CombVerdict::D2: return "D2";
        case CombVerdict::NotInvariant: return "no";
    }
    return "?";
}

std::vector<QExpansionTerm> q_circle_expand(const Superpartition& sp) {
    const int N = sp.N();
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    std::vector<QExpansionTerm> out;
    for (int i = 1; i <= N; ++i) {
        if (!sp.row_fermionic(i)) continue;
        const int j = ci.part(i);  // marked circle position (i, j)
        int circles_above = 0;
        for (int t = 1; t < i; ++t)
            if (sp.row_fermionic(t)) ++circles_above;
        Partition omega_circ(minus_at(ci, i, N));
        RatFuncAlpha coeff(circles_above % 2 ? -1 : 1);
        for (int l = 1; l <= st.part(i); ++l)
            coeff *= lower_hook(st, omega_circ, i, l) / lower_hook(st, ci, i, l);
        coeff *= RatFuncAlpha(AlphaPoly::linear(Int(j - 1), Int(N + 1 - i)));
        QExpansionTerm term;
        term.omega = relabel(sp, i, /*to_bosonic=*/true);
        term.coeff = std::move(coeff);
        term.marked = {i, j};
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<QExpansionTerm> q_box_expand(const Superpartition& sp) {
    const int N = sp.N();
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    std::vector<QExpansionTerm> out;
    for (int i = 1; i <= N; ++i) {
        if (sp.row_fermionic(i)) continue;
        const int j = st.part(i);
        if (j < 1 || j - 1 < st.part(i + 1)) continue;  // box not removable
        // the new circle value j-1 must keep the label strict
        bool clash = false;
        for (int v : sp.antisym())
            if (v == j - 1) clash = true;
        if (clash) continue;
        int circles_above = 0;
        for (int t = 1; t < i; ++t)
            if (sp.row_fermionic(t)) ++circles_above;
        Partition omega_star(minus_at(st, i, N));
        RatFuncAlpha coeff(circles_above % 2 ? -1 : 1);
        for (int l = 1; l < j; ++l)
            coeff *= upper_hook(st, ci, i, l) / upper_hook(omega_star, ci, i, l);
        QExpansionTerm term;
        term.omega = relabel(sp, i, /*to_bosonic=*/false);
        term.coeff = std::move(coeff);
        term.marked = {i, j};
        out.push_back(std::move(term));
    }
    return out;
}

InvarianceVerdict is_invariant_combinatorial(const Superpartition& sp, int k, int r, int N) {
    if (!sp.is_strict() || !admissible(sp, k, r, N, AdmissibleFlavor::Weak))
        throw std::invalid_argument(
            "invariance verdict needs a strict weakly (k,r,N)-admissible label");
    InvarianceVerdict v;
    v.label = sp;
    v.k = k;
    v.r = r;
    v.N = N;
    v.corner_list = corners(sp, k, r);

    // D1: a corner at (N-k, r), all others upper corners of hooks
    bool d1 = false;
    for (const auto& c : v.corner_list)
        if (c.cell.row == N - k && c.cell.col == r) d1 = true;
    if (d1)
        for (const auto& c : v.corner_list) {
            if (c.cell.row == N - k && c.cell.col == r) continue;
            if (c.hook == HookType::None) d1 = false;
        }
    if (d1) {
        v.combinatorial = CombVerdict::D1;
        return v;
    }

    // D2: all corners circled; non-inner ones C/C~ hooks up to one special
    bool all_circles = true;
    int exceptional = 0;
    bool exceptional_ok = true;
    for (const auto& c : v.corner_list) {
        if (!c.circled) {
            all_circles = false;
            break;
        }
        if (c.kind == CornerKind::Inner) continue;
        if (c.hook == HookType::C || c.hook == HookType::Ctilde) continue;
        ++exceptional;
        bool at_special = false;
        for (int kb = 1;; ++kb) {
            int row = N + 1 - kb * (k + 1);
            if (row < 1) break;
            if (c.cell.row == row && c.cell.col == kb * (r - 1) + 1) at_special = true;
        }
        if (!at_special) exceptional_ok = false;
    }
    if (all_circles && exceptional <= 1 && exceptional_ok)
        v.combinatorial = CombVerdict::D2;
    else
        v.combinatorial = CombVerdict::NotInvariant;
    return v;
}

AnalyticInvariance is_invariant_analytic(const Superpartition& sp, int k, int r, int N) {
    if (sp.N() != N)
        throw std::invalid_argument("label has a different variable count than N");
    auto P = prescribed_jack_specialized(sp, SymmetryType::AS, k, r, /*certify=*/false);
    AnalyticInvariance out;
    out.lplus_zero = L_plus(P).is_zero();
    const int m = sp.m();
    if (m == sp.N()) {
        out.qcirc_qbox_zero = true;  // Q□ = 0 by convention
    } else {
        auto qb = q_box(P, m);
        out.qcirc_qbox_zero = qb.is_zero() || q_circle(qb, m + 1).is_zero();
    }
    if (m == 0) {
        out.qbox_qcirc_zero = true;  // Q∘ = 0 by convention
    } else {
        auto qc = q_circle(P, m);
        out.qbox_qcirc_zero = qc.is_zero() || q_box(qc, m - 1).is_zero();
    }
    return out;
}

std::vector<Superpartition> generate_invariant_forms(int k, int r, int N) {
    check_kr(k, r);
    std::set<Superpartition> out;

    // stacked-rectangle partitions ((beta+1)r)^l (beta r)^k ... r^k with
    // N = k(beta+1) + l
    for (int l = 0; l <= k; ++l) {
        if ((N - l) % k != 0) continue;
        int beta = (N - l) / k - 1;
        if (beta < 1) continue;
        std::vector<int> lam;
        for (int t = 0; t < l; ++t) lam.push_back((beta + 1) * r);
        for (int b = beta; b >= 1; --b)
            for (int t = 0; t < k; ++t) lam.push_back(b * r);
        lam.resize(N, 0);
        out.insert(Superpartition({}, lam));
    }

    if (N <= 2 * k) {
        // F1
        if (N - k >= 1) {
            std::vector<int> symside(N - k, r);
            symside.resize(N, 0);
            out.insert(Superpartition({}, symside));
        }
        // F2: staircases
        for (int m = 1; m <= N; ++m) {
            bool ok = (m <= N && N <= k) || (N - 1 >= k && k >= N - m + r - 1);
            if (!ok) continue;
            std::vector<int> anti;
            for (int v = m - 1; v >= 0; --v) anti.push_back(v);
            out.insert(Superpartition(anti, std::vector<int>(N - m, 0)));
        }
        // F3
        for (int f = 0; f <= N - k - 1; ++f) {
            for (int g = 0; g <= std::min(k, r - 1); ++g) {
                int m = f + g + 1;
                if (f < g + N - 2 * k - 1) continue;
                if (N - k - m < 0 || m > N) continue;
                std::vector<int> anti;
                for (int v = r + f - 1; v >= r - 1; --v) anti.push_back(v);
                for (int v = g - 1; v >= 0; --v) anti.push_back(v);
                std::vector<int> symside(N - k - m, r);
                symside.resize(N - m, 0);
                out.insert(Superpartition(anti, symside));
            }
        }
    }

    std::vector<Superpartition> result;
    for (const auto& sp : out) {
        auto verdict = is_invariant_combinatorial(sp, k, r, N);
        if (!verdict.invariant())
            throw std::logic_error("generated form fails the invariance verdict: " + sp.str());
        result.push_back(sp);
    }
    return result;
}

InvariantClusterReport invariant_cluster(const Superpartition& sp, int k, int r, int N) {
    InvariantClusterReport rep;
    rep.label = sp;
    rep.k = k;
    rep.r = r;
    rep.N = N;
    if (!sp.is_strict() || !admissible(sp, k, r, N, AdmissibleFlavor::Weak))
        throw std::invalid_argument("invariant_cluster needs a strict weakly admissible label");
    if (!is_invariant_combinatorial(sp, k, r, N).invariant())
        throw std::invalid_argument("label is not translationally invariant");
    const int m = sp.m();
    auto P = prescribed_jack_specialized(sp, SymmetryType::AS, k, r, /*certify=*/false);

    int trailing_zero_sym = 0;
    for (auto it = sp.sym().rbegin(); it != sp.sym().rend() && *it == 0; ++it)
        ++trailing_zero_sym;
    const int length = N - trailing_zero_sym;  // rows with at least one box or circle value > 0

    if (length > N - k) {
        if (N < k + m + 1)
            throw std::invalid_argument("collapse would cross the antisymmetric block");
        rep.variant = "vanishes";
        rep.pass = cluster_specialize(P, k).is_zero();
        return rep;
    }

    // length == N - k: the generic order-r factorization
    if (length == N - k && trailing_zero_sym == k) {
        auto s = cluster_specialize(P, k);
        const int M = N - k;  // surviving x variables; z is variable M+1
        SparsePoly<Rational> factor = SparsePoly<Rational>::constant(M + 1, Rational(1));
        for (int i = m + 1; i <= M; ++i) {
            SparsePoly<Rational> lin(M + 1);
            ExpVec a(M + 1, 0), b(M + 1, 0);
            a[i - 1] = 1;
            b[M] = 1;
            lin.add_term(std::move(a), Rational(1));
            lin.add_term(std::move(b), Rational(-1));
            factor = factor * lin;
        }
        SparsePoly<Rational> q = s;
        bool ok = true;
        for (int t = 0; t < r && ok; ++t) ok = divides(factor, q, &q);
        rep.variant = "order-r";
        rep.pass = ok && q.total_degree() == sp.degree() - (N - k - m) * r;
        rep.quotient_degree = ok ? q.total_degree() : -1;

        // explicit variants of the factorization when the smallest positive
        // part equals r (cases i/ii) or the last circle is empty (case iii)
        int f0 = trailing_zero_sym;
        std::vector<int> nonzero_sym(sp.sym().begin(), sp.sym().end() - f0);
        int last_positive = nonzero_sym.empty() ? (m ? sp.antisym().back() : 0) : nonzero_sym.back();
        if (rep.pass && last_positive == r) {
            if (m == 0 || sp.antisym().back() >= r) {
                // case (i): P|_z = prod_{i=1}^{N-f0} (x_i - z)^r P_{Lambda - r^l}(x - z)
                std::vector<int> anti = sp.antisym(), symside = nonzero_sym;
                for (auto& v : anti) v -= r;
                for (auto& v : symside) v -= r;
                Superpartition reduced(anti, symside);
                rep.reduced = reduced;
                auto Pred = prescribed_jack_at(reduced, SymmetryType::AS, alpha_kr(k, r));
                auto shifted = shift_by_minus_last(embed_vars(Pred, M + 1));
                SparsePoly<Rational> full = SparsePoly<Rational>::constant(M + 1, Rational(1));
                for (int i = 1; i <= M; ++i) {
                    SparsePoly<Rational> lin(M + 1);
                    ExpVec a(M + 1, 0), b(M + 1, 0);
                    a[i - 1] = 1;
                    b[M] = 1;
                    lin.add_term(std::move(a), Rational(1));
                    lin.add_term(std::move(b), Rational(-1));
                    full = full * lin.pow(r);
                }
                rep.variant = "explicit-i";
                rep.pass = (s == full * shifted);
            } else if (sp.antisym().back() == r - 1) {
                std::vector<int> anti = sp.antisym(), symside = nonzero_sym;
                for (auto& v : anti) v -= r - 1;
                for (auto& v : symside) v -= r - 1;
                Superpartition reduced(anti, symside);
                rep.reduced = reduced;
                auto Pred = prescribed_jack_at(reduced, SymmetryType::AS, alpha_kr(k, r));
                auto shifted = shift_by_minus_last(embed_vars(Pred, M + 1));
                SparsePoly<Rational> full = SparsePoly<Rational>::constant(M + 1, Rational(1));
                for (int i = 1; i <= M; ++i) {
                    SparsePoly<Rational> lin(M + 1);
                    ExpVec a(M + 1, 0), b(M + 1, 0);
                    a[i - 1] = 1;
                    b[M] = 1;
                    lin.add_term(std::move(a), Rational(1));
                    lin.add_term(std::move(b), Rational(-1));
                    full = full * lin.pow(r - 1);
                }
                rep.variant = "explicit-ii";
                rep.pass = (s == full * shifted);
            } else if (sp.antisym().back() == 0 && m >= 2) {
                // case (iii): also send x_m -> z
                int v = std::min(r, sp.antisym()[m - 2]);
                SparsePoly<Rational> s2(collapse_from(P, M + 1));
                // merge variable m into z (last variable)
                SparsePoly<Rational> merged(M);  // vars: 1..m-1, m+1..M, z
                for (const auto& [e, c] : s2.terms()) {
                    ExpVec f;
                    f.reserve(M);
                    for (int t = 0; t < M + 1; ++t)
                        if (t != m - 1) f.push_back(e[t]);
                    f.back() += e[m - 1];
                    merged.add_term(std::move(f), c);
                }
                std::vector<int> anti(sp.antisym().begin(), sp.antisym().end() - 1);
                std::vector<int> symside = nonzero_sym;
                for (auto& q2 : anti) q2 -= v;
                for (auto& q2 : symside) q2 -= v;
                Superpartition reduced(anti, symside);
                rep.reduced = reduced;
                auto Pred = prescribed_jack_at(reduced, SymmetryType::AS, alpha_kr(k, r));
                auto shifted = shift_by_minus_last(embed_vars(Pred, M));
                SparsePoly<Rational> full = SparsePoly<Rational>::constant(M, Rational(1));
                for (int i = 1; i <= M - 1; ++i) {
                    SparsePoly<Rational> lin(M);
                    ExpVec a(M, 0), b(M, 0);
                    a[i - 1] = 1;
                    b[M - 1] = 1;
                    lin.add_term(std::move(a), Rational(1));
                    lin.add_term(std::move(b), Rational(-1));
                    full = full * lin.pow(v);
                }
                rep.variant = "explicit-iii";
                rep.pass = (merged == full * shifted);
            }
        }
        return rep;
    }

    rep.variant = "order-r";
    rep.pass = false;
    return rep;
}

}  // namespace jackps

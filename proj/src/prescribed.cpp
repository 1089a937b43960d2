#include "jackps/prescribed.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace jackps {

namespace {

bool anti_block_I(SymmetryType T) { return T == SymmetryType::AS || T == SymmetryType::AA; }
bool anti_block_J(SymmetryType T) { return T == SymmetryType::AA || T == SymmetryType::SA; }

Rational type_sign(SymmetryType T, int m, int N) {
    auto sgn_of = [](int t) { return (t * (t - 1) / 2) % 2 ? Rational(-1) : Rational(1); };
    Rational s(1);
    if (anti_block_I(T)) s *= sgn_of(m);
    if (anti_block_J(T)) s *= sgn_of(N - m);
    return s;
}

Int mult_factorial(const std::vector<int>& parts) {
    Int f(1);
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (size_t t = 2; t <= j - i; ++t) f *= static_cast<long>(t);
        i = j;
    }
    return f;
}

template <class C>
SparsePoly<C> apply_O(const SparsePoly<C>& p, SymmetryType T, int m, int N) {
    SparsePoly<C> r = p;
    if (m >= 2) r = anti_block_I(T) ? asym(r, index_range(1, m)) : sym(r, index_range(1, m));
    if (N - m >= 2)
        r = anti_block_J(T) ? asym(r, index_range(m + 1, N)) : sym(r, index_range(m + 1, N));
    return r;
}

Composition increasing_label(const Superpartition& sp) {
    Composition eta(sp.antisym().rbegin(), sp.antisym().rend());
    eta.insert(eta.end(), sp.sym().rbegin(), sp.sym().rend());
    return eta;
}

Composition decreasing_label(const Superpartition& sp) {
    Composition eta = sp.antisym();
    eta.insert(eta.end(), sp.sym().begin(), sp.sym().end());
    return eta;
}

ExpVec dominant_exponent(const Superpartition& sp) {
    ExpVec e = sp.antisym();
    e.insert(e.end(), sp.sym().begin(), sp.sym().end());
    return e;
}

using PSKey = std::tuple<std::vector<int>, std::vector<int>, int, bool>;
std::map<PSKey, std::unique_ptr<const PSJack>>& ps_cache() {
    static std::map<PSKey, std::unique_ptr<const PSJack>> cache;
    return cache;
}
std::mutex& ps_mutex() {
    static std::mutex m;
    return m;
}

const PSJack& build_prescribed(const Superpartition& sp, SymmetryType T, bool decreasing) {
    require_label_valid(sp, T);
    PSKey key{sp.antisym(), sp.sym(), static_cast<int>(T), decreasing};
    {
        std::lock_guard<std::mutex> lk(ps_mutex());
        auto it = ps_cache().find(key);
        if (it != ps_cache().end()) return *it->second;
    }
    const int N = sp.N(), m = sp.m();
    RatFuncAlpha norm(c_coeff(sp, T));
    Composition eta = decreasing ? decreasing_label(sp) : increasing_label(sp);
    if (decreasing) norm /= C_coeff(sp, T);
    const NSJack& E = nonsym_jack(eta);
    SparsePoly<RatFuncAlpha> poly = apply_O(E.poly, T, m, N).scaled(norm);
    if (!(poly.coeff(dominant_exponent(sp)) == RatFuncAlpha(1)))
        throw std::logic_error("prescribed polynomial is not monic in m_Lambda");
    auto out = std::make_unique<PSJack>();
    out->label = sp;
    out->type = T;
    out->poly = std::move(poly);
    out->decreasing_path = decreasing;
    std::lock_guard<std::mutex> lk(ps_mutex());
    auto [it, inserted] = ps_cache().emplace(std::move(key), std::move(out));
    return *it->second;
}

}  // namespace

void clear_prescribed_cache() {
    std::lock_guard<std::mutex> lk(ps_mutex());
    ps_cache().clear();
}

bool label_valid_for(const Superpartition& sp, SymmetryType T) {
    if (anti_block_I(T) && !sp.is_strict()) return false;
    if (anti_block_J(T) && !sp.sym_strict()) return false;
    return true;
}

void require_label_valid(const Superpartition& sp, SymmetryType T) {
    if (!label_valid_for(sp, T))
        throw std::invalid_argument("label " + sp.str() + " is not valid for type " +
                                    to_string(T) + " (strictness)");
}

Rational c_coeff(const Superpartition& sp, SymmetryType T) {
    require_label_valid(sp, T);
    Rational c = type_sign(T, sp.m(), sp.N());
    if (!anti_block_I(T)) c /= Rational(mult_factorial(sp.antisym()));
    if (!anti_block_J(T)) c /= Rational(mult_factorial(sp.sym()));
    return c;
}

RatFuncAlpha C_coeff(const Superpartition& sp, SymmetryType T) {
    require_label_valid(sp, T);
    const int N = sp.N();
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    std::vector<int> ferm_cols;
    for (int t : sp.fermionic_rows()) ferm_cols.push_back(ci.part(t));
    std::sort(ferm_cols.begin(), ferm_cols.end());
    ferm_cols.erase(std::unique(ferm_cols.begin(), ferm_cols.end()), ferm_cols.end());

    RatFuncAlpha acc(type_sign(T, sp.m(), sp.N()));
    auto ratio_minus = [](const AlphaPoly& X) { return RatFuncAlpha(X - AlphaPoly(1), X); };
    auto ratio_plus_gamma = [](const AlphaPoly& X, int cnt) {
        RatFuncAlpha r(1);
        for (int g = 0; g < cnt; ++g)
            r *= RatFuncAlpha(X - AlphaPoly(g) + AlphaPoly(1), X - AlphaPoly(g));
        return r;
    };

    // FF*(Lambda): cells in a fermionic row and a fermionic column, circles
    // themselves excluded; hooks read in the circled diagram.
    for (int i = 1; i <= N; ++i) {
        if (!sp.row_fermionic(i)) continue;
        for (int j : ferm_cols) {
            if (j > st.part(i)) continue;
            int legc = 0, cnt = 0;
            for (int t = i + 1; t <= N; ++t) {
                if (ci.part(t) >= j) ++legc;
                if (sp.row_fermionic(t) && ci.part(t) == j) ++cnt;
            }
            AlphaPoly X = AlphaPoly::linear(Int(ci.part(i) - j), Int(legc));
            acc *= anti_block_I(T) ? ratio_minus(X) : ratio_plus_gamma(X, cnt);
        }
    }

    // BRD-B cells: bosonic row i, column j the length of another bosonic row
    // of strictly smaller length; j = 0 rows participate, with column-0 legs
    // spanning every lower row.
    for (int i = 1; i <= N; ++i) {
        if (sp.row_fermionic(i)) continue;
        std::vector<int> cols;
        for (int t = 1; t <= N; ++t)
            if (t != i && !sp.row_fermionic(t) && st.part(t) < st.part(i))
                cols.push_back(st.part(t));
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (int j : cols) {
            int legs = 0, cnt = 0;
            for (int t = i + 1; t <= N; ++t) {
                if (j == 0 || st.part(t) >= j) ++legs;
                if (!sp.row_fermionic(t) && st.part(t) == j) ++cnt;
            }
            AlphaPoly X = AlphaPoly::linear(Int(st.part(i) - j), Int(legs));
            acc *= anti_block_J(T) ? ratio_minus(X) : ratio_plus_gamma(X, cnt);
        }
    }
    return acc;
}

RatFuncAlpha C_coeff_measured(const Superpartition& sp, SymmetryType T) {
    require_label_valid(sp, T);
    const int N = sp.N(), m = sp.m();
    auto dec = apply_O(nonsym_jack(decreasing_label(sp)).poly, T, m, N);
    auto inc = apply_O(nonsym_jack(increasing_label(sp)).poly, T, m, N);
    ExpVec lead = dominant_exponent(sp);
    RatFuncAlpha a = dec.coeff(lead), b = inc.coeff(lead);
    if (b.is_zero()) throw std::logic_error("degenerate symmetrization while measuring C");
    RatFuncAlpha c = a / b;
    if (!(dec == inc.scaled(c)))
        throw std::logic_error("symmetrized images are not proportional");
    return c;
}

const PSJack& prescribed_jack(const Superpartition& sp, SymmetryType T) {
    return build_prescribed(sp, T, false);
}

const PSJack& prescribed_jack_decreasing(const Superpartition& sp, SymmetryType T) {
    return build_prescribed(sp, T, true);
}

bool admissible_for_type(const Superpartition& sp, SymmetryType T, int k, int r, int N) {
    if (anti_block_I(T))  // AS, AA
        return sp.is_strict() && admissible(sp, k, r, N, AdmissibleFlavor::Weak);
    return admissible(sp, k, r, N, AdmissibleFlavor::Moderate);  // SS, SA
}

SparsePoly<Rational> prescribed_jack_at(const Superpartition& sp, SymmetryType T,
                                        const Rational& a0) {
    const PSJack& P = prescribed_jack_decreasing(sp, T);
    return specialize_alpha(P.poly, a0);
}

RatFuncAlpha d_eigenvalue(const Superpartition& sp) {
    const int N = sp.N();
    RatFuncAlpha a = RatFuncAlpha::alpha();
    return RatFuncAlpha(2) * a * eps_partition(sp.star()) + a * a * RatFuncAlpha(sp.degree()) +
           RatFuncAlpha(static_cast<long>(N) * (N - 1) * (2 * N - 1) / 6);
}

RatFuncAlpha e_eigenvalue(const Superpartition& sp) { return eps_superpartition(sp); }

namespace {

template <class C>
BCReport verify_conditions_impl(const Superpartition& sp, SymmetryType T,
                                const SparsePoly<C>& poly, const OpContext<C>& ctx) {
    BCReport rep;
    auto expansion = monomial_basis_expand(poly, T, sp.m());
    rep.triangular = true;
    for (const auto& [lab, c] : expansion) {
        if (lab == sp) {
            rep.monic = (c == C(1));
            continue;
        }
        if (dominance_superpartitions(sp, lab) != Cmp::Greater) rep.triangular = false;
    }
    const int N = sp.N(), m = sp.m();

    C d, e;
    if constexpr (std::is_same_v<C, RatFuncAlpha>) {
        d = d_eigenvalue(sp);
        e = e_eigenvalue(sp);
    } else {
        d = d_eigenvalue(sp).eval_at(ctx.alpha);
        e = e_eigenvalue(sp).eval_at(ctx.alpha);
    }
    rep.H_eigen = op_H(ctx, poly) == poly.scaled(d);
    rep.I_eigen = op_I(ctx, m, poly) == poly.scaled(e);

    rep.sekiguchi_star = true;
    rep.sekiguchi_circ = true;
    for (int s = 0; s <= N; ++s) {
        C u = C(s);
        C ev_star = C(1), ev_circ = C(1);
        for (int i = 1; i <= N; ++i) {
            ev_star = ev_star * (u + ctx.alpha * C(sp.star().part(i)) - C(i - 1));
            ev_circ = ev_circ * (u + ctx.alpha * C(sp.circled().part(i)) - C(i - 1));
        }
        if (!(sekiguchi_star(ctx, u, poly) == poly.scaled(ev_star))) rep.sekiguchi_star = false;
        if (!(sekiguchi_circ(ctx, u, u, m, poly) == poly.scaled(ev_circ)))
            rep.sekiguchi_circ = false;
    }
    return rep;
}

}  // namespace

BCReport verify_BC_conditions(const PSJack& P) {
    auto ctx = generic_ctx(P.label.N());
    return verify_conditions_impl<RatFuncAlpha>(P.label, P.type, P.poly, ctx);
}

BCReport verify_C_conditions(const Superpartition& sp, SymmetryType T,
                             const SparsePoly<Rational>& poly, const Rational& a0) {
    auto ctx = numeric_ctx(sp.N(), a0);
    return verify_conditions_impl<Rational>(sp, T, poly, ctx);
}

SparsePoly<Rational> prescribed_jack_specialized(const Superpartition& sp, SymmetryType T, int k,
                                                 int r, bool certify) {
    const int N = sp.N();
    if (!admissible_for_type(sp, T, k, r, N))
        throw std::invalid_argument("label " + sp.str() +
                                    " is not (k,r,N)-admissible in the flavor required for type " +
                                    to_string(T));
    Rational a0 = alpha_kr(k, r);
    SparsePoly<Rational> poly;
    try {
        poly = prescribed_jack_at(sp, T, a0);
    } catch (const PoleError&) {
        throw std::logic_error("pole at alpha_{k,r} for admissible label " + sp.str() +
                               " (regularity contract breached)");
    }
    if (certify) {
        BCReport rep = verify_C_conditions(sp, T, poly, a0);
        if (!rep.pass())
            throw std::logic_error("specialized polynomial failed (C1)/(C2) certification for " +
                                   sp.str());
    }
    return poly;
}

Restriction stability_restrict(const PSJack& P, RestrictWhich which) {
    const Superpartition& sp = P.label;
    const int N = sp.N(), m = sp.m();
    Restriction out;
    if (which == RestrictWhich::LastSymVar) {
        if (P.type != SymmetryType::AS && P.type != SymmetryType::SS)
            throw std::invalid_argument("last-variable stability applies to types AS and SS");
        if (sp.sym().empty())
            throw std::invalid_argument("label has no symmetric side to restrict");
        out.poly = drop_last_var(substitute_zero(P.poly, N));
        out.zero = out.poly.is_zero();
        if (sp.sym().back() == 0) {
            std::vector<int> symside = sp.sym();
            symside.pop_back();
            out.label = Superpartition(sp.antisym(), symside);
        }
        return out;
    }
    if (P.type != SymmetryType::SA && P.type != SymmetryType::SS)
        throw std::invalid_argument("variable-m stability applies to types SA and SS");
    if (m == 0) throw std::invalid_argument("label has no antisymmetric side to restrict");
    out.poly = drop_var(substitute_zero(P.poly, m), m);
    out.zero = out.poly.is_zero();
    if (sp.antisym().back() == 0) {
        std::vector<int> anti = sp.antisym();
        anti.pop_back();
        out.label = Superpartition(anti, sp.sym());
    }
    return out;
}

std::vector<std::pair<Superpartition, RatFuncAlpha>> expand_in_prescribed_basis(
    const SparsePoly<RatFuncAlpha>& p, SymmetryType T, int m) {
    if (auto w = symmetry_class_witness(p, T, m))
        throw std::invalid_argument("polynomial not in the target symmetry class (witness K_{" +
                                    std::to_string(w->first) + "," + std::to_string(w->second) +
                                    "})");
    std::vector<std::pair<Superpartition, RatFuncAlpha>> out;
    SparsePoly<RatFuncAlpha> rem = p;
    while (!rem.is_zero()) {
        ExpVec e = rem.leading().first;
        RatFuncAlpha c0 = rem.leading().second;
        std::vector<int> anti(e.begin(), e.begin() + m), symside(e.begin() + m, e.end());
        std::sort(anti.rbegin(), anti.rend());
        std::sort(symside.rbegin(), symside.rend());
        Superpartition lab(std::move(anti), std::move(symside));
        rem -= prescribed_jack(lab, T).poly.scaled(c0);
        out.emplace_back(std::move(lab), std::move(c0));
    }
    return out;
}

std::vector<std::pair<Superpartition, Rational>> expand_in_prescribed_basis_at(
    const SparsePoly<Rational>& p, SymmetryType T, int m, const Rational& a0) {
    std::vector<std::pair<Superpartition, Rational>> out;
    SparsePoly<Rational> rem = p;
    while (!rem.is_zero()) {
        ExpVec e = rem.leading().first;
        Rational c0 = rem.leading().second;
        std::vector<int> anti(e.begin(), e.begin() + m), symside(e.begin() + m, e.end());
        std::sort(anti.rbegin(), anti.rend());
        std::sort(symside.rbegin(), symside.rend());
        Superpartition lab(std::move(anti), std::move(symside));
        rem -= prescribed_jack_at(lab, T, a0).scaled(c0);
        out.emplace_back(std::move(lab), c0);
    }
    return out;
}

std::vector<Superpartition> uniqueness_diagnostic(const Superpartition& sp, SymmetryType T,
                                                  int k, int r, int N) {
    Rational a0 = alpha_kr(k, r);
    auto spectrum = [&](const Partition& p) {
        std::vector<Rational> v;
        for (int i = 1; i <= N; ++i) v.push_back(a0 * Rational(p.part(i)) - Rational(i - 1));
        std::sort(v.begin(), v.end());
        return v;
    };
    auto star_spec = spectrum(sp.star());
    auto circ_spec = spectrum(sp.circled());
    std::vector<Superpartition> hits;
    for (const auto& ga : enumerate_superpartitions(sp.degree(), sp.m(), N)) {
        if (ga == sp) continue;
        if (!label_valid_for(ga, T)) continue;
        if (dominance_superpartitions(sp, ga) != Cmp::Greater) continue;
        if (spectrum(ga.star()) == star_spec && spectrum(ga.circled()) == circ_spec)
            hits.push_back(ga);
    }
    return hits;
}

}  // namespace jackps

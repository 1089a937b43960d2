#include "jackps/jack.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace jackps {

namespace {

std::vector<long> partial_sums(const Composition& c) {
    std::vector<long> s(c.size());
    long acc = 0;
    for (size_t i = 0; i < c.size(); ++i) s[i] = acc += c[i];
    return s;
}

// all distinct rearrangements of the padded part multiset
std::vector<Composition> rearrangements(const Partition& mu, int N) {
    std::vector<int> v = mu.parts();
    v.resize(N, 0);
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

std::vector<Composition> dominance_lower_set(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    const int n = degree_of(eta);
    Partition etap = sort_to_partition(eta);
    std::vector<Composition> supp;
    auto mus = enumerate_partitions(n, N, etap.part(1));
    if (n == 0) mus = {Partition(std::vector<int>{})};
    const auto eta_ps = partial_sums(eta);
    for (const auto& mu : mus) {
        Cmp c = dominance_partitions(mu, etap);
        if (c == Cmp::Greater || c == Cmp::Incomparable) continue;
        for (auto& nu : rearrangements(mu, N)) {
            if (c == Cmp::Equal) {
                const auto nu_ps = partial_sums(nu);
                bool le = true;
                for (size_t i = 0; i < nu_ps.size(); ++i)
                    if (nu_ps[i] > eta_ps[i]) {
                        le = false;
                        break;
                    }
                if (!le) continue;
            }
            supp.push_back(std::move(nu));
        }
    }
    // total order refining dominance: (sorted parts, partial sums) lex desc
    auto key = [](const Composition& c) {
        std::vector<long> k;
        Partition p = sort_to_partition(c);
        for (int v : p.parts()) k.push_back(v);
        for (long v : partial_sums(c)) k.push_back(v);
        return k;
    };
    std::sort(supp.begin(), supp.end(),
              [&](const Composition& a, const Composition& b) { return key(a) > key(b); });
    return supp;
}

namespace {

struct SolveResult {
    std::map<Composition, RatFuncAlpha> coeff;
    std::vector<RatFuncAlpha> eig;
};

SolveResult triangular_solve(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    SolveResult res;
    res.eig.resize(N);
    for (int j = 1; j <= N; ++j) res.eig[j - 1] = eta_bar(eta, j);

    auto supp = dominance_lower_set(eta);
    // per-operator accumulators of xi_j applied to the finalized partial sum
    std::vector<std::map<Composition, RatFuncAlpha>> acc(N);
    auto push = [&](const Composition& g, const RatFuncAlpha& cg) {
        for (int j = 1; j <= N; ++j) {
            auto act = xi_on_monomial(j, g);
            for (const auto& [comp, w] : act.lower) {
                auto& slot = acc[j - 1][comp];
                slot += cg * RatFuncAlpha(w);
                if (slot.is_zero()) acc[j - 1].erase(comp);
            }
        }
    };

    res.coeff[eta] = RatFuncAlpha(1);
    push(eta, res.coeff[eta]);

    for (const auto& nu : supp) {
        if (nu == eta) continue;
        int jsel = 0;
        RatFuncAlpha nub;
        for (int j = 1; j <= N; ++j) {
            nub = eta_bar(nu, j);
            if (!(nub == res.eig[j - 1])) {
                jsel = j;
                break;
            }
        }
        if (jsel == 0)
            throw std::logic_error("eigenvalue collision at generic alpha for " +
                                   sort_to_partition(nu).str());
        auto it = acc[jsel - 1].find(nu);
        if (it == acc[jsel - 1].end()) continue;  // c_nu = 0
        RatFuncAlpha c = it->second / (res.eig[jsel - 1] - nub);
        if (c.is_zero()) continue;
        res.coeff[nu] = c;
        push(nu, c);
    }
    return res;
}

void verify_eigen_equations(const Composition& eta, const SolveResult& res) {
    const int N = static_cast<int>(eta.size());
    for (int j = 1; j <= N; ++j) {
        std::map<Composition, RatFuncAlpha> image;
        for (const auto& [g, cg] : res.coeff) {
            auto act = xi_on_monomial(j, g);
            RatFuncAlpha diag(AlphaPoly::linear(Int(act.alpha_coeff), Int(act.int_coeff)));
            image[g] += cg * diag;
            for (const auto& [comp, w] : act.lower) image[comp] += cg * RatFuncAlpha(w);
        }
        for (const auto& [g, v] : image) {
            auto it = res.coeff.find(g);
            RatFuncAlpha want = it == res.coeff.end()
                                    ? RatFuncAlpha()
                                    : it->second * res.eig[j - 1];
            if (!(v == want))
                throw std::logic_error("xi_" + std::to_string(j) +
                                       " eigen-equation failed after solve");
        }
    }
}

std::map<Composition, std::unique_ptr<const NSJack>>& jack_cache() {
    static std::map<Composition, std::unique_ptr<const NSJack>> cache;
    return cache;
}
std::mutex& jack_cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

void clear_nonsym_jack_cache() {
    std::lock_guard<std::mutex> lk(jack_cache_mutex());
    jack_cache().clear();
}

const NSJack& nonsym_jack(const Composition& eta) {
    for (int v : eta)
        if (v < 0) throw std::invalid_argument("negative part in composition");
    {
        std::lock_guard<std::mutex> lk(jack_cache_mutex());
        auto it = jack_cache().find(eta);
        if (it != jack_cache().end()) return *it->second;
    }
    SolveResult res = triangular_solve(eta);
    verify_eigen_equations(eta, res);
    auto out = std::make_unique<NSJack>();
    out->eta = eta;
    out->eigenvalues = res.eig;
    SparsePoly<RatFuncAlpha> p(static_cast<int>(eta.size()));
    for (const auto& [nu, c] : res.coeff) p.add_term(nu, c);
    out->poly = std::move(p);
    std::lock_guard<std::mutex> lk(jack_cache_mutex());
    auto [it, inserted] = jack_cache().emplace(eta, std::move(out));
    return *it->second;
}

SparsePoly<Rational> nonsym_jack_at(const Composition& eta, const Rational& a0) {
    const NSJack& E = nonsym_jack(eta);
    try {
        return specialize_alpha(E.poly, a0);
    } catch (const PoleError&) {
        throw PoleError("E_eta has a pole at alpha = " + to_string(a0) +
                        " (regularity precondition breached)");
    }
}

SparsePoly<Rational> nonsym_jack_specialized(const Composition& eta, int k, int r) {
    Rational a0 = alpha_kr(k, r);
    auto cert = knop_sahi_clear(eta);
    if (sgn(cert.v.eval(a0)) == 0)
        throw std::invalid_argument("E_eta not certified regular at alpha_{k,r}: "
                                    "Knop-Sahi product vanishes");
    return nonsym_jack_at(eta, a0);
}

ExchangeCoeffs exchange_image(const Composition& eta, int i) {
    const int N = static_cast<int>(eta.size());
    if (i < 1 || i >= N) throw std::out_of_range("exchange index out of range");
    ExchangeCoeffs out;
    out.swapped = eta;
    std::swap(out.swapped[i - 1], out.swapped[i]);
    if (eta[i - 1] == eta[i]) {
        out.self = RatFuncAlpha(1);
        out.other = RatFuncAlpha(0);
        return out;
    }
    RatFuncAlpha delta = eta_bar(eta, i) - eta_bar(eta, i + 1);
    RatFuncAlpha inv = RatFuncAlpha(1) / delta;
    out.self = inv;
    out.other = eta[i - 1] > eta[i] ? RatFuncAlpha(1) - inv * inv : RatFuncAlpha(1);
    return out;
}

KnopSahiCertificate knop_sahi_clear(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    KnopSahiCertificate cert;
    cert.v = AlphaPoly(1);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= eta[i - 1]; ++j) {
            const int a = eta[i - 1] - j;
            int l1 = 0, l2 = 0;
            for (int t = 1; t < i; ++t)
                if (j <= eta[t - 1] + 1 && eta[t - 1] + 1 <= eta[i - 1]) ++l1;
            for (int t = i + 1; t <= N; ++t)
                if (j <= eta[t - 1] && eta[t - 1] <= eta[i - 1]) ++l2;
            AlphaPoly f = AlphaPoly::linear(Int(a + 1), Int(l1 + l2 + 1));
            cert.v = cert.v * f;
            cert.factors.emplace_back(Cell{i, j}, std::move(f));
        }
    }
    return cert;
}

AlphaPoly knop_sahi_product_via_superpartition(const Composition& eta, int m) {
    const int N = static_cast<int>(eta.size());
    if (m < 0 || m > N) throw std::invalid_argument("invalid split");
    for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        if (eta[i - 1] < eta[i])
            throw std::invalid_argument("composition is not a two-partition concatenation");
    }
    Superpartition sp = phi_m(eta, m);
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    // fermionic columns: the circle columns Lambda^(*)_t of fermionic rows t
    std::vector<bool> fcol(st.part(1) + 2, false);
    for (int t : sp.fermionic_rows()) fcol[ci.part(t)] = true;

    AlphaPoly prod(1);
    for (int i = 1; i <= sp.N(); ++i) {
        for (int j = 1; j <= st.part(i); ++j) {
            const int a = st.part(i) - j;
            int leg = 0;
            const bool bf = !sp.row_fermionic(i) && fcol[j];
            for (int t = i + 1; t <= sp.N(); ++t) {
                int len = bf ? ci.part(t) : st.part(t);
                if (len >= j) ++leg;
            }
            prod = prod * AlphaPoly::linear(Int(a + 1), Int(leg + 1));
        }
    }
    return prod;
}

RegularityWitness regular_at(const Composition& eta, int m, int k, int r) {
    Rational a0 = alpha_kr(k, r);
    const int N = static_cast<int>(eta.size());
    if (m < 0 || m > N) throw std::invalid_argument("invalid split");
    for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        if (eta[i - 1] < eta[i])
            throw std::invalid_argument("composition is not a two-partition concatenation");
    }
    Superpartition sp = phi_m(eta, m);
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    std::vector<bool> fcol(st.part(1) + 2, false);
    for (int t : sp.fermionic_rows()) fcol[ci.part(t)] = true;

    RegularityWitness w;
    w.product_value = Rational(1);
    w.regular = true;
    for (int i = 1; i <= sp.N(); ++i) {
        for (int j = 1; j <= st.part(i); ++j) {
            const int a = st.part(i) - j;
            const bool bf = !sp.row_fermionic(i) && fcol[j];
            int leg = 0;
            for (int t = i + 1; t <= sp.N(); ++t)
                if ((bf ? ci.part(t) : st.part(t)) >= j) ++leg;
            Rational f = a0 * Rational(a + 1) + Rational(leg + 1);
            if (sgn(f) == 0) {
                w.regular = false;
                if (!w.vanishing_cell) w.vanishing_cell = Cell{i, j};
            }
            w.product_value *= f;
        }
    }
    return w;
}

std::vector<Composition> eigenvalue_collisions(const Composition& eta, const Rational& a0) {
    const int N = static_cast<int>(eta.size());
    std::vector<Composition> out;
    for (const auto& nu : dominance_lower_set(eta)) {
        if (nu == eta) continue;
        bool same = true;
        for (int j = 1; j <= N && same; ++j)
            if (eta_bar_at(eta, j, a0) != eta_bar_at(nu, j, a0)) same = false;
        if (same) out.push_back(nu);
    }
    return out;
}

}  // namespace jackps

#include "jackps/cherednik.hpp"

namespace jackps {

XiMonomialAction xi_on_monomial(int j, const Composition& gamma) {
    const int N = static_cast<int>(gamma.size());
    if (j < 1 || j > N) throw std::out_of_range("xi index out of range");
    XiMonomialAction act;
    act.alpha_coeff = gamma[j - 1];
    long diag = -(j - 1);
    std::map<Composition, long> lower;
    auto emit = [&](int pi, int vi, int pj, int vj, long w) {
        Composition c = gamma;
        c[pi] = vi;
        c[pj] = vj;
        lower[std::move(c)] += w;
    };
    for (int i = 1; i <= N; ++i) {
        if (i == j) continue;
        if (i < j) {
            const int a = gamma[i - 1], b = gamma[j - 1];
            if (a < b) {
                ++diag;
                for (int t = 0; t <= b - a - 2; ++t) emit(i - 1, b - 1 - t, j - 1, a + 1 + t, +1);
            } else if (a > b) {
                for (int t = 0; t <= a - b - 1; ++t) emit(i - 1, b + t, j - 1, a - t, -1);
            }
        } else {
            const int a = gamma[j - 1], b = gamma[i - 1];
            if (a > b) {
                for (int t = 0; t <= a - b - 1; ++t) emit(j - 1, b + t, i - 1, a - t, +1);
            } else if (a < b) {
                --diag;
                for (int t = 1; t <= b - a - 1; ++t) emit(j - 1, a + t, i - 1, b - t, -1);
            }
        }
    }
    act.int_coeff = diag;
    for (auto& [c, w] : lower)
        if (w != 0) act.lower.emplace_back(c, w);
    return act;
}

RatFuncAlpha eta_bar(const Composition& eta, int j) {
    const int N = static_cast<int>(eta.size());
    if (j < 1 || j > N) throw std::out_of_range("eigenvalue index out of range");
    long cnt = 0;
    for (int i = 1; i < j; ++i)
        if (eta[i - 1] >= eta[j - 1]) ++cnt;
    for (int i = j + 1; i <= N; ++i)
        if (eta[i - 1] > eta[j - 1]) ++cnt;
    return RatFuncAlpha(AlphaPoly::linear(Int(eta[j - 1]), Int(-cnt)));
}

Rational eta_bar_at(const Composition& eta, int j, const Rational& a0) {
    return eta_bar(eta, j).eval_at(a0);
}

}  // namespace jackps

#pragma once

#include "jackps/cherednik.hpp"
#include "jackps/mpoly.hpp"
#include "jackps/spart.hpp"

namespace jackps {

// Non-symmetric Jack polynomial E_eta at generic alpha: monic in x^eta,
// strictly dominance-triangular, joint eigenfunction of the xi_j.
struct NSJack {
    Composition eta;
    SparsePoly<RatFuncAlpha> poly;
    std::vector<RatFuncAlpha> eigenvalues;  // eta-bar_1 .. eta-bar_N
};

// All compositions nu of the same degree and length with nu ⪯ eta
// (including eta), sorted in a total order refining dominance, largest first.
std::vector<Composition> dominance_lower_set(const Composition& eta);

// Triangular back-substitution solve; memoized per (N, eta) for the session.
// Every xi_j eigen-equation is re-verified after construction.
const NSJack& nonsym_jack(const Composition& eta);

// GENERIC-then-evaluate specialization at alpha_{k,r}.  Refuses labels whose
// Knop-Sahi product vanishes at alpha_{k,r} (regularity not certified).
SparsePoly<Rational> nonsym_jack_specialized(const Composition& eta, int k, int r);
SparsePoly<Rational> nonsym_jack_at(const Composition& eta, const Rational& a0);

// Expansion of K_i E_eta in {E_eta, E_{K_i eta}} (Baker-Forrester exchange).
struct ExchangeCoeffs {
    RatFuncAlpha self;    // coefficient of E_eta
    RatFuncAlpha other;   // coefficient of E_{K_i eta}
    Composition swapped;  // K_i eta
};
ExchangeCoeffs exchange_image(const Composition& eta, int i);

// Knop-Sahi denominator clearing: v_eta(alpha) = prod_{s in eta} d_eta(s).
struct KnopSahiCertificate {
    AlphaPoly v;  // the full product
    std::vector<std::pair<Cell, AlphaPoly>> factors;
};
KnopSahiCertificate knop_sahi_clear(const Composition& eta);

// Regularity of E_eta at alpha_{k,r} via the superpartition factorization of
// the Knop-Sahi product (BF cells read legs in Lambda^(*), the rest in
// Lambda^*).  eta must be a concatenation of two partitions split at m.
struct RegularityWitness {
    bool regular = false;
    Rational product_value;            // prod d_eta(s) at alpha_{k,r}
    std::optional<Cell> vanishing_cell;  // a cell whose factor vanishes
};
RegularityWitness regular_at(const Composition& eta, int m, int k, int r);

// The same product assembled cell by cell from the composition diagram
// (no superpartition detour); used to cross-check the factorization.
AlphaPoly knop_sahi_product_via_superpartition(const Composition& eta, int m);

// Compositions nu ≺ eta whose full xi-eigenvalue vector coincides with
// eta's at alpha = a0 (uniqueness failure witnesses).
std::vector<Composition> eigenvalue_collisions(const Composition& eta, const Rational& a0);

// Clears the session memo (mainly for tests measuring construction cost).
void clear_nonsym_jack_cache();

}  // namespace jackps

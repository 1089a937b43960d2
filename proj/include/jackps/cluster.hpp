#pragma once

#include "jackps/prescribed.hpp"

namespace jackps {

// x_{N-k+1} = ... = x_N =: z, z stored as the surviving variable N-k+1.
// For prescribed-symmetry input the collapse must stay inside the symmetric
// block (checked by the caller via m <= N-k).
template <class C>
SparsePoly<C> cluster_specialize(const SparsePoly<C>& p, int k) {
    if (k < 1 || k >= p.nvars()) throw std::invalid_argument("cluster size out of range");
    return collapse_from(p, p.nvars() - k + 1);
}

// Largest rho such that prod_{j=1}^{N-k} (x_j - z)^rho divides the cluster
// specialization, with the exact quotient.  order = nullopt means the
// specialization vanished identically ("infinite order").
struct ClusterOrder {
    std::optional<int> order;
    SparsePoly<Rational> quotient;
};
ClusterOrder cluster_order(const SparsePoly<Rational>& p, int k);

// Full k = 1 clustering check of the four symmetry cases.  The label must be
// admissible in the flavor the case needs; r even.  The report carries the
// measured order of the case's Vandermonde factor and, for AS, the
// proportionality constant against the closed-form quotient.
struct ClusterReport {
    Superpartition label;
    SymmetryType type = SymmetryType::AS;
    int k = 0, r = 0;
    bool factor_divides = false;
    int measured_power = 0;            // largest t with factor^t dividing
    SparsePoly<Rational> quotient;     // specialization / factor^r
    std::optional<Rational> exactQ_constant;  // AS only: P/(Delta_J^r Q_closed)
    bool pass = false;
};
ClusterReport verify_clustering_k1(const Superpartition& sp, SymmetryType T, int r);

// E_{kappa+(r-1)delta'}(x; -2/(r-1)) = const * Delta_N^{r-1} E_kappa(x; 2/(r-1))
// with delta' the minimal-permutation twist of the staircase.  Returns the
// measured constant (1 exactly in the partition case of the corollary).
struct BFReport {
    Composition kappa;
    Composition shifted;  // kappa + (r-1) delta'
    Rational constant;
    bool proportional = false;
};
BFReport baratta_forrester(const Composition& kappa, int m, int r);

// delta' = omega_kappa(delta_N) where omega_kappa is the minimal permutation
// sorting kappa.
Composition twisted_staircase(const Composition& kappa);

}  // namespace jackps

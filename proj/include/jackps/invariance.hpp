#pragma once

#include "jackps/cluster.hpp"

namespace jackps {

// One term of the combinatorial expansions of Prop. 4.3 (type AS).
struct QExpansionTerm {
    Superpartition omega;
    RatFuncAlpha coeff;   // generic-alpha closed form
    Cell marked;
};

// Q∘ P_Lambda = sum over circle removals; Q□ P_Lambda = sum over
// box-to-circle conversions (labels must stay strict).
std::vector<QExpansionTerm> q_circle_expand(const Superpartition& sp);
std::vector<QExpansionTerm> q_box_expand(const Superpartition& sp);

enum class CombVerdict { D1, D2, NotInvariant };
std::string to_string(CombVerdict v);

struct InvarianceVerdict {
    Superpartition label;
    int k = 0, r = 0, N = 0;
    CombVerdict combinatorial = CombVerdict::NotInvariant;
    std::vector<CornerReport> corner_list;  // the certifying corner assignment
    bool invariant() const { return combinatorial != CombVerdict::NotInvariant; }
};

// Theorem 1.10 decision for strict weakly (k,r,N)-admissible labels:
//   D1: one corner sits at (N-k, r); every other corner is the upper corner
//       of a B/B~/C/C~ hook.
//   D2: all corners are circles; each non-inner one is the upper corner of a
//       C/C~ hook, except at most one at (N+1-kb(k+1), kb(r-1)+1).
InvarianceVerdict is_invariant_combinatorial(const Superpartition& sp, int k, int r, int N);

struct AnalyticInvariance {
    bool lplus_zero = false;
    bool qcirc_qbox_zero = false;  // Q∘(Q□ P) = 0
    bool qbox_qcirc_zero = false;  // Q□(Q∘ P) = 0
    bool invariant() const { return lplus_zero; }
};
// Builds P^AS at alpha_{k,r} and applies the operators directly.
AnalyticInvariance is_invariant_analytic(const Superpartition& sp, int k, int r, int N);

// Closed families of invariant labels: the rectangle-stack partitions (any
// N), and for N <= 2k the forms F1/F2/F3.  Every emitted label passes
// is_invariant_combinatorial.
std::vector<Superpartition> generate_invariant_forms(int k, int r, int N);

// Cluster factorizations of translationally invariant AS polynomials.
struct InvariantClusterReport {
    Superpartition label;
    int k = 0, r = 0, N = 0;
    std::string variant;                // "vanishes", "order-r", "explicit-i", "explicit-ii", "explicit-iii"
    bool pass = false;
    std::optional<Superpartition> reduced;  // the factored-out label, when explicit
    int quotient_degree = -1;
};
InvariantClusterReport invariant_cluster(const Superpartition& sp, int k, int r, int N);

}  // namespace jackps

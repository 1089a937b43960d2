#pragma once

#include "jackps/jack.hpp"

namespace jackps {

// Jack polynomial with prescribed symmetry, generic alpha.
struct PSJack {
    Superpartition label;
    SymmetryType type = SymmetryType::AS;
    SparsePoly<RatFuncAlpha> poly;
    bool decreasing_path = false;  // which construction produced the polynomial
};

// Label validity for the basis of the given type: AS/AA need a strictly
// decreasing antisymmetric side, SA/AA a strictly decreasing symmetric side.
bool label_valid_for(const Superpartition& sp, SymmetryType T);
void require_label_valid(const Superpartition& sp, SymmetryType T);

// Monicity constant: the coefficient of O_{I,J} x^eta on m_Lambda.
Rational c_coeff(const Superpartition& sp, SymmetryType T);

// Renormalization between the increasing and decreasing labels,
// O E_{(lam+,mu+)} = C_Lambda O E_{(lam-,mu-)}, as the closed hook product
// over FF*(Lambda) and BRD-B cells.
RatFuncAlpha C_coeff(const Superpartition& sp, SymmetryType T);
// The same constant measured directly on the two symmetrized polynomials.
RatFuncAlpha C_coeff_measured(const Superpartition& sp, SymmetryType T);

// Definition route: c_Lambda O_{I,J} E_eta with the increasing label
// eta = (L_m..L_1, L_N..L_{m+1}).  Memoized.
const PSJack& prescribed_jack(const Superpartition& sp, SymmetryType T);

// Decreasing route: (c_Lambda / C_Lambda) O_{I,J} E_{(lam+, mu+)}.  Memoized.
const PSJack& prescribed_jack_decreasing(const Superpartition& sp, SymmetryType T);

// Admissibility flavor required for specialization of each type.
bool admissible_for_type(const Superpartition& sp, SymmetryType T, int k, int r, int N);

// GENERIC-then-evaluate at alpha_{k,r} through the decreasing path, with the
// (C1)/(C2) certification (triangularity + Sekiguchi eigenchecks at N+1
// sampled u) unless certify = false.
SparsePoly<Rational> prescribed_jack_specialized(const Superpartition& sp, SymmetryType T, int k,
                                                 int r, bool certify = true);
SparsePoly<Rational> prescribed_jack_at(const Superpartition& sp, SymmetryType T,
                                        const Rational& a0);

// Closed-form eigenvalues of Theorem 1.7.
RatFuncAlpha d_eigenvalue(const Superpartition& sp);  // for H = sum xi_i^2
RatFuncAlpha e_eigenvalue(const Superpartition& sp);  // for I = sum_{i<=m} xi_i

struct BCReport {
    bool monic = false;
    bool triangular = false;
    bool H_eigen = false;
    bool I_eigen = false;
    bool sekiguchi_star = false;
    bool sekiguchi_circ = false;
    bool pass() const {
        return monic && triangular && H_eigen && I_eigen && sekiguchi_star && sekiguchi_circ;
    }
};
// (B1)/(B2) checks at generic alpha with the closed-form eigenvalues,
// Sekiguchi relations sampled at u = 0..N.
BCReport verify_BC_conditions(const PSJack& P);
// (C1)/(C2) checks on a specialized polynomial.
BCReport verify_C_conditions(const Superpartition& sp, SymmetryType T,
                             const SparsePoly<Rational>& poly, const Rational& a0);

// Stability restrictions.  Sets x_N = 0 (types AS/SS) or x_m = 0 (SA/SS)
// and drops the variable.  label is filled when the removed part is zero, so
// that a reduced label exists; the caller compares poly against that label's
// polynomial.  The x_m identities hold when every symmetric part is positive
// (the hypothesis the paper's permuted-stability lemma needs); outside that
// range the restriction is still returned, just not matched to a label.
enum class RestrictWhich { LastSymVar, VarM };
struct Restriction {
    bool zero = true;
    std::optional<Superpartition> label;
    SparsePoly<RatFuncAlpha> poly;  // restricted polynomial, one fewer variable
};
Restriction stability_restrict(const PSJack& P, RestrictWhich which);

// Expansion of a symmetry-class polynomial in the P_Gamma basis (labels of
// split m); greedy peel by triangularity.
std::vector<std::pair<Superpartition, RatFuncAlpha>> expand_in_prescribed_basis(
    const SparsePoly<RatFuncAlpha>& p, SymmetryType T, int m);
std::vector<std::pair<Superpartition, Rational>> expand_in_prescribed_basis_at(
    const SparsePoly<Rational>& p, SymmetryType T, int m, const Rational& a0);

// Sekiguchi eigenvalue collision scan: superpartitions Gamma < Lambda of the
// same bi-degree, valid as indices for type T, whose (eps_{Gamma*},
// eps_{Gamma~}) coincide with Lambda's at alpha_{k,r}.  Empty for labels
// admissible in the flavor matching T.
std::vector<Superpartition> uniqueness_diagnostic(const Superpartition& sp, SymmetryType T,
                                                  int k, int r, int N);

void clear_prescribed_cache();

}  // namespace jackps

#pragma once

#include "jackps/qalpha.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace jackps {

// Ordered list of non-negative integers, fixed length N.
using Composition = std::vector<int>;

int degree_of(const Composition& c);

enum class Cmp { Greater, Less, Equal, Incomparable };

// 1-based matrix-convention cell: row 1 on top.
struct Cell {
    int row = 0, col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Weakly decreasing parts; trailing zeros allowed and ignored by length().
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // 1-based, 0 beyond stored length
    int length() const;     // number of nonzero parts
    int size() const { return static_cast<int>(parts_.size()); }
    int degree() const;

    bool contains(const Cell& s) const { return s.row >= 1 && s.col >= 1 && s.col <= part(s.row); }

    friend bool operator==(const Partition& a, const Partition& b);
    friend bool operator<(const Partition& a, const Partition& b);  // lexicographic, for maps

    std::string str() const;

private:
    std::vector<int> parts_;
};

Partition sort_to_partition(const Composition& c);
Partition conjugate(const Partition& p);
Int b_stat(const Partition& p);  // b(lambda) = sum (i-1) lambda_i

Cmp dominance_partitions(const Partition& a, const Partition& b);
Cmp dominance_compositions(const Composition& a, const Composition& b);

struct CellStats {
    int arm, arm_colength, leg, leg_colength;
};
// Throws std::out_of_range when s lies outside p's diagram.
CellStats cell_stats(const Partition& p, const Cell& s);

// eps_lambda(alpha) = alpha*b(lambda') - b(lambda)
RatFuncAlpha eps_partition(const Partition& p);

// Superpartition (L_1..L_m; L_{m+1}..L_N).  Both sides weakly decreasing;
// stored lengths are significant (they fix N = m + sym side length).
class Superpartition {
public:
    Superpartition() = default;
    Superpartition(std::vector<int> antisym, std::vector<int> sym);

    const std::vector<int>& antisym() const { return anti_; }
    const std::vector<int>& sym() const { return sym_; }
    int m() const { return static_cast<int>(anti_.size()); }
    int N() const { return static_cast<int>(anti_.size() + sym_.size()); }
    int degree() const;  // n
    bool is_strict() const;            // antisym side strictly decreasing
    bool sym_strict() const;           // symmetric side strictly decreasing (on nonzero prefix + one zero)

    const Partition& star() const { return star_; }      // Lambda^*
    const Partition& circled() const { return circ_; }   // Lambda^(*)
    // For diagram row i (1-based): true when the row carries a circle.
    bool row_fermionic(int i) const;
    int length_star() const { return star_.length(); }
    int length_circled() const { return circ_.length(); }

    // Canonical diagram: rows sorted by (star value desc, circled first).
    // part value of diagram row i is star().part(i); circle sits at column
    // star().part(i) + 1 when fermionic.
    std::vector<int> fermionic_rows() const;

    friend bool operator==(const Superpartition& a, const Superpartition& b) {
        return a.anti_ == b.anti_ && a.sym_ == b.sym_;
    }
    friend bool operator<(const Superpartition& a, const Superpartition& b) {
        return std::tie(a.anti_, a.sym_) < std::tie(b.anti_, b.sym_);
    }

    std::string str() const;  // "(a1,...,am;b1,...,bK)" with empty sides allowed

private:
    std::vector<int> anti_, sym_;
    Partition star_, circ_;
    std::vector<bool> fermi_;  // per diagram row of circ_
    void derive();
};

Superpartition parse_superpartition(const std::string& text);

Cmp dominance_superpartitions(const Superpartition& a, const Superpartition& b);

// eps_Lambda(alpha) = sum over circled cells of (alpha a'_{circ}(s) - l'_{circ}(s))
RatFuncAlpha eps_superpartition(const Superpartition& sp);

// phi_m: composition -> superpartition ((c_1..c_m)^+; (c_{m+1}..c_N)^+)
Superpartition phi_m(const Composition& c, int m);

enum class AdmissibleFlavor { Weak, Moderate, Strong };

// (k,r,N)-admissibility of a partition per the gap condition
// lambda_i - lambda_{i+k} >= r for all i <= N-k (parts beyond length read 0).
bool admissible_partition(const Partition& p, int k, int r, int N);

// Superpartition admissibility; throws on gcd(k+1, r-1) != 1.
bool admissible(const Superpartition& sp, int k, int r, int N, AdmissibleFlavor flavor);
// Unqualified "(k,r,N)-admissible": strongly, or strict and weakly.
bool admissible_default(const Superpartition& sp, int k, int r, int N);

enum class CornerKind { Inner, Bordering, Outer };
enum class HookType { B, Btilde, C, Ctilde, None };

struct CornerReport {
    Cell cell;
    bool circled = false;
    CornerKind kind = CornerKind::Outer;
    HookType hook = HookType::None;
    int k = 0, r = 0;  // hook parameters used for classification
};

// All corners of the diagram (cells with no neighbour right or below),
// classified per the boundary convention that every (0,j) and (i,0) is a
// corner.  Hook classification is filled for the given (k,r); pass k=r=0
// to skip it.
std::vector<CornerReport> corners(const Superpartition& sp, int k = 0, int r = 0);

// Column removal (all rows shrink by one), circle removal (trailing zero
// antisymmetric part dropped), row-wise sum with a partition.
Superpartition remove_column(const Superpartition& sp);
Superpartition remove_circle(const Superpartition& sp);
Superpartition add_partition(const Superpartition& sp, const Partition& p);

// All superpartitions of bi-degree (n|m) with at most N diagram rows that
// satisfy pred, in decreasing lexicographic order on (Lambda^*, Lambda^(*))
// (a total refinement of dominance).
std::vector<Superpartition> enumerate_superpartitions(
    int n, int m, int N, const std::function<bool(const Superpartition&)>& pred = {});

// All partitions of n with at most maxlen parts, each part <= maxpart.
std::vector<Partition> enumerate_partitions(int n, int maxlen, int maxpart);

}  // namespace jackps

#include "jackps/spart.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jackps {

int degree_of(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

// ----------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("parts not weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition row index must be >= 1");
    if (i > static_cast<int>(parts_.size())) return 0;
    return parts_[i - 1];
}

int Partition::length() const {
    int l = 0;
    for (int p : parts_)
        if (p > 0) ++l;
    return l;
}

int Partition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool operator==(const Partition& a, const Partition& b) {
    // trailing zeros are not semantically significant
    int n = std::max(a.size(), b.size());
    for (int i = 1; i <= n; ++i)
        if (a.part(i) != b.part(i)) return false;
    return true;
}

bool operator<(const Partition& a, const Partition& b) {
    int n = std::max(a.size(), b.size());
    for (int i = 1; i <= n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Partition sort_to_partition(const Composition& c) {
    std::vector<int> v(c);
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

Partition conjugate(const Partition& p) {
    std::vector<int> v;
    for (int j = 1; j <= p.part(1); ++j) {
        int cnt = 0;
        for (int i = 1; i <= p.size(); ++i)
            if (p.part(i) >= j) ++cnt;
        v.push_back(cnt);
    }
    return Partition(std::move(v));
}

Int b_stat(const Partition& p) {
    Int s(0);
    for (int i = 1; i <= p.size(); ++i) s += Int(i - 1) * p.part(i);
    return s;
}

Cmp dominance_partitions(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("incomparable degrees");
    int n = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    bool ge = true, le = true;
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
    }
    if (ge && le) return Cmp::Equal;
    if (ge) return Cmp::Greater;
    if (le) return Cmp::Less;
    return Cmp::Incomparable;
}

Cmp dominance_compositions(const Composition& a, const Composition& b) {
    if (degree_of(a) != degree_of(b)) throw std::invalid_argument("incomparable degrees");
    Partition ap = sort_to_partition(a), bp = sort_to_partition(b);
    Cmp top = dominance_partitions(ap, bp);
    if (top != Cmp::Equal) return top;
    // same sorted version: second tier on partial sums
    size_t n = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    bool ge = true, le = true, eq = true;
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
        if (sa != sb) eq = false;
    }
    if (eq) return Cmp::Equal;
    if (ge) return Cmp::Greater;
    if (le) return Cmp::Less;
    return Cmp::Incomparable;
}

CellStats cell_stats(const Partition& p, const Cell& s) {
    if (!p.contains(s)) throw std::out_of_range("cell outside diagram");
    Partition c = conjugate(p);
    return CellStats{p.part(s.row) - s.col, s.col - 1, c.part(s.col) - s.row, s.row - 1};
}

RatFuncAlpha eps_partition(const Partition& p) {
    return RatFuncAlpha(AlphaPoly::linear(b_stat(conjugate(p)), -b_stat(p)));
}

// ------------------------------------------------------------ Superpartition

Superpartition::Superpartition(std::vector<int> antisym, std::vector<int> sym)
    : anti_(std::move(antisym)), sym_(std::move(sym)) {
    auto check = [](const std::vector<int>& v, const char* side) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw std::invalid_argument(std::string("negative part on ") + side);
            if (i + 1 < v.size() && v[i] < v[i + 1])
                throw std::invalid_argument(std::string("parts not weakly decreasing on ") + side);
        }
    };
    check(anti_, "antisymmetric side");
    check(sym_, "symmetric side");
    derive();
}

void Superpartition::derive() {
    struct Row {
        int value;
        bool fermi;
    };
    std::vector<Row> rows;
    rows.reserve(N());
    for (int v : anti_) rows.push_back({v, true});
    for (int v : sym_) rows.push_back({v, false});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.fermi && !b.fermi;  // circled rows first among equal values
    });
    std::vector<int> st, ci;
    fermi_.clear();
    for (const Row& r : rows) {
        st.push_back(r.value);
        ci.push_back(r.value + (r.fermi ? 1 : 0));
        fermi_.push_back(r.fermi);
    }
    star_ = Partition(std::move(st));
    circ_ = Partition(std::move(ci));
}

int Superpartition::degree() const {
    return std::accumulate(anti_.begin(), anti_.end(), 0) +
           std::accumulate(sym_.begin(), sym_.end(), 0);
}

bool Superpartition::is_strict() const {
    for (size_t i = 0; i + 1 < anti_.size(); ++i)
        if (anti_[i] <= anti_[i + 1]) return false;
    return true;
}

bool Superpartition::sym_strict() const {
    for (size_t i = 0; i + 1 < sym_.size(); ++i)
        if (sym_[i] <= sym_[i + 1]) return false;
    return true;
}

bool Superpartition::row_fermionic(int i) const {
    if (i < 1 || i > N()) return false;
    return fermi_[i - 1];
}

std::vector<int> Superpartition::fermionic_rows() const {
    std::vector<int> v;
    for (int i = 1; i <= N(); ++i)
        if (fermi_[i - 1]) v.push_back(i);
    return v;
}

std::string Superpartition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < anti_.size(); ++i) {
        if (i) os << ",";
        os << anti_[i];
    }
    os << ";";
    for (size_t i = 0; i < sym_.size(); ++i) {
        if (i) os << ",";
        os << sym_[i];
    }
    os << ")";
    return os.str();
}

namespace {

std::vector<int> parse_side(std::string s) {
    // erase the UTF-8 empty-set sign and whitespace
    std::string t;
    for (size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "\xe2\x88\x85") == 0) {
            i += 3;
        } else if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        } else {
            t += s[i++];
        }
    }
    std::vector<int> parts;
    if (t.empty()) return parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in superpartition literal");
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed part: " + item);
        parts.push_back(v);
    }
    return parts;
}

}  // namespace

Superpartition parse_superpartition(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    std::vector<int> anti, sym;
    if (semi == std::string::npos) {
        sym = parse_side(s);  // plain partition: (; p1,...,pl)
    } else {
        anti = parse_side(s.substr(0, semi));
        sym = parse_side(s.substr(semi + 1));
    }
    return Superpartition(std::move(anti), std::move(sym));
}

Cmp dominance_superpartitions(const Superpartition& a, const Superpartition& b) {
    if (a.degree() != b.degree() || a.m() != b.m())
        throw std::invalid_argument("bi-degree mismatch");
    Cmp top = dominance_partitions(a.star(), b.star());
    if (top != Cmp::Equal) return top;
    return dominance_partitions(a.circled(), b.circled());
}

RatFuncAlpha eps_superpartition(const Superpartition& sp) {
    AlphaPoly acc;
    for (int i : sp.fermionic_rows())
        acc += AlphaPoly::linear(Int(sp.star().part(i)), Int(-(i - 1)));
    return RatFuncAlpha(acc);
}

Superpartition phi_m(const Composition& c, int m) {
    if (m < 0 || m > static_cast<int>(c.size()))
        throw std::invalid_argument("phi_m: m out of range");
    std::vector<int> anti(c.begin(), c.begin() + m), sym(c.begin() + m, c.end());
    std::sort(anti.rbegin(), anti.rend());
    std::sort(sym.rbegin(), sym.rend());
    return Superpartition(std::move(anti), std::move(sym));
}

bool admissible_partition(const Partition& p, int k, int r, int N) {
    for (int i = 1; i <= N - k; ++i)
        if (p.part(i) - p.part(i + k) < r) return false;
    return true;
}

bool admissible(const Superpartition& sp, int k, int r, int N, AdmissibleFlavor flavor) {
    check_kr(k, r);
    if (sp.length_circled() > N)
        throw std::invalid_argument("superpartition has more than N diagram rows");
    const Partition& st = sp.star();
    const Partition& ci = sp.circled();
    switch (flavor) {
        case AdmissibleFlavor::Weak:
            for (int i = 1; i <= N - k; ++i)
                if (ci.part(i) - st.part(i + k) < r) return false;
            return true;
        case AdmissibleFlavor::Moderate:
            for (int i = 1; i <= N - k; ++i)
                if (ci.part(i) - ci.part(i + k) < r) return false;
            return true;
        case AdmissibleFlavor::Strong:
            return admissible(sp, k, r, N, AdmissibleFlavor::Moderate) &&
                   admissible_partition(st, k + 1, r, N);
    }
    return false;
}

bool admissible_default(const Superpartition& sp, int k, int r, int N) {
    if (admissible(sp, k, r, N, AdmissibleFlavor::Strong)) return true;
    return sp.is_strict() && admissible(sp, k, r, N, AdmissibleFlavor::Weak);
}

std::vector<CornerReport> corners(const Superpartition& sp, int k, int r) {
    const Partition& ci = sp.circled();
    const Partition& st = sp.star();
    const int rows = sp.length_circled();

    auto column_has_corner = [&](int c) {
        if (c == 0) return true;  // boundary convention
        for (int t = 1; t <= rows; ++t)
            if (ci.part(t) == c) return true;
        return false;
    };

    std::vector<CornerReport> out;
    for (int i = 1; i <= rows; ++i) {
        int j = ci.part(i);
        if (j == ci.part(i + 1)) continue;  // cell below exists
        CornerReport cr;
        cr.cell = {i, j};
        cr.circled = sp.row_fermionic(i);
        bool above = (i == 1) || (ci.part(i - 1) > j);
        bool left = column_has_corner(j - 1);
        cr.kind = above && left    ? CornerKind::Inner
                  : !above && !left ? CornerKind::Outer
                                    : CornerKind::Bordering;
        cr.hook = HookType::None;
        cr.k = k;
        cr.r = r;
        if (k > 0 && r > 0 && j - r >= 1) {
            int c = j - r;
            int lst = 0, lci = 0;
            for (int t = i + 1; t <= rows; ++t) {
                if (st.part(t) >= c) ++lst;
                if (ci.part(t) >= c) ++lci;
            }
            if (lst == k && lci == k) cr.hook = cr.circled ? HookType::C : HookType::B;
            else if (lst == k && lci == k + 1) cr.hook = cr.circled ? HookType::Ctilde : HookType::Btilde;
        }
        out.push_back(cr);
    }
    return out;
}

Superpartition remove_column(const Superpartition& sp) {
    auto shrink = [](std::vector<int> v) {
        for (int& x : v) {
            if (x == 0) throw std::invalid_argument("remove_column: zero part present");
            --x;
        }
        return v;
    };
    return Superpartition(shrink(sp.antisym()), shrink(sp.sym()));
}

Superpartition remove_circle(const Superpartition& sp) {
    std::vector<int> anti = sp.antisym();
    if (anti.empty() || anti.back() != 0)
        throw std::invalid_argument("remove_circle: last antisymmetric part is not zero");
    anti.pop_back();
    return Superpartition(std::move(anti), sp.sym());
}

Superpartition add_partition(const Superpartition& sp, const Partition& p) {
    if (p.length() > sp.N()) throw std::invalid_argument("add_partition: partition too long");
    std::vector<int> anti, sym;
    for (int i = 1; i <= sp.N(); ++i) {
        int v = sp.star().part(i) + p.part(i);
        if (sp.row_fermionic(i)) anti.push_back(v);
        else sym.push_back(v);
    }
    std::sort(anti.rbegin(), anti.rend());
    std::sort(sym.rbegin(), sym.rend());
    return Superpartition(std::move(anti), std::move(sym));
}

std::vector<Partition> enumerate_partitions(int n, int maxlen, int maxpart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= maxlen) return;
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, std::min(n, maxpart));
    return out;
}

std::vector<Superpartition> enumerate_superpartitions(
    int n, int m, int N, const std::function<bool(const Superpartition&)>& pred) {
    if (n < 0 || m < 0 || m > N) throw std::invalid_argument("enumerate: bad (n,m,N)");
    std::vector<Superpartition> out;
    for (int a = 0; a <= n; ++a) {
        auto antis = enumerate_partitions(a, m, n);
        if (a == 0) antis = {Partition(std::vector<int>{})};
        auto syms_for = [&](int b) {
            auto v = enumerate_partitions(b, N - m, n);
            if (b == 0) v = {Partition(std::vector<int>{})};
            return v;
        };
        auto syms = syms_for(n - a);
        for (const auto& ap : antis) {
            std::vector<int> av = ap.parts();
            av.resize(m, 0);
            for (const auto& spv : syms) {
                std::vector<int> sv = spv.parts();
                sv.resize(N - m, 0);
                Superpartition sp(av, sv);
                if (sp.length_circled() > N) continue;
                if (!pred || pred(sp)) out.push_back(sp);
            }
        }
    }
    auto key = [N](const Superpartition& sp) {
        std::vector<int> k;
        for (int i = 1; i <= N; ++i) k.push_back(sp.star().part(i));
        for (int i = 1; i <= N; ++i) k.push_back(sp.circled().part(i));
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const Superpartition& x, const Superpartition& y) {
        return key(x) > key(y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace jackps

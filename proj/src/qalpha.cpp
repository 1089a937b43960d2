#include "jackps/qalpha.hpp"

#include <numeric>
#include <sstream>

namespace jackps {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

void check_kr(int k, int r) {
    if (k < 1 || r < 2) throw std::invalid_argument("invalid (k,r): need k >= 1, r >= 2");
    if (std::gcd(k + 1, r - 1) != 1) throw std::invalid_argument("invalid (k,r): gcd(k+1,r-1) != 1");
}

Rational alpha_kr(int k, int r) {
    check_kr(k, r);
    Rational q(-(k + 1), r - 1);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- AlphaPoly

AlphaPoly::AlphaPoly(long c) {
    if (c != 0) c_.push_back(Int(c));
}

AlphaPoly::AlphaPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
}

AlphaPoly::AlphaPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

AlphaPoly AlphaPoly::alpha() { return AlphaPoly(std::vector<Int>{Int(0), Int(1)}); }

AlphaPoly AlphaPoly::linear(const Int& a, const Int& b) {
    return AlphaPoly(std::vector<Int>{b, a});
}

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& AlphaPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int AlphaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
    return c_[k];
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return AlphaPoly(std::move(r));
}

Int AlphaPoly::content() const {
    Int g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

AlphaPoly AlphaPoly::divide_exact(const Int& d) const {
    if (d == 0) throw std::invalid_argument("division by zero content");
    AlphaPoly r(*this);
    for (auto& c : r.c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("inexact content division");
        c /= d;
    }
    return r;
}

AlphaPoly AlphaPoly::primitive_part() const {
    if (is_zero()) return *this;
    return divide_exact(content());
}

namespace {

// prem(a, b): lc(b)^(deg a - deg b + 1) * a reduced mod b.
AlphaPoly pseudo_rem(AlphaPoly a, const AlphaPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Int la = a.leading();
        std::vector<Int> sc(a.coeffs());
        for (auto& c : sc) c *= b.leading();
        for (int i = 0; i <= db; ++i) sc[i + shift] -= la * b.coeff(i);
        a = AlphaPoly(std::move(sc));
    }
    return a;
}

}  // namespace

AlphaPoly AlphaPoly::gcd(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() && b.is_zero()) return AlphaPoly();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    AlphaPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.is_zero()) std::swap(u, v);
    while (!v.is_zero()) {
        AlphaPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return AlphaPoly(cg);
    if (u.leading() < 0) u = -u;
    AlphaPoly g = u;
    for (auto& c : g.c_) c *= cg;
    return g;
}

Rational AlphaPoly::eval(const Rational& a0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a0 + Rational(*it);
    return acc;
}

bool AlphaPoly::all_coeffs_nonneg() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

std::string AlphaPoly::str(const std::string& sym) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        Int ab = abs(c);
        if (k == 0 || ab != 1) os << ab.get_str();
        if (k > 0) {
            os << sym;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------- RatFuncAlpha

RatFuncAlpha::RatFuncAlpha(long n) : num_(n), den_(1) {}
RatFuncAlpha::RatFuncAlpha(const Int& n) : num_(n), den_(1) {}

RatFuncAlpha::RatFuncAlpha(const Rational& q) : num_(q.get_num()), den_(q.get_den()) {
    // mpq is canonical already; den > 0, gcd 1
}

RatFuncAlpha::RatFuncAlpha(AlphaPoly num, AlphaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void RatFuncAlpha::reduce() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator in Q(alpha)");
    if (num_.is_zero()) {
        den_ = AlphaPoly(1);
        return;
    }
    AlphaPoly g = AlphaPoly::gcd(num_, den_);
    if (!(g == AlphaPoly(1))) {
        // exact by construction; remove the common factor via pseudo-division
        // with unit-content gcd, degree drop guaranteed
        auto divide = [](const AlphaPoly& p, const AlphaPoly& g2) {
            // exact division p = g2 * q over Z (Gauss: g2 | p with g2 of unit-free content)
            std::vector<Int> q(p.degree() - g2.degree() + 1, Int(0));
            AlphaPoly rem = p;
            while (!rem.is_zero() && rem.degree() >= g2.degree()) {
                const int shift = rem.degree() - g2.degree();
                Int lc;
                mpz_divexact(lc.get_mpz_t(), rem.leading().get_mpz_t(), g2.leading().get_mpz_t());
                q[shift] = lc;
                std::vector<Int> sc(rem.coeffs());
                for (int i = 0; i <= g2.degree(); ++i) sc[i + shift] -= lc * g2.coeff(i);
                rem = AlphaPoly(std::move(sc));
            }
            if (!rem.is_zero()) throw std::logic_error("gcd does not divide");
            return AlphaPoly(std::move(q));
        };
        num_ = divide(num_, g);
        den_ = divide(den_, g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        num_ = num_.divide_exact(cg);
        den_ = den_.divide_exact(cg);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFuncAlpha RatFuncAlpha::operator-() const {
    RatFuncAlpha r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFuncAlpha& RatFuncAlpha::operator+=(const RatFuncAlpha& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFuncAlpha& RatFuncAlpha::operator-=(const RatFuncAlpha& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFuncAlpha& RatFuncAlpha::operator*=(const RatFuncAlpha& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFuncAlpha& RatFuncAlpha::operator/=(const RatFuncAlpha& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero in Q(alpha)");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

Rational RatFuncAlpha::eval_at(const Rational& a0) const {
    Rational d = den_.eval(a0);
    if (sgn(d) == 0) {
        Rational n = num_.eval(a0);
        if (sgn(n) == 0)
            throw std::logic_error("0/0 indeterminate at alpha = " + to_string(a0) +
                                   " (non-reduced representation)");
        throw PoleError("pole at alpha = " + to_string(a0));
    }
    return num_.eval(a0) / d;
}

std::string RatFuncAlpha::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    auto wrap = [](const std::string& s) {
        return (s.find_first_of("+-", 1) != std::string::npos || s.find('*') != std::string::npos)
                   ? "(" + s + ")"
                   : s;
    };
    return wrap(n) + "/" + wrap(d);
}

std::string RatFuncAlpha::latex() const {
    if (is_polynomial()) return num_.str("\\alpha");
    return "\\frac{" + num_.str("\\alpha") + "}{" + den_.str("\\alpha") + "}";
}

std::string coeff_str(const Rational& x) { return x.get_str(); }
std::string coeff_latex(const RatFuncAlpha& x) { return x.latex(); }
std::string coeff_latex(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    std::string num = x.get_num().get_str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num = num.substr(1);
    return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + x.get_den().get_str() + "}";
}

}  // namespace jackps

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace jackps {

using Int = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// alpha = -(k+1)/(r-1); requires k >= 1, r >= 2, gcd(k+1, r-1) = 1.
Rational alpha_kr(int k, int r);
void check_kr(int k, int r);

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Integer-coefficient polynomial in the formal parameter alpha.
// Coefficients stored in ascending degree, no trailing zeros; zero is {}.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(long c);                 // NOLINT: implicit scalar lift
    AlphaPoly(const Int& c);           // NOLINT
    explicit AlphaPoly(std::vector<Int> coeffs);

    static AlphaPoly alpha();                       // the monomial a
    static AlphaPoly linear(const Int& a, const Int& b);  // a*alpha + b

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& leading() const;
    Int coeff(int k) const;            // 0 outside range
    const std::vector<Int>& coeffs() const { return c_; }

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

    Int content() const;               // gcd of coefficients, >= 0; 0 for zero
    AlphaPoly primitive_part() const;  // content removed, sign kept
    AlphaPoly divide_exact(const Int& d) const;

    // gcd of the primitive parts times gcd of contents, with positive leading
    // coefficient.  Primitive pseudo-remainder sequence.
    static AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

    Rational eval(const Rational& a0) const;
    bool all_coeffs_nonneg() const;

    std::string str(const std::string& sym = "a") const;

private:
    std::vector<Int> c_;
    void trim();
};

// Element of Q(alpha): reduced quotient of integer-coefficient polynomials.
// Invariants: gcd(num, den) = 1 over Q, the pair has integer content 1,
// den has positive leading coefficient, zero is 0/1.
class RatFuncAlpha {
public:
    RatFuncAlpha() : num_(), den_(1) {}
    RatFuncAlpha(long n);              // NOLINT
    RatFuncAlpha(const Int& n);        // NOLINT
    RatFuncAlpha(const Rational& q);   // NOLINT
    RatFuncAlpha(AlphaPoly num, AlphaPoly den = AlphaPoly(1));

    static RatFuncAlpha alpha() { return RatFuncAlpha(AlphaPoly::alpha()); }

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == AlphaPoly(1) && den_ == AlphaPoly(1); }
    bool is_polynomial() const { return den_ == AlphaPoly(1); }

    RatFuncAlpha operator-() const;
    RatFuncAlpha& operator+=(const RatFuncAlpha& o);
    RatFuncAlpha& operator-=(const RatFuncAlpha& o);
    RatFuncAlpha& operator*=(const RatFuncAlpha& o);
    RatFuncAlpha& operator/=(const RatFuncAlpha& o);
    friend RatFuncAlpha operator+(RatFuncAlpha a, const RatFuncAlpha& b) { return a += b; }
    friend RatFuncAlpha operator-(RatFuncAlpha a, const RatFuncAlpha& b) { return a -= b; }
    friend RatFuncAlpha operator*(RatFuncAlpha a, const RatFuncAlpha& b) { return a *= b; }
    friend RatFuncAlpha operator/(RatFuncAlpha a, const RatFuncAlpha& b) { return a /= b; }
    friend bool operator==(const RatFuncAlpha& a, const RatFuncAlpha& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }

    // Throws PoleError when den(a0) = 0 and num(a0) != 0; a simultaneous zero
    // would mean a non-reduced representation and aborts.
    Rational eval_at(const Rational& a0) const;

    std::string str() const;    // machine format, alpha spelled "a"
    std::string latex() const;  // \alpha format

private:
    AlphaPoly num_, den_;
    void reduce();
};

inline bool is_zero(const RatFuncAlpha& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string coeff_str(const RatFuncAlpha& x) { return x.str(); }
std::string coeff_str(const Rational& x);
std::string coeff_latex(const RatFuncAlpha& x);
std::string coeff_latex(const Rational& x);

}  // namespace jackps

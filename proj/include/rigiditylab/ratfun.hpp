#ifndef RIGIDITYLAB_RATFUN_HPP
#define RIGIDITYLAB_RATFUN_HPP

#include <complex>
#include <string>

#include "rigiditylab/laurent.hpp"

namespace rigiditylab {

// Rational function num/den in z, kept in a canonical form:
//   * den is an ordinary polynomial with nonzero constant term, scaled so
//     that its z^0 coefficient is exactly 1 (monomials are units of the
//     Laurent ring and are absorbed into num, which may be Laurent);
//   * gcd(num, den) = 1.
// Two RatFun values are equal as functions iff they are structurally equal.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(GaussRat c) : num_(LaurentPoly(std::move(c))), den_(1) {}
    RatFun(long c) : num_(LaurentPoly(c)), den_(1) {}
    explicit RatFun(LaurentPoly p) : num_(std::move(p)), den_(1) {}

    // num/den reduced to canonical form. Throws std::domain_error if den = 0.
    static RatFun quotient(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True iff the value is a Laurent polynomial (trivial denominator).
    bool is_laurent() const { return den_.is_one(); }
    // True iff the value is a constant (supported at z^0 only).
    bool is_constant() const { return is_laurent() && num_.is_constant(); }
    GaussRat constant_value() const { return num_.constant_term(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    RatFun inverse() const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> z) const {
        return num_.eval(z) / den_.eval(z);
    }

    std::string str() const;

private:
    RatFun(LaurentPoly num, LaurentPoly den, int)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_, den_;
};

// Monic gcd of two Laurent polynomials, viewed up to unit (the result is an
// ordinary polynomial with nonzero constant term, monic in the leading
// coefficient). gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace rigiditylab

#endif

#ifndef RIGIDITYLAB_LAURENT_HPP
#define RIGIDITYLAB_LAURENT_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "rigiditylab/rational.hpp"

namespace rigiditylab {

// Laurent polynomial in one variable z with GaussRat coefficients.
// Stored as a finitely supported exponent -> coefficient map with no
// explicit zero entries, so structural equality is value equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(GaussRat constant) {
        if (!constant.is_zero()) c_.emplace(0, std::move(constant));
    }
    LaurentPoly(long constant) : LaurentPoly(GaussRat(constant)) {}

    static LaurentPoly monomial(GaussRat coeff, int exponent) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.c_.emplace(exponent, std::move(coeff));
        return p;
    }
    // z^n - z^-n and z^n + z^-n come up constantly in the half-angle algebra.
    static LaurentPoly z_pow_minus(int n) {
        return monomial(GaussRat(1), n) + monomial(GaussRat(-1), -n);
    }
    static LaurentPoly z_pow_plus(int n) {
        return monomial(GaussRat(1), n) + monomial(GaussRat(1), -n);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
    }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
    }
    bool is_monomial() const { return c_.size() == 1; }

    GaussRat coeff(int exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? GaussRat() : it->second;
    }
    GaussRat constant_term() const { return coeff(0); }

    int min_degree() const {
        if (c_.empty()) throw std::logic_error("LaurentPoly: degree of zero");
        return c_.begin()->first;
    }
    int max_degree() const {
        if (c_.empty()) throw std::logic_error("LaurentPoly: degree of zero");
        return c_.rbegin()->first;
    }

    const std::map<int, GaussRat>& terms() const { return c_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) {
            auto it = c_.find(e);
            if (it == c_.end()) {
                c_.emplace(e, v);
            } else {
                it->second += v;
                if (it->second.is_zero()) c_.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) {
                int e = ea + eb;
                auto it = r.c_.find(e);
                if (it == r.c_.end()) {
                    GaussRat v = va * vb;
                    if (!v.is_zero()) r.c_.emplace(e, std::move(v));
                } else {
                    it->second += va * vb;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const GaussRat& s) const {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, v * s);
        return r;
    }
    LaurentPoly shifted(int k) const {  // multiply by z^k
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1);
        LaurentPoly b = *this;
        while (n) {
            if (n & 1u) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    // Inverse in the Laurent ring; only monomials are units.
    LaurentPoly inverse() const {
        if (!is_monomial())
            throw std::domain_error("LaurentPoly: only monomials are invertible");
        const auto& [e, v] = *c_.begin();
        return monomial(v.inverse(), -e);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> z) const;

    std::string str() const;

private:
    std::map<int, GaussRat> c_;
};

}  // namespace rigiditylab

#endif

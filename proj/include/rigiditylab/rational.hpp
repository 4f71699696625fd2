#ifndef RIGIDITYLAB_RATIONAL_HPP
#define RIGIDITYLAB_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace rigiditylab {

// Gaussian rational re + im*i with arbitrary-precision rational parts.
// All arithmetic is exact; components are kept in lowest terms with
// positive denominator (mpq_class maintains this for arithmetic results).
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    explicit GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    // num/den + i*inum/iden, canonicalized.
    static GaussRat make(long num, long den, long inum = 0, long iden = 1) {
        if (den == 0 || iden == 0) throw std::domain_error("GaussRat: zero denominator");
        mpq_class r(num, den), s(inum, iden);
        r.canonicalize();
        s.canonicalize();
        return GaussRat(std::move(r), std::move(s));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    // true iff the value is a rational integer (an element of Z).
    bool is_integer() const {
        return im_ == 0 && re_.get_den() == 1;
    }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class s = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    GaussRat inverse() const {
        if (is_zero()) throw std::domain_error("GaussRat: inverse of zero");
        mpq_class n = norm();
        return GaussRat(re_ / n, -im_ / n);
    }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    // "0", "2", "-1/2", "i", "-i", "3/4i", "1/2-3/4i", ...
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string imag = imag_str();
        if (re_ == 0) return imag;
        std::string out = re_.get_str();
        if (imag[0] != '-') out += '+';
        return out + imag;
    }

private:
    std::string imag_str() const {
        if (im_ == 1) return "i";
        if (im_ == -1) return "-i";
        return im_.get_str() + "i";
    }

    mpq_class re_, im_;
};

}  // namespace rigiditylab

#endif

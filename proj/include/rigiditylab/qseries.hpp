#ifndef RIGIDITYLAB_QSERIES_HPP
#define RIGIDITYLAB_QSERIES_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "rigiditylab/ratfun.hpp"

namespace rigiditylab {

// Coefficient-ring hooks for QSeries. Inversion is only required of the
// leading coefficient when a series is inverted.
template <class C>
struct CoeffTraits {
    static C zero() { return C(0); }
    static C one() { return C(1); }
    static bool is_zero(const C& c) { return c.is_zero(); }
    static C inverse(const C& c) { return c.inverse(); }
};

template <>
struct CoeffTraits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& c) {
        return c.real() == 0.0 && c.imag() == 0.0;
    }
    static std::complex<double> inverse(const std::complex<double>& c) {
        if (std::abs(c) < 1e-300)
            throw std::domain_error("QSeries: leading coefficient not invertible");
        return 1.0 / c;
    }
};

// Truncated formal series sum_{k=0..K} a_k q^{k/2}, carrying an overall
// prefactor q^{prefactor_eighths/8}. The truncation order K is the largest
// retained half-integer index; operations never fabricate coefficients past
// the common truncation.
template <class C>
class QSeries {
public:
    using traits = CoeffTraits<C>;

    explicit QSeries(int order = 0, int prefactor_eighths = 0)
        : pre8_(prefactor_eighths),
          c_(static_cast<size_t>(order) + 1, traits::zero()) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
    }

    static QSeries constant(C value, int order) {
        QSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }
    static QSeries one(int order) { return constant(traits::one(), order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    int prefactor_eighths() const { return pre8_; }
    void set_prefactor_eighths(int e) { pre8_ = e; }

    const C& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, C v) { c_.at(static_cast<size_t>(k)) = std::move(v); }
    const std::vector<C>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!traits::is_zero(v)) return false;
        return true;
    }

    QSeries truncated(int order) const {
        if (order >= this->order()) return *this;
        QSeries r(order, pre8_);
        for (int k = 0; k <= order; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return r;
    }

    QSeries operator-() const {
        QSeries r = *this;
        for (auto& v : r.c_) v = zero_minus(v);
        return r;
    }

    // Addition requires aligned prefactors; the caller aligns first.
    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        if (a.pre8_ != b.pre8_)
            throw std::invalid_argument("QSeries: prefactor mismatch in addition");
        int K = std::min(a.order(), b.order());
        QSeries r(K, a.pre8_);
        for (int k = 0; k <= K; ++k)
            r.c_[static_cast<size_t>(k)] =
                a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        int K = std::min(a.order(), b.order());
        QSeries r(K, a.pre8_ + b.pre8_);
        for (int i = 0; i <= K; ++i) {
            if (traits::is_zero(a.c_[static_cast<size_t>(i)])) continue;
            for (int j = 0; i + j <= K; ++j) {
                if (traits::is_zero(b.c_[static_cast<size_t>(j)])) continue;
                r.c_[static_cast<size_t>(i + j)] =
                    r.c_[static_cast<size_t>(i + j)] +
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }

    QSeries scaled(const C& s) const {
        QSeries r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    // Multiplicative inverse: a * a.inverse() = 1 + O(q^{(K+1)/2}); the
    // prefactor is negated. Requires an invertible q^0 coefficient.
    QSeries inverse() const {
        QSeries r(order(), -pre8_);
        C lead = traits::inverse(c_[0]);
        r.c_[0] = lead;
        for (int k = 1; k <= order(); ++k) {
            C acc = traits::zero();
            for (int j = 1; j <= k; ++j)
                acc = acc + c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
            r.c_[static_cast<size_t>(k)] = zero_minus(acc) * lead;
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.pre8_ == b.pre8_ && a.c_ == b.c_;
    }

private:
    static C zero_minus(const C& v) { return traits::zero() - v; }

    int pre8_ = 0;
    std::vector<C> c_;
};

// Numeric evaluation at q^{1/2} = qhalf (and the matching principal eighth
// root for the prefactor), mapping each coefficient through `f`.
template <class C, class F>
std::complex<double> evaluate_qseries(const QSeries<C>& s, F&& f,
                                      std::complex<double> qhalf,
                                      std::complex<double> qeighth) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = s.order(); k >= 0; --k) acc = acc * qhalf + f(s.coeff(k));
    std::complex<double> pre{1.0, 0.0};
    int e = s.prefactor_eighths();
    std::complex<double> base = e >= 0 ? qeighth : 1.0 / qeighth;
    for (int k = 0; k < std::abs(e); ++k) pre *= base;
    return pre * acc;
}

}  // namespace rigiditylab

#endif

#include "rigiditylab/ratfun.hpp"

#include <stdexcept>
#include <vector>

namespace rigiditylab {

namespace {

// Dense polynomial layer used only for gcd/division. Index = degree.
using Dense = std::vector<GaussRat>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Strip the unit z^{min_degree}, returning the dense polynomial part.
Dense to_dense(const LaurentPoly& p, int& shift) {
    Dense out;
    if (p.is_zero()) {
        shift = 0;
        return out;
    }
    shift = p.min_degree();
    out.assign(static_cast<size_t>(p.max_degree() - shift) + 1, GaussRat());
    for (const auto& [e, v] : p.terms()) out[static_cast<size_t>(e - shift)] = v;
    return out;
}

LaurentPoly from_dense(const Dense& p, int shift) {
    LaurentPoly out;
    for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero())
            out += LaurentPoly::monomial(p[k], static_cast<int>(k) + shift);
    return out;
}

// Euclidean remainder over the field Q(i); remainders are renormalized to
// monic at every step to keep coefficient growth in check.
Dense remainder(Dense a, const Dense& b) {
    const size_t db = b.size() - 1;
    GaussRat lead_inv = b.back().inverse();
    while (a.size() > db) {
        GaussRat f = a.back() * lead_inv;
        size_t off = a.size() - 1 - db;
        for (size_t k = 0; k < db; ++k) a[off + k] -= f * b[k];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

void make_monic(Dense& p) {
    if (p.empty() || p.back().is_one()) return;
    GaussRat inv = p.back().inverse();
    for (auto& c : p) c = c * inv;
}

Dense dense_gcd(Dense a, Dense b) {
    while (!b.empty()) {
        Dense r = remainder(std::move(a), b);
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

// Exact quotient a/b, used only when b divides a.
Dense exact_divide(Dense a, const Dense& b) {
    if (b.size() == 1) {
        GaussRat inv = b[0].inverse();
        for (auto& c : a) c = c * inv;
        return a;
    }
    Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GaussRat());
    const size_t db = b.size() - 1;
    GaussRat lead_inv = b.back().inverse();
    while (a.size() > db) {
        GaussRat f = a.back() * lead_inv;
        size_t off = a.size() - 1 - db;
        q[off] = f;
        for (size_t k = 0; k <= db; ++k) a[off + k] -= f * b[k];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("RatFun: inexact polynomial division");
    return q;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    int sa = 0, sb = 0;
    Dense da = to_dense(a, sa);
    Dense db = to_dense(b, sb);
    if (da.empty()) return from_dense(db, 0);
    if (db.empty()) return from_dense(da, 0);
    return from_dense(dense_gcd(std::move(da), std::move(db)), 0);
}

RatFun RatFun::quotient(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num.is_zero()) return RatFun();

    int sn = 0, sd = 0;
    Dense n = to_dense(num, sn);
    Dense d = to_dense(den, sd);

    Dense g = dense_gcd(n, d);
    if (g.size() > 1) {
        n = exact_divide(std::move(n), g);
        d = exact_divide(std::move(d), g);
    }
    // d has nonzero constant term (z does not divide it); scale it to 1.
    GaussRat scale = d[0].inverse();
    for (auto& c : d) c = c * scale;
    for (auto& c : n) c = c * scale;

    return RatFun(from_dense(n, sn - sd), from_dense(d, 0), 0);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun& RatFun::operator+=(const RatFun& o) {
    return *this = quotient(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) {
    return *this = quotient(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator*=(const RatFun& o) {
    return *this = quotient(num_ * o.num_, den_ * o.den_);
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return *this = quotient(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return quotient(den_, num_);
}

std::string RatFun::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace rigiditylab

#include "rigiditylab/theta_series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace rigiditylab {

namespace {

// Shared memo helper: lookups and inserts are lock-protected; builders run
// outside the lock, so concurrent misses may compute the same value, which
// is harmless.
template <class Key, class Builder>
QSeries<LaurentPoly> memoized(std::map<Key, QSeries<LaurentPoly>>& cache,
                              std::mutex& mu, const Key& key, Builder&& build) {
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QSeries<LaurentPoly> value = build();
    std::lock_guard lock(mu);
    return cache.try_emplace(key, std::move(value)).first->second;
}

GaussRat gauss_i() { return GaussRat::i(); }

void check_index(int i, const char* what) {
    if (i < 1 || i > 3) throw std::domain_error(std::string(what) + " must be 1, 2 or 3");
}

}  // namespace

int theta_prefactor_eighths(ThetaKind kind) {
    switch (kind) {
        case ThetaKind::Theta:
        case ThetaKind::Theta1:
            return 1;
        case ThetaKind::Theta2:
        case ThetaKind::Theta3:
            return 0;
    }
    throw std::logic_error("theta_prefactor_eighths: bad kind");
}

namespace detail {

QSeries<LaurentPoly> euler_product_series(int order) {
    static std::map<int, QSeries<LaurentPoly>> cache;
    static std::mutex mu;
    return memoized(cache, mu, order, [&] {
        QSeries<LaurentPoly> acc = QSeries<LaurentPoly>::one(order);
        for (int r = 1; 2 * r <= order; ++r) {
            QSeries<LaurentPoly> factor = QSeries<LaurentPoly>::one(order);
            factor.set_coeff(2 * r, LaurentPoly(-1));
            acc *= factor;
        }
        return acc;
    });
}

QSeries<LaurentPoly> pair_product_series(int sign, bool half_step, int weight, int order) {
    static std::map<std::tuple<int, bool, int, int>, QSeries<LaurentPoly>> cache;
    static std::mutex mu;
    return memoized(cache, mu, std::tuple{sign, half_step, weight, order}, [&] {
        QSeries<LaurentPoly> acc = QSeries<LaurentPoly>::one(order);
        GaussRat s(sign);
        for (int r = 1;; ++r) {
            int step = half_step ? 2 * r - 1 : 2 * r;
            if (step > order) break;
            QSeries<LaurentPoly> f1 = QSeries<LaurentPoly>::one(order);
            f1.set_coeff(step, LaurentPoly::monomial(s, 2 * weight));
            QSeries<LaurentPoly> f2 = QSeries<LaurentPoly>::one(order);
            f2.set_coeff(step, LaurentPoly::monomial(s, -2 * weight));
            acc *= f1;
            acc *= f2;
        }
        return acc;
    });
}

LaurentPoly tangent_denominator(int weight) { return LaurentPoly::z_pow_minus(weight); }

LaurentPoly local_prefactor_num(int mu, int weight) {
    check_index(mu, "mu");
    // 2 sin and 2 cos of pi*weight*t in z = e^{pi i t}; the 2/pi and
    // theta'(0,tau) = 2 pi q^{1/8} c^3 constants have been folded in, which
    // is where the factors of i and 4 come from.
    if (mu == 1) return LaurentPoly::z_pow_plus(weight).scaled(GaussRat(2) * gauss_i());
    return LaurentPoly(GaussRat(4) * gauss_i());
}

QSeries<LaurentPoly> local_bulk(int mu, int weight, int order) {
    static std::map<std::pair<LocalFactorKey, int>, QSeries<LaurentPoly>> cache;
    static std::mutex mtx;
    check_index(mu, "mu");
    if (weight == 0) throw std::domain_error("local_bulk: tangent weight 0");
    LocalFactorKey key{mu, weight, LocalFactorKey::Role::Tangent};
    return memoized(cache, mtx, std::pair{key, order}, [&] {
        int sign = mu == 2 ? -1 : +1;
        bool half = mu != 1;
        QSeries<LaurentPoly> c = euler_product_series(order);
        QSeries<LaurentPoly> denom_pair = pair_product_series(-1, false, weight, order);
        QSeries<LaurentPoly> numer_pair = pair_product_series(sign, half, weight, order);
        QSeries<LaurentPoly> theta_const0 = pair_product_series(sign, half, 0, order);
        return c * c * numer_pair * denom_pair.inverse() * theta_const0.inverse();
    });
}

QSeries<LaurentPoly> bundle_series(int lambda, int weight, int order) {
    static std::map<std::pair<LocalFactorKey, int>, QSeries<LaurentPoly>> cache;
    static std::mutex mtx;
    check_index(lambda, "lambda");
    LocalFactorKey key{lambda, weight, LocalFactorKey::Role::Bundle};
    return memoized(cache, mtx, std::pair{key, order}, [&] {
        int sign = lambda == 2 ? -1 : +1;
        bool half = lambda != 1;
        QSeries<LaurentPoly> ratio = pair_product_series(sign, half, weight, order) *
                                     pair_product_series(sign, half, 0, order).inverse();
        if (lambda == 1) {
            // cos(pi m t)/cos(0) = (z^m + z^-m)/2.
            ratio = ratio.scaled(
                LaurentPoly::z_pow_plus(weight).scaled(GaussRat::make(1, 2)));
        }
        return ratio;
    });
}

}  // namespace detail

QSeries<LaurentPoly> theta_qseries(ThetaKind kind, int weight, int order) {
    static std::map<std::tuple<ThetaKind, int, int>, QSeries<LaurentPoly>> cache;
    static std::mutex mtx;
    if (order < 0) throw std::invalid_argument("theta_qseries: negative order");
    return memoized(cache, mtx, std::tuple{kind, weight, order}, [&] {
        QSeries<LaurentPoly> c = detail::euler_product_series(order);
        QSeries<LaurentPoly> s(order, theta_prefactor_eighths(kind));
        switch (kind) {
            case ThetaKind::Theta:
                s = (c * detail::pair_product_series(-1, false, weight, order))
                        .scaled(LaurentPoly::z_pow_minus(weight).scaled(-gauss_i()));
                break;
            case ThetaKind::Theta1:
                s = (c * detail::pair_product_series(+1, false, weight, order))
                        .scaled(LaurentPoly::z_pow_plus(weight));
                break;
            case ThetaKind::Theta2:
                s = c * detail::pair_product_series(-1, true, weight, order);
                break;
            case ThetaKind::Theta3:
                s = c * detail::pair_product_series(+1, true, weight, order);
                break;
        }
        s.set_prefactor_eighths(theta_prefactor_eighths(kind));
        return s;
    });
}

QSeries<RatFun> local_factor(int mu, int weight, int order) {
    check_index(mu, "mu");
    if (weight == 0)
        throw std::domain_error("local_factor: tangent weight 0 (theta(0,tau) = 0)");

    // Transcription guard: the q^{1/8} powers of theta', theta_mu(nt),
    // theta(nt) and theta_mu(0) must cancel exactly.
    ThetaKind mu_kind = mu == 1   ? ThetaKind::Theta1
                        : mu == 2 ? ThetaKind::Theta2
                                  : ThetaKind::Theta3;
    int net = 1 + theta_prefactor_eighths(mu_kind) -
              theta_prefactor_eighths(ThetaKind::Theta) - theta_prefactor_eighths(mu_kind);
    if (net != 0) throw std::logic_error("local_factor: q^{1/8} prefactors do not cancel");

    QSeries<LaurentPoly> bulk = detail::local_bulk(mu, weight, order);
    LaurentPoly num = detail::local_prefactor_num(mu, weight);
    LaurentPoly den = detail::tangent_denominator(weight);
    QSeries<RatFun> out(order, 0);
    for (int k = 0; k <= order; ++k)
        out.set_coeff(k, RatFun::quotient(num * bulk.coeff(k), den));
    return out;
}

QSeries<RatFun> bundle_factor(int lambda, int weight, int order) {
    check_index(lambda, "lambda");
    QSeries<LaurentPoly> g = detail::bundle_series(lambda, weight, order);
    QSeries<RatFun> out(order, 0);
    for (int k = 0; k <= order; ++k) out.set_coeff(k, RatFun(g.coeff(k)));
    return out;
}

}  // namespace rigiditylab

#include "degenpoly/series.hpp"

#include "degenpoly/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degenpoly {

namespace {

#ifdef _OPENMP
std::atomic<ExecMode> g_exec_mode{ExecMode::parallel};
#else
std::atomic<ExecMode> g_exec_mode{ExecMode::serial};
#endif

void require_same_order(const Series& f, const Series& g) {
    if (f.order() != g.order()) throw std::invalid_argument("Series: order mismatch");
}

// one output coefficient of the Cauchy product, summed in fixed order
MultiPoly cauchy_coeff(const Series& f, const Series& g, int n) {
    MultiPoly acc;
    for (int j = 0; j <= n; ++j) acc += f.coeff(j) * g.coeff(n - j);
    return acc;
}

}  // namespace

ExecMode exec_mode() noexcept { return g_exec_mode.load(std::memory_order_relaxed); }
void set_exec_mode(ExecMode mode) noexcept { g_exec_mode.store(mode, std::memory_order_relaxed); }

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Series operator+(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n) + g.coeff(n));
    return r;
}

Series operator-(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n) - g.coeff(n));
    return r;
}

Series mul_serial(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, cauchy_coeff(f, g, n));
    return r;
}

Series mul_parallel(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r(f.order());
    const int N = f.order();
#ifdef _OPENMP
    // output coefficients are independent; each is summed serially in index order
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int n = 0; n <= N; ++n) r.set_coeff(n, cauchy_coeff(f, g, n));
    return r;
}

Series operator*(const Series& f, const Series& g) {
#ifdef _OPENMP
    if (exec_mode() == ExecMode::parallel && !omp_in_parallel() && f.order() >= 8)
        return mul_parallel(f, g);
#endif
    return mul_serial(f, g);
}

Series operator*(const MultiPoly& c, const Series& f) {
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, c * f.coeff(n));
    return r;
}

Series operator*(const GaussianRational& c, const Series& f) {
    Series r(f.order());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n) * c);
    return r;
}

Series invert(const Series& f) {
    const MultiPoly& c0 = f.coeff(0);
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("Series::invert: constant term must be a nonzero constant");
    GaussianRational inv0 = c0.constant_term().inverse();

    // g_0 = 1/c_0,  g_n = -(1/c_0) * sum_{j=1..n} c_j g_{n-j}
    Series g(f.order());
    g.set_coeff(0, MultiPoly(inv0));
    for (int n = 1; n <= f.order(); ++n) {
        MultiPoly acc;
        for (int j = 1; j <= n; ++j) acc += f.coeff(j) * g.coeff(n - j);
        g.set_coeff(n, acc * (-inv0));
    }
    return g;
}

Series divide_by_t(const Series& f) {
    if (!f.coeff(0).is_zero())
        throw std::domain_error("Series::divide_by_t: nonzero constant term");
    if (f.order() == 0) throw std::domain_error("Series::divide_by_t: order would go negative");
    Series r(f.order() - 1);
    for (int n = 1; n <= f.order(); ++n) r.set_coeff(n - 1, f.coeff(n));
    return r;
}

Series compose(const Series& outer, const Series& inner) {
    require_same_order(outer, inner);
    if (!inner.coeff(0).is_zero())
        throw std::domain_error("Series::compose: inner series must have zero constant term");
    const int N = outer.order();
    Series r = Series::constant(N, outer.coeff(N));
    for (int k = N - 1; k >= 0; --k) {
        r = r * inner;
        r.set_coeff(0, r.coeff(0) + outer.coeff(k));
    }
    return r;
}

Series log_series(const Series& f) {
    if (!(f.coeff(0) == MultiPoly(1)))
        throw std::domain_error("Series::log: constant term must be 1");
    const int N = f.order();
    Series u = f - Series::one(N);
    Series acc(N);
    Series upow = Series::one(N);
    for (int k = 1; k <= N; ++k) {
        upow = upow * u;
        Rational c(k % 2 == 1 ? 1 : -1, k);
        acc = acc + GaussianRational(c) * upow;
    }
    return acc;
}

Series exp_series(const Series& f) {
    if (!f.coeff(0).is_zero())
        throw std::domain_error("Series::exp: constant term must be 0");
    const int N = f.order();
    Series acc = Series::one(N);
    Series fpow = Series::one(N);
    Rational kfact(1);
    for (int k = 1; k <= N; ++k) {
        fpow = fpow * f;
        kfact *= Rational(k);
        acc = acc + GaussianRational(kfact.inverse()) * fpow;
    }
    return acc;
}

Series pow_int(const Series& f, int k) {
    if (k < 0) throw std::invalid_argument("Series::pow_int: negative exponent");
    Series r = Series::one(f.order());
    Series base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

Series pow_alpha(const Series& f) {
    return exp_series(MultiPoly::var(Symbol::alpha) * log_series(f));
}

Series truncated(const Series& f, int new_order) {
    if (new_order < 0 || new_order > f.order())
        throw std::out_of_range("Series::truncated: bad order");
    Series r(new_order);
    for (int n = 0; n <= new_order; ++n) r.set_coeff(n, f.coeff(n));
    return r;
}

}  // namespace degenpoly

#pragma once

#include "degenpoly/multipoly.hpp"

#include <vector>

namespace degenpoly {

/// Truncated formal power series in t with MultiPoly coefficients,
/// c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}). Coefficients are plain
/// (ordinary) coefficients; the n! of the exponential convention is
/// applied only where a family polynomial is extracted.
class Series {
public:
    explicit Series(int order) : order_(order), c_(order + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }
    Series(int order, std::vector<MultiPoly> coeffs) : order_(order), c_(std::move(coeffs)) {
        if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1)
            throw std::invalid_argument("Series: coefficient count does not match order");
    }

    static Series constant(int order, MultiPoly c0) {
        Series s(order);
        s.c_[0] = std::move(c0);
        return s;
    }
    static Series one(int order) { return constant(order, MultiPoly(1)); }

    int order() const { return order_; }

    const MultiPoly& coeff(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("Series: coefficient index out of range");
        return c_[n];
    }
    void set_coeff(int n, MultiPoly c) {
        if (n < 0 || n > order_) throw std::out_of_range("Series: coefficient index out of range");
        c_[n] = std::move(c);
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    int order_;
    std::vector<MultiPoly> c_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);

/// Truncated Cauchy product. Dispatches to the OpenMP kernel or the serial
/// reference according to exec_mode(); both give identical exact results.
Series operator*(const Series& f, const Series& g);
Series mul_serial(const Series& f, const Series& g);
Series mul_parallel(const Series& f, const Series& g);

/// Coefficient-wise scaling.
Series operator*(const MultiPoly& c, const Series& f);
Series operator*(const GaussianRational& c, const Series& f);

/// Multiplicative inverse; requires a nonzero constant c_0.
Series invert(const Series& f);

/// Shift down by one power of t; requires c_0 = 0. Order drops by one.
Series divide_by_t(const Series& f);

/// g(f(t)) by Horner evaluation; requires equal orders and f with c_0 = 0.
Series compose(const Series& outer, const Series& inner);

/// log f = sum_{k>=1} (-1)^{k-1} (f-1)^k / k; requires c_0 = 1.
Series log_series(const Series& f);

/// exp f = sum_{k>=0} f^k / k! (finite after truncation); requires c_0 = 0.
Series exp_series(const Series& f);

/// f^k for k >= 0 by repeated squaring.
Series pow_int(const Series& f, int k);

/// f^alpha = exp(alpha * log f); coefficients become polynomials in alpha.
/// Requires c_0 = 1.
Series pow_alpha(const Series& f);

/// First new_order+1 coefficients; new_order must not exceed f.order().
Series truncated(const Series& f, int new_order);

}  // namespace degenpoly

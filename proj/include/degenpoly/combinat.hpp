#pragma once

#include "degenpoly/series.hpp"

namespace degenpoly {

Integer factorial(int n);
/// Zero outside 0 <= k <= n.
Integer binomial(int n, int k);

/// Signed Stirling numbers of the first kind:
/// x(x-1)...(x-n+1) = sum_k S1(n,k) x^k. Cached triangle, zero off-triangle.
Rational stirling1(int n, int k);

/// Stirling numbers of the second kind (set partition counts).
Rational stirling2(int n, int k);

/// Central factorial numbers of the second kind:
/// T(n,k) = n! [t^n] (e^{t/2} - e^{-t/2})^k / k!. Rational in general.
Rational central_T(int n, int k);

/// Degenerate central factorial polynomial of the second kind:
/// n! [t^n] (e_l^{1/2}(t) - e_l^{-1/2}(t))^k / k! * e_l^x(t), a polynomial
/// in lambda (and x when with_x). with_x = false gives the x = 0 numbers.
MultiPoly degen_central_T(int n, int k, bool with_x);

/// Bernoulli numbers of the second kind: b_n = n! [t^n] t / log(1+t).
Rational bernoulli2nd(int n);

/// Generalized falling factorial (w)_{n,lambda} = w(w-lambda)...(w-(n-1)lambda),
/// with (w)_{0,lambda} = 1.
MultiPoly falling_factorial(const MultiPoly& w, int n);

/// Central factorial monomial x^[n] = x(x+n/2-1)(x+n/2-2)...(x-n/2+1), x^[0] = 1.
MultiPoly central_factorial_monomial(int n);

/// Fault injection for mutation tests: adds delta to the cached S1(n,k) entry.
void corrupt_stirling1(int n, int k, const Rational& delta);
/// Drops all cached number tables (also clears injected faults).
void reset_number_tables();

}  // namespace degenpoly

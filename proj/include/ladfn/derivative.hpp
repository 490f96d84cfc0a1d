#pragma once

#include <stdexcept>

#include "ladfn/primes.hpp"

namespace ladfn {

namespace detail {

// sum of e_i / p_i over the factorization; this is ld(n).
inline Rational valuation_sum(const Factorization& fact) {
  Rational s(0);
  for (const auto& [p, e] : fact.factors) s += Rational(Int(e), p);
  return s;
}

}  // namespace detail

/// Arithmetic derivative n' = n * sum(nu_p(n)/p).  The sum is evaluated in
/// exact rationals and must clear to an integer; a leftover denominator
/// would be a bug, not an input problem.
inline Int arithmetic_derivative(const Int& n, const PrimeSieve& sieve) {
  Factorization fact = factorize(n, sieve);  // rejects n = 0
  Rational d = detail::valuation_sum(fact) * Rational(n);
  if (!d.is_integer())
    throw std::logic_error("arithmetic_derivative: non-integral result at n = " + n.str());
  return d.num();
}

/// Arithmetic partial derivative D_p(n) = (nu_p(n)/p) * n.
inline Int partial_derivative(const Int& p, const Int& n, const PrimeSieve& sieve) {
  unsigned nu = valuation(n, p, sieve);  // rejects composite p and n = 0
  if (nu == 0) return Int(0);
  Rational d = Rational(Int(nu), p) * Rational(n);
  if (!d.is_integer())
    throw std::logic_error("partial_derivative: non-integral result at n = " + n.str());
  return d.num();
}

/// Logarithmic derivative ld(n) = D(n)/n, completely additive with
/// ld(p) = 1/p.
inline Rational log_derivative(const Int& n, const PrimeSieve& sieve) {
  return detail::valuation_sum(factorize(n, sieve));
}

}  // namespace ladfn

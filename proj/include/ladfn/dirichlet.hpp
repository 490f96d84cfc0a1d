#pragma once

#include <cstddef>
#include <vector>

#include "ladfn/arith_function.hpp"

namespace ladfn {

/// Values of a function at 1..n, 1-indexed: values[k] is f(k) and values[0]
/// is unused padding so indices read like the math.
struct ValueTable {
  std::vector<Rational> values;

  explicit ValueTable(std::size_t n = 0) : values(n + 1) {}

  std::size_t limit() const { return values.empty() ? 0 : values.size() - 1; }
  Rational& operator[](std::size_t k) { return values[k]; }
  const Rational& operator[](std::size_t k) const { return values[k]; }
};

inline ValueTable tabulate(const ArithFunction& f, std::size_t n,
                           const PrimeSieve& sieve) {
  ValueTable t(n);
  for (std::size_t k = 1; k <= n; ++k) t[k] = f.eval(Int(k), sieve);
  return t;
}

/// (u * v)(n) by summing over the divisors of n.
inline Rational convolve_point(const ArithFunction& u, const ArithFunction& v,
                               const Int& n, const PrimeSieve& sieve) {
  Rational s(0);
  for (const Int& d : divisors(factorize(n, sieve)))
    s += u.eval(d, sieve) * v.eval(n / d, sieve);
  return s;
}

/// Table of (u * v)(1..N) from tables of u and v, by the divisor-multiple
/// double loop; zero entries of u contribute nothing and are skipped.
inline ValueTable convolve_prefix(const ValueTable& u, const ValueTable& v) {
  if (u.limit() != v.limit())
    throw domain_error("convolve_prefix: tables cover different ranges");
  std::size_t n = u.limit();
  ValueTable out(n);
  for (std::size_t d = 1; d <= n; ++d) {
    if (u[d].is_zero()) continue;
    for (std::size_t m = d; m <= n; m += d) out[m] += u[d] * v[m / d];
  }
  return out;
}

}  // namespace ladfn

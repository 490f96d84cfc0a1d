#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "ladfn/primes.hpp"

namespace ladfn {

/// Prime values of a completely additive or completely multiplicative
/// function: a finite override map plus a total default rule, so the
/// assignment covers every prime.
class PrimeAssignment {
 public:
  struct Ident {  // p -> p
    bool operator==(const Ident&) const = default;
  };
  struct Recip {  // p -> 1/p
    bool operator==(const Recip&) const = default;
  };
  using DefaultRule = std::variant<Rational, Ident, Recip>;

  PrimeAssignment() = default;  // constant 0 everywhere
  explicit PrimeAssignment(DefaultRule d) : default_(std::move(d)) {}
  PrimeAssignment(std::map<Int, Rational> overrides, DefaultRule d)
      : overrides_(std::move(overrides)), default_(std::move(d)) {
    for (const auto& [p, v] : overrides_) {
      (void)v;
      if (!is_prime(p))
        throw domain_error("PrimeAssignment: key " + p.str() + " is not prime");
    }
  }

  static PrimeAssignment constant(Rational c) {
    return PrimeAssignment(DefaultRule(std::move(c)));
  }
  static PrimeAssignment ident() { return PrimeAssignment(DefaultRule(Ident{})); }
  static PrimeAssignment recip() { return PrimeAssignment(DefaultRule(Recip{})); }

  /// Sets an explicit value; p must be prime.
  void set(const Int& p, Rational v) {
    if (!is_prime(p))
      throw domain_error("PrimeAssignment: key " + p.str() + " is not prime");
    overrides_[p] = std::move(v);
  }

  /// Value at a prime p: the override if present, else the default rule.
  Rational at(const Int& p) const {
    auto it = overrides_.find(p);
    if (it != overrides_.end()) return it->second;
    if (std::holds_alternative<Ident>(default_)) return Rational(p);
    if (std::holds_alternative<Recip>(default_)) return Rational(Int(1), p);
    return std::get<Rational>(default_);
  }

  const std::map<Int, Rational>& overrides() const { return overrides_; }
  const DefaultRule& default_rule() const { return default_; }

 private:
  std::map<Int, Rational> overrides_;
  DefaultRule default_{Rational(0)};
};

/// A completely additive part g and a completely multiplicative part h;
/// together they present the function f(n) = g(n) * h(n) whenever h is
/// nonzero-valued.
struct LAdditivePair {
  PrimeAssignment g;
  PrimeAssignment h;
};

/// f(n) = sum e_i * f(p_i); 0 at n = 1.
inline Rational eval_completely_additive(const PrimeAssignment& pa,
                                         const Factorization& fact) {
  Rational s(0);
  for (const auto& [p, e] : fact.factors) s += Rational(Int(e)) * pa.at(p);
  return s;
}

/// f(n) = prod f(p_i)^{e_i}; 1 at n = 1.
inline Rational eval_completely_multiplicative(const PrimeAssignment& pa,
                                               const Factorization& fact) {
  Rational prod(1);
  for (const auto& [p, e] : fact.factors) prod *= pa.at(p).pow(e);
  return prod;
}

/// General evaluation of an L-additive function from its own prime values
/// and the prime values of its completely multiplicative part; valid even
/// where h vanishes.  Per distinct prime, f(p^k) = k h(p)^{k-1} f(p); the
/// blocks combine through f(n) = sum_i f(p_i^{e_i}) prod_{j!=i} h(p_j)^{e_j},
/// computed with prefix/suffix products.
inline Rational eval_l_additive(const PrimeAssignment& f_at_primes,
                                const PrimeAssignment& h,
                                const Factorization& fact) {
  const auto& fs = fact.factors;
  if (fs.empty()) return Rational(0);  // f(1) = 0
  const std::size_t s = fs.size();
  std::vector<Rational> hp(s), block(s);
  for (std::size_t i = 0; i < s; ++i) {
    Rational hv = h.at(fs[i].prime);
    hp[i] = hv.pow(fs[i].exponent);
    block[i] = Rational(Int(fs[i].exponent)) * hv.pow(fs[i].exponent - 1) *
               f_at_primes.at(fs[i].prime);
  }
  std::vector<Rational> prefix(s + 1, Rational(1));
  std::vector<Rational> suffix(s + 1, Rational(1));
  for (std::size_t i = 0; i < s; ++i) prefix[i + 1] = prefix[i] * hp[i];
  for (std::size_t i = s; i-- > 0;) suffix[i] = suffix[i + 1] * hp[i];
  Rational total(0);
  for (std::size_t i = 0; i < s; ++i) total += block[i] * prefix[i] * suffix[i + 1];
  return total;
}

/// Quotient-form evaluation f(n) = h(n) * sum e_i * g(p_i), defined only
/// when h is nonzero at every prime of n.
inline Rational eval_l_additive_quotient(const LAdditivePair& pair,
                                         const Factorization& fact) {
  for (const auto& [p, e] : fact.factors) {
    (void)e;
    if (pair.h.at(p).is_zero())
      throw domain_error("eval_l_additive_quotient: h vanishes at prime " +
                         p.str() + "; use eval_l_additive instead");
  }
  Rational s(0);
  for (const auto& [p, e] : fact.factors) s += Rational(Int(e)) * pair.g.at(p);
  return eval_completely_multiplicative(pair.h, fact) * s;
}

}  // namespace ladfn

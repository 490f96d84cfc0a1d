#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ladfn/derivative.hpp"
#include "ladfn/prime_assignment.hpp"

namespace ladfn {

/// What a static look at a function's shape can tell about a property.
enum class ShapeHint { yes, no, unknown };

/// An immutable, evaluatable arithmetic function: a builtin, a function
/// defined by its prime values, or a combinator over other functions.
/// Nodes are shared, so copies are cheap and evaluation is safe to run
/// concurrently against a shared sieve.
class ArithFunction {
 public:
  // -- builtins ---------------------------------------------------------
  static ArithFunction derivative() { return make(Derivative{}); }       // D
  static ArithFunction log_deriv() { return make(LogDeriv{}); }          // ld
  static ArithFunction identity() { return make(Identity{}); }           // N
  static ArithFunction ones() { return make(Ones{}); }                   // E
  static ArithFunction unit() { return make(Unit{}); }                   // eps
  static ArithFunction divisor_count() { return make(DivisorCount{}); }  // tau

  /// D_p for a prime p.
  static ArithFunction partial(Int p) {
    if (!is_prime(p))
      throw domain_error("partial derivative: " + p.str() + " is not prime");
    return make(Partial{std::move(p)});
  }

  // -- prime-data functions ----------------------------------------------
  static ArithFunction completely_additive(PrimeAssignment pa) {
    return make(CompletelyAdditive{std::move(pa)});
  }
  static ArithFunction completely_multiplicative(PrimeAssignment pa) {
    return make(CompletelyMultiplicative{std::move(pa)});
  }
  /// L-additive function given by f's own values at primes plus the prime
  /// values of its completely multiplicative part h.  h may vanish at
  /// primes; evaluation always goes through the general per-prime formula.
  static ArithFunction l_additive(PrimeAssignment f_at_primes, PrimeAssignment h) {
    return make(LAdditive{std::move(f_at_primes), std::move(h)});
  }

  // -- combinators ---------------------------------------------------------
  static ArithFunction convolution(ArithFunction u, ArithFunction v) {
    return make(Convolution{{std::move(u), std::move(v)}});
  }

  /// Pointwise product u·v.  When u is L-additive with part h_u and v is
  /// completely multiplicative, the result is L-additive with part h_u·v;
  /// a right factor whose shape shows it is not completely multiplicative
  /// is rejected.
  friend ArithFunction pointwise_product(ArithFunction u, ArithFunction v) {
    if (v.completely_multiplicative_hint() == ShapeHint::no)
      throw domain_error(
          "pointwise_product: right factor is not completely multiplicative");
    return make(Product{{std::move(u), std::move(v)}});
  }

  /// Composition outer(inner(n)).  The inner function must be completely
  /// multiplicative (rejected here when its shape says otherwise) and must
  /// take positive integer values, which is checked at each evaluation.
  friend ArithFunction compose(ArithFunction outer, ArithFunction inner) {
    if (inner.completely_multiplicative_hint() == ShapeHint::no)
      throw domain_error("compose: inner function is not completely multiplicative");
    return make(Composition{{std::move(outer), std::move(inner)}});
  }

  // -- evaluation -----------------------------------------------------------
  Rational eval(const Int& n, const PrimeSieve& sieve) const;

  /// Completely-multiplicative judgment from the expression shape alone.
  ShapeHint completely_multiplicative_hint() const;

  /// The completely multiplicative part h_f, when the shape determines one:
  /// the derivatives have part N, completely additive functions (ld among
  /// them) have part E, and products by a completely multiplicative v and
  /// compositions with completely multiplicative inner functions propagate
  /// parts (h_{f·v} = h_f·v and h_{f∘u} = h_f∘u).
  std::optional<ArithFunction> l_additive_part() const;

 private:
  struct Derivative {};
  struct Partial { Int p; };
  struct LogDeriv {};
  struct Identity {};
  struct Ones {};
  struct Unit {};
  struct DivisorCount {};
  struct CompletelyAdditive { PrimeAssignment pa; };
  struct CompletelyMultiplicative { PrimeAssignment pa; };
  struct LAdditive { PrimeAssignment f_at_primes; PrimeAssignment h; };
  struct Convolution { std::vector<ArithFunction> args; };  // u, v
  struct Product { std::vector<ArithFunction> args; };      // u, v
  struct Composition { std::vector<ArithFunction> args; };  // outer, inner

  using Node = std::variant<Derivative, Partial, LogDeriv, Identity, Ones, Unit,
                            DivisorCount, CompletelyAdditive,
                            CompletelyMultiplicative, LAdditive, Convolution,
                            Product, Composition>;

  template <typename T>
  static ArithFunction make(T node) {
    ArithFunction f;
    f.node_ = std::make_shared<Node>(std::move(node));
    return f;
  }

  ArithFunction() = default;

  std::shared_ptr<const Node> node_;
};

inline Rational ArithFunction::eval(const Int& n, const PrimeSieve& sieve) const {
  if (n <= 0)
    throw domain_error("eval: arithmetic functions are defined on positive integers");

  struct Visitor {
    const Int& n;
    const PrimeSieve& sieve;

    Rational operator()(const Derivative&) const {
      return Rational(arithmetic_derivative(n, sieve));
    }
    Rational operator()(const Partial& d) const {
      return Rational(partial_derivative(d.p, n, sieve));
    }
    Rational operator()(const LogDeriv&) const { return log_derivative(n, sieve); }
    Rational operator()(const Identity&) const { return Rational(n); }
    Rational operator()(const Ones&) const { return Rational(1); }
    Rational operator()(const Unit&) const { return Rational(n == 1 ? 1 : 0); }
    Rational operator()(const DivisorCount&) const {
      Int count = 1;
      for (const auto& pf : factorize(n, sieve).factors) count *= pf.exponent + 1;
      return Rational(count);
    }
    Rational operator()(const CompletelyAdditive& f) const {
      return eval_completely_additive(f.pa, factorize(n, sieve));
    }
    Rational operator()(const CompletelyMultiplicative& f) const {
      return eval_completely_multiplicative(f.pa, factorize(n, sieve));
    }
    Rational operator()(const LAdditive& f) const {
      return eval_l_additive(f.f_at_primes, f.h, factorize(n, sieve));
    }
    Rational operator()(const Convolution& c) const {
      Rational s(0);
      for (const Int& d : divisors(factorize(n, sieve)))
        s += c.args[0].eval(d, sieve) * c.args[1].eval(n / d, sieve);
      return s;
    }
    Rational operator()(const Product& p) const {
      return p.args[0].eval(n, sieve) * p.args[1].eval(n, sieve);
    }
    Rational operator()(const Composition& c) const {
      Rational inner = c.args[1].eval(n, sieve);
      if (!inner.is_integer() || inner.num() <= 0)
        throw eval_error("compose: inner function value " + inner.str() +
                         " at n = " + n.str() + " is not a positive integer");
      return c.args[0].eval(inner.num(), sieve);
    }
  };
  return std::visit(Visitor{n, sieve}, *node_);
}

inline ShapeHint ArithFunction::completely_multiplicative_hint() const {
  struct Visitor {
    ShapeHint operator()(const Identity&) const { return ShapeHint::yes; }
    ShapeHint operator()(const Ones&) const { return ShapeHint::yes; }
    ShapeHint operator()(const Unit&) const { return ShapeHint::yes; }
    ShapeHint operator()(const CompletelyMultiplicative&) const { return ShapeHint::yes; }
    ShapeHint operator()(const Derivative&) const { return ShapeHint::no; }
    ShapeHint operator()(const Partial&) const { return ShapeHint::no; }
    ShapeHint operator()(const LogDeriv&) const { return ShapeHint::no; }
    ShapeHint operator()(const DivisorCount&) const { return ShapeHint::no; }
    ShapeHint operator()(const CompletelyAdditive&) const { return ShapeHint::no; }
    ShapeHint operator()(const LAdditive&) const { return ShapeHint::no; }
    ShapeHint operator()(const Convolution&) const { return ShapeHint::unknown; }
    ShapeHint operator()(const Product& p) const { return both(p.args); }
    ShapeHint operator()(const Composition& c) const { return both(c.args); }

    static ShapeHint both(const std::vector<ArithFunction>& args) {
      if (args[0].completely_multiplicative_hint() == ShapeHint::yes &&
          args[1].completely_multiplicative_hint() == ShapeHint::yes)
        return ShapeHint::yes;
      return ShapeHint::unknown;
    }
  };
  return std::visit(Visitor{}, *node_);
}

inline std::optional<ArithFunction> ArithFunction::l_additive_part() const {
  using Part = std::optional<ArithFunction>;
  struct Visitor {
    Part operator()(const Derivative&) const { return ArithFunction::identity(); }
    Part operator()(const Partial&) const { return ArithFunction::identity(); }
    Part operator()(const LogDeriv&) const { return ArithFunction::ones(); }
    Part operator()(const CompletelyAdditive&) const { return ArithFunction::ones(); }
    Part operator()(const LAdditive& f) const {
      return ArithFunction::completely_multiplicative(f.h);
    }
    Part operator()(const Product& p) const {
      Part hu = p.args[0].l_additive_part();
      if (!hu) return std::nullopt;
      return ArithFunction::make(Product{{std::move(*hu), p.args[1]}});
    }
    Part operator()(const Composition& c) const {
      Part houter = c.args[0].l_additive_part();
      if (!houter) return std::nullopt;
      return ArithFunction::make(Composition{{std::move(*houter), c.args[1]}});
    }
    Part operator()(const Identity&) const { return std::nullopt; }
    Part operator()(const Ones&) const { return std::nullopt; }
    Part operator()(const Unit&) const { return std::nullopt; }
    Part operator()(const DivisorCount&) const { return std::nullopt; }
    Part operator()(const CompletelyMultiplicative&) const { return std::nullopt; }
    Part operator()(const Convolution&) const { return std::nullopt; }
  };
  return std::visit(Visitor{}, *node_);
}

// -- decomposition into the (g_f, h_f) pair ----------------------------------

enum class DecomposeStatus {
  determined,     // h(p) = f(p^2) / (2 f(p)), g(p) = f(p) / h(p)
  indeterminate,  // f(p) = 0: any h(p) is consistent; g(p) = 0 reported
  no_quotient,    // f(p) != 0 but f(p^2) = 0: h(p) = 0, no quotient form at p
};

struct DecomposedPrime {
  Int p;
  Rational g;
  Rational h;
  DecomposeStatus status;
};

/// Per-prime recovery of the pair representation, with the primes where the
/// representation is indeterminate or does not exist flagged as such.
struct Decomposition {
  std::vector<DecomposedPrime> primes;

  /// Pair assembled from the determined primes; g defaults to 0 and h to 1
  /// elsewhere.
  LAdditivePair pair() const {
    LAdditivePair out{PrimeAssignment::constant(Rational(0)),
                      PrimeAssignment::constant(Rational(1))};
    for (const auto& d : primes) {
      if (d.status != DecomposeStatus::determined) continue;
      out.g.set(d.p, d.g);
      out.h.set(d.p, d.h);
    }
    return out;
  }
};

/// Recovers h(p) from f(p^2) = 2 f(p) h(p) and g(p) = f(p)/h(p) at each
/// requested prime.
inline Decomposition decompose(const ArithFunction& f, const std::vector<Int>& primes,
                               const PrimeSieve& sieve) {
  Decomposition out;
  out.primes.reserve(primes.size());
  for (const Int& p : primes) {
    if (!is_prime(p, sieve))
      throw domain_error("decompose: " + p.str() + " is not prime");
    Rational fp = f.eval(p, sieve);
    if (fp.is_zero()) {
      out.primes.push_back({p, Rational(0), Rational(0), DecomposeStatus::indeterminate});
      continue;
    }
    Rational fp2 = f.eval(p * p, sieve);
    Rational h = fp2 / (Rational(2) * fp);
    if (h.is_zero()) {
      out.primes.push_back({p, Rational(0), Rational(0), DecomposeStatus::no_quotient});
      continue;
    }
    out.primes.push_back({p, fp / h, h, DecomposeStatus::determined});
  }
  return out;
}

}  // namespace ladfn

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

// Arbitrary-precision signed integer.
using Int = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonical form). Zero is 0/1.
using Rational = mpq_class;

/// Builds a canonical Rational from numerator/denominator.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

/// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

/// p-adic valuation of a nonzero integer.
long valuation(const Int& n, long p);

/// Raised when a rational with p in its denominator is reduced mod p^e.
class NotPIntegral : public std::domain_error {
 public:
  NotPIntegral(long p, long denominator_valuation)
      : std::domain_error("denominator divisible by " + std::to_string(p) +
                          "^" + std::to_string(denominator_valuation)),
        valuation_(denominator_valuation) {}
  long denominator_valuation() const { return valuation_; }

 private:
  long valuation_;
};

/// Raised when a factorial ratio has an uncancelled pole.
class OutsideDomain : public std::domain_error {
 public:
  explicit OutsideDomain(const std::string& what) : std::domain_error(what) {}
};

// An odd prime p together with an exponent e in {1,2,3,4}; the modulus p^e.
class PrimePower {
 public:
  PrimePower(long p, int e);

  long prime() const { return p_; }
  int exponent() const { return e_; }
  const Int& modulus() const { return modulus_; }

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  long p_;
  int e_;
  Int modulus_;
};

// Canonical representative in [0, p^e) tied to a PrimePower. Arithmetic
// between residues with different moduli throws.
class Residue {
 public:
  Residue(Int value, PrimePower modulus);

  const Int& value() const { return value_; }
  const PrimePower& modulus() const { return mod_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void require_same_modulus(const Residue& o) const;

  Int value_;
  PrimePower mod_;
};

/// Inverse of a mod m (m need not be prime; gcd(a, m) must be 1).
Int mod_inverse(const Int& a, const Int& m);

/// Reduces a p-integral rational to its canonical residue mod p^e.
/// Throws NotPIntegral when p divides the denominator.
Residue reduce(const Rational& q, const PrimePower& m);

// Memoized factorial table. Entries below the cap are stored once and
// reused; larger arguments are computed on the fly from the last cached
// prefix. Concurrent readers are safe; growth is serialized.
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t cap = 10000);

  FactorialTable(const FactorialTable&) = delete;
  FactorialTable& operator=(const FactorialTable&) = delete;

  Int operator()(long n) const;

 private:
  Int compute_beyond_cap(long n) const;

  std::size_t cap_;
  mutable std::vector<Int> table_;
  mutable std::shared_mutex mutex_;
};

/// n! via the process-wide memo table. n < 0 throws std::domain_error.
Int factorial(long n);

/// C(n, k) computed exactly; 0 when k < 0 or k > n, throws for n < 0.
Int binomial(long n, long k);

// A hypergeometric-style term: scalar * prod(n_i!) / prod(d_j!), with the
// zero/pole order-counting convention of eval_factorial_ratio.
struct FactorialRatio {
  std::vector<long> numerator_args;
  std::vector<long> denominator_args;
  Rational scalar;
};

/// Evaluates a FactorialRatio. Let Z = #negative denominator args and
/// P = #negative numerator args (each occurrence counted). Z > P with
/// Z > 0 gives an exact zero; Z = P = 0 evaluates directly; any other
/// combination with P > 0 is an uncancelled pole and throws OutsideDomain.
Rational eval_factorial_ratio(const FactorialRatio& r);

}  // namespace sc

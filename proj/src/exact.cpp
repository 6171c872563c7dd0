#include "sc/exact.hpp"

#include <mutex>


#include "sc/numthy.hpp"

namespace sc {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

Rational pow2(long e) {
  Rational q(1);
  if (e >= 0) {
    mpz_ui_pow_ui(q.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
  }
  return q;  // already canonical: one side is 1
}

long valuation(const Int& n, long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int m = n;
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

PrimePower::PrimePower(long p, int e) : p_(p), e_(e) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("modulus base must be an odd prime >= 3");
  if (e < 1 || e > 4) throw std::domain_error("exponent must be in 1..4");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
}

Residue::Residue(Int value, PrimePower modulus)
    : value_(std::move(value)), mod_(std::move(modulus)) {
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), mod_.modulus().get_mpz_t());
}

void Residue::require_same_modulus(const Residue& o) const {
  if (!(mod_ == o.mod_))
    throw std::domain_error("residue arithmetic across different moduli");
}

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(o);
  return Residue(value_ + o.value_, mod_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same_modulus(o);
  return Residue(value_ - o.value_, mod_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(o);
  return Residue(value_ * o.value_, mod_);
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("not invertible");
  return r;
}

Residue reduce(const Rational& q, const PrimePower& m) {
  const Int& den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), m.prime()))
    throw NotPIntegral(m.prime(), valuation(den, m.prime()));
  Int num_mod, den_mod;
  mpz_mod(num_mod.get_mpz_t(), q.get_num().get_mpz_t(),
          m.modulus().get_mpz_t());
  mpz_mod(den_mod.get_mpz_t(), den.get_mpz_t(), m.modulus().get_mpz_t());
  return Residue(num_mod * mod_inverse(den_mod, m.modulus()), m);
}

FactorialTable::FactorialTable(std::size_t cap) : cap_(cap) {
  table_.reserve(64);
  table_.emplace_back(1);  // 0!
}

Int FactorialTable::operator()(long n) const {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < table_.size()) return table_[n];
  }
  if (static_cast<std::size_t>(n) >= cap_) return compute_beyond_cap(n);
  std::unique_lock lock(mutex_);
  while (table_.size() <= static_cast<std::size_t>(n)) {
    table_.push_back(table_.back() * static_cast<long>(table_.size()));
  }
  return table_[n];
}

Int FactorialTable::compute_beyond_cap(long n) const {
  Int acc;
  long start;
  {
    std::shared_lock lock(mutex_);
    acc = table_.back();
    start = static_cast<long>(table_.size());
  }
  for (long i = start; i <= n; ++i) acc *= i;
  return acc;
}

namespace {
FactorialTable& global_factorials() {
  static FactorialTable table;
  return table;
}
}  // namespace

Int factorial(long n) { return global_factorials()(n); }

Int binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  Int r = factorial(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(k).get_mpz_t());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(n - k).get_mpz_t());
  return r;
}

Rational eval_factorial_ratio(const FactorialRatio& r) {
  long zeros = 0, poles = 0;
  for (long d : r.denominator_args)
    if (d < 0) ++zeros;
  for (long n : r.numerator_args)
    if (n < 0) ++poles;
  if (zeros > poles && zeros > 0) return Rational(0);
  if (poles > 0)
    throw OutsideDomain("factorial ratio pole of order " +
                        std::to_string(poles) + " not cancelled (zero order " +
                        std::to_string(zeros) + ")");
  Int num(1), den(1);
  for (long a : r.numerator_args) num *= factorial(a);
  for (long a : r.denominator_args) den *= factorial(a);
  return r.scalar * make_rational(num, den);
}

}  // namespace sc

#include "sc/identities.hpp"

#include "sc/numthy.hpp"

namespace sc::identities {

namespace {
void require_positive(long n) {
  if (n < 1) throw std::domain_error("identity index must be positive");
}
}  // namespace

Rational h1_lhs(long n) {
  require_positive(n);
  Rational s(0);
  for (long k = 1; k <= n; ++k)
    s += make_rational(binomial(n, k), Int(2 * k + 1));
  return s;
}

Rational h1_rhs(long n) {
  require_positive(n);
  Rational central(0);
  for (long k = 1; k <= n; ++k)
    central += Rational(binomial(2 * k, k)) * pow2(-k);
  Rational head =
      pow2(2 * n) / (Rational(2 * n + 1) * Rational(binomial(2 * n, n)));
  return head * central + head - 1;
}

Rational h2_lhs(long n) {
  require_positive(n);
  Rational s(0);
  for (long k = 1; k <= n; ++k) s += make_rational(binomial(n, k), Int(k));
  return s;
}

Rational h2_rhs(long n) {
  require_positive(n);
  Rational s = -harmonic(n, 1);
  for (long k = 1; k <= n; ++k) s += pow2(k) / Rational(k);
  return s;
}

bool recurrence_h1_holds(long n, const SequenceFn& s) {
  require_positive(n);
  Rational v = Rational(1) - Rational(4 * (1 + n)) * s(n) +
               Rational(2 * (5 + 3 * n)) * s(n + 1) +
               Rational(-5 - 2 * n) * s(n + 2);
  return v == 0;
}

bool recurrence_h2_holds(long n, const SequenceFn& s) {
  require_positive(n);
  Rational v = Rational(1) - Rational(2 * (1 + n)) * s(n) +
               Rational(4 + 3 * n) * s(n + 1) - Rational(2 + n) * s(n + 2);
  return v == 0;
}

}  // namespace sc::identities

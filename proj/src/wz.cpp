#include "sc/wz.hpp"

#include "sc/numthy.hpp"

namespace sc::wz {

Int alpha(long n, long k) {
  Int N(n), K(k);
  return 4 * K * K * K * K - 44 * K * K * K * N + 180 * K * K * N * N -
         308 * K * N * N * N + 184 * N * N * N * N - 12 * K * K * K +
         98 * K * K * N - 260 * K * N * N + 214 * N * N * N + 11 * K * K -
         62 * K * N + 79 * N * N - 3 * K + 9 * N;
}

Rational F(long n, long k) {
  if (n == 0) return Rational(0);
  FactorialRatio r;
  r.numerator_args = {2 * k, 4 * n - 2 * k - 2, 3 * n - k - 2,
                      2 * n - 2 * k - 2};
  r.denominator_args = {2 * n - k - 1, 2 * n - k - 1, n - k - 1,
                        n - k - 1,     2 * n,         n - 1,
                        k};
  r.scalar = make_rational(Int(n) * (6 * n - 4 * k - 3), Int(1)) *
             pow2(-(6 * n - 2 * k));
  return eval_factorial_ratio(r);
}

Rational G(long n, long k) {
  if (n < k) return Rational(0);
  if (n == k) throw PoleAtDiagonal(n, k);
  FactorialRatio r;
  r.numerator_args = {4 * n - 2 * k, 3 * n - k - 1, 2 * n - 2 * k, 2 * k};
  r.denominator_args = {2 * n - k + 1, 2 * n - k, n - k - 1, n - k - 1,
                        2 * n + 1,     n,         k};
  Int nk(n - k);
  r.scalar = make_rational(-alpha(n, k), nk * nk) * pow2(-(6 * n - 2 * k + 6));
  return eval_factorial_ratio(r);
}

bool pair_equation_holds(long n, long k) {
  if (n < 1 || k < 0)
    throw std::domain_error("pair equation requires n >= 1 and k >= 0");
  if (k == n - 1 || k == n) {
    // G(n,n) sits on the certificate's pole. Adding the equations at
    // k = n-1 and k = n cancels it, leaving a diagonal-free statement.
    Rational f_side = F(n + 1, n - 1) - F(n, n - 1) + F(n + 1, n) - F(n, n);
    return f_side == G(n, n + 1) - G(n, n - 1);
  }
  return F(n + 1, k) - F(n, k) == G(n, k + 1) - G(n, k);
}

Rational closed_form_G0(long n) {
  if (n < 0) throw std::domain_error("closed_form_G0 requires n >= 0");
  Rational c = make_rational(-(Int(92) * n * n + 61 * n + 9),
                             Int(192) * (2 * n + 1)) *
               pow2(-6 * n);
  return c * binomial(2 * n, n) * binomial(3 * n, n) * binomial(4 * n, 2 * n);
}

Rational closed_form_F_half(long p, long k) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("closed_form_F_half requires an odd prime");
  if (k < 0 || k > (p - 3) / 2)
    throw std::domain_error("closed_form_F_half requires 0 <= k <= (p-3)/2");
  Rational head = make_rational(Int(p - 1), Int(1)) * pow2(-3 * (p - 1)) *
                  binomial((3 * p - 5) / 2, p - 1);
  Rational num = pow2(2 * k) * (3 * p - 4 * k - 6) * binomial(2 * k, k) *
                 binomial(2 * p - 2 * k - 4, p - k - 2) *
                 binomial(p - 3 - 2 * k, (p - 3 - 2 * k) / 2);
  Rational den = Rational(3 * p - 2 * k - 5) *
                 Rational(binomial((3 * p - 5) / 2, k));
  return head * num / den;
}

bool row_telescope_holds(long n, long K) {
  if (n < 1 || K <= n + 1)
    throw std::domain_error("row telescope requires n >= 1 and K > n+1");
  Rational diff(0);
  for (long k = 0; k < K; ++k) diff += F(n + 1, k) - F(n, k);
  return diff == -G(n, 0);
}

namespace {

// sum_{n=0}^{nmax} G(n,0); the n = 0 term comes from the closed form,
// where the diagonal pole is cancelled.
Rational g_column_sum(long nmax) {
  Rational s = closed_form_G0(0);
  for (long n = 1; n <= nmax; ++n) s += G(n, 0);
  return s;
}

}  // namespace

bool half_telescope_holds(long p) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("half telescope requires a prime >= 5");
  long m = (p - 1) / 2;
  Rational lhs(0);
  for (long k = 0; k < p; ++k) lhs += F(m, k);
  return lhs == -g_column_sum((p - 3) / 2);
}

Rational b_term(long p, long k) {
  Rational num = Rational(Int(6 * p - 4 * k - 3) * (p - k)) * pow2(2 * k) *
                 binomial(2 * k, k) * binomial(2 * p - 2 * k, p - k) *
                 binomial(4 * p - 2 * k - 2, 2 * p - k - 1);
  Rational den = Rational(Int(2) * (3 * p - k - 1) * (2 * p - 2 * k - 1)) *
                 Rational(binomial(3 * p - 1, k));
  return num / den;
}

Rational b_sum(long p) {
  Rational s(0);
  for (long k = 0; k <= p - 1; ++k) s += b_term(p, k);
  return s;
}

bool full_telescope_holds(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("full telescope requires an odd prime");
  Rational lhs(0);
  for (long k = 0; k < p; ++k) lhs += F(p, k);
  if (lhs != -g_column_sum(p - 1)) return false;

  Rational sun(0);
  for (long k = 0; k <= p - 1; ++k) {
    sun += make_rational(Int(92) * k * k + 61 * k + 9, Int(2 * k + 1)) *
           pow2(-6 * k) * binomial(2 * k, k) * binomial(3 * k, k) *
           binomial(4 * k, 2 * k);
  }
  Rational bridge = Rational(Int(192) * p) * binomial(3 * p - 1, 2 * p) *
                    pow2(-6 * p) * b_sum(p);
  return sun == bridge;
}

}  // namespace sc::wz

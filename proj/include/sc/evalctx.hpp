#pragma once

#include <map>
#include <memory>
#include <optional>

#include "sc/exact.hpp"
#include "sc/fast.hpp"
#include "sc/numthy.hpp"

namespace sc::catalog {

// The two evaluation contexts expose one vocabulary -- integers, rationals,
// binomials, powers of two, harmonic numbers, q_p(2), (-1/p), and the
// E_{p-3} representative -- so every catalog formula is written once and
// instantiated against both engines.

// gmpxx operators return expression templates that reference their
// operands; stored under `auto` in the generic entry bodies those would
// dangle. ExactVal materializes every result.
class ExactVal {
 public:
  ExactVal() = default;
  explicit ExactVal(Rational q) : q_(std::move(q)) {}

  const Rational& rational() const { return q_; }

  ExactVal operator+(const ExactVal& o) const {
    return ExactVal(Rational(q_ + o.q_));
  }
  ExactVal operator-(const ExactVal& o) const {
    return ExactVal(Rational(q_ - o.q_));
  }
  ExactVal operator*(const ExactVal& o) const {
    return ExactVal(Rational(q_ * o.q_));
  }
  ExactVal operator/(const ExactVal& o) const {
    if (o.q_ == 0) throw std::domain_error("division by zero");
    return ExactVal(Rational(q_ / o.q_));
  }
  ExactVal operator-() const { return ExactVal(Rational(-q_)); }

 private:
  Rational q_;
};

class ExactCtx {
 public:
  using V = ExactVal;

  explicit ExactCtx(long p_, long euler_rep_shift = 0)
      : p(p_), shift_(euler_rep_shift) {}

  long p;

  V i(long n) const { return V(Rational(Int(n))); }
  V i(const Int& n) const { return V(Rational(n)); }
  V r(long a, long b) const { return V(make_rational(a, b)); }
  V binom(long n, long k) const { return V(Rational(sc::binomial(n, k))); }
  V pow2(long e) const { return V(sc::pow2(e)); }
  V neg1(long k) const { return V(Rational(k % 2 == 0 ? 1 : -1)); }
  V H(long n, long order = 1) const { return V(harmonic(n, order)); }
  V Halt(long n, long order = 1) const { return V(harmonic_alt(n, order)); }

  V q2() {
    if (!q2_) q2_ = Rational(fermat_quotient(Int(2), p));
    return V(*q2_);
  }
  V leg() const { return V(Rational(legendre_minus_one(p))); }
  V eup3() {
    if (!eu_) eu_ = Rational(euler_number_mod(p - 3, p).value() + shift_ * p);
    return V(*eu_);
  }

 private:
  long shift_;
  std::optional<Rational> q2_;
  std::optional<Rational> eu_;
};

template <class U>
class FastCtxT {
 public:
  using V = fast::PValT<U>;

  explicit FastCtxT(long p_, long euler_rep_shift = 0)
      : p(p_), st_(state_for(p_)), shift_(euler_rep_shift) {}

  long p;

  const fast::WorkspaceT<U>& workspace() const { return st_.ws; }

  V i(long n) const { return fast::from_int(st_.ws, n); }
  V i(const Int& n) const { return fast::from_int(st_.ws, n); }
  V r(long a, long b) const {
    return fast::from_int(st_.ws, a) / fast::from_int(st_.ws, b);
  }
  V binom(long n, long k) const { return fast::binom(st_.ws, n, k); }
  V pow2(long e) const { return fast::pow2(st_.ws, e); }
  V neg1(long k) const { return fast::from_int(st_.ws, k % 2 == 0 ? 1 : -1); }

  V H(long n, long order = 1) { return prefix(n, order, false); }
  V Halt(long n, long order = 1) { return prefix(n, order, true); }

  V q2() {
    if (!st_.q2) {
      // q_p(2) = (2^(p-1) - 1)/p, computed modulo p^(M+1) so the quotient
      // is known modulo p^M.
      Int mod1;
      mpz_ui_pow_ui(mod1.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(st_.ws.working_exponent() + 1));
      Int t;
      Int base(2);
      mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>(p - 1), mod1.get_mpz_t());
      t -= 1;
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                      static_cast<unsigned long>(p));
      V q;
      q.ws = &st_.ws;
      q.v = 0;
      q.u = st_.ws.reduce_int(t);
      q.prec = st_.ws.working_exponent();
      st_.q2 = q;
    }
    return *st_.q2;
  }
  V leg() const { return fast::from_int(st_.ws, legendre_minus_one(p)); }
  V eup3() {
    return fast::from_int(st_.ws,
                          euler_number_mod(p - 3, p).value() + shift_ * p);
  }

 private:
  // Workspace, q2, and harmonic streams persist per (thread, prime) so
  // sweeps reuse the prefix tables across catalog entries. Orders 1 and 2
  // are the only ones the catalog uses; they get direct slots.
  struct PrimeState {
    fast::WorkspaceT<U> ws;
    std::optional<V> q2;
    std::vector<V> harmonic[2][2];  // [order-1][alternating]

    explicit PrimeState(long prime)
        : ws(prime, fast::default_exponent<U>()) {}
  };

  static PrimeState& state_for(long prime) {
    thread_local std::map<long, std::unique_ptr<PrimeState>> states;
    auto& slot = states[prime];
    if (!slot) slot = std::make_unique<PrimeState>(prime);
    return *slot;
  }

  V prefix(long n, long order, bool alternating) {
    if (order < 1 || order > 2)
      throw std::domain_error("unsupported harmonic order");
    auto& stream = st_.harmonic[order - 1][alternating ? 1 : 0];
    if (stream.empty()) stream.push_back(fast::from_int(st_.ws, 0));
    while (stream.size() <= static_cast<std::size_t>(n)) {
      long k = static_cast<long>(stream.size());
      V term = fast::from_int(st_.ws, alternating && k % 2 == 1 ? -1 : 1) /
               fast::from_int(st_.ws, order == 1 ? k : k * k);
      stream.push_back(stream.back() + term);
    }
    return stream[static_cast<std::size_t>(n)];
  }

  PrimeState& st_;
  long shift_;
};

using FastCtx = FastCtxT<Int>;
using FastCtx64 = FastCtxT<std::uint64_t>;

}  // namespace sc::catalog

#include "sc/fast.hpp"

namespace sc::fast {

namespace detail {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t invmod64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// Inverse modulo p^M: extended gcd on the small residue mod p, then
// Newton lifts x -> x(2 - ax), doubling the p-adic precision each step.
std::uint64_t invmod_prime_power(std::uint64_t a, std::uint64_t p,
                                 std::uint64_t pM, int M) {
  if (a % p == 0) throw std::domain_error("not invertible");
  std::uint64_t x = invmod64(a % p, p);
  for (int t = 1; t < M; t *= 2) {
    std::uint64_t ax = mulmod64(a, x, pM);
    std::uint64_t two_minus = (2 + pM - ax) % pM;
    x = mulmod64(x, two_minus, pM);
  }
  return x;
}

long sat_add(long a, long b) {
  if (a >= kInfinitePrecision || b >= kInfinitePrecision)
    return kInfinitePrecision;
  long s = a + b;
  return s > kInfinitePrecision ? kInfinitePrecision : s;
}

}  // namespace detail

using detail::sat_add;

// ----- workspace -------------------------------------------------------

template <class U>
WorkspaceT<U>::WorkspaceT(long p, int working_exponent)
    : p_(p), M_(working_exponent) {
  if (p < 3 || M_ < 1) throw std::domain_error("workspace parameters");
  ppow_.reserve(M_ + 1);
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    std::uint64_t acc = 1;
    for (int i = 0; i <= M_; ++i) {
      ppow_.push_back(acc);
      if (i < M_) {
        // additions need 2(p^M - 1) < 2^64, so cap the modulus at 2^63
        if (acc > (std::uint64_t(1) << 63) / static_cast<std::uint64_t>(p))
          throw std::domain_error("prime too large for word mode");
        acc *= static_cast<std::uint64_t>(p);
      }
    }
  } else {
    Int acc(1);
    for (int i = 0; i <= M_; ++i) {
      ppow_.push_back(acc);
      acc *= p;
    }
  }
  pM_ = ppow_.back();
  prefix_.reserve(128);
  prefix_.push_back(reduce_small(1));
}

template <class U>
U WorkspaceT<U>::mul(const U& a, const U& b) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return detail::mulmod64(a, b, pM_);
  } else {
    U r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pM_.get_mpz_t());
    return r;
  }
}

template <class U>
U WorkspaceT<U>::add(const U& a, const U& b) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    std::uint64_t s = a + b;
    return s >= pM_ ? s - pM_ : s;
  } else {
    U r = a + b;
    if (r >= pM_) r -= pM_;
    return r;
  }
}

template <class U>
U WorkspaceT<U>::negate(const U& a) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return a == 0 ? 0 : pM_ - a;
  } else {
    return a == 0 ? U(0) : U(pM_ - a);
  }
}

template <class U>
U WorkspaceT<U>::inverse(const U& a) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return detail::invmod_prime_power(a, static_cast<std::uint64_t>(p_), pM_,
                                      M_);
  } else {
    return mod_inverse(a, pM_);
  }
}

template <class U>
bool WorkspaceT<U>::divisible_by_p(const U& a) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return a % static_cast<std::uint64_t>(p_) == 0;
  } else {
    return mpz_divisible_ui_p(a.get_mpz_t(),
                              static_cast<unsigned long>(p_)) != 0;
  }
}

template <class U>
U WorkspaceT<U>::divide_by_p(const U& a) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return a / static_cast<std::uint64_t>(p_);
  } else {
    U r;
    mpz_divexact_ui(r.get_mpz_t(), a.get_mpz_t(),
                    static_cast<unsigned long>(p_));
    return r;
  }
}

template <class U>
U WorkspaceT<U>::reduce_int(const Int& n) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    return mpz_fdiv_ui(n.get_mpz_t(), pM_);
  } else {
    U r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pM_.get_mpz_t());
    return r;
  }
}

template <class U>
U WorkspaceT<U>::reduce_small(long n) const {
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    long r = n % static_cast<long>(pM_);
    if (r < 0) r += static_cast<long>(pM_);
    return static_cast<std::uint64_t>(r);
  } else {
    U r(n);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pM_.get_mpz_t());
    return r;
  }
}

template <class U>
const U& WorkspaceT<U>::coprime_prefix(long n) const {
  while (prefix_.size() <= static_cast<std::size_t>(n)) {
    long j = static_cast<long>(prefix_.size());
    if (j % p_ == 0) {
      prefix_.push_back(prefix_.back());
    } else {
      prefix_.push_back(mul(prefix_.back(), reduce_small(j)));
    }
  }
  return prefix_[static_cast<std::size_t>(n)];
}

template <class U>
const U& WorkspaceT<U>::coprime_prefix_inv(long n) const {
  coprime_prefix(n);
  if (inv_prefix_.size() < prefix_.size()) {
    std::size_t old_size = inv_prefix_.size();
    std::size_t top = prefix_.size() - 1;
    inv_prefix_.resize(prefix_.size());
    inv_prefix_[top] = inverse(prefix_[top]);
    for (std::size_t j = top; j > old_size; --j) {
      long idx = static_cast<long>(j);
      inv_prefix_[j - 1] = (idx % p_ == 0)
                               ? inv_prefix_[j]
                               : mul(inv_prefix_[j], reduce_small(idx));
    }
  }
  return inv_prefix_[static_cast<std::size_t>(n)];
}

template <class U>
void WorkspaceT<U>::factorial_vu(long n, long& v, U& u) const {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  v = 0;
  u = reduce_small(1);
  for (long m = n; m > 0; m /= p_) {
    u = mul(u, coprime_prefix(m));
    v += m / p_;
  }
}

template <class U>
void WorkspaceT<U>::factorial_inv_vu(long n, long& v, U& u) const {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  v = 0;
  u = reduce_small(1);
  for (long m = n; m > 0; m /= p_) {
    u = mul(u, coprime_prefix_inv(m));
    v += m / p_;
  }
}

// ----- values ----------------------------------------------------------

namespace {

template <class U>
void require_same_workspace(const PValT<U>& a, const PValT<U>& b) {
  if (a.ws != b.ws || a.ws == nullptr)
    throw std::logic_error("p-adic arithmetic across workspaces");
}

template <class U>
bool is_exact_zero(const PValT<U>& x) {
  return x.u == U{} && x.prec >= kInfinitePrecision;
}

// u * p^shift within the working modulus; saturates to 0 once the shift
// leaves the window.
template <class U>
U shifted_unit(const PValT<U>& x, long vmin) {
  long shift = x.v - vmin;
  if (x.u == U{} || shift >= x.ws->working_exponent()) return U{};
  if (shift == 0) return x.u;
  return x.ws->mul(x.u, x.ws->p_power(shift));
}

}  // namespace

template <class U>
PValT<U> PValT<U>::operator+(const PValT& o) const {
  require_same_workspace(*this, o);
  PValT r;
  r.ws = ws;
  long v1 = is_exact_zero(*this) ? o.v : v;
  long v2 = is_exact_zero(o) ? v1 : o.v;
  r.v = std::min(v1, v2);
  r.prec = std::min({prec, o.prec, sat_add(r.v, ws->working_exponent())});
  r.u = ws->add(shifted_unit(*this, r.v), shifted_unit(o, r.v));
  return r;
}

template <class U>
PValT<U> PValT<U>::operator-() const {
  PValT r = *this;
  if (r.ws != nullptr) r.u = r.ws->negate(r.u);
  return r;
}

template <class U>
PValT<U> PValT<U>::operator-(const PValT& o) const { return *this + (-o); }

template <class U>
PValT<U> PValT<U>::operator*(const PValT& o) const {
  require_same_workspace(*this, o);
  PValT r;
  r.ws = ws;
  if (is_exact_zero(*this) || is_exact_zero(o)) {
    r.v = 0;
    r.u = U{};
    r.prec = kInfinitePrecision;
    return r;
  }
  r.v = v + o.v;
  r.prec = std::min({sat_add(prec, o.v), sat_add(o.prec, v),
                     sat_add(r.v, ws->working_exponent())});
  r.u = ws->mul(u, o.u);
  return r;
}

template <class U>
PValT<U> PValT<U>::operator/(const PValT& o) const {
  require_same_workspace(*this, o);
  PValT d = o;
  // Strip hidden p factors so the divisor's unit part is invertible.
  while (d.u != U{} && ws->divisible_by_p(d.u)) {
    d.u = ws->divide_by_p(d.u);
    d.v += 1;
  }
  if (d.u == U{}) throw std::domain_error("division by p-adic zero");
  PValT r;
  r.ws = ws;
  if (is_exact_zero(*this)) {
    r.v = 0;
    r.u = U{};
    r.prec = kInfinitePrecision;
    return r;
  }
  r.v = v - d.v;
  r.prec = std::min({sat_add(prec, -d.v), sat_add(d.prec, v - 2 * d.v),
                     sat_add(r.v, ws->working_exponent())});
  r.u = ws->mul(u, ws->inverse(d.u));
  return r;
}

template <class U>
PValT<U> from_int(const WorkspaceT<U>& ws, const Int& n) {
  PValT<U> x;
  x.ws = &ws;
  if (n == 0) {
    x.v = 0;
    x.u = U{};
    x.prec = kInfinitePrecision;
    return x;
  }
  x.v = 0;
  Int unit = n;
  while (mpz_divisible_ui_p(unit.get_mpz_t(),
                            static_cast<unsigned long>(ws.prime()))) {
    mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(),
                    static_cast<unsigned long>(ws.prime()));
    ++x.v;
  }
  x.u = ws.reduce_int(unit);
  x.prec = sat_add(x.v, ws.working_exponent());
  return x;
}

template <class U>
PValT<U> from_int(const WorkspaceT<U>& ws, long n) {
  PValT<U> x;
  x.ws = &ws;
  if (n == 0) {
    x.v = 0;
    x.u = U{};
    x.prec = kInfinitePrecision;
    return x;
  }
  x.v = 0;
  while (n % ws.prime() == 0) {
    n /= ws.prime();
    ++x.v;
  }
  x.u = ws.reduce_small(n);
  x.prec = sat_add(x.v, ws.working_exponent());
  return x;
}

template <class U>
PValT<U> from_rational(const WorkspaceT<U>& ws, const Int& num,
                       const Int& den) {
  return from_int(ws, num) / from_int(ws, den);
}

template <class U>
PValT<U> binom(const WorkspaceT<U>& ws, long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return from_int(ws, 0);
  long vn, vk, vnk;
  U un, uk, unk;
  ws.factorial_vu(n, vn, un);
  ws.factorial_inv_vu(k, vk, uk);
  ws.factorial_inv_vu(n - k, vnk, unk);
  PValT<U> r;
  r.ws = &ws;
  r.v = vn - vk - vnk;
  r.prec = sat_add(r.v, ws.working_exponent());
  r.u = ws.mul(un, ws.mul(uk, unk));
  return r;
}

template <class U>
PValT<U> pow2(const WorkspaceT<U>& ws, long e) {
  PValT<U> r;
  r.ws = &ws;
  r.v = 0;
  r.prec = ws.working_exponent();
  U base = ws.reduce_small(2);
  bool invert = e < 0;
  unsigned long exp = static_cast<unsigned long>(invert ? -e : e);
  U acc = ws.reduce_small(1);
  while (exp) {
    if (exp & 1) acc = ws.mul(acc, base);
    base = ws.mul(base, base);
    exp >>= 1;
  }
  r.u = invert ? ws.inverse(acc) : acc;
  return r;
}

template <class U>
Int to_residue(const PValT<U>& x, int e) {
  if (x.ws == nullptr) throw std::logic_error("uninitialized value");
  if (x.prec < e)
    throw std::logic_error("p-adic precision exhausted before reduction");
  if (x.u == U{}) return Int(0);
  if (x.v >= e) return Int(0);
  Int pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(x.ws->prime()),
                static_cast<unsigned long>(e));
  Int val;
  if constexpr (std::is_same_v<U, std::uint64_t>) {
    val = Int(static_cast<unsigned long>(x.u));
  } else {
    val = x.u;
  }
  if (x.v >= 0) {
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(x.ws->prime()),
                  static_cast<unsigned long>(x.v));
    val *= pv;
  } else {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(x.ws->prime()),
                  static_cast<unsigned long>(-x.v));
    if (!mpz_divisible_p(val.get_mpz_t(), pw.get_mpz_t()))
      throw NotPIntegral(x.ws->prime(), -x.v);
    mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), pw.get_mpz_t());
  }
  mpz_mod(val.get_mpz_t(), val.get_mpz_t(), pe.get_mpz_t());
  return val;
}

// ----- explicit instantiations -----------------------------------------

template class WorkspaceT<Int>;
template class WorkspaceT<std::uint64_t>;
template struct PValT<Int>;
template struct PValT<std::uint64_t>;

template PValT<Int> from_int(const WorkspaceT<Int>&, const Int&);
template PValT<Int> from_int(const WorkspaceT<Int>&, long);
template PValT<Int> from_rational(const WorkspaceT<Int>&, const Int&,
                                  const Int&);
template PValT<Int> binom(const WorkspaceT<Int>&, long, long);
template PValT<Int> pow2(const WorkspaceT<Int>&, long);
template Int to_residue(const PValT<Int>&, int);

template PValT<std::uint64_t> from_int(const WorkspaceT<std::uint64_t>&,
                                       const Int&);
template PValT<std::uint64_t> from_int(const WorkspaceT<std::uint64_t>&,
                                       long);
template PValT<std::uint64_t> from_rational(const WorkspaceT<std::uint64_t>&,
                                            const Int&, const Int&);
template PValT<std::uint64_t> binom(const WorkspaceT<std::uint64_t>&, long,
                                    long);
template PValT<std::uint64_t> pow2(const WorkspaceT<std::uint64_t>&, long);
template Int to_residue(const PValT<std::uint64_t>&, int);

}  // namespace sc::fast

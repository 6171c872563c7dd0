#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "sc/exact.hpp"

namespace sc::fast {

inline constexpr long kInfinitePrecision =
    std::numeric_limits<long>::max() / 4;

// The modular engine carries values as p^v * u with the unit part held
// modulo p^M. The unit carrier U is either a 64-bit word (single-limb
// moduli, the common case for catalog sweeps) or an Int for larger p^M.
// One workspace per worker thread per prime.

namespace detail {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t invmod64(std::uint64_t a, std::uint64_t m);

}  // namespace detail

template <class U>
class WorkspaceT {
 public:
  WorkspaceT(long p, int working_exponent);

  long prime() const { return p_; }
  int working_exponent() const { return M_; }
  const U& working_modulus() const { return pM_; }

  /// p^e for 0 <= e <= M.
  const U& p_power(long e) const { return ppow_[static_cast<std::size_t>(e)]; }

  U mul(const U& a, const U& b) const;
  U add(const U& a, const U& b) const;
  U negate(const U& a) const;
  U inverse(const U& a) const;
  bool divisible_by_p(const U& a) const;
  U divide_by_p(const U& a) const;

  /// Arbitrary integer reduced into [0, p^M).
  U reduce_int(const Int& n) const;
  U reduce_small(long n) const;

  /// n! = p^v * u with u coprime to p.
  void factorial_vu(long n, long& v, U& u) const;

  /// 1/n! = p^-v * u with u coprime to p (returns v >= 0 and the unit of
  /// the inverse). Uses the inverse prefix table, no gcd per call.
  void factorial_inv_vu(long n, long& v, U& u) const;

  /// Product of p-coprime integers in [1, n], mod p^M.
  const U& coprime_prefix(long n) const;

  /// Inverse of coprime_prefix(n); one modular inversion per table growth.
  const U& coprime_prefix_inv(long n) const;

 private:
  long p_;
  int M_;
  U pM_;
  std::vector<U> ppow_;
  mutable std::vector<U> prefix_;
  mutable std::vector<U> inv_prefix_;
};

// A value known to agree with p^v * u modulo p^prec. Multiplicative chains
// keep v exact; additive cancellation only tightens what prec guarantees,
// and reductions check prec before trusting a residue.
template <class U>
struct PValT {
  const WorkspaceT<U>* ws = nullptr;
  long v = 0;
  U u{};
  long prec = 0;

  PValT operator+(const PValT& o) const;
  PValT operator-(const PValT& o) const;
  PValT operator*(const PValT& o) const;
  PValT operator/(const PValT& o) const;
  PValT operator-() const;
};

template <class U>
PValT<U> from_int(const WorkspaceT<U>& ws, const Int& n);
template <class U>
PValT<U> from_int(const WorkspaceT<U>& ws, long n);
template <class U>
PValT<U> from_rational(const WorkspaceT<U>& ws, const Int& num,
                       const Int& den);
template <class U>
PValT<U> binom(const WorkspaceT<U>& ws, long n, long k);
template <class U>
PValT<U> pow2(const WorkspaceT<U>& ws, long e);

/// Canonical residue of the value mod p^e. Throws NotPIntegral when the
/// value has negative valuation, std::logic_error when the tracked
/// precision cannot support exponent e.
template <class U>
Int to_residue(const PValT<U>& x, int e);

// Word-mode parameters: units in one 64-bit limb, p^M < 2^63.
inline constexpr int kWordExponent = 7;
inline constexpr long kWordPrimeMax = 509;  // 509^7 < 2^63
inline constexpr int kBigExponent = 12;

using Workspace = WorkspaceT<Int>;
using PVal = PValT<Int>;
using Workspace64 = WorkspaceT<std::uint64_t>;
using PVal64 = PValT<std::uint64_t>;

/// Working exponent used by the engine for a given carrier.
template <class U>
int default_exponent() {
  return std::is_same_v<U, std::uint64_t> ? kWordExponent : kBigExponent;
}

extern template class WorkspaceT<Int>;
extern template class WorkspaceT<std::uint64_t>;
extern template struct PValT<Int>;
extern template struct PValT<std::uint64_t>;

}  // namespace sc::fast

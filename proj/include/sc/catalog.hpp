#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sc/evalctx.hpp"

namespace sc::catalog {

enum class Engine { exact, fast };

std::string_view engine_name(Engine e);

// Outcome of one (entry, prime) check. For error rows (nonempty note) the
// residues are placeholders; for all other rows pass <=> lhs == rhs.
struct CheckResult {
  std::string entry_id;
  long prime = 0;
  int exponent = 1;
  Int lhs;
  Int rhs;
  bool pass = false;
  bool skipped = false;
  Engine engine = Engine::exact;
  std::int64_t elapsed_us = 0;
  std::string note;
};

using ExactClaims = std::vector<std::pair<ExactVal, ExactVal>>;
using FastClaims = std::vector<std::pair<fast::PVal, fast::PVal>>;
using Fast64Claims = std::vector<std::pair<fast::PVal64, fast::PVal64>>;

// One catalog congruence: a list of (lhs, rhs) claims per prime, all of
// which must agree modulo p^exponent. Per-k families emit one claim per k.
// The fast engine has two carriers behind one Engine tag: single-limb
// units for p <= kWordPrimeMax, Int units beyond.
struct Entry {
  std::string id;
  std::string description;
  std::string statement;
  long min_prime = 3;
  int exponent = 1;
  bool exact_identity = false;  // claims must also hold as exact rationals
  std::string family;           // per-k range in human-readable form
  std::function<ExactClaims(ExactCtx&)> exact_eval;
  std::function<FastClaims(FastCtx&)> fast_eval;
  std::function<Fast64Claims(FastCtx64&)> fast64_eval;
};

/// The full registry, in catalog order.
const std::vector<Entry>& registry();

/// Entry lookup; nullptr when the id is unknown.
const Entry* find_entry(std::string_view id);

/// Runs one check. p must be prime; primes below the entry's floor yield a
/// skipped result. Evaluation errors are reported as failing rows with a
/// diagnostic note.
CheckResult check(const Entry& entry, long p, Engine engine);
CheckResult check(std::string_view id, long p, Engine engine);

/// Same check reduced at a caller-chosen exponent (used by the
/// modulus-compatibility property).
CheckResult check_at_exponent(const Entry& entry, long p, Engine engine,
                              int exponent);

struct SweepOptions {
  std::vector<std::string> ids;  // empty means the whole registry
  long prime_lo = 3;
  long prime_hi = 3;
  bool run_exact = true;
  bool run_fast = false;
  int jobs = 1;
};

struct Mismatch {
  std::string entry_id;
  long prime = 0;
};

struct Report {
  std::vector<CheckResult> rows;  // sorted by (entry_id, prime, engine)
  std::vector<Mismatch> mismatches;
  long checked = 0;
  long failures = 0;
  long skips = 0;
};

/// Deterministic sweep over (entry, prime) pairs; individual failures are
/// recorded, never thrown. Parallel and serial runs produce identical
/// reports.
Report sweep(const SweepOptions& options);

/// True when two results agree on everything an engine can influence.
bool results_agree(const CheckResult& a, const CheckResult& b);

enum class Format { text, json, csv };

struct RenderOptions {
  Format format = Format::text;
  bool include_skips = false;
  bool with_timings = false;  // timings are zeroed otherwise, keeping
                              // reports byte-stable across runs and jobs
};

std::string render(const Report& report, const RenderOptions& options);

/// Registry metadata listing (the `list` command).
std::string render_registry(Format format);

}  // namespace sc::catalog

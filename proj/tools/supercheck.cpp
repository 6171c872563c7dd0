// Command-line front end: catalog listing, congruence sweeps over prime
// ranges, pair/telescope checks, and finite identity checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sc/catalog.hpp"
#include "sc/identities.hpp"
#include "sc/numthy.hpp"
#include "sc/wz.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool parse_prime_range(const std::string& text, long& lo, long& hi) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) return false;
    std::string tail = text.substr(dots + 2);
    hi = std::stol(tail, &used);
    if (used != tail.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

sc::catalog::Format parse_format(const std::string& name) {
  if (name == "text") return sc::catalog::Format::text;
  if (name == "json") return sc::catalog::Format::json;
  if (name == "csv") return sc::catalog::Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  out << body;
  return kExitPass;
}

int run_list(const std::string& format_name) {
  sc::catalog::Format format;
  try {
    format = parse_format(format_name);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << sc::catalog::render_registry(format);
  return kExitPass;
}

struct VerifyArgs {
  std::string primes = "3..3";
  std::string ids = "all";
  std::string engine = "exact";
  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  bool include_skips = false;
  bool timings = false;
};

int run_verify(const VerifyArgs& args) {
  sc::catalog::SweepOptions opt;
  if (!parse_prime_range(args.primes, opt.prime_lo, opt.prime_hi)) {
    std::cerr << "malformed prime range: " << args.primes << "\n";
    return kExitUsage;
  }
  if (sc::primes_in_range(std::max(opt.prime_lo, 3L), opt.prime_hi).empty()) {
    std::cerr << "no odd primes in range: " << args.primes << "\n";
    return kExitUsage;
  }
  if (args.ids != "all") {
    std::stringstream ss(args.ids);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (sc::catalog::find_entry(id) == nullptr) {
        std::cerr << "unknown entry id: " << id << "\n";
        return kExitUsage;
      }
      opt.ids.push_back(id);
    }
    if (opt.ids.empty()) {
      std::cerr << "no entry ids given\n";
      return kExitUsage;
    }
  }
  if (args.engine == "exact") {
    opt.run_exact = true;
    opt.run_fast = false;
  } else if (args.engine == "fast") {
    opt.run_exact = false;
    opt.run_fast = true;
  } else if (args.engine == "both") {
    opt.run_exact = true;
    opt.run_fast = true;
  } else {
    std::cerr << "unknown engine: " << args.engine << "\n";
    return kExitUsage;
  }
  if (args.jobs < 1) {
    std::cerr << "jobs must be at least 1\n";
    return kExitUsage;
  }
  opt.jobs = args.jobs;

  sc::catalog::RenderOptions render_opt;
  try {
    render_opt.format = parse_format(args.format);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  render_opt.include_skips = args.include_skips;
  render_opt.with_timings = args.timings;

  sc::catalog::Report report = sc::catalog::sweep(opt);
  int rc = write_output(args.out_path, sc::catalog::render(report, render_opt));
  if (rc != kExitPass) return rc;
  if (report.failures > 0 || !report.mismatches.empty()) return kExitFail;
  return kExitPass;
}

int run_wz(long nmax, long kmax, long pmax) {
  if (nmax < 1 || kmax < 1 || pmax < 1) {
    std::cerr << "wz bounds must be positive\n";
    return kExitUsage;
  }
  long checked = 0, failed = 0;
  auto tally = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      std::cout << "FAIL  " << what << "\n";
    }
  };

  for (long n = 1; n <= nmax; ++n)
    for (long k = 0; k <= kmax; ++k) {
      if (k == n || k + 1 == n) continue;  // certificate pole
      tally(sc::wz::pair_equation_holds(n, k),
            "pair equation at n=" + std::to_string(n) +
                " k=" + std::to_string(k));
    }

  for (long n = 1; n <= nmax; ++n)
    tally(sc::wz::G(n, 0) == sc::wz::closed_form_G0(n),
          "closed form of G(n,0) at n=" + std::to_string(n));

  for (long p : sc::primes_in_range(3, pmax)) {
    for (long k = 0; k <= (p - 3) / 2; ++k)
      tally(sc::wz::closed_form_F_half(p, k) == sc::wz::F((p - 1) / 2, k),
            "closed form of F((p-1)/2,k) at p=" + std::to_string(p) +
                " k=" + std::to_string(k));
    for (long k = (p - 1) / 2; k <= p - 1; ++k)
      tally(sc::wz::F((p - 1) / 2, k) == 0,
            "boundary zero of F((p-1)/2,k) at p=" + std::to_string(p) +
                " k=" + std::to_string(k));
    tally(sc::wz::row_telescope_holds((p - 1) / 2, p),
          "row telescope at p=" + std::to_string(p));
    if (p >= 5)
      tally(sc::wz::half_telescope_holds(p),
            "half telescope at p=" + std::to_string(p));
    tally(sc::wz::full_telescope_holds(p),
          "full telescope at p=" + std::to_string(p));
  }

  std::cout << "wz checks: " << checked << ", failures: " << failed << "\n";
  return failed == 0 ? kExitPass : kExitFail;
}

int run_identities(long nmax) {
  if (nmax < 1) {
    std::cerr << "nmax must be positive\n";
    return kExitUsage;
  }
  namespace id = sc::identities;
  long checked = 0, failed = 0;
  auto tally = [&](bool ok, const std::string& what, long n) {
    ++checked;
    if (!ok) {
      ++failed;
      std::cout << "FAIL  " << what << " at n=" << n << "\n";
    }
  };
  for (long n = 1; n <= nmax; ++n) {
    tally(id::h1_lhs(n) == id::h1_rhs(n), "first identity", n);
    tally(id::h2_lhs(n) == id::h2_rhs(n), "second identity", n);
    tally(id::recurrence_h1_holds(n, id::h1_lhs), "first recurrence (lhs)",
          n);
    tally(id::recurrence_h1_holds(n, id::h1_rhs), "first recurrence (rhs)",
          n);
    tally(id::recurrence_h2_holds(n, id::h2_lhs), "second recurrence (lhs)",
          n);
    tally(id::recurrence_h2_holds(n, id::h2_rhs), "second recurrence (rhs)",
          n);
  }
  std::cout << "identity checks: " << checked << ", failures: " << failed
            << "\n";
  return failed == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercheck: exact verification of a catalog of prime-power "
               "congruences, hypergeometric pair identities, and finite "
               "combinatorial identities"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "print the congruence catalog");
  std::string list_format = "text";
  list_cmd->add_option("--format", list_format, "text|json");

  auto* verify_cmd =
      app.add_subcommand("verify", "sweep catalog entries over a prime range");
  VerifyArgs vargs;
  verify_cmd->add_option("--primes", vargs.primes,
                         "inclusive prime range A..B");
  verify_cmd->add_option("--ids", vargs.ids,
                         "comma-separated entry ids, or 'all'");
  verify_cmd->add_option("--engine", vargs.engine, "exact|fast|both");
  verify_cmd->add_option("--jobs", vargs.jobs, "worker threads");
  verify_cmd->add_option("--format", vargs.format, "text|json|csv");
  verify_cmd->add_option("--out", vargs.out_path,
                         "output path (default stdout)");
  verify_cmd->add_flag("--include-skips", vargs.include_skips,
                       "include skipped rows in CSV/JSON output");
  verify_cmd->add_flag("--timings", vargs.timings,
                       "emit measured per-check timings (reports are no "
                       "longer byte-stable)");

  auto* wz_cmd = app.add_subcommand(
      "wz", "grid-check the pair equation, closed forms and telescopes");
  long nmax = 0, kmax = 0, pmax = 0;
  wz_cmd->add_option("--nmax", nmax, "grid rows")->required();
  wz_cmd->add_option("--kmax", kmax, "grid columns")->required();
  wz_cmd->add_option("--pmax", pmax, "telescope prime bound")->required();

  auto* id_cmd =
      app.add_subcommand("identities", "check the finite identities");
  long id_nmax = 0;
  id_cmd->add_option("--nmax", id_nmax, "upper index bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list_cmd->parsed()) return run_list(list_format);
    if (verify_cmd->parsed()) return run_verify(vargs);
    if (wz_cmd->parsed()) return run_wz(nmax, kmax, pmax);
    if (id_cmd->parsed()) return run_identities(id_nmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

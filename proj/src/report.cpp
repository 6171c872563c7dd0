#include <json.hpp>

#include <sstream>

#include "sc/catalog.hpp"

namespace sc::catalog {

namespace {

std::string pass_word(const CheckResult& r) {
  if (r.skipped) return "skip";
  return r.pass ? "pass" : "FAIL";
}

std::int64_t reported_elapsed(const CheckResult& r, bool with_timings) {
  return with_timings ? r.elapsed_us : 0;
}

}  // namespace

std::string render(const Report& report, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case Format::text: {
      // Text reports always show skips; --include-skips only widens CSV/JSON.
      for (const CheckResult& r : report.rows) {
        out << r.entry_id << "  p=" << r.prime << "  mod p^" << r.exponent
            << "  ";
        if (r.skipped) {
          out << "skip (below prime floor)";
        } else {
          out << "lhs=" << r.lhs.get_str() << " rhs=" << r.rhs.get_str()
              << "  " << pass_word(r) << "  [" << engine_name(r.engine)
              << "]";
          if (options.with_timings) out << "  " << r.elapsed_us << "us";
          if (!r.note.empty()) out << "  ! " << r.note;
        }
        out << "\n";
      }
      if (!report.mismatches.empty()) {
        out << "engine mismatches:\n";
        for (const Mismatch& m : report.mismatches)
          out << "  " << m.entry_id << " p=" << m.prime << "\n";
      }
      out << "checked " << report.checked << ", failures " << report.failures
          << ", skipped " << report.skips << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["rows"] = nlohmann::json::array();
      for (const CheckResult& r : report.rows) {
        if (r.skipped && !options.include_skips) continue;
        nlohmann::json row;
        row["entry_id"] = r.entry_id;
        row["prime"] = r.prime;
        row["exponent"] = r.exponent;
        row["lhs"] = r.skipped ? "" : r.lhs.get_str();
        row["rhs"] = r.skipped ? "" : r.rhs.get_str();
        if (r.skipped)
          row["pass"] = "skip";
        else
          row["pass"] = r.pass;
        row["engine"] = std::string(engine_name(r.engine));
        row["elapsed_us"] = reported_elapsed(r, options.with_timings);
        doc["rows"].push_back(std::move(row));
      }
      doc["mismatches"] = nlohmann::json::array();
      for (const Mismatch& m : report.mismatches)
        doc["mismatches"].push_back({{"entry_id", m.entry_id},
                                     {"prime", m.prime}});
      doc["checked"] = report.checked;
      doc["failures"] = report.failures;
      doc["skipped"] = report.skips;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "entry_id,prime,exponent,lhs,rhs,pass,engine,elapsed_us\n";
      for (const CheckResult& r : report.rows) {
        if (r.skipped && !options.include_skips) continue;
        out << r.entry_id << "," << r.prime << "," << r.exponent << ",";
        if (r.skipped) {
          out << ",,skip," << engine_name(r.engine) << ",0\n";
        } else {
          out << r.lhs.get_str() << "," << r.rhs.get_str() << ","
              << (r.pass ? "true" : "false") << "," << engine_name(r.engine)
              << "," << reported_elapsed(r, options.with_timings) << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

std::string render_registry(Format format) {
  std::ostringstream out;
  if (format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Entry& e : registry()) {
      nlohmann::json row;
      row["id"] = e.id;
      row["description"] = e.description;
      row["statement"] = e.statement;
      row["min_prime"] = e.min_prime;
      row["exponent"] = e.exponent;
      row["family"] = e.family;
      row["exact_identity"] = e.exact_identity;
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << "\n";
    return out.str();
  }
  for (const Entry& e : registry()) {
    out << e.id << "  mod p^" << e.exponent << "  min_prime " << e.min_prime;
    if (!e.family.empty()) out << "  [" << e.family << "]";
    out << "  " << e.description << "\n      " << e.statement << "\n";
  }
  return out.str();
}

}  // namespace sc::catalog

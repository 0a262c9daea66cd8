#include "ybx/verify/report.hpp"

#include <iomanip>
#include <sstream>

namespace ybx {

const char* to_string(Identity identity) {
  switch (identity) {
    case Identity::braid:
      return "braid";
    case Identity::qybe:
      return "qybe";
    case Identity::colored:
      return "colored";
    case Identity::wxz:
      return "wxz";
    case Identity::inverse_roundtrip:
      return "inverse-roundtrip";
    case Identity::algebra_axioms:
      return "algebra-axioms";
    case Identity::super_axioms:
      return "super-axioms";
    case Identity::matrix_display:
      return "matrix-display";
  }
  return "unknown";
}

const char* to_string(Mode mode) { return mode == Mode::symbolic ? "symbolic" : "sampled"; }

const char* to_string(Status status) { return status == Status::pass ? "pass" : "fail"; }

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << to_string(report.identity) << " [" << to_string(report.mode)
      << "]: " << (report.passed() ? "PASS" : "FAIL");
  out << " (" << std::fixed << std::setprecision(3)
      << std::chrono::duration<double>(report.elapsed).count() << " s)\n";
  for (const auto& [key, value] : report.notes) out << "  " << key << ": " << value << "\n";
  for (const auto& check : report.checks) {
    out << "  " << (check.status == Status::pass ? "ok    " : "FAILED") << " " << check.label << "\n";
  }
  if (report.mode == Mode::sampled) {
    out << "  samples: " << report.samples_evaluated << " evaluated, " << report.samples_skipped
        << " skipped\n";
  }
  if (report.witness) {
    const Witness& w = *report.witness;
    out << "  witness: " << w.condition;
    if (w.entry) out << " at entry (" << w.entry->first << ", " << w.entry->second << ")";
    if (!w.value.empty()) out << " = " << w.value;
    if (!w.indices.empty()) {
      out << " indices (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) out << (i ? ", " : "") << w.indices[i];
      out << ")";
    }
    if (!w.point.empty()) {
      out << " at {";
      for (std::size_t i = 0; i < w.point.size(); ++i) {
        out << (i ? ", " : "") << w.point[i].first << ": " << w.point[i].second;
      }
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ybx

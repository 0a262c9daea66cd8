#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

enum class Identity {
  braid,
  qybe,
  colored,
  wxz,
  inverse_roundtrip,
  algebra_axioms,
  super_axioms,
  matrix_display,
};

enum class Mode { symbolic, sampled };
enum class Status { pass, fail };

const char* to_string(Identity identity);
const char* to_string(Mode mode);
const char* to_string(Status status);

/// Where a check failed: a nonzero defect entry, a sample point, or the
/// basis indices of a violated axiom.
struct Witness {
  std::string condition;
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  std::string value;
  std::vector<std::pair<std::string, std::string>> point;
  std::vector<std::size_t> indices;
};

/// One named sub-condition of a report (e.g. "[W,X,X] = 0").
struct Check {
  std::string label;
  Status status;
};

struct VerificationReport {
  Identity identity = Identity::braid;
  Mode mode = Mode::symbolic;
  Status status = Status::pass;
  std::optional<Witness> witness;  // present iff status == fail
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  std::size_t samples_evaluated = 0;
  std::size_t samples_skipped = 0;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return status == Status::pass; }
  void add_note(std::string key, std::string value) {
    notes.emplace_back(std::move(key), std::move(value));
  }
};

/// Multi-line human-readable summary.
std::string to_text(const VerificationReport& report);

}  // namespace ybx

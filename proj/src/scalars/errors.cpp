#include "ybx/errors.hpp"

namespace ybx {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::associativity:
      return "associativity";
    case Axiom::unit:
      return "unit";
    case Axiom::grading:
      return "grading";
    case Axiom::antisymmetry:
      return "antisymmetry";
    case Axiom::jacobi:
      return "jacobi";
  }
  return "unknown";
}

namespace {

std::string describe(Axiom axiom, const std::vector<std::size_t>& witness, const std::string& detail) {
  std::string out = std::string(to_string(axiom)) + " violation at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(witness[i]);
  }
  out += ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<std::size_t> witness, const std::string& detail)
    : Error(describe(axiom, witness, detail)), axiom_(axiom), witness_(std::move(witness)) {}

}  // namespace ybx

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ybx/algebra/algebra.hpp"
#include "ybx/lie_super/superalgebra.hpp"
#include "ybx/tensor/operator.hpp"
#include "ybx/verify/report.hpp"

namespace ybx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAlgebraFormat = "ybx.algebra.v1";
inline constexpr const char* kSuperalgebraFormat = "ybx.superalgebra.v1";
inline constexpr const char* kOperatorFormat = "ybx.operator.v1";
inline constexpr const char* kReportFormat = "ybx.report.v1";

/// Structure tables, units and matrices hold scalars as strings in the
/// scalar grammar. Readers throw SchemaError naming the offending field;
/// a missing "format" member is accepted.
struct AlgebraTable {
  std::size_t dim = 0;
  StructureTable structure;
  Coordinates unit;
  std::vector<std::string> labels;
};

struct SuperalgebraTable {
  std::size_t dim = 0;
  std::vector<int> degree;
  StructureTable bracket;
  std::vector<std::string> labels;
};

/// Parse without shape or axiom validation.
AlgebraTable algebra_table_from_json(const Json& doc);
SuperalgebraTable superalgebra_table_from_json(const Json& doc);

Json to_json(const Algebra& algebra);
Algebra algebra_from_json(const Json& doc);

Json to_json(const LieSuperalgebra& L);
LieSuperalgebra superalgebra_from_json(const Json& doc);

Json to_json(const Operator2& op);
Operator2 operator_from_json(const Json& doc);

/// Elapsed time is left out unless asked for, so reports of identical runs
/// are byte-identical.
Json to_json(const VerificationReport& report, bool include_elapsed = false);

/// Reads and parses a JSON file. Throws FileError or SchemaError.
Json read_json_file(const std::filesystem::path& path);

Algebra load_algebra(const std::filesystem::path& path);
LieSuperalgebra load_superalgebra(const std::filesystem::path& path);
Operator2 load_operator(const std::filesystem::path& path);

}  // namespace ybx

#include "ybx/io/json_io.hpp"

#include <fstream>

#include "ybx/errors.hpp"

namespace ybx {

namespace {

std::string where(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing member \"") + key + "\"");
  return *it;
}

void check_format(const Json& doc, const char* expected) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  auto it = doc.find("format");
  if (it == doc.end()) return;
  if (!it->is_string() || it->get<std::string>() != expected) {
    throw SchemaError(std::string("unsupported format ") + it->dump() + ", expected \"" + expected + "\"");
  }
}

std::size_t read_dim(const Json& doc) {
  const Json& d = member(doc, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
    throw SchemaError("\"dim\" must be a positive integer");
  }
  return d.get<std::size_t>();
}

ParamScalar read_scalar(const Json& v, const std::string& field) {
  try {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return ParamScalar(Ratio(v.dump()));
  } catch (const Error& e) {
    throw SchemaError(field + ": " + e.what());
  }
  throw SchemaError(field + " must be a scalar string");
}

std::vector<ParamScalar> read_vector(const Json& v, const std::string& field) {
  if (!v.is_array()) throw SchemaError(field + " must be an array");
  std::vector<ParamScalar> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_scalar(v[i], where(field, i)));
  return out;
}

StructureTable read_table(const Json& v, const std::string& field) {
  if (!v.is_array()) throw SchemaError(field + " must be an array");
  StructureTable out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& row = v[i];
    if (!row.is_array()) throw SchemaError(where(field, i) + " must be an array");
    auto& out_row = out.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      out_row.push_back(read_vector(row[j], where(where(field, i), j)));
    }
  }
  return out;
}

std::vector<std::string> read_labels(const Json& doc) {
  auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array()) throw SchemaError("\"labels\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : *it) {
    if (!l.is_string()) throw SchemaError("\"labels\" must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

Json write_vector(const std::vector<ParamScalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json write_table(const StructureTable& t) {
  Json out = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(write_vector(cell));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json to_json(const Algebra& algebra) {
  Json doc;
  doc["format"] = kAlgebraFormat;
  doc["dim"] = algebra.dim();
  doc["labels"] = algebra.labels();
  doc["unit"] = write_vector(algebra.unit());
  doc["structure"] = write_table(algebra.structure());
  return doc;
}

AlgebraTable algebra_table_from_json(const Json& doc) {
  check_format(doc, kAlgebraFormat);
  AlgebraTable t;
  t.dim = read_dim(doc);
  t.structure = read_table(member(doc, "structure"), "structure");
  t.unit = read_vector(member(doc, "unit"), "unit");
  t.labels = read_labels(doc);
  return t;
}

Algebra algebra_from_json(const Json& doc) {
  AlgebraTable t = algebra_table_from_json(doc);
  return make_algebra(t.dim, std::move(t.structure), std::move(t.unit), std::move(t.labels));
}

Json to_json(const LieSuperalgebra& L) {
  Json doc;
  doc["format"] = kSuperalgebraFormat;
  doc["dim"] = L.dim();
  doc["labels"] = L.labels();
  doc["degree"] = L.degrees();
  doc["structure"] = write_table(L.bracket_table());
  return doc;
}

SuperalgebraTable superalgebra_table_from_json(const Json& doc) {
  check_format(doc, kSuperalgebraFormat);
  SuperalgebraTable t;
  t.dim = read_dim(doc);
  const Json& deg = member(doc, "degree");
  if (!deg.is_array()) throw SchemaError("\"degree\" must be an array of 0/1");
  for (const auto& d : deg) {
    if (!d.is_number_integer()) throw SchemaError("\"degree\" must be an array of 0/1");
    t.degree.push_back(d.get<int>());
  }
  t.bracket = read_table(member(doc, "structure"), "structure");
  t.labels = read_labels(doc);
  return t;
}

LieSuperalgebra superalgebra_from_json(const Json& doc) {
  SuperalgebraTable t = superalgebra_table_from_json(doc);
  return make_superalgebra(t.dim, std::move(t.degree), std::move(t.bracket), std::move(t.labels));
}

Json to_json(const Operator2& op) {
  Json doc;
  doc["format"] = kOperatorFormat;
  doc["dim"] = op.dim();
  doc["legs"] = 2;
  Json rows = Json::array();
  for (std::size_t i = 0; i < op.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < op.size(); ++j) row.push_back(op(i, j).to_string());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

Operator2 operator_from_json(const Json& doc) {
  check_format(doc, kOperatorFormat);
  const std::size_t dim = read_dim(doc);
  if (auto it = doc.find("legs"); it != doc.end() && *it != 2) {
    throw SchemaError("only two-leg operators are supported");
  }
  const Json& m = member(doc, "matrix");
  if (!m.is_array()) throw SchemaError("\"matrix\" must be an array of rows");
  std::vector<std::vector<ParamScalar>> rows;
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(read_vector(m[i], where("matrix", i)));
  const std::size_t size = dim * dim;
  if (rows.size() != size) throw SchemaError("\"matrix\" must have dim^2 rows");
  for (std::size_t i = 0; i < size; ++i) {
    if (rows[i].size() != size) throw SchemaError(where("matrix", i) + " must have dim^2 entries");
  }
  return Operator2(dim, Matrix::from_rows(rows));
}

Json to_json(const VerificationReport& report, bool include_elapsed) {
  Json doc;
  doc["format"] = kReportFormat;
  doc["identity"] = to_string(report.identity);
  doc["mode"] = to_string(report.mode);
  doc["status"] = to_string(report.status);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"label", c.label}, {"status", to_string(c.status)}});
  }
  doc["checks"] = std::move(checks);
  if (report.witness) {
    const Witness& w = *report.witness;
    Json wj;
    wj["condition"] = w.condition;
    if (w.entry) wj["entry"] = Json::array({w.entry->first, w.entry->second});
    if (!w.value.empty()) wj["value"] = w.value;
    if (!w.point.empty()) {
      Json point = Json::object();
      for (const auto& [k, v] : w.point) point[k] = v;
      wj["point"] = std::move(point);
    }
    if (!w.indices.empty()) wj["indices"] = w.indices;
    doc["witness"] = std::move(wj);
  } else {
    doc["witness"] = nullptr;
  }
  if (report.mode == Mode::sampled) {
    doc["samples"] = Json{{"evaluated", report.samples_evaluated}, {"skipped", report.samples_skipped}};
  }
  if (!report.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : report.notes) notes[k] = v;
    doc["notes"] = std::move(notes);
  }
  if (include_elapsed) {
    doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path.string() + ": invalid JSON: " + e.what());
  }
}

namespace {

template <class F>
auto load(const std::filesystem::path& path, F parse) {
  const Json doc = read_json_file(path);
  try {
    return parse(doc);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace

Algebra load_algebra(const std::filesystem::path& path) {
  return load(path, algebra_from_json);
}

LieSuperalgebra load_superalgebra(const std::filesystem::path& path) {
  return load(path, superalgebra_from_json);
}

Operator2 load_operator(const std::filesystem::path& path) {
  return load(path, operator_from_json);
}

}  // namespace ybx

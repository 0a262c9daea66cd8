#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ybx/cli/cli.hpp"
#include "ybx/io/json_io.hpp"

namespace {

using ybx::Matrix;
using ybx::ParamScalar;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result ybx_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ybx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ParamScalar var(const char* name) { return ParamScalar::indeterminate(name); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ybx_test_cli_" + name);
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto path = temp_path(name);
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliExamples, ConstantCaseOne) {
  const Result r = ybx_run({"check", "constant", "--algebra", "fixtures/quadratic.json", "--alpha", "a",
                            "--beta", "b", "--gamma", "a"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("braid [symbolic]: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("case: i\n"), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(CliExamples, ExportSigmaMatrix) {
  const Result r = ybx_run({"export", "matrix", "--family", "colored", "--algebra", "fixtures/sigma.json",
                            "--symbolic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const ParamScalar p = var("p"), q = var("q"), u = var("u"), v = var("v"), s = var("sigma");
  const Matrix printed = Matrix::from_rows({{q * u - p * v, 0, 0, s * (q + p) * (u - v)},
                                            {0, p * (u - v), (q - p) * v, 0},
                                            {0, (q - p) * u, q * (u - v), 0},
                                            {0, 0, 0, q * v - p * u}});
  EXPECT_EQ(r.out, ybx::format_matrix(printed, ybx::tensor_labels({"1", "x"})));
}

TEST(CliExamples, WxzListsFourConditions) {
  const Result r = ybx_run({"check", "wxz", "--algebra", "fixtures/quadratic.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* c : {"[W,W,W] = 0", "[Z,Z,Z] = 0", "[W,X,X] = 0", "[X,X,Z] = 0"}) {
    EXPECT_NE(r.out.find(std::string("ok     ") + c), std::string::npos) << c;
  }
}

TEST(CliCheck, ConstantOutsideTheCasesFails) {
  const Result r = ybx_run({"check", "constant", "--alpha", "1", "--beta", "2", "--gamma", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("case: none"), std::string::npos);
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST(CliCheck, ConstantCasesTwoAndThree) {
  const Result two = ybx_run({"check", "constant", "--alpha", "2", "--beta", "3", "--gamma", "3"});
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("case: ii"), std::string::npos);
  const Result three = ybx_run({"check", "constant", "--alpha", "0", "--beta", "0", "--gamma", "5"});
  EXPECT_EQ(three.code, 0);
  EXPECT_NE(three.out.find("case: iii"), std::string::npos);
}

TEST(CliCheck, ColoredSymbolicAndSampled) {
  EXPECT_EQ(ybx_run({"check", "colored", "--algebra", "fixtures/sigma.json"}).code, 0);
  const Result r = ybx_run({"check", "colored", "--algebra", "fixtures/upper-triangular.json", "--samples", "10",
                            "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[sampled]"), std::string::npos);
}

TEST(CliCheck, SuperAndSplitCenter) {
  EXPECT_EQ(ybx_run({"check", "super", "--superalgebra", "fixtures/gl11.json"}).code, 0);
  EXPECT_EQ(ybx_run({"check", "super", "--superalgebra", "fixtures/heisenberg-super.json", "--alpha", "2"}).code,
            0);
  EXPECT_EQ(ybx_run({"check", "split-center", "--samples", "5"}).code, 0);
}

TEST(CliCheck, OperatorFileAgainstBothEquations) {
  ybx::Json doc = ybx::to_json(ybx::twist(2));
  const auto path = write_temp("twist.json", doc.dump());
  EXPECT_EQ(ybx_run({"check", "constant", "--operator", path.string(), "--equation", "braid"}).code, 0);
  doc["matrix"][0][0] = "2";
  std::ofstream(path) << doc.dump();
  EXPECT_EQ(ybx_run({"check", "constant", "--operator", path.string(), "--equation", "qybe"}).code, 1);
  std::filesystem::remove(path);
}

TEST(CliErrors, UsageAndInput) {
  const Result missing = ybx_run({"check", "wxz", "--algebra", "fixtures/nope.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("ybx: error:"), std::string::npos);
  EXPECT_EQ(ybx_run({"check", "wxz", "--no-such-flag"}).code, 2);
  EXPECT_EQ(ybx_run({}).code, 2);
  EXPECT_EQ(ybx_run({"check", "constant", "--alpha", "1/0"}).code, 2);
  EXPECT_EQ(ybx_run({"export", "matrix", "--family", "nonsense"}).code, 2);
  EXPECT_EQ(ybx_run({"check", "colored", "--format", "xml"}).code, 2);
  EXPECT_EQ(ybx_run({"--help"}).code, 0);
}

TEST(CliValidate, FixturesAndCorruptedTables) {
  EXPECT_EQ(ybx_run({"validate", "algebra", "fixtures/upper-triangular.json"}).code, 0);
  EXPECT_EQ(ybx_run({"validate", "superalgebra", "fixtures/gl11.json"}).code, 0);

  ybx::Json doc = ybx::read_json_file("fixtures/upper-triangular.json");
  doc["unit"] = ybx::Json::array({"1", "0", "0"});
  const auto bad_unit = write_temp("bad-unit.json", doc.dump());
  const Result r = ybx_run({"validate", "algebra", bad_unit.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("unit"), std::string::npos);

  ybx::Json sup = ybx::read_json_file("fixtures/gl11.json");
  sup["structure"][2][3] = ybx::Json::array({"1", "0", "0", "0"});
  const auto bad_sup = write_temp("bad-sup.json", sup.dump());
  EXPECT_EQ(ybx_run({"validate", "superalgebra", bad_sup.string()}).code, 1);

  const auto broken = write_temp("broken.json", "[1, 2");
  EXPECT_EQ(ybx_run({"validate", "algebra", broken.string()}).code, 2);
  for (const auto& p : {bad_unit, bad_sup, broken}) std::filesystem::remove(p);
}

TEST(CliInvert, FamilyAndSingular) {
  const Result r = ybx_run({"invert", "--family", "dn", "--alpha", "2", "--beta", "3", "--gamma", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1/2"), std::string::npos);
  EXPECT_EQ(ybx_run({"invert", "--family", "dn", "--alpha", "0", "--beta", "0", "--gamma", "0"}).code, 1);
}

TEST(CliOutput, JsonIsDeterministicAndOutWritesFile) {
  const std::vector<std::string> args{"check", "colored", "--algebra", "fixtures/upper-triangular.json",
                                      "--samples", "8", "--seed", "17", "--format", "json"};
  const Result a = ybx_run(args), b = ybx_run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const ybx::Json doc = ybx::Json::parse(a.out);
  EXPECT_EQ(doc["format"], "ybx.run.v1");
  EXPECT_EQ(doc["status"], "pass");

  const auto path = temp_path("out.json");
  std::vector<std::string> with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  EXPECT_EQ(ybx_run(with_out).code, 0);
  EXPECT_EQ(slurp(path), a.out);
  std::filesystem::remove(path);
}

TEST(CliExport, JsonRoundTrips) {
  const Result r = ybx_run({"export", "matrix", "--family", "w", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const ybx::Operator2 w = ybx::operator_from_json(ybx::Json::parse(r.out));
  EXPECT_EQ(w.dim(), 2u);
}

}  // namespace

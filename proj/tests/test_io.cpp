#include <gtest/gtest.h>

#include <filesystem>

#include "finduality/dot.hpp"
#include "finduality/io.hpp"

using namespace finduality;

namespace {

std::string sample(const std::string& name) { return std::string(FD_SAMPLES_DIR) + "/" + name; }

ErrorCode code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(Io, SamplesAreCanonical) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FD_SAMPLES_DIR)) {
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".json" || name.rfind("invalid", 0) == 0) continue;
    const std::string text = read_file(entry.path().string());
    EXPECT_EQ(emit(parse(text)), text) << name;
    ++seen;
  }
  EXPECT_GE(seen, 10);
}

TEST(Io, RoundTripInstances) {
  const std::vector<Instance> xs = {catalog::C3(), catalog::N5(), catalog::SIER(), catalog::P3(),
                                    FrithPair::full(catalog::C3()), catalog::SIER_BI(), catalog::BF332(),
                                    PervinMap::identity(catalog::SIER())};
  for (const auto& x : xs) {
    const std::string s = emit(x);
    EXPECT_EQ(emit(parse(s)), s) << kind_of(x);
    EXPECT_STREQ(kind_of(parse(s)), kind_of(x));
  }
  const auto P = std::get<PervinSpace>(parse(emit(catalog::SIER())));
  EXPECT_EQ(P, catalog::SIER());
  EXPECT_EQ(P.ground, catalog::SIER().ground);
}

TEST(Io, Kinds) {
  EXPECT_STREQ(kind_of(parse_file(sample("sier.json"))), "pervin");
  EXPECT_STREQ(kind_of(parse_file(sample("n5.json"))), "lattice");
  EXPECT_STREQ(kind_of(parse_file(sample("biframe_332.json"))), "biframe");
  EXPECT_STREQ(kind_of(parse_file(sample("sier_unit_map.json"))), "pervin_map");
}

TEST(Io, Errors) {
  try {
    parse_file(sample("invalid_missing_empty.json"));
    FAIL() << "expected InvariantViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
  }
  EXPECT_THROW(parse_file(sample("invalid_schema.json")), Error);
  EXPECT_EQ(code_of("{\"kind\": \"pervin\", \"ground\": [\"a\"]"), ErrorCode::SchemaError);
  EXPECT_EQ(code_of("{\"kind\": \"torus\"}"), ErrorCode::SchemaError);
  EXPECT_EQ(code_of("{\"kind\": \"pervin\", \"ground\": [\"a\"], \"sets\": [[], [3]]}"), ErrorCode::SchemaError);
  EXPECT_EQ(code_of("[1, 2]"), ErrorCode::SchemaError);
  EXPECT_EQ(code_of("{\"kind\": \"lattice\", \"elements\": [\"0\", \"a\", \"b\"], \"covers\": [[0, 1], [0, 2]]}"),
            ErrorCode::NotALattice);
}

TEST(Io, SyntaxErrorsCarryPosition) {
  try {
    parse("{\n  \"kind\": \"pervin\",\n  oops\n}");
    FAIL() << "expected SchemaError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

#include <gtest/gtest.h>

#include <atomic>
#include <sstream>

#include "fracporo/app/scenario.hpp"
#include "fracporo/app/synthetic_field.hpp"
#include "fracporo/app/toml_lite.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/mesh/mesh_io.hpp"
#include "fracporo/parallel.hpp"
#include "support/fixtures.hpp"

namespace fracporo {
namespace {

TomlDocument parse_toml(const std::string& text) {
  std::istringstream in(text);
  return TomlDocument::parse(in);
}

TEST(TomlLite, ReadsTablesKeysAndValues) {
  const TomlDocument d = parse_toml(R"(
top = 3          # comment
[a]
flag = true
x = -1.5e-3
name = "tab\tbed # not a comment"
list = [1, 2.5,
        3]
b.c = "dotted"
[a.sub]
n = 7
)");
  EXPECT_EQ(d.find("top")->as_integer("top"), 3);
  EXPECT_TRUE(d.find("a.flag")->as_bool("a.flag"));
  EXPECT_DOUBLE_EQ(d.find("a.x")->as_number("a.x"), -1.5e-3);
  EXPECT_EQ(d.find("a.name")->as_string("a.name"), "tab\tbed # not a comment");
  ASSERT_EQ(d.find("a.list")->as_array("a.list").size(), 3u);
  EXPECT_EQ(d.find("a.b.c")->as_string("a.b.c"), "dotted");
  EXPECT_EQ(d.find("a.sub.n")->as_integer("a.sub.n"), 7);
  EXPECT_EQ(d.find("missing"), nullptr);
  EXPECT_EQ(d.tables(), (std::vector<std::string>{"a", "a.sub"}));
  EXPECT_THROW(d.find("a.x")->as_integer("a.x"), ValidationError);
  EXPECT_THROW(d.find("a.name")->as_number("a.name"), ValidationError);
}

TEST(TomlLite, RejectsUnsupportedSyntax) {
  for (const char* text : {"a = {x = 1}\n", "[[runs]]\n", "a = 'literal'\n", "a = \"\"\"multi\"\"\"\n",
                           "a = 1\na = 2\n", "[t]\n[t]\n", "a = inf\n", "a = nan\n", "a = [1, 2\n", "= 3\n",
                           "a = \"unterminated\n"})
    EXPECT_THROW(parse_toml(text), ParseError) << text;
}

TEST(Scenario, ShippedSeedScenario) {
  const Scenario s = parse_scenario(test::data_path("scenarios/seed0.toml"));
  EXPECT_DOUBLE_EQ(s.final_time, 86400.0);
  EXPECT_EQ(s.steps, 10);
  EXPECT_DOUBLE_EQ(s.tau(), 8640.0);
  EXPECT_DOUBLE_EQ(s.poisson, 0.3);
  EXPECT_EQ(s.coarse_nx, 10);
  EXPECT_EQ(s.alpha_sweep, (std::vector<double>{0.8, 0.9, 1.0}));
  EXPECT_EQ(s.basis_sweep, (std::vector<int>{1, 2, 4, 8, 12, 16}));
  ASSERT_EQ(s.continua.size(), 2u);
  EXPECT_DOUBLE_EQ(s.continua[0].biot, 0.1);
  EXPECT_DOUBLE_EQ(s.continua[0].storage, 0.1);
  EXPECT_EQ(s.continua[1].support, Support::kFracture);
  EXPECT_DOUBLE_EQ(s.continua[1].biot, 0.0);
}

TEST(Scenario, MulticontinuumExchangeFollowsPermeability) {
  const Scenario s = parse_scenario(test::data_path("scenarios/multicontinuum.toml"));
  EXPECT_DOUBLE_EQ(s.continua[0].biot, 0.1);
  EXPECT_DOUBLE_EQ(s.continua[1].biot, 0.1);
  const FineMesh mesh = load_fine_mesh(test::data_path("meshes/fractured_32.mesh"));
  const PoroModel model = build_model(s, mesh);
  const int two = s.continuum_index("2");
  bool found = false;
  for (const auto& x : model.exchanges) {
    if (x.first + x.second != s.continuum_index("1") + two || model.continua[x.first].is_fracture() ||
        model.continua[x.second].is_fracture())
      continue;
    found = true;
    ASSERT_EQ(x.eta.size(), static_cast<std::size_t>(mesh.num_triangles()));
    for (int t = 0; t < mesh.num_triangles(); ++t) EXPECT_DOUBLE_EQ(x.eta[t], 5.0 * model.continua[two].permeability[t]);
  }
  EXPECT_TRUE(found);
}

class InlineScenario : public ::testing::Test {
 protected:
  std::string base = R"(schema_version = 1
[mesh]
path = "../meshes/fractured_32.mesh"
[coarse]
nx = 4
ny = 4
[time]
final_time = 1.0
steps = 2
[elasticity]
youngs = 1.0
[continuum.m]
biot_modulus = 10.0
permeability = 1.0
biot_coefficient = 0.1
[boundary]
pressure_sides = "L"
)";
  Scenario parse(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in, test::data_path("scenarios"));
  }
};

TEST_F(InlineScenario, DefaultsToClassicalOrders) {
  const Scenario s = parse(base);
  const FineMesh mesh = load_fine_mesh(s.mesh_path.string());
  const PoroModel model = build_model(s, mesh);
  EXPECT_DOUBLE_EQ(model.continua[0].alpha, 1.0);
  EXPECT_DOUBLE_EQ(model.continua[0].beta, 1.0);
  EXPECT_TRUE(s.alpha_sweep.empty());
  const PoroModel swept = build_model(s, mesh, 0.6);
  EXPECT_DOUBLE_EQ(swept.continua[0].alpha, 0.6);
  EXPECT_DOUBLE_EQ(swept.continua[0].beta, 0.6);
}

TEST_F(InlineScenario, RejectsInvalidInput) {
  EXPECT_THROW(parse(base + "[output]\nbogus = 1\n"), ValidationError);
  EXPECT_THROW(parse("schema_version = 2\n" + base.substr(base.find('\n') + 1)), ValidationError);
  EXPECT_THROW(parse(base + "[continuum.m2]\nbiot_modulus = 1.0\nstorage = 1.0\npermeability = 1.0\n"),
               ValidationError);
  EXPECT_THROW(parse(base + "[continuum.f]\nkind = \"fracture\"\nstorage = 1.0\npermeability = 1.0\n"
                            "biot_coefficient = 0.1\n"),
               ConfigError);
  EXPECT_THROW(parse(base + "[fractional]\nalpha = 1.5\n"), ConfigError);
  EXPECT_THROW(parse(base + "[multiscale]\nsweep = [2, 1]\n"), ValidationError);
  std::string missing = base;
  missing.replace(missing.find("fractured_32"), 12, "no_such_mesh");
  EXPECT_THROW(parse(missing), ConfigError);
}

TEST_F(InlineScenario, FieldSeedsDependOnLabel) {
  EXPECT_EQ(field_seed(0, "youngs"), field_seed(0, "youngs"));
  EXPECT_NE(field_seed(0, "youngs"), field_seed(0, "permeability.m"));
  EXPECT_NE(field_seed(0, "youngs"), field_seed(1, "youngs"));
}

TEST(SyntheticField, UnitContrastIsConstant) {
  const FineMesh m = test::structured_mesh(10);
  for (double v : generate_synthetic_field(3, m, 1.0, FieldStyle::kLognormalBlobs)) EXPECT_EQ(v, 1.0);
}

TEST(SyntheticField, DeterministicAndSeedDependent) {
  const FineMesh m = test::structured_mesh(16, false, 1.0, 0.2);
  for (FieldStyle style : {FieldStyle::kLognormalBlobs, FieldStyle::kLayered}) {
    const auto a = generate_synthetic_field(1, m, 1000.0, style);
    EXPECT_EQ(a, generate_synthetic_field(1, m, 1000.0, style));
    const auto b = generate_synthetic_field(2, m, 1000.0, style);
    int differ = 0;
    for (std::size_t t = 0; t < a.size(); ++t) differ += a[t] != b[t];
    EXPECT_GE(differ, static_cast<int>(a.size() / 100));
    const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    EXPECT_NEAR(*lo, 1.0, 1e-12);
    EXPECT_NEAR(*hi, 1000.0, 1e-9);
  }
}

TEST(SyntheticField, RejectsBadArguments) {
  const FineMesh m = test::structured_mesh(4);
  EXPECT_THROW(generate_synthetic_field(0, m, 0.5, FieldStyle::kLayered), DataError);
  EXPECT_THROW(parse_field_style("marble"), ValidationError);
  EXPECT_EQ(parse_field_style("layered"), FieldStyle::kLayered);
}

TEST(ParallelFor, WritesEverySlotAndRethrowsFirstError) {
  std::vector<int> out(100, 0);
  parallel_for(100, 4, [&](int i) { out[i] = i * i; });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(out[i], i * i);
  std::atomic<int> visited{0};
  try {
    parallel_for(50, 3, [&](int i) {
      ++visited;
      if (i == 7 || i == 31) throw std::runtime_error("item " + std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "item 7");
  }
  EXPECT_EQ(visited.load(), 50);
}

}  // namespace
}  // namespace fracporo

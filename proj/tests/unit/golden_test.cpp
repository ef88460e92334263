#include "report/commands.hpp"
#include "superlie/builders.hpp"
#include "twistor/twistor.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace twistlab;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(TWISTLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(f) << name;
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string run_report(const std::string& cmd, const Json& args) {
  return report::run_command(cmd, args, 1).to_json().dump(2) + "\n";
}

}  // namespace

TEST(Golden, Reports) {
  EXPECT_EQ(run_report("classify", {{"family", "hol"}}), slurp("classify_hol.json"));
  EXPECT_EQ(run_report("cohomology", {{"family", "hol"}}), slurp("cohomology_hol.json"));
  EXPECT_EQ(run_report("twistor", {{"sections", {"content"}}}), slurp("twistor_content.json"));
}

// Cohomology of each line of the coefficient table, degree by degree, from h_dims.
TEST(Golden, TangentComplexTable) {
  Json g = Json::parse(slurp("tangent_complex.json"));
  auto groups = twistor::field_content_groups();
  ASSERT_EQ(g["lines"].size(), groups.size());
  for (size_t l = 0; l < groups.size(); ++l) {
    const Json& line = g["lines"][l];
    EXPECT_EQ(line["group"], groups[l].name);
    std::vector<size_t> dims(4, 0);
    std::vector<long> starts;
    for (const auto& t : line["terms"]) {
      const std::string b = t["bundle"];
      const long k = std::stol(b.substr(2, b.size() - 3));
      const long shift = t["shift"], rank = t["rank"];
      if (shift == 0) starts.push_back(k);
      auto h = twistor::h_dims(k);
      dims[shift] += h.h0 * rank;
      dims[shift + 1] += h.h1 * rank;
    }
    EXPECT_EQ(starts, groups[l].degrees);
    EXPECT_EQ(Json(dims), g["cohomology_dims"][groups[l].name]) << groups[l].name;
    // Per-degree dims agree with the irrep table.
    std::vector<size_t> from_table(4, 0);
    for (const auto& e : groups[l].content) from_table[e.degree] += twistor::irrep_dim(e.irrep) * e.multiplicity;
    EXPECT_EQ(from_table, dims) << groups[l].name;
  }
}

TEST(Golden, AlgebraJsonRoundTrip) {
  for (const auto& alg : {superlie::build_susy_2d(1, 1), superlie::build_susy_4d(2, superlie::RSym::GL)}) {
    Json j = superlie::to_json(alg);
    auto back = superlie::algebra_from_json(j);
    EXPECT_EQ(superlie::to_json(back).dump(), j.dump());
    EXPECT_EQ(back.dim(), alg.dim());
  }
}

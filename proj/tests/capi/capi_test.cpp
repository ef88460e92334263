#include "twistlab/twistlab.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::ordered_json;

namespace {

struct Session {
  tl_session* s = tl_session_new();
  ~Session() { tl_session_free(s); }
};

struct Result {
  tl_status status;
  std::string text;
  bool has_output;
};

Result run(tl_session* s, const char* cmd, const Json& params) {
  char* out = nullptr;
  tl_status st = tl_run(s, cmd, params.dump().c_str(), &out);
  Result r{st, out ? out : "", out != nullptr};
  tl_string_free(out);
  return r;
}

int cli(const std::string& args) {
  const std::string cmd = std::string("'") + TWISTLAB_CLI_PATH + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CApi, SessionAndErrors) {
  Session s;
  ASSERT_NE(s.s, nullptr);
  EXPECT_STRNE(tl_version(), "");
  EXPECT_STREQ(tl_last_error(s.s), "");
  EXPECT_EQ(tl_session_set_threads(s.s, 0), TL_USAGE);
  EXPECT_STRNE(tl_last_error(s.s), "");
  EXPECT_EQ(tl_session_set_threads(s.s, 4), TL_OK);
  EXPECT_EQ(tl_run(nullptr, "algebra", nullptr, nullptr), TL_USAGE);

  auto r = run(s.s, "nonsense", Json::object());
  EXPECT_EQ(r.status, TL_USAGE);
  EXPECT_FALSE(r.has_output);
  char* out = nullptr;
  EXPECT_EQ(tl_run(s.s, "algebra", "{not json", &out), TL_USAGE);
  EXPECT_EQ(out, nullptr);
  EXPECT_EQ(run(s.s, "algebra", {{"dim", 4}, {"colour", "red"}}).status, TL_USAGE);
}

TEST(CApi, AlgebraCommand) {
  Session s;
  auto r = run(s.s, "algebra", {{"dim", 4}, {"n", 4}, {"rsym", "sl"}});
  ASSERT_EQ(r.status, TL_OK) << tl_last_error(s.s);
  Json j = Json::parse(r.text);
  EXPECT_EQ(j["command"], "algebra");
  EXPECT_EQ(j["result"]["bosonic_dim"], 25);
  EXPECT_EQ(j["result"]["odd_dim"], 16);
  EXPECT_TRUE(j["result"]["jacobi"]["jacobi"].get<bool>());

  j = Json::parse(run(s.s, "algebra", {{"dim", 10}}).text);
  EXPECT_EQ(j["result"]["bosonic_dim"], 55);
  EXPECT_EQ(j["result"]["odd_dim"], 16);

  r = run(s.s, "algebra", {{"dim", 4}, {"n", 9}});
  EXPECT_EQ(r.status, TL_USAGE);
  EXPECT_NE(std::string(tl_last_error(s.s)).find("'n'"), std::string::npos);
  EXPECT_EQ(run(s.s, "algebra", {{"dim", 7}}).status, TL_USAGE);
}

TEST(CApi, Classify) {
  Session s;
  Json j = Json::parse(run(s.s, "classify", {{"family", "hol"}}).text);
  EXPECT_EQ(j["result"]["twist"]["verdict"], "holomorphic");
  EXPECT_EQ(j["result"]["twist"]["image"], Json::array({"∂z̄1", "∂z̄2"}));
  j = Json::parse(run(s.s, "classify", {{"family", "kw"}, {"mu", "1"}, {"nu", "0"}}).text);
  EXPECT_EQ(j["result"]["twist"]["verdict"], "topological");

  auto r = run(s.s, "classify", {{"coeffs", "α1⊗e1 + α1∨⊗e1*"}});
  EXPECT_EQ(r.status, TL_PRECONDITION);
  EXPECT_NE(std::string(tl_last_error(s.s)).find("[Q,Q]"), std::string::npos);
  EXPECT_EQ(run(s.s, "classify", {{"coeffs", "H+"}}).status, TL_USAGE);
  EXPECT_EQ(run(s.s, "classify", {{"family", "kw"}, {"mu", "0"}, {"nu", "0"}}).status, TL_USAGE);
}

TEST(CApi, ScanAndWarnings) {
  Session s;
  EXPECT_EQ(run(s.s, "scan", {{"family", "kw"}, {"points", Json::array()}}).status, TL_USAGE);
  Json j = Json::parse(run(s.s, "scan", {{"family", "kw"}, {"points", "1:0,0:1,1:1,2:3,1:-1"}}).text);
  ASSERT_EQ(j["result"]["rows"].size(), 5u);
  for (const auto& row : j["result"]["rows"]) EXPECT_EQ(row["verdict"], "topological");

  j = Json::parse(run(s.s, "scan", {{"family", "ht_prime"}, {"points", {"1", "2", "-1"}}}).text);
  for (const auto& row : j["result"]["rows"]) EXPECT_EQ(row["image_dim"], 3);

  auto r = run(s.s, "scan", {{"family", "ht"}, {"points", {"0", "1"}}});
  EXPECT_EQ(r.status, TL_OK);
  j = Json::parse(r.text);
  EXPECT_TRUE(j["result"]["rows"][0]["equals_A"].get<bool>());
  bool warned = false;
  for (const auto& c : j["checks"]) warned = warned || c["status"] == "warning";
  EXPECT_TRUE(warned);
}

TEST(CApi, ThreadCountDoesNotChangeOutput) {
  Session a, b;
  tl_session_set_threads(b.s, 8);
  Json p{{"family", "kw"}, {"points", {"1:0", "0:1", "1:1", "1:2", "2:1", "1:-1", "3:5", "-1:4"}}};
  EXPECT_EQ(run(a.s, "scan", p).text, run(b.s, "scan", p).text);
  Json q{{"dim", 2}, {"n1", 4}, {"n2", 4}};
  EXPECT_EQ(run(a.s, "algebra", q).text, run(b.s, "algebra", q).text);
}

TEST(CApi, CohomologyTwistorTable) {
  Session s;
  Json j = Json::parse(run(s.s, "cohomology", {{"family", "hol"}}).text);
  EXPECT_EQ(j["result"]["dims"]["translations"], 2);
  EXPECT_EQ(j["result"]["dims"]["fermionic"], 9);
  j = Json::parse(run(s.s, "twistor", {{"sections", {"content"}}}).text);
  EXPECT_EQ(j["result"]["content"]["groups"].size(), 3u);
  EXPECT_EQ(run(s.s, "twistor", {{"sections", {"e2"}}, {"truncation", 3}}).status, TL_USAGE);

  auto r = run(s.s, "classify", {{"family", "hol"}});
  char* table = nullptr;
  ASSERT_EQ(tl_render_table(s.s, r.text.c_str(), &table), TL_OK);
  std::string t = table;
  tl_string_free(table);
  EXPECT_NE(t.find("verdict: holomorphic"), std::string::npos);
  EXPECT_NE(t.find("PASS"), std::string::npos);
}

TEST(CApi, AlgebraHandle) {
  Session s;
  tl_algebra* a = nullptr;
  ASSERT_EQ(tl_algebra_build(s.s, R"({"dim": 4, "n": 4})", &a), TL_OK);
  std::unique_ptr<tl_algebra, decltype(&tl_algebra_free)> guard(a, tl_algebra_free);
  EXPECT_EQ(tl_algebra_dim(a), 41u);
  EXPECT_EQ(tl_algebra_odd_dim(a), 16u);
  char* out = nullptr;
  ASSERT_EQ(tl_algebra_label(s.s, a, 0, &out), TL_OK);
  EXPECT_STREQ(out, "H+");
  tl_string_free(out);
  EXPECT_EQ(tl_algebra_label(s.s, a, 41, &out), TL_USAGE);
  ASSERT_EQ(tl_algebra_bracket(s.s, a, "α1⊗e1", "α1∨⊗e1*", &out), TL_OK);
  EXPECT_STREQ(out, "∂z̄1");
  tl_string_free(out);
  EXPECT_EQ(tl_algebra_bracket(s.s, a, "nope", "H+", &out), TL_USAGE);
  int ok = 0;
  ASSERT_EQ(tl_algebra_jacobi(s.s, a, &ok), TL_OK);
  EXPECT_EQ(ok, 1);
  ASSERT_EQ(tl_algebra_to_json(s.s, a, &out), TL_OK);
  EXPECT_NO_THROW(Json::parse(out));
  tl_string_free(out);
  tl_algebra* bad = nullptr;
  EXPECT_EQ(tl_algebra_build(s.s, R"({"dim": 4, "n": 9})", &bad), TL_USAGE);
  EXPECT_EQ(bad, nullptr);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("algebra --dim 4 --n 4 --rsym sl"), 0);
  EXPECT_EQ(cli("algebra --dim 4 --n 9"), 2);
  EXPECT_EQ(cli("algebra"), 2);
  EXPECT_EQ(cli("frobnicate"), 2);
  EXPECT_EQ(cli("classify --coeffs 'α1⊗e1 + α1∨⊗e1*'"), 3);
  EXPECT_EQ(cli("classify --family hol --format table"), 0);
  EXPECT_EQ(cli("classify --format xml"), 2);
  EXPECT_EQ(cli("--help"), 0);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "twistlab_out.json";
  std::remove(path.c_str());
  ASSERT_EQ(cli("twistor --berezinian --out '" + path + "'"), 0);
  std::ifstream f(path);
  Json j = Json::parse(f);
  EXPECT_EQ(j["result"]["berezinian"]["degree"], 0);
  EXPECT_TRUE(j["result"]["berezinian"]["super_calabi_yau"].get<bool>());
}

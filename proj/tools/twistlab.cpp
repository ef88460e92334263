#include "twistlab/twistlab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

using Json = nlohmann::ordered_json;

namespace {

struct Session {
  tl_session* s = tl_session_new();
  ~Session() { tl_session_free(s); }
};

struct Output {
  std::string format = "json";
  std::string out;
};

// Options left unset are omitted so the library defaults apply.
void put(Json& params, const char* key, const std::optional<std::string>& v) {
  if (v) params[key] = *v;
}
void put(Json& params, const char* key, const std::optional<long>& v) {
  if (v) params[key] = *v;
}

unsigned threads_from_env() {
  const char* env = std::getenv("TWISTLAB_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) throw CLI::ValidationError("TWISTLAB_THREADS", "must be an integer in [1, 1024]");
  return static_cast<unsigned>(n);
}

int emit(tl_session* s, const std::string& command, const Json& params, const Output& o) {
  char* report = nullptr;
  const tl_status st = tl_run(s, command.c_str(), params.dump().c_str(), &report);
  std::unique_ptr<char, decltype(&tl_string_free)> guard(report, tl_string_free);
  if (!report) {
    std::cerr << "twistlab: " << tl_last_error(s) << '\n';
    return st;
  }
  std::string text = report;
  if (o.format == "table") {
    char* table = nullptr;
    if (tl_render_table(s, report, &table) != TL_OK) {
      std::cerr << "twistlab: " << tl_last_error(s) << '\n';
      return TL_INTERNAL;
    }
    text = table;
    tl_string_free(table);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "twistlab: cannot write " << o.out << '\n';
      return TL_INTERNAL;
    }
  }
  if (st != TL_OK) std::cerr << "twistlab: " << tl_last_error(s) << '\n';
  return st;
}

struct SuperchargeOpts {
  std::optional<std::string> family, mu, nu, lambda, coeffs;
  void add(CLI::App* app) {
    app->add_option("--family", family, "hol, A, B, kw, ht or ht_prime");
    app->add_option("--mu", mu, "kw parameter μ");
    app->add_option("--nu", nu, "kw parameter ν");
    app->add_option("--lambda", lambda, "ht / ht_prime parameter λ");
    app->add_option("--coeffs", coeffs, "explicit supercharge, e.g. \"α1⊗e1 + 1/2*i*α2∨⊗f2*\"");
  }
  void into(Json& p) const {
    put(p, "family", family);
    put(p, "mu", mu);
    put(p, "nu", nu);
    put(p, "lambda", lambda);
    put(p, "coeffs", coeffs);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistlab: exact supersymmetry algebra and twist computations over Q(i)"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out.out, "write the report to this file");
  app.set_version_flag("--version", std::string("twistlab ") + tl_version());

  Json params = Json::object();

  auto* algebra = app.add_subcommand("algebra", "build a supersymmetry algebra and check Jacobi");
  std::optional<long> dim, n, n1, n2;
  std::optional<std::string> rsym, model;
  algebra->add_option("--dim", dim, "2, 4 or 10")->required();
  algebra->add_option("--n", n, "4d: dimension of W");
  algebra->add_option("--rsym", rsym, "4d: gl, sl or trivial");
  algebra->add_option("--n1", n1, "2d: N+");
  algebra->add_option("--n2", n2, "2d: N-");
  algebra->add_option("--model", model, "10d: generic or octonionic");

  auto* classify = app.add_subcommand("classify", "classify a square-zero supercharge");
  SuperchargeOpts cls;
  cls.add(classify);

  auto* scan = app.add_subcommand("scan", "classify a family over a grid of parameters");
  std::optional<std::string> scan_family;
  std::vector<std::string> points;
  scan->add_option("--family", scan_family, "kw, ht or ht_prime")->required();
  scan->add_option("--points", points, "kw: μ:ν points; ht: λ values")->delimiter(',')->required();

  auto* cohomology = app.add_subcommand("cohomology", "Q-cohomology of the N=4 algebra");
  SuperchargeOpts coh;
  coh.add(cohomology);
  std::optional<std::string> invariant;
  cohomology->add_option("--invariant", invariant, "iota1, iota2 or diagonal: invariants under the KW-twisted factor");

  auto* superspace = app.add_subcommand("superspace", "holomorphic superspace realization");
  SuperchargeOpts sup;
  sup.add(superspace);

  auto* twistor = app.add_subcommand("twistor", "twistor-space computations");
  std::vector<std::string> sections;
  for (const char* s : {"berezinian", "signature", "penrose", "content", "dirac", "koszul", "e2"})
    twistor->add_flag_callback(std::string("--") + s, [&sections, s] { sections.push_back(s); }, std::string("run the ") + s + " section");
  std::optional<long> tn, tm, tpoints, tseed, tbound, ttrunc;
  twistor->add_option("--n", tn, "berezinian: n in CP^n|m");
  twistor->add_option("--m", tm, "berezinian: m in CP^n|m");
  twistor->add_option("--points", tpoints, "penrose: number of random points");
  twistor->add_option("--seed", tseed, "penrose: random seed");
  twistor->add_option("--degree-bound", tbound, "koszul: highest degree");
  twistor->add_option("--truncation", ttrunc, "e2: Čech truncation");

  auto* selftest = app.add_subcommand("selftest", "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : TL_USAGE;
  }

  std::string command;
  if (algebra->parsed()) {
    command = "algebra";
    put(params, "dim", dim);
    put(params, "n", n);
    put(params, "rsym", rsym);
    put(params, "n1", n1);
    put(params, "n2", n2);
    put(params, "model", model);
  } else if (classify->parsed()) {
    command = "classify";
    cls.into(params);
  } else if (scan->parsed()) {
    command = "scan";
    put(params, "family", scan_family);
    params["points"] = points;
  } else if (cohomology->parsed()) {
    command = "cohomology";
    coh.into(params);
    put(params, "invariant", invariant);
  } else if (superspace->parsed()) {
    command = "superspace";
    sup.into(params);
  } else if (twistor->parsed()) {
    command = "twistor";
    if (!sections.empty()) params["sections"] = sections;
    put(params, "n", tn);
    put(params, "m", tm);
    put(params, "points", tpoints);
    put(params, "seed", tseed);
    put(params, "degree_bound", tbound);
    put(params, "truncation", ttrunc);
  } else if (selftest->parsed()) {
    command = "selftest";
  }

  Session session;
  if (!session.s) return TL_INTERNAL;
  unsigned threads;
  try {
    threads = threads_from_env();
  } catch (const CLI::Error& e) {
    std::cerr << "twistlab: " << e.what() << '\n';
    return TL_USAGE;
  }
  tl_session_set_threads(session.s, threads);
  return emit(session.s, command, params, out);
}

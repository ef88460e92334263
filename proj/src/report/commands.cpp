#include "report/commands.hpp"

#include "clifford/spinor_model.hpp"
#include "report/util.hpp"
#include "superlie/builders.hpp"
#include "superspace/superspace.hpp"
#include "twist/twist.hpp"
#include "twistor/cech.hpp"

#include <map>
#include <set>
#include <sstream>

namespace twistlab::report {

const SuperLieAlgebra& n4_algebra() {
  static const SuperLieAlgebra alg = superlie::build_susy_4d(4, superlie::RSym::SL);
  return alg;
}

Vector lift_translation(const SuperLieAlgebra& alg, const Vector& v) {
  const auto idx = alg.indices(superlie::Block::Translation);
  if (v.size() != idx.size()) fail(ErrorKind::Internal, "translation vector has the wrong length");
  Vector out(alg.dim());
  for (size_t k = 0; k < idx.size(); ++k) out[idx[k]] = v[k];
  return out;
}

Json labels(const SuperLieAlgebra& alg, const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(superlie::format_element(alg, v));
  return a;
}

Json translation_labels(const SuperLieAlgebra& alg, const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(superlie::format_element(alg, lift_translation(alg, v)));
  return a;
}

std::pair<Scalar, Scalar> parse_projective_point(const std::string& text) {
  auto sep = text.find(':');
  if (sep == std::string::npos) fail(ErrorKind::InvalidArgument, "expected a point μ:ν, got '" + text + "'");
  Scalar mu = Scalar::parse(text.substr(0, sep)), nu = Scalar::parse(text.substr(sep + 1));
  if (mu.is_zero() && nu.is_zero()) fail(ErrorKind::InvalidArgument, "(0:0) is not a point of CP¹");
  return {mu, nu};
}

namespace {

using superlie::Block;

// Parameter reader. Every key must be consumed; inputs() echoes parsed values.
class Args {
 public:
  Args(const Json& j, std::string command) : json_(j.is_null() ? Json::object() : j), command_(std::move(command)) {
    if (!json_.is_object()) fail(ErrorKind::InvalidArgument, command_ + ": parameters must be a JSON object");
  }

  bool has(const std::string& key) const { return json_.contains(key); }

  std::optional<std::string> opt_str(const std::string& key) {
    if (!has(key)) return std::nullopt;
    used_.insert(key);
    const Json& v = json_[key];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' must be a string");
  }

  std::string str(const std::string& key, const std::string& def) {
    auto s = opt_str(key);
    echo_[key] = s ? *s : def;
    return s ? *s : def;
  }

  long integer(const std::string& key, std::optional<long> def, long lo, long hi) {
    long value;
    if (!has(key)) {
      if (!def) fail(ErrorKind::InvalidArgument, command_ + ": missing required parameter '" + key + "'");
      value = *def;
    } else {
      used_.insert(key);
      const Json& v = json_[key];
      if (v.is_number_integer()) {
        value = v.get<long>();
      } else if (v.is_string()) {
        try {
          size_t pos = 0;
          value = std::stol(v.get<std::string>(), &pos);
          if (pos != v.get<std::string>().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' must be an integer");
        }
      } else {
        fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' must be an integer");
      }
    }
    if (value < lo || value > hi)
      fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' must lie in [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "], got " + std::to_string(value));
    echo_[key] = value;
    return value;
  }

  Scalar scalar(const std::string& key, const std::string& def) {
    Scalar s = Scalar::parse(str(key, def));
    echo_[key] = s.to_string();
    return s;
  }

  /// JSON array of strings or one comma-separated string.
  std::vector<std::string> list(const std::string& key, std::vector<std::string> def) {
    std::vector<std::string> out;
    if (!has(key)) {
      out = std::move(def);
    } else {
      used_.insert(key);
      const Json& v = json_[key];
      if (v.is_array()) {
        for (const auto& x : v) {
          if (x.is_string()) out.push_back(x.get<std::string>());
          else if (x.is_number_integer()) out.push_back(std::to_string(x.get<long>()));
          else fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' entries must be strings");
        }
      } else if (v.is_string()) {
        std::stringstream ss(v.get<std::string>());
        for (std::string item; std::getline(ss, item, ',');) {
          auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
          if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
        }
      } else {
        fail(ErrorKind::InvalidArgument, command_ + ": '" + key + "' must be a list");
      }
    }
    echo_[key] = out;
    return out;
  }

  void set_echo(const std::string& key, Json v) { echo_[key] = std::move(v); }

  Json finish() {
    for (const auto& [k, v] : json_.items())
      if (!used_.count(k)) fail(ErrorKind::InvalidArgument, command_ + ": unknown parameter '" + k + "'");
    return echo_;
  }

 private:
  Json json_;
  std::string command_;
  std::set<std::string> used_;
  Json echo_ = Json::object();
};

struct Supercharge {
  std::string label;  // family spec or "coeffs"
  Vector q;
  std::optional<Scalar> lambda;  // ht and ht_prime only
};

// family ∈ {hol, A, B, kw, ht, ht_prime} with mu, nu, lambda; or coeffs.
Supercharge read_supercharge(Args& args, const SuperLieAlgebra& alg) {
  if (args.has("coeffs")) {
    if (args.has("family")) fail(ErrorKind::InvalidArgument, "give either a family or coeffs, not both");
    std::string text = args.str("coeffs", "");
    Vector q = superlie::parse_element(alg, text);
    twist::require_supercharge(alg, q);
    return {superlie::format_element(alg, q), q, std::nullopt};
  }
  const std::string family = args.str("family", "hol");
  if (family == "hol") return {"hol", twist::q_hol(alg), std::nullopt};
  if (family == "A") return {"A", twist::family_a(alg), std::nullopt};
  if (family == "B") return {"B", twist::family_b(alg), std::nullopt};
  if (family == "kw") {
    Scalar mu = args.scalar("mu", "1"), nu = args.scalar("nu", "0");
    return {"kw(" + mu.to_string() + ":" + nu.to_string() + ")", twist::family_kw(alg, mu, nu), std::nullopt};
  }
  if (family == "ht" || family == "ht_prime") {
    Scalar l = args.scalar("lambda", "1");
    Vector q = family == "ht" ? twist::family_ht(alg, l) : twist::family_ht_prime(alg, l);
    return {family + "(" + l.to_string() + ")", q, l};
  }
  fail(ErrorKind::InvalidArgument, "unknown family '" + family + "' (hol, A, B, kw, ht, ht_prime)");
}

void require_square_zero(const SuperLieAlgebra& alg, const Vector& q) {
  Vector sq = twist::bracket_square(alg, q);
  if (!exact::is_zero(sq))
    fail(ErrorKind::Precondition,
         "[Q,Q] = " + superlie::format_element(alg, lift_translation(alg, sq)) + " is nonzero");
}

Json twist_json(const SuperLieAlgebra& alg, const twist::TwistReport& r) {
  Json j;
  j["square_zero"] = r.square_zero;
  j["image_dim"] = r.image_dim;
  j["image"] = translation_labels(alg, r.image.basis_vectors());
  j["isotropic"] = r.isotropic;
  j["verdict"] = twist::to_string(r.verdict);
  return j;
}

Json block_json(const SuperLieAlgebra& alg, const twist::BlockCohomology& b) {
  Json j;
  j["chain_dim"] = b.chain_dim;
  j["cocycles"] = b.cocycles;
  j["coboundaries"] = b.coboundaries;
  j["dim"] = b.dim();
  j["basis"] = labels(alg, b.basis);
  return j;
}

}  // namespace

Json ht_warning_details(const std::vector<Scalar>& lambdas) {
  const auto& alg = n4_algebra();
  Json rows = Json::array();
  std::set<size_t> ht, prime;
  for (const auto& l : lambdas) {
    size_t a = twist::classify(alg, twist::family_ht(alg, l)).image_dim;
    size_t b = twist::classify(alg, twist::family_ht_prime(alg, l)).image_dim;
    ht.insert(a);
    prime.insert(b);
    rows.push_back({{"lambda", l.to_string()}, {"ht_image_dim", a}, {"ht_prime_image_dim", b}});
  }
  auto join = [](const std::set<size_t>& s) {
    std::string out;
    for (size_t d : s) out += (out.empty() ? "" : "/") + std::to_string(d);
    return out;
  };
  Json d;
  d["message"] = "expected a three-dimensional exact family of translations; ht(λ) = Q_hol + λ α2∨⊗f2* + α2⊗e2 has image dim " +
                 join(ht) + ". Reading without the α2⊗e2 term, ht_prime(λ) has image dim " + join(prime) + ".";
  d["readings"] = rows;
  return d;
}

namespace {

SuperLieAlgebra build_algebra(Args& args) {
  const long dim = args.integer("dim", std::nullopt, 2, 10);
  if (dim == 4) {
    const long n = args.integer("n", 4, 1, 4);
    return superlie::build_susy_4d(static_cast<int>(n), superlie::parse_rsym(args.str("rsym", "sl")));
  }
  if (dim == 2) {
    const long n1 = args.integer("n1", 2, 0, 8), n2 = args.integer("n2", 2, 0, 8);
    if (n1 + n2 == 0) fail(ErrorKind::InvalidArgument, "algebra: N = (0,0) has no supercharges");
    return superlie::build_susy_2d(static_cast<int>(n1), static_cast<int>(n2));
  }
  if (dim == 10) {
    const std::string model = args.str("model", "generic");
    if (model == "generic") return superlie::build_susy_10d(clifford::build_gamma(10));
    if (model == "octonionic") return superlie::build_susy_10d(clifford::build_octonionic_cl10());
    fail(ErrorKind::InvalidArgument, "algebra: model must be generic or octonionic");
  }
  fail(ErrorKind::InvalidArgument, "algebra: dim must be 2, 4 or 10");
}

}  // namespace

SuperLieAlgebra algebra_from_params(const Json& j) {
  Args args(j, "algebra");
  auto alg = build_algebra(args);
  args.finish();
  return alg;
}

Envelope cmd_algebra(const Json& j, unsigned threads) {
  Args args(j, "algebra");
  std::optional<SuperLieAlgebra> alg = build_algebra(args);
  Envelope env;
  env.command = "algebra";
  env.inputs = args.finish();

  const auto jac = superlie::jacobi_check(*alg, threads);
  const auto grading = superlie::grading_check(*alg);
  Json blocks;
  for (Block b : {Block::Rotation, Block::RSymmetry, Block::Translation, Block::Supercharge})
    blocks[superlie::to_string(b)] = alg->indices(b).size();
  Json basis = Json::array();
  for (const auto& l : alg->basis()) {
    Json e{{"label", l.name}, {"parity", superlie::to_string(l.parity)}, {"block", superlie::to_string(l.block)}};
    if (l.weight) e["weight"] = *l.weight;
    basis.push_back(e);
  }
  env.result["name"] = alg->name();
  env.result["bosonic_dim"] = alg->even_dim();
  env.result["odd_dim"] = alg->odd_dim();
  env.result["blocks"] = blocks;
  env.result["basis"] = basis;
  Json failures = Json::array();
  for (const auto& f : jac.failures) failures.push_back(f.description);
  env.result["jacobi"] = {{"triples_checked", jac.triples_checked},
                          {"antisymmetry", jac.antisymmetry_ok},
                          {"jacobi", jac.jacobi_ok},
                          {"failures", failures}};
  env.checks.push_back(check("graded Jacobi identity", jac.ok(), {{"triples_checked", jac.triples_checked}}));
  env.checks.push_back(check("parity and block grading", grading.ok()));
  return env;
}

Envelope cmd_classify(const Json& j, unsigned) {
  Args args(j, "classify");
  const auto& alg = n4_algebra();
  Supercharge sc = read_supercharge(args, alg);
  Envelope env;
  env.command = "classify";
  env.inputs = args.finish();
  require_square_zero(alg, sc.q);
  auto r = twist::classify(alg, sc.q);
  env.result["supercharge"] = superlie::format_element(alg, sc.q);
  env.result["twist"] = twist_json(alg, r);
  env.result["ad_square_zero"] = twist::ad_square_zero(alg, sc.q);
  env.checks.push_back(check("[Q,Q] = 0", r.square_zero));
  env.checks.push_back(check("ad(Q)² = 0", twist::ad_square_zero(alg, sc.q)));
  if (sc.label.rfind("ht(", 0) == 0 && r.image_dim != 3)
    env.checks.push_back({"ht image dimension", Status::Warning, ht_warning_details({*sc.lambda})});
  return env;
}

Envelope cmd_scan(const Json& j, unsigned threads) {
  Args args(j, "scan");
  const std::string family = args.str("family", "");
  if (family != "kw" && family != "ht" && family != "ht_prime")
    fail(ErrorKind::InvalidArgument, "scan: family must be kw, ht or ht_prime");
  const auto points = args.list("points", {});
  if (points.empty()) fail(ErrorKind::InvalidArgument, "scan: empty grid");
  Envelope env;
  env.command = "scan";
  env.inputs = args.finish();

  const auto& alg = n4_algebra();
  const auto hol_image = twist::classify(alg, twist::q_hol(alg)).image;
  const Vector qa = twist::family_a(alg);
  struct Row {
    Json json;
    bool square_zero = false, topological = false, contains_hol = false;
    size_t image_dim = 0;
    std::optional<Scalar> lambda;
    bool equals_a = false;
  };
  // Parse everything first so bad input fails before any work.
  std::vector<std::pair<Scalar, Scalar>> params;
  for (const auto& p : points) {
    if (family == "kw") params.push_back(parse_projective_point(p));
    else params.push_back({Scalar::parse(p), Scalar(0)});
  }
  auto rows = parallel_map<Row>(params.size(), threads, [&](size_t i) {
    Row row;
    Vector q;
    if (family == "kw") {
      q = twist::family_kw(alg, params[i].first, params[i].second);
      row.json["parameter"] = params[i].first.to_string() + ":" + params[i].second.to_string();
    } else {
      row.lambda = params[i].first;
      q = family == "ht" ? twist::family_ht(alg, params[i].first) : twist::family_ht_prime(alg, params[i].first);
      row.json["parameter"] = params[i].first.to_string();
    }
    row.square_zero = twist::is_square_zero(alg, q);
    row.json["square_zero"] = row.square_zero;
    if (row.square_zero) {
      auto r = twist::classify(alg, q);
      row.image_dim = r.image_dim;
      row.topological = r.verdict == twist::Verdict::Topological;
      row.contains_hol = exact::intersection(r.image, hol_image).dim() == hol_image.dim();
      row.json["image_dim"] = r.image_dim;
      row.json["verdict"] = twist::to_string(r.verdict);
      if (family == "kw") row.json["contains_hol_image"] = row.contains_hol;
    }
    if (family == "ht") {
      row.equals_a = q == qa;
      row.json["equals_A"] = row.equals_a;
    }
    return row;
  });

  Json table = Json::array();
  std::map<std::string, size_t> verdicts, dims;
  bool all_square_zero = true, all_top = true, all_contain = true;
  std::vector<Scalar> ht_dims;
  bool ht_zero_ok = true, prime_ok = true;
  for (const auto& r : rows) {
    table.push_back(r.json);
    all_square_zero = all_square_zero && r.square_zero;
    all_top = all_top && r.topological;
    all_contain = all_contain && r.contains_hol;
    if (r.json.contains("verdict")) {
      ++verdicts[r.json["verdict"].get<std::string>()];
      ++dims[std::to_string(r.image_dim)];
    }
    if (family == "ht" && r.lambda) {
      if (r.lambda->is_zero()) ht_zero_ok = ht_zero_ok && r.equals_a;
      else if (r.image_dim != 3) ht_dims.push_back(*r.lambda);
    }
    if (family == "ht_prime" && r.lambda && !r.lambda->is_zero()) prime_ok = prime_ok && r.image_dim == 3;
  }
  env.result["family"] = family;
  env.result["rows"] = table;
  env.result["strata"] = {{"verdict", verdicts}, {"image_dim", dims}};
  env.checks.push_back(check("square-zero at every point", all_square_zero));
  if (family == "kw") {
    env.checks.push_back(check("topological at every point", all_top));
    env.checks.push_back(check("image contains image(Q_hol)", all_contain));
  }
  if (family == "ht") {
    if (std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.lambda && r.lambda->is_zero(); }))
      env.checks.push_back(check("ht(0) = Q_A", ht_zero_ok));
    if (!ht_dims.empty()) env.checks.push_back({"ht image dimension", Status::Warning, ht_warning_details(ht_dims)});
  }
  if (family == "ht_prime") env.checks.push_back(check("image dim 3 for λ ≠ 0", prime_ok));
  return env;
}

Envelope cmd_cohomology(const Json& j, unsigned) {
  Args args(j, "cohomology");
  const auto& alg = n4_algebra();
  Supercharge sc = read_supercharge(args, alg);
  std::optional<twist::Factor> factor;
  if (auto f = args.opt_str("invariant")) {
    factor = twist::parse_factor(*f);
    args.set_echo("invariant", twist::to_string(*factor));
  }
  Envelope env;
  env.command = "cohomology";
  env.inputs = args.finish();
  require_square_zero(alg, sc.q);
  auto rep = twist::q_cohomology(alg, sc.q);
  env.result["supercharge"] = superlie::format_element(alg, sc.q);
  env.result["dims"] = {{"bosonic", rep.bosonic.dim()},
                        {"fermionic", rep.fermionic.dim()},
                        {"translations", rep.translations.dim()}};
  env.result["bosonic"] = block_json(alg, rep.bosonic);
  env.result["fermionic"] = block_json(alg, rep.fermionic);
  env.result["translations"] = block_json(alg, rep.translations);
  if (sc.q == twist::q_hol(alg)) {
    auto ks = twist::qhol_kernel_surplus(alg);
    env.result["bosonic_kernel"] = {{"kernel_dim", ks.kernel.size()},
                                    {"kernel", labels(alg, ks.kernel)},
                                    {"reference_dim", ks.reference.size()},
                                    {"reference", "so(3)- + Ann(e1)"},
                                    {"surplus", labels(alg, ks.surplus)}};
  }
  if (factor) {
    auto inv = twist::invariant_cohomology(alg, sc.q, twist::kapustin_witten(alg), *factor);
    env.result["invariant_fermionic"] = {{"factor", twist::to_string(*factor)},
                                         {"twisting_hom", "kapustin_witten"},
                                         {"dim", inv.size()},
                                         {"basis", labels(alg, inv)}};
  }
  env.checks.push_back(check("Euler characteristic consistent", rep.euler_ok));
  return env;
}

Envelope cmd_superspace(const Json& j, unsigned) {
  Args args(j, "superspace");
  const auto& alg = n4_algebra();
  std::optional<Supercharge> sc;
  if (args.has("family") || args.has("coeffs")) sc = read_supercharge(args, alg);
  Envelope env;
  env.command = "superspace";
  env.inputs = args.finish();

  Json gens = Json::array();
  for (const auto& g : superspace::realized_generators(alg))
    gens.push_back({{"generator", g.name}, {"vector_field", superspace::to_string(g.field)}});
  env.result["generators"] = gens;
  auto rep = superspace::check_representation(alg);
  Json failures = Json::array();
  for (const auto& p : rep.pairs)
    if (!p.ok) failures.push_back("[" + p.x + ", " + p.y + "]");
  env.result["representation"] = {{"pairs", rep.pairs.size()}, {"passed", rep.passed}, {"failures", failures}};
  env.checks.push_back(check("bracket-preserving on all generator pairs", rep.ok(),
                             {{"pairs", rep.pairs.size()}, {"passed", rep.passed}}));
  if (sc) {
    auto field = superspace::realize(alg, sc->q);
    env.result["supercharge"] = {{"element", superlie::format_element(alg, sc->q)},
                                 {"vector_field", superspace::to_string(field)},
                                 {"square", superspace::to_string(superspace::vf_bracket(field, field))}};
    env.checks.push_back(check("realized supercharge squares to zero", superspace::vf_bracket(field, field).is_zero()));
  }
  return env;
}

Envelope cmd_twistor(const Json& j, unsigned) {
  Args args(j, "twistor");
  static const std::vector<std::string> all{"berezinian", "signature", "penrose", "content", "dirac", "koszul", "e2"};
  auto sections = args.list("sections", all);
  for (const auto& s : sections)
    if (std::find(all.begin(), all.end(), s) == all.end())
      fail(ErrorKind::InvalidArgument, "twistor: unknown section '" + s + "'");
  auto want = [&](const char* s) { return std::find(sections.begin(), sections.end(), s) != sections.end(); };
  const long n = want("berezinian") ? args.integer("n", 3, 1, 64) : 0;
  const long m = want("berezinian") ? args.integer("m", 4, 0, 64) : 0;
  const long points = want("penrose") ? args.integer("points", 10, 1, 10000) : 0;
  const long seed = want("penrose") ? args.integer("seed", 1, 0, 1L << 31) : 0;
  const long bound = want("koszul") ? args.integer("degree_bound", 8, 2, 64) : 0;
  const long trunc = want("e2") ? args.integer("truncation", 6, 4, 32) : 0;
  Envelope env;
  env.command = "twistor";
  env.inputs = args.finish();

  if (want("berezinian")) {
    auto b = twistor::berezinian_cpnm(n, m);
    env.result["berezinian"] = {{"space", "CP^" + std::to_string(n) + "|" + std::to_string(m)},
                                {"degree", b.degree},
                                {"super_calabi_yau", b.super_calabi_yau}};
    if (n == 3 && m == 4) env.checks.push_back(check("Ber(CP^3|4) = O", b.super_calabi_yau));
  }
  if (want("signature")) {
    auto s = twistor::twistor_signature();
    env.result["signature"] = {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
    env.checks.push_back(check("twistor norm signature (2,2)", s.positive == 2 && s.negative == 2 && s.zero == 0));
  }
  if (want("penrose")) {
    auto p = twistor::penrose_scaling_check(static_cast<size_t>(points), static_cast<unsigned>(seed));
    env.result["penrose"] = {{"points", p.points}, {"passed", p.passed}};
    env.checks.push_back(check("Penrose map is scaling-invariant", p.ok()));
  }
  if (want("content")) {
    Json groups = Json::array();
    for (const auto& g : twistor::field_content_groups())
      groups.push_back({{"group", g.name}, {"line_bundles", g.degrees}, {"multiplicity", g.multiplicity},
                        {"content", twistor::to_json(g.content)}});
    Json lambda = Json::array();
    for (long i = 0; i <= 4; ++i) {
      auto t = twistor::lambda_decompose(i);
      lambda.push_back({{"i", i}, {"degree", t.degree}, {"multiplicity", t.multiplicity}, {"odd", t.odd}});
    }
    env.result["content"] = {{"lambda_decomposition", lambda}, {"groups", groups}};
    env.checks.push_back(check("field content dimensions", twistor::content_dimension_check()));
  }
  if (want("dirac")) {
    auto d = twistor::dirac_symbol_check();
    env.result["dirac"] = {{"linear", d.linear}, {"scalar", d.scalar ? Json(d.scalar->to_string()) : Json()}};
    env.checks.push_back(check("composite S- → S+ is Clifford multiplication", d.ok()));
  }
  if (want("koszul")) {
    auto k = twistor::koszul_exactness_check(bound);
    Json rows = Json::array();
    for (const auto& d : k.degrees)
      rows.push_back({{"degree", d.degree}, {"dims", d.dims}, {"exact", d.exact}, {"cokernel", d.cokernel},
                      {"euler", d.euler}});
    env.result["koszul"] = rows;
    env.checks.push_back(check("Koszul complex exact in degrees 1.." + std::to_string(bound), k.ok));
  }
  if (want("e2")) {
    auto e = twistor::e2_laplacian_check(trunc);
    env.result["e2"] = {{"truncation", e.truncation},
                        {"model_stable", e.model_stable},
                        {"scalar", e.scalar ? Json(e.scalar->to_string()) : Json()},
                        {"induced", exact::to_json(e.induced)}};
    env.checks.push_back(check("E2 differential is a nonzero multiple of Σ ∂²", e.ok()));
  }
  return env;
}

Envelope run_command(const std::string& command, const Json& args, unsigned threads) {
  if (command == "algebra") return cmd_algebra(args, threads);
  if (command == "classify") return cmd_classify(args, threads);
  if (command == "scan") return cmd_scan(args, threads);
  if (command == "cohomology") return cmd_cohomology(args, threads);
  if (command == "superspace") return cmd_superspace(args, threads);
  if (command == "twistor") return cmd_twistor(args, threads);
  if (command == "selftest") return cmd_selftest(args, threads);
  fail(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
}

std::vector<std::string> command_names() {
  return {"algebra", "classify", "scan", "cohomology", "superspace", "twistor", "selftest"};
}

}  // namespace twistlab::report

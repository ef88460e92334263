#include "report/acceptance.hpp"

#include "clifford/pairing.hpp"
#include "report/commands.hpp"
#include "report/util.hpp"
#include "superlie/builders.hpp"
#include "superlie/reduction.hpp"
#include "superspace/superspace.hpp"
#include "twist/twist.hpp"
#include "twistor/cech.hpp"

#include <algorithm>
#include <set>

namespace twistlab::report {

namespace {

using superlie::RSym;

Criterion jacobi_suite(unsigned threads) {
  Criterion c(1, "Jacobi suite", true);
  std::vector<SuperLieAlgebra> algs;
  for (int k = 1; k <= 4; ++k) algs.push_back(superlie::build_susy_4d(k, RSym::SL));
  for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {4, 4}, {2, 0}}) algs.push_back(superlie::build_susy_2d(a, b));
  algs.push_back(superlie::build_susy_10d(clifford::build_gamma(10)));
  algs.push_back(superlie::build_susy_10d(clifford::build_octonionic_cl10()));
  Json rows = Json::array();
  for (const auto& alg : algs) {
    auto r = superlie::jacobi_check(alg, threads);
    c.pass = c.pass && r.ok();
    rows.push_back({{"algebra", alg.name()},
                    {"bosonic", alg.even_dim()},
                    {"odd", alg.odd_dim()},
                    {"triples", r.triples_checked},
                    {"ok", r.ok()}});
  }
  c.details["algebras"] = rows;
  return c;
}

Criterion clifford_suite() {
  Criterion c(2, "Clifford suite", true);
  Json rows = Json::array();
  auto add = [&](const clifford::SpinorModel& m) {
    auto r = clifford::check_model(m);
    const size_t expected = size_t{1} << (m.n() / 2 - 1);
    const bool weyl = m.plus_indices.size() == expected && m.minus_indices.size() == expected;
    c.pass = c.pass && r.ok() && weyl;
    rows.push_back({{"model", m.name},
                    {"clifford_relation", r.clifford_relation},
                    {"chirality", r.chirality_ok},
                    {"weyl_dims", std::to_string(m.plus_indices.size()) + "+" + std::to_string(m.minus_indices.size())},
                    {"expected", std::to_string(expected) + "+" + std::to_string(expected)}});
  };
  for (int n : {2, 4, 6, 8, 10}) add(clifford::build_gamma(n));
  const auto oct = clifford::build_octonionic_cl10();
  add(oct);
  c.details["models"] = rows;
  bool intertwiner = true;
  try {
    clifford::generic_to_octonionic_intertwiner(clifford::build_gamma(10), oct);
  } catch (const Error&) {
    intertwiner = false;
  }
  c.pass = c.pass && intertwiner;
  c.details["generic_to_octonionic_intertwiner"] = intertwiner;
  return c;
}

Json sorted(Json a) {
  std::sort(a.begin(), a.end());
  return a;
}

Criterion qhol_cohomology() {
  Criterion c(3, "Q_hol cohomology");
  const auto& alg = n4_algebra();
  auto rep = twist::q_cohomology(alg, twist::q_hol(alg));
  const Json translations = labels(alg, rep.translations.basis);
  const Json fermionic = labels(alg, rep.fermionic.basis);
  const Json expected_fermionic = sorted({"α2⊗e2", "α2⊗f1", "α2⊗f2", "α1∨⊗e2*", "α1∨⊗f1*", "α1∨⊗f2*", "α2∨⊗e2*",
                                          "α2∨⊗f1*", "α2∨⊗f2*"});
  const bool t_ok = rep.translations.dim() == 2 && sorted(translations) == sorted({"∂z1", "∂z2"});
  const bool f_ok = rep.fermionic.dim() == 9 && sorted(fermionic) == expected_fermionic;
  const bool exact_ok = rep.fermionic.coboundaries == 5;
  const bool b_ok = rep.bosonic.chain_dim == 21 && rep.bosonic.dim() == 21 - rep.fermionic.coboundaries &&
                    rep.bosonic.dim() == 16;
  auto ks = twist::qhol_kernel_surplus(alg);
  const bool surplus_ok = ks.kernel.size() == rep.bosonic.dim() && ks.surplus.size() + ks.reference.size() == ks.kernel.size();
  c.pass = t_ok && f_ok && exact_ok && b_ok && surplus_ok;
  c.details = {{"translations", {{"dim", rep.translations.dim()}, {"basis", translations}}},
               {"fermionic", {{"dim", rep.fermionic.dim()}, {"basis", fermionic}}},
               {"fermionic_exact_dim", rep.fermionic.coboundaries},
               {"bosonic", {{"chain_dim", rep.bosonic.chain_dim}, {"dim", rep.bosonic.dim()}}},
               {"bosonic_kernel", labels(alg, ks.kernel)},
               {"reference", {{"description", "so(3)- + Ann(e1)"}, {"dim", ks.reference.size()}}},
               {"surplus", labels(alg, ks.surplus)}};
  return c;
}

Criterion kw_family(unsigned threads) {
  Criterion c(4, "KW family");
  Envelope e = cmd_scan({{"family", "kw"}, {"points", {"1:0", "0:1", "1:1", "1:-1", "2:3", "3:-1/2"}}}, threads);
  c.pass = e.passed() && e.result["rows"].size() >= 5;
  c.details = e.result;
  return c;
}

Criterion ht_family(unsigned threads) {
  Criterion c(5, "HT family");
  Envelope ht = cmd_scan({{"family", "ht"}, {"points", {"1", "2", "-1", "0"}}}, threads);
  Envelope prime = cmd_scan({{"family", "ht_prime"}, {"points", {"1", "2", "-1"}}}, threads);
  // Internal consistency: the exact image dim is one value on λ ≠ 0 and ad(Q)² = 0 agrees with [Q,Q] = 0.
  const auto& alg = n4_algebra();
  std::set<size_t> dims;
  bool consistent = true;
  for (const auto& l : {Scalar(1), Scalar(2), Scalar(-1)}) {
    Vector q = twist::family_ht(alg, l);
    dims.insert(twist::classify(alg, q).image_dim);
    consistent = consistent && twist::ad_square_zero(alg, q) == twist::is_square_zero(alg, q);
  }
  consistent = consistent && dims.size() == 1;
  c.pass = ht.passed() && prime.passed() && consistent;
  c.details = {{"ht", ht.result}, {"ht_prime", prime.result}, {"consistent", consistent}};
  for (const auto& ch : ht.checks)
    if (ch.status == Status::Warning) c.warnings.push_back(ch);
  return c;
}

Criterion successive_twist() {
  Criterion c(6, "Successive twist", true);
  const auto& alg = n4_algebra();
  const Vector qh = twist::q_hol(alg);
  Json rows = Json::array();
  for (const char* text : {"α2⊗e2", "α1∨⊗f1* - α2∨⊗f2*"}) {
    auto r = twist::successive_twist_check(alg, qh, superlie::parse_element(alg, text));
    c.pass = c.pass && r.agree && r.representative_independent;
    rows.push_back({{"q_prime", text},
                    {"direct", r.direct},
                    {"iterated", r.iterated},
                    {"inner", r.inner},
                    {"agree", r.agree},
                    {"representative_independent", r.representative_independent}});
  }
  c.details["cases"] = rows;
  return c;
}

Criterion superspace_rep() {
  Criterion c(7, "Superspace representation");
  auto r = superspace::check_representation(n4_algebra());
  c.pass = r.ok() && r.pairs.size() >= 36;
  c.details = {{"pairs", r.pairs.size()}, {"passed", r.passed}};
  return c;
}

Criterion reductions() {
  Criterion c(8, "Dimensional reductions", true);
  Json ten = Json::array();
  for (const auto& model : {clifford::build_gamma(10), clifford::build_octonionic_cl10()}) {
    auto r = superlie::reduce_10_to_4(superlie::build_susy_10d(model), {0, 1, 2, 3});
    const bool ok = r.ok() && r.stabilizer_so4 == 6 && r.stabilizer_so6 == 15 && r.translations == 4 &&
                    r.splus_multiplicity == 4 && r.sminus_multiplicity == 4 && r.trivial_multiplicity == 0;
    c.pass = c.pass && ok;
    ten.push_back({{"model", model.name},
                   {"stabilizer", Json::array({r.stabilizer_so4, r.stabilizer_so6, r.translations})},
                   {"S+", r.splus_multiplicity},
                   {"S-", r.sminus_multiplicity},
                   {"trivial", r.trivial_multiplicity},
                   {"gamma_match", r.gamma_match},
                   {"brackets_match", r.brackets_match}});
  }
  Json four = Json::array();
  for (int k = 1; k <= 4; ++k) {
    auto r = superlie::reduce_4_to_2(superlie::build_susy_4d(k, RSym::SL));
    const size_t kk = static_cast<size_t>(k);
    const bool split = r.weights["S+"][{1, 1}] == kk && r.weights["S+"][{-1, -1}] == kk &&
                       r.weights["S-"][{1, -1}] == kk && r.weights["S-"][{-1, 1}] == kk;
    const bool ok = r.ok() && r.n == std::pair{2 * kk, 2 * kk} && split;
    c.pass = c.pass && ok;
    Json w;
    for (const auto& [chir, m] : r.weights)
      for (const auto& [wt, n] : m)
        w[chir + "(" + std::to_string(wt.first) + "," + std::to_string(wt.second) + ")"] = n;
    four.push_back({{"k", k}, {"N", Json::array({r.n.first, r.n.second})}, {"weights", w}, {"poincare_match", r.poincare_match}});
  }
  c.details = {{"10_to_4", ten}, {"4_to_2", four}};
  return c;
}

Criterion twistor_suite() {
  Criterion c(9, "Twistor suite");
  using twistor::Irrep;
  auto ber = twistor::berezinian_cpnm(3, 4);
  const std::vector<twistor::FieldContentTable> expected{
      {{Irrep::C, 0, 1}, {Irrep::V, 1, 1}, {Irrep::Sym2Plus, 1, 1}, {Irrep::V, 2, 1}, {Irrep::Sym2Plus, 2, 1}, {Irrep::C, 3, 1}},
      {{Irrep::S, 1, 1}, {Irrep::S, 2, 1}},
      {{Irrep::C, 1, 1}, {Irrep::C, 2, 1}}};
  const std::vector<size_t> mult{1, 4, 6};
  auto groups = twistor::field_content_groups();
  bool content = groups.size() == expected.size();
  for (size_t g = 0; content && g < groups.size(); ++g)
    content = groups[g].content == expected[g] && groups[g].multiplicity == mult[g];
  content = content && twistor::content_dimension_check();
  const bool dirac = twistor::dirac_symbol_check().ok();
  const bool koszul = twistor::koszul_exactness_check(8).ok;
  const bool e2 = twistor::e2_laplacian_check(6).ok();
  auto sig = twistor::twistor_signature();
  const bool signature = sig.positive == 2 && sig.negative == 2 && sig.zero == 0;
  auto pen = twistor::penrose_scaling_check(10, 1);
  c.pass = ber.degree == 0 && content && dirac && koszul && e2 && signature && pen.ok();
  c.details = {{"berezinian_degree", ber.degree},
               {"field_content", content},
               {"dirac_symbol", dirac},
               {"koszul_to_degree_8", koszul},
               {"e2_laplacian_truncation_6", e2},
               {"signature", Json::array({sig.positive, sig.negative})},
               {"penrose_points", pen.points},
               {"penrose_passed", pen.passed}};
  return c;
}

Criterion purity_8d() {
  Criterion c(10, "8d pure and non-pure spinors");
  const auto m = clifford::build_gamma(8);
  const auto g = clifford::build_pairing(m, clifford::Pattern::PlusMinus);
  auto gamma_rank = [&](const Vector& q) {
    exact::Matrix map(g.components.size(), g.right_indices.size());
    for (size_t a = 0; a < g.components.size(); ++a)
      for (size_t i = 0; i < g.left_indices.size(); ++i)
        for (size_t j = 0; j < g.right_indices.size(); ++j) map(a, j) += q[g.left_indices[i]] * g.components[a](i, j);
    return exact::rank(map);
  };
  const Vector pure = exact::unit_vector(m.spinor_dim, m.plus_indices.front());
  const Vector mixed = exact::add(pure, exact::unit_vector(m.spinor_dim, m.plus_indices.back()));
  const size_t null_pure = clifford::purity_nullspace(m, pure), null_mixed = clifford::purity_nullspace(m, mixed);
  const size_t rank_mixed = gamma_rank(mixed);
  c.pass = null_mixed < 4 && rank_mixed == 8 && null_pure == 4;
  c.details = {{"non_pure", {{"nullspace", null_mixed}, {"gamma_rank", rank_mixed}}},
               {"pure", {{"nullspace", null_pure}, {"gamma_rank", gamma_rank(pure)}}}};
  return c;
}

}  // namespace

std::vector<Criterion> run_criteria(unsigned threads) {
  return {jacobi_suite(threads), clifford_suite(),   qhol_cohomology(), kw_family(threads),
          ht_family(threads),    successive_twist(), superspace_rep(),  reductions(),
          twistor_suite(),       purity_8d()};
}

Json to_json(const std::vector<Criterion>& cs) {
  Json a = Json::array();
  for (const auto& c : cs)
    a.push_back({{"id", c.id}, {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  return a;
}

Envelope cmd_selftest(const Json& args, unsigned threads) {
  if (!args.is_null() && !args.empty()) fail(ErrorKind::InvalidArgument, "selftest takes no parameters");
  Envelope env;
  env.command = "selftest";
  auto cs = run_criteria(threads);
  // Determinism: the same criteria with a different worker count serialize identically.
  const unsigned other = threads == 1 ? 8 : 1;
  const bool identical = to_json(cs).dump() == to_json(run_criteria(other)).dump();
  Criterion det(11, "Determinism across worker counts", identical);
  det.details = {{"compared", "criteria 1-10 recomputed with a different worker count"}, {"identical", identical}};
  cs.push_back(det);
  env.result["criteria"] = to_json(cs);
  for (const auto& c : cs) {
    env.checks.push_back(check(std::to_string(c.id) + ". " + c.name, c.pass));
    for (const auto& w : c.warnings) env.checks.push_back(w);
  }
  return env;
}

}  // namespace twistlab::report

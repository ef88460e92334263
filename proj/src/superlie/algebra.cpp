#include "superlie/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace twistlab::superlie {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(Block b) {
  switch (b) {
    case Block::Rotation: return "rotation";
    case Block::RSymmetry: return "r_symmetry";
    case Block::Translation: return "translation";
    case Block::Supercharge: return "supercharge";
  }
  return "?";
}

Block parse_block(const std::string& s) {
  for (Block b : {Block::Rotation, Block::RSymmetry, Block::Translation, Block::Supercharge})
    if (to_string(b) == s) return b;
  fail(ErrorKind::InvalidArgument, "unknown block '" + s + "'");
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.emplace_back(k, v[k]);
  return s;
}

Vector to_dense(const SparseVec& v, size_t dim) {
  Vector d(dim);
  for (const auto& [k, c] : v) d.at(k) = c;
  return d;
}

SuperLieAlgebra::SuperLieAlgebra(std::string name, std::vector<BasisLabel> basis)
    : name_(std::move(name)), basis_(std::move(basis)), table_(basis_.size() * basis_.size()) {
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (!lookup_.emplace(basis_[i].name, i).second)
      fail(ErrorKind::InvalidArgument, "duplicate basis label '" + basis_[i].name + "'");
    const bool odd_block = basis_[i].block == Block::Supercharge;
    if (odd_block != (basis_[i].parity == Parity::Odd))
      fail(ErrorKind::InvalidArgument, "label '" + basis_[i].name + "' has a parity inconsistent with its block");
  }
}

size_t SuperLieAlgebra::even_dim() const { return indices(Parity::Even).size(); }
size_t SuperLieAlgebra::odd_dim() const { return indices(Parity::Odd).size(); }

std::optional<size_t> SuperLieAlgebra::find(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

size_t SuperLieAlgebra::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) fail(ErrorKind::InvalidArgument, "unknown basis label '" + name + "'");
  return *i;
}

std::vector<size_t> SuperLieAlgebra::indices(Block b) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].block == b) out.push_back(i);
  return out;
}

std::vector<size_t> SuperLieAlgebra::indices(Parity p) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].parity == p) out.push_back(i);
  return out;
}

void SuperLieAlgebra::set_bracket(size_t i, size_t j, const SparseVec& value) {
  set_bracket_entry(i, j, value);
  if (i == j) return;
  // [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]
  const bool both_odd = is_odd(i) && is_odd(j);
  SparseVec partner;
  for (const auto& [k, c] : value) partner.emplace_back(k, both_odd ? c : -c);
  set_bracket_entry(j, i, partner);
}

void SuperLieAlgebra::set_bracket_entry(size_t i, size_t j, const SparseVec& value) {
  SparseVec clean;
  for (const auto& [k, c] : value) {
    if (k >= dim()) fail(ErrorKind::InvalidArgument, "bracket index out of range");
    if (!c.is_zero()) clean.emplace_back(k, c);
  }
  std::sort(clean.begin(), clean.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  table_.at(i * dim() + j) = std::move(clean);
}

Vector SuperLieAlgebra::bracket_basis(size_t i, const Vector& y) const {
  Vector out(dim());
  for (size_t j = 0; j < dim(); ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& [k, c] : bracket(i, j)) out[k] += c * y[j];
  }
  return out;
}

Vector SuperLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) fail(ErrorKind::InvalidArgument, "element has wrong dimension");
  Vector out(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const SparseVec& b = bracket(i, j);
      if (b.empty()) continue;
      Scalar f = x[i] * y[j];
      for (const auto& [k, c] : b) out[k] += f * c;
    }
  }
  return out;
}

Matrix SuperLieAlgebra::ad(const Vector& x) const {
  Matrix m(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    Vector col = bracket(x, unit(j));
    for (size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

namespace {

using Accum = std::map<size_t, Scalar>;

void add_bracket_with(const SuperLieAlgebra& alg, size_t a, const SparseVec& v, const Scalar& sign, Accum& acc) {
  for (const auto& [k, c] : v)
    for (const auto& [m, d] : alg.bracket(a, k)) acc[m] += sign * c * d;
}

bool accum_zero(const Accum& acc) {
  for (const auto& [k, c] : acc)
    if (!c.is_zero()) return false;
  return true;
}

std::string describe(const SuperLieAlgebra& alg, const Accum& acc) {
  Vector v(alg.dim());
  for (const auto& [k, c] : acc) v[k] = c;
  return format_element(alg, v);
}

}  // namespace

JacobiReport jacobi_check(const SuperLieAlgebra& alg, unsigned threads) {
  JacobiReport rep;
  const size_t n = alg.dim();
  auto sign = [&](size_t x, size_t y) { return alg.is_odd(x) && alg.is_odd(y) ? Scalar(-1) : Scalar(1); };

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      SparseVec expect;
      const bool both_odd = alg.is_odd(i) && alg.is_odd(j);
      for (const auto& [k, c] : alg.bracket(i, j)) expect.emplace_back(k, both_odd ? c : -c);
      if (expect != alg.bracket(j, i)) {
        rep.antisymmetry_ok = false;
        if (rep.failures.size() < 10)
          rep.failures.push_back({i, j, j, "graded antisymmetry fails for (" + alg.label(i).name + ", " + alg.label(j).name + ")"});
      }
    }

  // Jacobiator (-1)^{|a||c|}[a,[b,c]] + cyclic over sorted triples.
  std::vector<std::vector<JacobiFailure>> per_i(n);
  std::vector<size_t> counts(n, 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < n; i = next++) {
      for (size_t j = i; j < n; ++j)
        for (size_t k = j; k < n; ++k) {
          ++counts[i];
          Accum acc;
          add_bracket_with(alg, i, alg.bracket(j, k), sign(i, k), acc);
          add_bracket_with(alg, j, alg.bracket(k, i), sign(j, i), acc);
          add_bracket_with(alg, k, alg.bracket(i, j), sign(k, j), acc);
          if (!accum_zero(acc) && per_i[i].size() < 10)
            per_i[i].push_back({i, j, k,
                                "Jacobi fails for (" + alg.label(i).name + ", " + alg.label(j).name + ", " +
                                    alg.label(k).name + "): " + describe(alg, acc)});
        }
    }
  };
  const unsigned t = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < t; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < n; ++i) {
    rep.triples_checked += counts[i];
    if (!per_i[i].empty()) rep.jacobi_ok = false;
    for (auto& f : per_i[i])
      if (rep.failures.size() < 10) rep.failures.push_back(std::move(f));
  }
  return rep;
}

GradingReport grading_check(const SuperLieAlgebra& alg) {
  GradingReport rep;
  const size_t n = alg.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const bool odd = alg.is_odd(i) != alg.is_odd(j);
      const Block bi = alg.label(i).block, bj = alg.label(j).block;
      for (const auto& [k, c] : alg.bracket(i, j)) {
        if (alg.is_odd(k) != odd) {
          rep.parity_ok = false;
          rep.failures.push_back("parity not additive for (" + alg.label(i).name + ", " + alg.label(j).name + ")");
        }
        const Block bk = alg.label(k).block;
        bool bad = false;
        if (bi == Block::Supercharge && bj == Block::Supercharge && bk != Block::Translation) bad = true;
        if (bi == Block::Translation && (bj == Block::Translation || bj == Block::Supercharge)) bad = true;
        if (bj == Block::Translation && bi == Block::Supercharge) bad = true;
        if (bad) {
          rep.blocks_ok = false;
          rep.failures.push_back("block grading violated by (" + alg.label(i).name + ", " + alg.label(j).name + ")");
        }
      }
    }
  return rep;
}

bool gamma_nondegenerate(const SuperLieAlgebra& alg) {
  auto odd = alg.indices(Parity::Odd);
  const size_t n = alg.dim();
  // Column p: the list of [q_p, q_r] over all r, stacked.
  Matrix m(odd.size() * n, odd.size());
  for (size_t p = 0; p < odd.size(); ++p)
    for (size_t r = 0; r < odd.size(); ++r)
      for (const auto& [k, c] : alg.bracket(odd[p], odd[r])) m(r * n + k, p) = c;
  return exact::rank(m) == odd.size();
}

Vector Subquotient::project(const Vector& v) const {
  if (!z.contains(v)) fail(ErrorKind::Precondition, "element is not in the subalgebra");
  return reps_span.coordinates(b.reduce(v));
}

Subquotient subquotient(const SuperLieAlgebra& alg, const Subspace& z, const Subspace& b, const std::string& name) {
  if (z.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim())
    fail(ErrorKind::InvalidArgument, "subquotient: subspace dimension mismatch");
  Subquotient out;
  out.z = z;
  out.b = b;
  out.representatives = exact::quotient_basis(z, b);
  out.reps_span = Subspace::span(out.representatives, alg.dim());

  const auto zb = z.basis_vectors();
  for (const auto& x : zb)
    for (const auto& y : zb)
      if (!z.contains(alg.bracket(x, y))) fail(ErrorKind::Precondition, "subquotient: Z is not closed under the bracket");
  for (const auto& x : zb)
    for (const auto& y : b.basis_vectors())
      if (!b.contains(alg.bracket(x, y))) fail(ErrorKind::Precondition, "subquotient: B is not an ideal of Z");

  std::vector<BasisLabel> labels;
  std::map<std::string, int> seen;
  for (const auto& r : out.representatives) {
    BasisLabel l;
    std::optional<size_t> lead;
    bool unit = true;
    std::optional<int> weight;
    bool weight_ok = true;
    for (size_t k = 0; k < r.size(); ++k) {
      if (r[k].is_zero()) continue;
      if (!lead) {
        lead = k;
        weight = alg.label(k).weight;
      } else {
        unit = false;
        if (alg.is_odd(k) != alg.is_odd(*lead)) fail(ErrorKind::Internal, "subquotient representative is not homogeneous");
      }
      if (alg.label(k).weight != weight) weight_ok = false;
      if (!r[k].is_one()) unit = false;
    }
    l.name = unit ? alg.label(*lead).name : "[" + format_element(alg, r) + "]";
    l.parity = alg.label(*lead).parity;
    l.block = alg.label(*lead).block;
    if (weight_ok) l.weight = weight;
    if (seen[l.name]++) l.name += "#" + std::to_string(seen[l.name]);
    labels.push_back(std::move(l));
  }
  out.algebra = SuperLieAlgebra(name, std::move(labels));
  const size_t m = out.representatives.size();
  for (size_t p = 0; p < m; ++p)
    for (size_t q = p; q < m; ++q) {
      Vector w = alg.bracket(out.representatives[p], out.representatives[q]);
      out.algebra.set_bracket(p, q, to_sparse(out.project(w)));
    }
  return out;
}

std::string format_element(const SuperLieAlgebra& alg, const Vector& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    const Scalar& c = v[k];
    if (c.is_zero()) continue;
    const std::string& name = alg.label(k).name;
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      if (mag != 1) coeff = mag.get_str() + "*";
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class mag = abs(c.im());
      coeff = mag == 1 ? "i*" : mag.get_str() + "*i*";
    } else {
      coeff = "(" + c.to_string() + ")*";
    }
    std::string term = coeff + name;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string normalize_label_text(const std::string& text) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"alpha", "α"}, {"^v", "∨"}, {"(x)", "⊗"}, {"dzb", "∂z̄"}, {"dz", "∂z"}, {"−", "-"}};
  std::string s = text;
  for (const auto& [from, to] : aliases) {
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return s;
}

Vector parse_element(const SuperLieAlgebra& alg, const std::string& text) {
  const std::string s = normalize_label_text(text);
  if (s.find_first_not_of(" \t0") == std::string::npos && s.find('0') != std::string::npos) return Vector(alg.dim());
  std::vector<std::string> labels;
  for (const auto& l : alg.basis()) labels.push_back(l.name);
  std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

  Vector out(alg.dim());
  int sign = 1;
  std::string coeff;
  std::optional<size_t> label;
  bool any = false;
  auto finish = [&]() {
    if (!label) {
      if (coeff.find_first_not_of(" \t") != std::string::npos)
        fail(ErrorKind::InvalidArgument, "term without a basis label in '" + text + "'");
      return;
    }
    std::string c = coeff;
    while (!c.empty() && (c.back() == ' ' || c.back() == '*' || c.back() == '\t')) c.pop_back();
    Scalar value = c.find_first_not_of(" \t") == std::string::npos ? Scalar(1) : Scalar::parse(c);
    out[*label] += sign < 0 ? -value : value;
    any = true;
    sign = 1;
    coeff.clear();
    label.reset();
  };
  int depth = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    if (depth == 0) {
      bool matched = false;
      for (const auto& l : labels)
        if (s.compare(pos, l.size(), l) == 0) {
          if (label) fail(ErrorKind::InvalidArgument, "two labels in one term of '" + text + "'");
          label = alg.index_of(l);
          pos += l.size();
          matched = true;
          break;
        }
      if (matched) continue;
    }
    char ch = s[pos];
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (label || coeff.find_first_not_of(" \t") != std::string::npos) {
        if (!label) fail(ErrorKind::InvalidArgument, "term without a basis label in '" + text + "'");
        finish();
      }
      if (ch == '-') sign = -sign;
      ++pos;
      continue;
    }
    if (label && ch != ' ' && ch != '\t') fail(ErrorKind::InvalidArgument, "unexpected text after label in '" + text + "'");
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) fail(ErrorKind::InvalidArgument, "unbalanced parentheses in '" + text + "'");
    coeff += ch;
    ++pos;
  }
  if (depth != 0) fail(ErrorKind::InvalidArgument, "unbalanced parentheses in '" + text + "'");
  finish();
  if (!any)
    fail(ErrorKind::InvalidArgument, "could not parse element '" + text + "'");
  return out;
}

Json to_json(const SuperLieAlgebra& alg) {
  Json j;
  j["name"] = alg.name();
  j["dim"] = {{"even", alg.even_dim()}, {"odd", alg.odd_dim()}};
  Json basis = Json::array();
  for (const auto& l : alg.basis()) {
    Json b;
    b["name"] = l.name;
    b["parity"] = to_string(l.parity);
    b["block"] = to_string(l.block);
    if (l.weight) b["weight"] = *l.weight;
    basis.push_back(b);
  }
  j["basis"] = basis;
  Json brackets = Json::array();
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t k = i; k < alg.dim(); ++k) {
      const auto& v = alg.bracket(i, k);
      if (v.empty()) continue;
      Json val = Json::array();
      for (const auto& [m, c] : v) val.push_back(Json::array({m, c.to_string()}));
      brackets.push_back(Json::array({i, k, val}));
    }
  j["brackets"] = brackets;
  if (alg.translation_metric()) j["translation_metric"] = exact::to_json(*alg.translation_metric());
  return j;
}

SuperLieAlgebra algebra_from_json(const Json& j) {
  try {
    std::vector<BasisLabel> basis;
    for (const auto& b : j.at("basis")) {
      BasisLabel l;
      l.name = b.at("name").get<std::string>();
      l.parity = b.at("parity").get<std::string>() == "odd" ? Parity::Odd : Parity::Even;
      l.block = parse_block(b.at("block").get<std::string>());
      if (b.contains("weight")) l.weight = b.at("weight").get<int>();
      basis.push_back(std::move(l));
    }
    SuperLieAlgebra alg(j.at("name").get<std::string>(), std::move(basis));
    for (const auto& e : j.at("brackets")) {
      SparseVec v;
      for (const auto& t : e.at(2)) v.emplace_back(t.at(0).get<size_t>(), exact::scalar_from_json(t.at(1)));
      alg.set_bracket(e.at(0).get<size_t>(), e.at(1).get<size_t>(), v);
    }
    if (j.contains("translation_metric")) alg.set_translation_metric(exact::matrix_from_json(j.at("translation_metric")));
    return alg;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed algebra JSON: ") + e.what());
  }
}

}  // namespace twistlab::superlie

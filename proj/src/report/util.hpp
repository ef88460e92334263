#pragma once

#include "report/envelope.hpp"
#include "superlie/algebra.hpp"

#include <atomic>
#include <thread>

namespace twistlab::report {

using exact::Scalar;
using exact::Vector;
using superlie::SuperLieAlgebra;

/// The N = 4 algebra with sl(W) R-symmetry, built once.
const SuperLieAlgebra& n4_algebra();

/// Translation-coordinate vector as an algebra element.
Vector lift_translation(const SuperLieAlgebra& alg, const Vector& v);

Json labels(const SuperLieAlgebra& alg, const std::vector<Vector>& vs);
Json translation_labels(const SuperLieAlgebra& alg, const std::vector<Vector>& vs);

/// "μ:ν" with μ, ν in Q(i), not both zero.
std::pair<Scalar, Scalar> parse_projective_point(const std::string& text);

/// WARNING details for ht(λ) image dims against the expected three-dimensional image.
Json ht_warning_details(const std::vector<Scalar>& lambdas);

/// Evaluates f(0..n-1) on up to `threads` workers; results come back in index order.
template <class T, class F>
std::vector<T> parallel_map(size_t n, unsigned threads, F f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t workers = std::min<size_t>(std::max(1u, threads), n);
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace twistlab::report

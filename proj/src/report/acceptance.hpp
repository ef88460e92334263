#pragma once

#include "report/envelope.hpp"

namespace twistlab::report {

struct Criterion {
  Criterion(int id_, std::string name_, bool pass_ = false) : id(id_), name(std::move(name_)), pass(pass_) {}
  int id = 0;
  std::string name;
  bool pass = false;
  Json details = Json::object();
  std::vector<Check> warnings;
};

/// Criteria 1..10. Output does not depend on threads.
std::vector<Criterion> run_criteria(unsigned threads);

Json to_json(const std::vector<Criterion>& cs);

}  // namespace twistlab::report

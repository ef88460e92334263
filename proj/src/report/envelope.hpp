#pragma once

#include "exact/json_io.hpp"

namespace twistlab::report {

inline constexpr const char* kToolVersion = "0.4.0";

enum class Status { Pass, Fail, Warning };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  Json details = Json::object();
};

inline Check check(std::string name, bool pass, Json details = Json::object()) {
  return {std::move(name), pass ? Status::Pass : Status::Fail, std::move(details)};
}

struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;

  /// Warnings do not fail a report.
  bool passed() const;
  Json to_json() const;
};

/// Plain-text rendering of a serialized envelope.
std::string render_table(const Json& envelope);

}  // namespace twistlab::report

#include "report/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace twistlab::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warning: return "warning";
  }
  return "fail";
}

bool Envelope::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

Json Envelope::to_json() const {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  j["checks"] = cs;
  return j;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

// Display columns, counting UTF-8 code points.
size_t width_of(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

bool is_flat(const Json& j) { return !j.is_object() && !j.is_array(); }

bool flat_list(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_flat); }

// Arrays of objects whose values are all flat become column tables.
bool tabular(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_object()) return false;
    for (const auto& [k, v] : row.items())
      if (!is_flat(v) && !flat_list(v)) return false;
  }
  return true;
}

std::string cell(const Json& v) {
  if (!flat_list(v)) return scalar_text(v);
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
  return s;
}

void render_rows(std::ostringstream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<size_t> width;
  for (const auto& c : cols) width.push_back(width_of(c));
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (size_t i = 0; i < cols.size(); ++i) {
      r.push_back(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
      width[i] = std::max(width[i], width_of(r.back()));
    }
    cells.push_back(std::move(r));
  }
  auto line = [&](const std::vector<std::string>& r) {
    out << indent;
    for (size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - width_of(r[i]) + 2, ' ');
    }
    out << '\n';
  };
  line(cols);
  for (const auto& r : cells) line(r);
}

void render(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (is_flat(v) || flat_list(v)) {
      out << indent << key << ": " << cell(v) << '\n';
    } else if (tabular(v)) {
      out << indent << key << ":\n";
      render_rows(out, v, indent + "  ");
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (size_t i = 0; i < v.size(); ++i) {
        if (is_flat(v[i]) || flat_list(v[i])) {
          out << indent << "  - " << cell(v[i]) << '\n';
        } else {
          out << indent << "  [" << i << "]\n";
          render(out, v[i], indent + "    ");
        }
      }
    } else {
      out << indent << key << ":\n";
      render(out, v, indent + "  ");
    }
  }
}

}  // namespace

std::string render_table(const Json& env) {
  std::ostringstream out;
  out << "twistlab " << scalar_text(env.value("tool_version", Json())) << "  " << scalar_text(env.value("command", Json()))
      << '\n';
  if (env.contains("inputs") && !env["inputs"].empty()) {
    out << "\ninputs\n";
    render(out, env["inputs"], "  ");
  }
  if (env.contains("result")) {
    out << "\nresult\n";
    render(out, env["result"], "  ");
  }
  if (env.contains("checks") && !env["checks"].empty()) {
    out << "\nchecks\n";
    for (const auto& c : env["checks"]) {
      std::string status = c.value("status", "fail");
      std::transform(status.begin(), status.end(), status.begin(), ::toupper);
      out << "  " << status << "  " << c.value("name", "") << '\n';
      if (c.contains("details") && c["details"].contains("message"))
        out << "        " << scalar_text(c["details"]["message"]) << '\n';
    }
  }
  return out.str();
}

}  // namespace twistlab::report

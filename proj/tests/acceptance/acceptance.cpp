// Runs `twistlab selftest` with TWISTLAB_THREADS=1 and =8, prints one line per
// acceptance criterion, and requires the two reports to be byte-identical.
#include <json.hpp>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int exit_code = -1;
};

Run run_selftest(const char* threads) {
  const std::string cmd = std::string("TWISTLAB_THREADS=") + threads + " '" + TWISTLAB_CLI_PATH + "' selftest";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main() {
  const Run one = run_selftest("1");
  const Run eight = run_selftest("8");

  nlohmann::ordered_json report;
  try {
    report = nlohmann::ordered_json::parse(one.out);
  } catch (const std::exception& e) {
    std::cout << "FAIL  selftest output is not JSON: " << e.what() << '\n';
    return 1;
  }

  bool all = true;
  for (const auto& c : report["result"]["criteria"]) {
    const int id = c["id"].get<int>();
    bool pass = c["status"] == "pass";
    std::string extra;
    if (id == 11) {
      const bool identical = one.out == eight.out && one.exit_code == eight.exit_code;
      pass = pass && identical;
      extra = identical ? " (TWISTLAB_THREADS=1 and =8 reports byte-identical)" : " (reports differ between 1 and 8 threads)";
    }
    all = all && pass;
    std::cout << (pass ? "PASS  " : "FAIL  ") << id << ". " << c["name"].get<std::string>() << extra << '\n';
  }
  for (const auto& ch : report["checks"])
    if (ch["status"] == "warning")
      std::cout << "WARN  " << ch["name"].get<std::string>() << ": " << ch["details"]["message"].get<std::string>() << '\n';
  if (report["result"]["criteria"].size() != 11) {
    std::cout << "FAIL  expected 11 criteria, got " << report["result"]["criteria"].size() << '\n';
    all = false;
  }
  if (one.exit_code != 0) {
    std::cout << "FAIL  selftest exit code " << one.exit_code << '\n';
    all = false;
  }
  return all ? 0 : 1;
}

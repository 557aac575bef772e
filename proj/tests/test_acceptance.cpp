// Acceptance battery: one PASS/FAIL line per criterion.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "hwkit/suite.hpp"

#ifndef HWKIT_CLI_PATH
#error "HWKIT_CLI_PATH must name the hwkit executable"
#endif

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void report(const hwkit::CriterionResult& r, bool pass) {
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
              r.limit_seconds);
  for (const auto& d : r.details)
    if (!pass || d.rfind("ok: ", 0) != 0) std::printf("    %s\n", d.c_str());
}

}  // namespace

int main() {
  using namespace hwkit;
  int failures = 0;
  for (int id = 1; id < kCriteria; ++id) {
    auto r = run_criterion(id);
    bool pass = r.status == CheckStatus::Pass;
    failures += !pass;
    report(r, pass);
  }

  // The last criterion adds CLI determinism to the library round trips.
  auto r = run_criterion(kCriteria);
  std::string cmd = std::string("\"") + HWKIT_CLI_PATH + "\" suite default --json 2>/dev/null";
  auto first = run(cmd);
  auto second = run(cmd);
  bool same = first.code == 0 && second.code == 0 && !first.out.empty() && first.out == second.out;
  r.details.push_back(std::string(same ? "ok: " : "FAIL: ") + "`hwkit suite default --json` twice gives identical bytes" +
                      " (exit codes " + std::to_string(first.code) + ", " + std::to_string(second.code) + ", " +
                      std::to_string(first.out.size()) + " bytes)");
  bool pass = r.status == CheckStatus::Pass && same;
  failures += !pass;
  report(r, pass);

  std::printf("%d of %d criteria passed\n", kCriteria - failures, kCriteria);
  return failures == 0 ? 0 : 1;
}

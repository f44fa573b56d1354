// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "cblab/acceptance.hpp"

namespace {

struct Process {
  int code = -1;
  std::string out;
};

// stdout of `command`, stderr folded in when asked
Process capture(const std::string& command) {
  Process p;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %2d  %-32s %s  %s\n", id, name.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
}

}  // namespace

int main() {
  bool all = true;
  for (const auto& r : cblab::run_acceptance()) {
    char detail[256];
    std::snprintf(detail, sizeof detail, "worst %.3e (tolerance %.0e), %s", r.worst, r.tolerance,
                  r.detail.c_str());
    report(r.id, r.name, r.pass, detail);
    all = all && r.pass;
  }

  const std::string tool = CBLAB_TOOL_PATH;
  const Process first = capture("'" + tool + "' verify-all");
  const Process second = capture("'" + tool + "' verify-all");
  const Process malformed = capture("'" + tool + "' theta --j three --tau-im 1 2>&1");
  const bool exits = first.code == 0 && second.code == 0;
  const bool identical = !first.out.empty() && first.out == second.out;
  const bool rejected = malformed.code == 2 && malformed.out.find("parse_error") != std::string::npos &&
                        malformed.out.find("--help") != std::string::npos;
  std::string detail = std::string("verify-all exit ") + std::to_string(first.code) + "/" +
                       std::to_string(second.code) + (identical ? ", identical output" : ", output differs") +
                       ", malformed input exit " + std::to_string(malformed.code);
  report(12, "command line", exits && identical && rejected, detail);
  all = all && exits && identical && rejected;

  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "chevwidth/acceptance.hpp"

int main(int argc, char** argv) {
  chevwidth::AcceptanceOptions opt;
  const char* env = std::getenv("CHEVWIDTH_EXPENSIVE");
  opt.expensive = env != nullptr && std::strcmp(env, "0") != 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expensive") == 0) opt.expensive = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
  }
  int failed = 0;
  for (int id = 1; id <= 8; ++id) {
    const auto r = chevwidth::run_criterion(id, opt);
    std::printf("%s\n", chevwidth::summary_line(r).c_str());
    if (!r.passed) {
      ++failed;
      for (const auto& s : r.failure_samples) std::printf("  %s\n", s.dump().c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

// Prints one PASS/FAIL line per acceptance criterion; exit 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cominor/suite.hpp"

int main(int argc, char** argv) {
  cominor::SuiteOptions o;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("--seed=", 0) == 0) o.seed = std::strtoull(a.c_str() + 7, nullptr, 10);
    else ids.push_back(std::atoi(a.c_str()));
  }
  bool all = true;
  for (const auto& r : cominor::run_suite(o, ids)) {
    std::printf("%s %d %s: %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

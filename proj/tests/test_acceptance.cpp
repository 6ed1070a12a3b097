#include <cstdio>

#include "acceptance.hpp"

int main() {
  illtrans::AcceptanceOptions opts;
  opts.on_result = [](const illtrans::CriterionResult& r) {
    std::printf("AC%d %s: %s (%.2fs) %s\n", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  };
  illtrans::AcceptanceReport rep = illtrans::run_acceptance(opts);
  return rep.all_passed() ? 0 : 1;
}

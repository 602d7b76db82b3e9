#include <chrono>
#include <cstdio>
#include <exception>

#include "nilmix/verification.hpp"

int main() {
  struct Criterion {
    const char* title;
    const char* suite;
  };
  const Criterion criteria[] = {
      {"PI orbit tables (exceptional and classical)", "tables"},
      {"E-type grids and sl(2n) family", "egrids"},
      {"d0(0)=d1(4) classification sweep", "sweep04"},
      {"d0(0)=d1(2) lists", "sweep02"},
      {"regular-in-g0 property sweep", "regular-g0"},
      {"kappa identity up to rank 12", "kappa"},
      {"matrix oracle equivalence", "oracle"},
      {"Upsilon tables and examples", "upsilon"},
      {"IBN coherence of Upsilon outputs", "ibn"},
      {"collapsing defect", "defect"},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    int passed = 0;
    int failed = 0;
    try {
      const auto report = nilmix::run_suite(c.suite);
      ok = report.ok();
      passed = report.passed();
      failed = report.failed();
      for (const auto& k : report.cases)
        if (!k.pass)
          std::printf("    FAIL %s [%s]: expected %s, computed %s\n", k.id.c_str(), k.claim.c_str(),
                      k.expected.c_str(), k.computed.c_str());
    } catch (const std::exception& e) {
      std::printf("    error: %s\n", e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-46s %s (%d passed, %d failed, %.2fs)\n", index++, c.title, ok ? "PASS" : "FAIL",
                passed, failed, secs);
    if (!ok) ++failures;
  }
  return failures ? 1 : 0;
}

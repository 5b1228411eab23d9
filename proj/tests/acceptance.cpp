// Acceptance gate: runs every top-level self-check and prints one line per
// criterion. Exits nonzero if any check fails.
#include <cstdio>

#include "liepack/selftest.hpp"

int main() {
  int failures = 0;
  for (const auto &[name, ok] : liepack::selftest::run_all()) {
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name.c_str());
    if (!ok)
      ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#pragma once

#include "mbcount/exact.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mbcount {

enum class MbOracle { Naive, Extract, Both };

// One formula-vs-brute-force comparison.
struct VerifyRecord {
  long long n;
  std::string label;    // "bn brute", "mb naive", "mb extract"
  ExactCount formula;
  ExactCount oracle;
  bool match;
  double seconds;       // oracle wall time
};

struct VerifyReport {
  std::vector<VerifyRecord> records;  // ascending n, bn before mb

  bool all_match() const;
};

// Recomputes every count for n = 1..max_n by exhaustive enumeration (target
// 0 for the blanket oracles; any target gives the same count) and compares
// with the closed-form values. The enumeration cap applies.
VerifyReport run_verify(long long max_n, MbOracle which, bool force = false);

// Deterministic PASS/FAIL lines plus a summary; no timings.
void write_verify_report(std::ostream& out, const VerifyReport& report);

// Wall-clock diagnostics, kept apart so the report stays reproducible.
void write_verify_timings(std::ostream& out, const VerifyReport& report);

}  // namespace mbcount

#include "mbcount/verify.hpp"

#include "mbcount/counting.hpp"
#include "mbcount/enumeration.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mbcount {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VerifyRecord compare(long long n, std::string label, ExactCount formula,
                     ExactCount oracle, double seconds) {
  bool match = formula == oracle;
  return VerifyRecord{n, std::move(label), std::move(formula),
                      std::move(oracle), match, seconds};
}

}  // namespace

bool VerifyReport::all_match() const {
  for (const VerifyRecord& record : records)
    if (!record.match)
      return false;
  return true;
}

VerifyReport run_verify(long long max_n, MbOracle which, bool force) {
  if (max_n < 1)
    throw std::domain_error("run_verify: max_n must be at least 1");

  VerifyReport report;
  MemoTable memo;
  for (long long n = 1; n <= max_n; ++n) {
    int nodes = static_cast<int>(n);

    auto start = Clock::now();
    ExactCount brute = count_dags_brute(nodes, force);
    report.records.push_back(compare(n, "bn brute", bn_count(n, memo), brute,
                                     seconds_since(start)));

    ExactCount mb = mb_count(n, memo);
    if (which == MbOracle::Naive || which == MbOracle::Both) {
      start = Clock::now();
      ExactCount naive = count_mb_naive(nodes, 0, force);
      report.records.push_back(
          compare(n, "mb naive", mb, naive, seconds_since(start)));
    }
    if (which == MbOracle::Extract || which == MbOracle::Both) {
      start = Clock::now();
      ExactCount extracted = count_mb_by_extraction(nodes, 0, force);
      report.records.push_back(
          compare(n, "mb extract", mb, extracted, seconds_since(start)));
    }
  }
  return report;
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
  std::size_t matched = 0;
  for (const VerifyRecord& record : report.records) {
    out << (record.match ? "PASS" : "FAIL") << " n=" << record.n << ' '
        << record.label << " formula=" << record.formula
        << " oracle=" << record.oracle << '\n';
    if (record.match)
      ++matched;
  }
  out << "verify: " << matched << '/' << report.records.size()
      << " comparisons matched\n";
}

void write_verify_timings(std::ostream& out, const VerifyReport& report) {
  out << std::fixed << std::setprecision(3);
  for (const VerifyRecord& record : report.records)
    out << "n=" << record.n << ' ' << record.label << ' ' << record.seconds
        << "s\n";
}

}  // namespace mbcount

#pragma once

#include "mbcount/counting.hpp"
#include "mbcount/exact.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mbcount {

enum class TableFormat { Csv, Tsv, Markdown };

// Paper layout switches to 6-decimal scientific notation above this size and
// groups exact integers with commas.
inline constexpr long long kPaperExactMaxN = 12;
inline constexpr int kPaperScientificPlaces = 6;

struct TableOptions {
  bool paper_layout = false;
  int sig_digits = 12;  // ratio precision
};

// One table line: the exact counts, their exact quotient (numerator = the
// DAG count, denominator = the blanket count, unreduced) and the rendered
// texts the table will print.
struct CountRow {
  long long n;
  ExactCount bn;
  ExactCount mb;
  ExactRatio ratio;
  std::string bn_text;
  std::string mb_text;
  std::string ratio_text;
};

CountRow make_count_row(long long n, MemoTable& memo,
                        const TableOptions& options);

// Rows for n = 1..max_n sharing one memo table.
std::vector<CountRow> build_count_rows(long long max_n, MemoTable& memo,
                                       const TableOptions& options);

// Csv gets an "n,bn,mb,ratio" header and quotes fields containing commas;
// Tsv is bare rows; Markdown is a pipe table.
void write_table(std::ostream& out, const std::vector<CountRow>& rows,
                 TableFormat format);

}  // namespace mbcount

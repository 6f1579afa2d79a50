#include "mbcount/table.hpp"

#include "mbcount/format.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace mbcount {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find(',') == std::string::npos)
    return text;
  return '"' + text + '"';
}

}  // namespace

CountRow make_count_row(long long n, MemoTable& memo,
                        const TableOptions& options) {
  ExactCount bn = bn_count(n, memo);
  ExactCount mb = mb_count(n, memo);
  ExactRatio quotient(bn, mb);

  std::string bn_text, mb_text, ratio_text;
  if (options.paper_layout) {
    bn_text = n <= kPaperExactMaxN
                  ? group_thousands(bn.str())
                  : render_scientific(bn, kPaperScientificPlaces);
    mb_text = n <= kPaperExactMaxN
                  ? group_thousands(mb.str())
                  : render_scientific(mb, kPaperScientificPlaces);
    ratio_text = group_thousands(render_decimal(quotient, options.sig_digits));
  } else {
    bn_text = bn.str();
    mb_text = mb.str();
    ratio_text = render_decimal(quotient, options.sig_digits);
  }

  return CountRow{n,
                  std::move(bn),
                  std::move(mb),
                  std::move(quotient),
                  std::move(bn_text),
                  std::move(mb_text),
                  std::move(ratio_text)};
}

std::vector<CountRow> build_count_rows(long long max_n, MemoTable& memo,
                                       const TableOptions& options) {
  if (max_n < 1)
    throw std::domain_error("build_count_rows: max_n must be at least 1");
  std::vector<CountRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (long long n = 1; n <= max_n; ++n)
    rows.push_back(make_count_row(n, memo, options));
  return rows;
}

void write_table(std::ostream& out, const std::vector<CountRow>& rows,
                 TableFormat format) {
  switch (format) {
    case TableFormat::Csv:
      out << "n,bn,mb,ratio\n";
      for (const CountRow& row : rows)
        out << row.n << ',' << csv_field(row.bn_text) << ','
            << csv_field(row.mb_text) << ',' << csv_field(row.ratio_text)
            << '\n';
      break;
    case TableFormat::Tsv:
      for (const CountRow& row : rows)
        out << row.n << '\t' << row.bn_text << '\t' << row.mb_text << '\t'
            << row.ratio_text << '\n';
      break;
    case TableFormat::Markdown:
      out << "| n | bn | mb | ratio |\n";
      out << "| --- | --- | --- | --- |\n";
      for (const CountRow& row : rows)
        out << "| " << row.n << " | " << row.bn_text << " | " << row.mb_text
            << " | " << row.ratio_text << " |\n";
      break;
  }
}

}  // namespace mbcount

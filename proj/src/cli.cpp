#include "mbcount/cli.hpp"

#include "mbcount/counting.hpp"
#include "mbcount/enumeration.hpp"
#include "mbcount/format.hpp"
#include "mbcount/table.hpp"
#include "mbcount/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace mbcount::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CountArgs {
  std::string kind = "bn";
  long long n = 0;
  std::string format = "auto";
  int sig_digits = 12;
};

struct TableArgs {
  long long max_n = 1;
  std::string format = "csv";
  bool paper = false;
  int sig_digits = 12;
};

struct VerifyArgs {
  long long max_n = 1;
  std::string oracle = "both";
  bool force = false;
};

struct EnumArgs {
  long long n = 1;
  long long target = 0;
  std::string format = "edges";
  bool force = false;
};

struct BenchArgs {
  long long max_n = 1;
};

int run_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  MemoTable memo;
  if (args.kind == "ratio") {
    if (args.n < 1) {
      err << "count: --kind ratio needs --n >= 1\n";
      return 2;
    }
    ExactRatio value = ratio(args.n, memo);
    if (args.format == "exact")
      out << value.numerator << '/' << value.denominator << '\n';
    else
      out << render_decimal(value, args.sig_digits) << '\n';
    return 0;
  }

  ExactCount value;
  if (args.kind == "bn") {
    if (args.n < 0) {
      err << "count: --kind bn needs --n >= 0\n";
      return 2;
    }
    value = bn_count(args.n, memo);
  } else {
    if (args.n < 1) {
      err << "count: --kind mb needs --n >= 1\n";
      return 2;
    }
    value = mb_count(args.n, memo);
  }

  bool scientific = args.format == "scientific" ||
                    (args.format == "auto" && args.n > kPaperExactMaxN);
  if (scientific)
    out << render_scientific(value, kPaperScientificPlaces) << '\n';
  else
    out << value << '\n';
  return 0;
}

int run_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 1) {
    err << "table: --max-n must be at least 1\n";
    return 2;
  }
  TableFormat format = args.format == "csv"   ? TableFormat::Csv
                       : args.format == "tsv" ? TableFormat::Tsv
                                              : TableFormat::Markdown;
  MemoTable memo;
  TableOptions options{args.paper, args.sig_digits};
  write_table(out, build_count_rows(args.max_n, memo, options), format);
  return 0;
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  MbOracle which = args.oracle == "naive"     ? MbOracle::Naive
                   : args.oracle == "extract" ? MbOracle::Extract
                                              : MbOracle::Both;
  VerifyReport report = mbcount::run_verify(args.max_n, which, args.force);
  write_verify_report(out, report);
  write_verify_timings(err, report);
  return report.all_match() ? 0 : 1;
}

int run_enum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "enum: --n must be at least 1\n";
    return 2;
  }
  if (args.target < 0 || args.target >= args.n) {
    err << "enum: --target must name a node (0.." << args.n - 1 << ")\n";
    return 2;
  }

  std::vector<MbStructureKey> keys = enumerate_mb(
      static_cast<int>(args.n), static_cast<int>(args.target), args.force);
  if (args.format == "edges") {
    for (const MbStructureKey& key : keys)
      out << key.edge_text() << '\n';
  } else {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::vector<NodeRole> roles = classify_roles(keys[i].to_digraph());
      auto node_name = [&roles](int v) {
        return std::string(1, role_letter(roles[static_cast<std::size_t>(v)])) +
               std::to_string(v);
      };
      out << "digraph mb_" << i << " {\n";
      for (int v = 0; v < keys[i].node_count(); ++v)
        out << "  " << node_name(v) << ";\n";
      for (auto [src, dst] : keys[i].edges())
        out << "  " << node_name(src) << " -> " << node_name(dst) << ";\n";
      out << "}\n";
    }
  }
  return 0;
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 1) {
    err << "bench: --max-n must be at least 1\n";
    return 2;
  }
  err << std::fixed << std::setprecision(6);
  MemoTable memo;
  for (long long n = 1; n <= args.max_n; ++n) {
    // Keep the DAG cache one level ahead so each measured call evaluates
    // exactly its own summands: n for bn, n(n+1)/2 for mb.
    bn_count(n - 1, memo);

    memo.ops().reset();
    auto start = Clock::now();
    bn_count(n, memo);
    double bn_seconds = seconds_since(start);
    std::uint64_t bn_terms = memo.ops().terms_evaluated;

    memo.ops().reset();
    start = Clock::now();
    mb_count(n, memo);
    double mb_seconds = seconds_since(start);
    std::uint64_t mb_terms = memo.ops().terms_evaluated;

    out << "n=" << n << " bn_terms=" << bn_terms << " mb_terms=" << mb_terms
        << '\n';
    err << "n=" << n << " bn " << bn_seconds << "s mb " << mb_seconds
        << "s\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact counts of DAG and Markov-blanket structure spaces"};
  app.name("mbcount");
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "Print one count or ratio");
  count->add_option("--kind", count_args.kind, "bn, mb or ratio")
      ->check(CLI::IsMember({"bn", "mb", "ratio"}));
  count->add_option("--n", count_args.n, "Number of nodes")->required();
  count->add_option("--format", count_args.format,
                    "exact, scientific or auto")
      ->check(CLI::IsMember({"exact", "scientific", "auto"}));
  count->add_option("--sig-digits", count_args.sig_digits,
                    "Significant digits for rendered ratios")
      ->check(CLI::PositiveNumber);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Print counts for n = 1..N");
  table->add_option("--max-n", table_args.max_n, "Largest n")->required();
  table->add_option("--format", table_args.format, "csv, tsv or md")
      ->check(CLI::IsMember({"csv", "tsv", "md"}));
  table->add_flag("--paper", table_args.paper,
                  "Comma-grouped integers up to n = 12, then 6-place "
                  "scientific notation");
  table->add_option("--sig-digits", table_args.sig_digits,
                    "Significant digits for the ratio column")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the formulas against exhaustive enumeration");
  verify->add_option("--max-n", verify_args.max_n, "Largest n")->required();
  verify->add_option("--oracle", verify_args.oracle,
                     "naive, extract or both")
      ->check(CLI::IsMember({"naive", "extract", "both"}));
  verify->add_flag("--force", verify_args.force,
                   "Allow one node beyond the enumeration cap");

  EnumArgs enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enum", "List every blanket structure for one target");
  enumerate->add_option("--n", enum_args.n, "Number of nodes")->required();
  enumerate->add_option("--target", enum_args.target, "Target node");
  enumerate->add_option("--format", enum_args.format, "edges or dot")
      ->check(CLI::IsMember({"edges", "dot"}));
  enumerate->add_flag("--force", enum_args.force,
                      "Allow one node beyond the enumeration cap");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Count evaluated summands and time the formulas");
  bench->add_option("--max-n", bench_args.max_n, "Largest n")->required();

  std::vector<const char*> argv;
  argv.push_back("mbcount");
  for (const std::string& arg : args)
    argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return run_count(count_args, out, err);
    if (*table) return run_table(table_args, out, err);
    if (*verify) return run_verify(verify_args, out, err);
    if (*enumerate) return run_enum(enum_args, out, err);
    if (*bench) return run_bench(bench_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace mbcount::cli

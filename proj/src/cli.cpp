#include "mcx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "mcx/automorphism.hpp"
#include "mcx/counting.hpp"
#include "mcx/error.hpp"
#include "mcx/json_io.hpp"
#include "mcx/oracle.hpp"
#include "mcx/preserving.hpp"
#include "mcx/special_elements.hpp"

namespace mcx::cli {

namespace {

constexpr int kCountingMaxN = 16;
constexpr int kEnumerationMaxN = 4;
constexpr int kPreservingMaxN = 6;
constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// Explicit --format wins; otherwise MCX_FORMAT if the command supports it.
std::string pick_format(const std::string& given, const std::vector<std::string>& allowed) {
  if (!given.empty()) return given;
  if (const char* env = std::getenv("MCX_FORMAT")) {
    if (std::find(allowed.begin(), allowed.end(), env) != allowed.end()) return env;
  }
  return allowed.front();
}

// Returns the element budget to hand to the library: its default unless the
// user raised the n cap beyond the subcommand default.
std::uint64_t check_cap(int n, std::optional<int> budget, int default_cap, std::uint64_t library_default) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  const int cap = budget.value_or(default_cap);
  if (n > cap) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                         " (raise it with --budget)");
  }
  return cap > default_cap ? kUnlimited : library_default;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string csv_unit_header(int n) {
  std::string line;
  for (std::uint32_t m = 0; m < unit_count(n); ++m) {
    if (m) line += ',';
    line += m == 0 ? "1" : UnitIndex{m}.name();
  }
  return line;
}

std::string csv_row(const MulticomplexNumber& x) {
  std::string line;
  const auto c = x.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (m) line += ',';
    line += quoted(c[m].to_fraction_string());
  }
  return line;
}

std::string csv_perm_header(int symbols) {
  std::string line;
  for (int j = 1; j <= symbols; ++j) line += (j > 1 ? "," : "") + std::to_string(j);
  return line;
}

std::string csv_perm_row(const SignedPermutation& p) {
  std::string line;
  for (int j = 0; j < p.symbols(); ++j) line += (j ? "," : "") + std::to_string(p.images()[j]);
  return line;
}

// Writes a JSON array one element per line so large enumerations stream.
class JsonArrayWriter {
 public:
  explicit JsonArrayWriter(std::ostream& out) : out_(out) { out_ << '['; }
  void push(const Json& j) {
    out_ << (first_ ? "\n" : ",\n") << j.dump();
    first_ = false;
  }
  void close() { out_ << (first_ ? "]\n" : "\n]\n"); }

 private:
  std::ostream& out_;
  bool first_ = true;
};

EpsOrder parse_eps_order(const std::string& s) { return s == "ascending" ? EpsOrder::Ascending : EpsOrder::Descending; }

struct Options {
  std::string kind;
  int n = 0;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> symbols;
  std::optional<int> budget;
  std::string format;
  std::string special_kind = "minus-one";
  std::string eps_order = "descending";
  std::string perm;
  std::string input = "-";
  std::string suite = "all";
  int max_n = 8;
};

int do_count(const Options& o, std::ostream& out) {
  const std::string format = pick_format(o.format, {"text", "json"});
  BigCount value;
  Json meta{{"kind", o.kind}};
  if (o.kind == "signed-r-involutions") {
    if (!o.symbols) throw DomainError("signed-r-involutions needs --N-symbols");
    const std::uint64_t symbols = *o.symbols;
    const std::uint64_t cap = std::uint64_t{1} << (o.budget.value_or(kCountingMaxN) - 1);
    if (symbols < 1) throw DomainError("--N-symbols must be >= 1");
    if (symbols > cap) throw BudgetExceeded("--N-symbols exceeds the cap of " + std::to_string(cap) + " (raise it with --budget)");
    value = count_signed_r_involutions(symbols, o.r.value_or(2));
    meta["N"] = symbols;
    meta["r"] = o.r.value_or(2);
  } else {
    check_cap(o.n, o.budget, kCountingMaxN, 0);
    meta["n"] = o.n;
    if (o.kind == "automorphisms") {
      value = count_automorphisms(o.n);
    } else if (o.kind == "involutions") {
      value = count_involutions(o.n);
    } else if (o.kind == "r-involutions") {
      if (!o.r) throw DomainError("r-involutions needs --r");
      value = count_r_involutions(o.n, *o.r);
      meta["r"] = *o.r;
    } else if (o.kind == "preserving") {
      value = count_preserving(o.n);
    } else {
      throw DomainError("unknown count kind '" + o.kind + "'");
    }
  }
  if (format == "json") {
    meta["value"] = value.get_str();
    out << meta.dump() << '\n';
  } else {
    out << value.get_str() << '\n';
  }
  return 0;
}

int do_table(const Options& o, std::ostream& out) {
  const std::string format = pick_format(o.format, {"markdown", "csv", "json"});
  check_cap(o.max_n, o.budget, kCountingMaxN, 0);
  if (format == "json") {
    Json rows = Json::array();
    for (int n = 1; n <= o.max_n; ++n) rows.push_back(Json{{"n", n}, {"F", count_involutions(n).get_str()}});
    out << rows.dump() << '\n';
  } else if (format == "csv") {
    out << "n,F(n)\n";
    for (int n = 1; n <= o.max_n; ++n) out << n << ',' << count_involutions(n).get_str() << '\n';
  } else {
    out << "| n | F(n) |\n|---|---|\n";
    for (int n = 1; n <= o.max_n; ++n) out << "| " << n << " | " << count_involutions(n).get_str() << " |\n";
  }
  return 0;
}

SpecialSetKind parse_special_kind(const std::string& s) {
  if (s == "minus-one") return SpecialSetKind::SquareMinusOne;
  if (s == "one") return SpecialSetKind::SquareOne;
  if (s == "idempotent") return SpecialSetKind::Idempotent;
  throw DomainError("unknown special kind '" + s + "'");
}

template <class Range>
void write_permutations(Range&& range, int symbols, EpsOrder labels, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << csv_perm_header(symbols) << '\n';
    for (const Automorphism& f : range) out << csv_perm_row(relabel(f.permutation(), labels)) << '\n';
    return;
  }
  JsonArrayWriter w(out);
  for (const Automorphism& f : range) w.push(to_json(relabel(f.permutation(), labels)));
  w.close();
}

int do_enumerate(const Options& o, std::ostream& out) {
  const std::string format = pick_format(o.format, {"json", "csv"});
  const EpsOrder labels = parse_eps_order(o.eps_order);
  if (o.kind == "special") {
    const std::uint64_t budget = check_cap(o.n, o.budget, kEnumerationMaxN, kDefaultSpecialBudget);
    const auto elements = enumerate_special(parse_special_kind(o.special_kind), o.n, budget);
    if (format == "csv") {
      out << csv_unit_header(o.n) << '\n';
      for (const auto& x : elements) out << csv_row(x) << '\n';
    } else {
      JsonArrayWriter w(out);
      for (const auto& x : elements) w.push(to_json(x));
      w.close();
    }
    return 0;
  }
  if (o.kind == "preserving") {
    const std::uint64_t budget = check_cap(o.n, o.budget, kPreservingMaxN, kDefaultPreservingBudget);
    if (format == "csv") {
      out << "kernel_dim,unit_images,perm\n";
      for_each_preserving_involution(o.n, [&](const PreservingInvolution& p) {
        std::string images;
        for (const auto& u : p.unit_images) images += (images.empty() ? "" : " ") + u.name();
        out << p.kernel_dimension << ',' << quoted(images) << ','
            << quoted(relabel(p.automorphism.permutation(), labels).to_string()) << '\n';
      }, budget);
    } else {
      JsonArrayWriter w(out);
      for_each_preserving_involution(o.n, [&](const PreservingInvolution& p) { w.push(to_json(p, labels)); }, budget);
      w.close();
    }
    return 0;
  }
  const std::uint64_t budget = check_cap(o.n, o.budget, kEnumerationMaxN, kDefaultEnumerationBudget);
  const int symbols = static_cast<int>(idempotent_count(o.n));
  if (o.kind == "automorphisms") {
    write_permutations(enumerate_automorphisms(o.n, budget), symbols, labels, format, out);
  } else if (o.kind == "involutions") {
    write_permutations(enumerate_involutions(o.n, budget), symbols, labels, format, out);
  } else if (o.kind == "r-involutions") {
    if (!o.r) throw DomainError("r-involutions needs --r");
    write_permutations(enumerate_r_involutions(o.n, *o.r, budget), symbols, labels, format, out);
  } else {
    throw DomainError("unknown enumeration kind '" + o.kind + "'");
  }
  return 0;
}

Json read_json_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("input is not valid JSON: ") + e.what());
  }
}

int do_apply(const Options& o, std::ostream& out) {
  check_cap(o.n, o.budget, kCountingMaxN, 0);
  const SignedPermutation perm = relabel(SignedPermutation::parse(o.perm), parse_eps_order(o.eps_order));
  const Automorphism f(o.n, perm);
  const MulticomplexNumber x = multicomplex_from_json(read_json_input(o.input));
  if (x.order() != o.n) throw DimensionError("input has order " + std::to_string(x.order()) + ", --n is " + std::to_string(o.n));
  out << to_json(f(x)).dump() << '\n';
  return 0;
}

int do_verify(const Options& o, std::ostream& out) {
  if (o.n < 1) throw DomainError("n must be >= 1, got " + std::to_string(o.n));
  const VerificationReport report = run_suite(o.suite, o.n, o.r.value_or(2));
  out << to_json(report).dump(2) << '\n';
  return report.passed ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multicomplex numbers: automorphisms, involution counts and oracles", "mcx"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--n", o.n, "Order n of MC(n)");
    if (required) opt->required();
  };
  auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--budget", o.budget, "Raise the cap on n"); };

  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->add_option("kind", o.kind, "automorphisms|involutions|r-involutions|preserving|signed-r-involutions")
      ->required()
      ->check(CLI::IsMember({"automorphisms", "involutions", "r-involutions", "preserving", "signed-r-involutions"}));
  add_n(count, false);
  count->add_option("--r", o.r, "r for r-involutions");
  count->add_option("--N-symbols", o.symbols, "Number of symbols N of B_N");
  add_budget(count);
  count->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "Table of F(n)");
  table->add_option("--max-n", o.max_n, "Largest n")->required();
  add_budget(table);
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "markdown"}));

  auto* enumerate = app.add_subcommand("enumerate", "Stream special elements, automorphisms or involutions");
  enumerate->add_option("target", o.kind, "special|automorphisms|involutions|r-involutions|preserving")
      ->required()
      ->check(CLI::IsMember({"special", "automorphisms", "involutions", "r-involutions", "preserving"}));
  add_n(enumerate, true);
  enumerate->add_option("--r", o.r);
  enumerate->add_option("--kind", o.special_kind, "minus-one|one|idempotent")
      ->check(CLI::IsMember({"minus-one", "one", "idempotent"}));
  enumerate->add_option("--eps-order", o.eps_order, "Symbol labelling of E_n")
      ->check(CLI::IsMember({"descending", "ascending"}));
  add_budget(enumerate);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* apply_cmd = app.add_subcommand("apply", "Apply the automorphism of a signed permutation");
  add_n(apply_cmd, true);
  apply_cmd->add_option("--perm", o.perm, "Signed permutation, e.g. \"3,-2,4,1\"")->required();
  apply_cmd->add_option("--input", o.input, "JSON file with the element ('-' for stdin)");
  apply_cmd->add_option("--eps-order", o.eps_order)->check(CLI::IsMember({"descending", "ascending"}));
  add_budget(apply_cmd);

  auto* verify = app.add_subcommand("verify", "Run brute-force oracle suites");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"special", "automorphisms", "involutions", "r-involutions", "preserving", "all"}));
  add_n(verify, true);
  verify->add_option("--r", o.r);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (count->parsed()) return do_count(o, out);
    if (table->parsed()) return do_table(o, out);
    if (enumerate->parsed()) return do_enumerate(o, out);
    if (apply_cmd->parsed()) return do_apply(o, out);
    if (verify->parsed()) return do_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace mcx::cli

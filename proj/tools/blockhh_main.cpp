// blockhh: tables of block dimensions, generating-function coefficients and
// identity checks for symmetric group algebras in characteristic p.
//
// Exit status: 0 success, 1 a verification or comparison failed, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockhh/blockhh.h"
#include "output.hpp"

namespace {

using blockhh::cli::Cell;
using blockhh::cli::Document;
using blockhh::cli::Exact;
using blockhh::cli::Format;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr std::uint32_t kBuiltinOrder = 40;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(bhh_status status, const std::string& what) : std::runtime_error(what), status(status) {}
  bhh_status status;
};

void check(bhh_status status) {
  if (status != BHH_OK) throw LibraryError(status, bhh_last_error());
}

using SeriesPtr = std::unique_ptr<bhh_series, decltype(&bhh_series_free)>;
using BlocksPtr = std::unique_ptr<bhh_blocks, decltype(&bhh_blocks_free)>;
using ReportPtr = std::unique_ptr<bhh_report, decltype(&bhh_report_free)>;

std::uint32_t default_order() {
  const char* env = std::getenv("BLOCKHH_ORDER_DEFAULT");
  if (env == nullptr || *env == '\0') return kBuiltinOrder;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size() || v == 0 || v > 100000) throw std::out_of_range("order");
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("BLOCKHH_ORDER_DEFAULT must be a positive integer, got '") + env + "'");
  }
}

void require_prime_arg(std::uint32_t p) {
  if (!bhh_is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
}

SeriesPtr make_series(bhh_series_kind kind, std::uint32_t p, std::uint32_t order, std::uint32_t s) {
  bhh_series* raw = nullptr;
  check(bhh_series_new(kind, p, order, s, &raw));
  return SeriesPtr(raw, &bhh_series_free);
}

std::string coeff(const bhh_series* series, std::uint32_t i) {
  const char* c = nullptr;
  check(bhh_series_coeff(series, i, &c));
  return c;
}

struct Options {
  std::string format = "table";
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t order = 0;
  std::uint32_t n_max = 0;
  std::uint32_t s = 0;
  std::string name;
  std::string which;
  std::int64_t fault = -1;
};

int emit(const Document& doc, const std::string& format_name) {
  const auto format = blockhh::cli::parse_format(format_name);
  if (!format) throw UsageError("--format: unknown format '" + format_name + "'");
  std::cout << blockhh::cli::render(doc, *format);
  return kOk;
}

int cmd_blocks(const Options& o) {
  require_prime_arg(o.p);
  bhh_blocks* raw = nullptr;
  check(bhh_blocks_new(o.p, o.n, &raw));
  BlocksPtr blocks(raw, &bhh_blocks_free);

  Document doc;
  doc.command = "blocks";
  doc.params = {{"p", std::int64_t{o.p}}, {"n", std::int64_t{o.n}}};
  doc.columns = {"core", "weight", "defect_order_exp", "dim_center", "dim_hh1"};
  for (std::size_t i = 0; i < bhh_blocks_count(blocks.get()); ++i) {
    bhh_block_info info{};
    check(bhh_blocks_get(blocks.get(), i, &info));
    std::string core;
    for (std::size_t k = 0; k < info.core_length; ++k) core += (k ? "," : "") + std::to_string(info.core_parts[k]);
    doc.add_row({core, std::int64_t{info.weight}, static_cast<std::int64_t>(info.defect_order_exp),
                 Exact{info.dim_center}, Exact{info.dim_hh1}});
  }
  return emit(doc, o.format);
}

int cmd_series(const Options& o, bool s_given, bool p_given) {
  static const std::vector<std::pair<std::string, bhh_series_kind>> kinds = {
      {"P", BHH_SERIES_P}, {"Z", BHH_SERIES_Z}, {"Y", BHH_SERIES_Y},
      {"HH1group", BHH_SERIES_HH1_GROUP}, {"Cs", BHH_SERIES_CS}};
  std::optional<bhh_series_kind> kind;
  for (const auto& [name, k] : kinds)
    if (name == o.name) kind = k;
  if (!kind) throw UsageError("--name: unknown series '" + o.name + "' (expected P, Z, Y, HH1group or Cs)");
  if (*kind == BHH_SERIES_CS && !s_given) throw UsageError("--s is required for --name Cs");
  if (*kind != BHH_SERIES_CS && s_given) throw UsageError("--s is only meaningful for --name Cs");
  if (*kind != BHH_SERIES_P && !p_given) throw UsageError("--p is required for --name " + o.name);
  if (p_given) require_prime_arg(o.p);
  if (*kind == BHH_SERIES_CS && o.s >= o.p)
    throw UsageError("--s: " + std::to_string(o.s) + " is out of range 0.." + std::to_string(o.p - 1));

  const auto series = make_series(*kind, o.p, o.order, o.s);
  Document doc;
  doc.command = "series";
  doc.params = {{"name", o.name}};
  if (p_given) doc.params.emplace_back("p", std::int64_t{o.p});
  doc.params.emplace_back("order", std::int64_t{o.order});
  if (s_given) doc.params.emplace_back("s", std::int64_t{o.s});
  doc.columns = {"exponent", "coefficient"};
  for (std::uint32_t i = 0; i < bhh_series_order(series.get()); ++i)
    doc.add_row({std::int64_t{i}, Exact{coeff(series.get(), i)}});
  return emit(doc, o.format);
}

int cmd_verify(const Options& o) {
  require_prime_arg(o.p);
  std::vector<ReportPtr> reports;
  auto run = [&](auto&& fn) {
    bhh_report* raw = nullptr;
    check(fn(&raw));
    reports.emplace_back(raw, &bhh_report_free);
  };
  const bool all = o.which == "all";
  if (all || o.which == "thm2")
    run([&](bhh_report** r) { return bhh_verify_theorem2(o.p, o.order - 1, o.fault, r); });
  if (all || o.which == "thm3")
    run([&](bhh_report** r) { return bhh_verify_theorem3(o.p, o.order, o.fault, r); });
  if (all || o.which == "eq12")
    for (std::uint32_t s = 0; s < o.p; ++s)
      run([&](bhh_report** r) { return bhh_verify_block_decomposition(o.p, s, o.order, o.fault, r); });
  if (reports.empty()) throw UsageError("--which: unknown identity '" + o.which + "'");

  Document doc;
  doc.command = "verify";
  doc.params = {{"which", o.which}, {"p", std::int64_t{o.p}}, {"order", std::int64_t{o.order}}};
  doc.columns = {"identity", "p", "order", "holds", "exponent", "lhs", "rhs", "detail"};
  bool all_hold = true;
  for (const auto& r : reports) {
    std::uint64_t exponent = 0;
    const char* lhs = nullptr;
    const char* rhs = nullptr;
    const bool holds = bhh_report_holds(r.get()) != 0;
    all_hold = all_hold && holds;
    Cell e, l, rr;
    if (bhh_report_discrepancy(r.get(), &exponent, &lhs, &rhs)) {
      e = static_cast<std::int64_t>(exponent);
      l = Exact{lhs};
      rr = Exact{rhs};
    }
    doc.add_row({std::string(bhh_report_identity(r.get())), std::int64_t{bhh_report_p(r.get())},
                 std::int64_t{bhh_report_order(r.get())}, holds, e, l, rr,
                 std::string(bhh_report_detail(r.get()))});
  }
  emit(doc, o.format);
  return all_hold ? kOk : kFailed;
}

int cmd_oracle(const Options& o) {
  require_prime_arg(o.p);
  const auto formula = make_series(BHH_SERIES_HH1_GROUP, o.p, o.n_max + 1, 0);
  Document doc;
  doc.command = "oracle";
  doc.params = {{"p", std::int64_t{o.p}}, {"n_max", std::int64_t{o.n_max}}};
  doc.columns = {"n", "oracle", "formula", "match"};
  bool all_match = true;
  for (std::uint32_t n = 0; n <= o.n_max; ++n) {
    std::uint64_t oracle = 0;
    check(bhh_hh1_group_oracle(o.p, n, &oracle));
    const std::string f = coeff(formula.get(), n);
    const bool match = std::to_string(oracle) == f;
    all_match = all_match && match;
    doc.add_row({std::int64_t{n}, Exact{std::to_string(oracle)}, Exact{f}, match});
  }
  emit(doc, o.format);
  return all_match ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block dimensions and Hochschild cohomology generating functions for symmetric groups"};
  app.require_subcommand(1);
  Options o;

  std::uint32_t builtin_order = kBuiltinOrder;
  try {
    builtin_order = default_order();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  o.order = builtin_order;

  const auto formats = CLI::IsMember({"table", "json", "csv"});

  auto* blocks = app.add_subcommand("blocks", "List the blocks of kS_n with their dimensions");
  blocks->add_option("--p", o.p, "Characteristic (prime)")->required();
  blocks->add_option("--n", o.n, "Degree of the symmetric group")->required();
  blocks->add_option("--format", o.format, "table, json or csv")->check(formats);

  auto* series = app.add_subcommand("series", "Print coefficients of a generating function");
  series->add_option("--name", o.name, "P, Z, Y, HH1group or Cs")->required();
  auto* series_p = series->add_option("--p", o.p, "Characteristic (prime); not used by P");
  series->add_option("--order", o.order, "Number of coefficients")->check(CLI::PositiveNumber);
  auto* series_s = series->add_option("--s", o.s, "Residue 0..p-1, for Cs only");
  series->add_option("--format", o.format, "table, json or csv")->check(formats);

  auto* verify = app.add_subcommand("verify", "Check generating-function identities exactly");
  verify->add_option("--which", o.which, "thm2, thm3, eq12 or all")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "eq12", "all"}));
  verify->add_option("--p", o.p, "Characteristic (prime)")->required();
  verify->add_option("--order", o.order, "Truncation order in t")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "table, json or csv")->check(formats);
  verify->add_option("--inject-fault", o.fault, "Bump one input coefficient (harness self-test)")->group("");

  auto* oracle = app.add_subcommand("oracle", "Compare centralizer counts with the HH^1 group series");
  oracle->add_option("--p", o.p, "Characteristic (prime)")->required();
  oracle->add_option("--n-max", o.n_max, "Largest n")->required();
  oracle->add_option("--format", o.format, "table, json or csv")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (blocks->parsed()) return cmd_blocks(o);
    if (series->parsed()) return cmd_series(o, series_s->count() > 0, series_p->count() > 0);
    if (verify->parsed()) return cmd_verify(o);
    if (oracle->parsed()) return cmd_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.status == BHH_E_INVALID_ARGUMENT || e.status == BHH_E_NOT_PRIME) ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

#include "dickson/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "dickson/error.hpp"
#include "dickson/field.hpp"
#include "dickson/moment.hpp"
#include "dickson/parallel.hpp"
#include "dickson/perm.hpp"
#include "dickson/rdp.hpp"
#include "dickson/verify.hpp"

namespace dickson::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t p = 0;
  std::int64_t e = 1;
  std::string k = "all";
  std::optional<Exponent> n;
  std::string n_range;
  std::string format = "csv";
  std::string out_path;
  std::size_t jobs = 0;
  std::vector<std::string> skip;
  bool paper_literal = false;
  bool allow_large = false;
  std::string command;
};

// Limit on the number of n values for eval, which has no natural upper bound on n.
constexpr Exponent kMaxEvalIndices = 1'000'000;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

std::pair<Exponent, Exponent> parse_range(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--n-range expects <lo>:<hi>");
  const Exponent lo = parse_u64(spec.substr(0, colon), "range bound");
  const Exponent hi = parse_u64(spec.substr(colon + 1), "range bound");
  if (lo > hi) throw UsageError("--n-range needs lo <= hi");
  return {lo, hi};
}

FieldCtx field_from(const RunConfig& cfg) {
  try {
    return make_field(cfg.p, cfg.e);
  } catch (const Error& err) {
    switch (err.code()) {
      case Errc::CompositeP:
      case Errc::SmallChar:
        throw UsageError("p must be a prime greater than 3");
      case Errc::Overflow:
        throw UsageError("q = p^e exceeds 2^20");
      default:
        throw UsageError("e must be at least 1");
    }
  }
}

std::vector<std::int64_t> kinds_from(const RunConfig& cfg, const FieldCtx& ctx) {
  std::vector<std::int64_t> ks;
  if (cfg.k == "all") {
    for (std::int64_t k = 0; k < ctx.p(); ++k) ks.push_back(k);
    return ks;
  }
  const std::uint64_t k = parse_u64(cfg.k, "k");
  if (k >= ctx.p()) throw UsageError("k must lie in [0, p) or be 'all'");
  ks.push_back(static_cast<std::int64_t>(k));
  return ks;
}

std::optional<std::pair<Exponent, Exponent>> indices_from(const RunConfig& cfg) {
  if (cfg.n) return std::pair{*cfg.n, *cfg.n};
  if (!cfg.n_range.empty()) return parse_range(cfg.n_range);
  return std::nullopt;
}

constexpr std::size_t kMaxJobs = 4096;

// CLI11 does not run validators on environment fallbacks, so this one is read by hand.
std::size_t jobs_from_env() {
  const char* env = std::getenv("DICKSONLAB_JOBS");
  if (!env || !*env) return default_jobs();
  std::uint64_t jobs = 0;
  try {
    jobs = parse_u64(env, "DICKSONLAB_JOBS");
  } catch (const UsageError&) {
    jobs = 0;
  }
  if (jobs < 1 || jobs > kMaxJobs) throw UsageError("DICKSONLAB_JOBS must be an integer in [1, 4096]");
  return jobs;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, const FieldCtx& ctx, Table& table) {
  const auto range = indices_from(cfg);
  if (!range) throw UsageError("eval needs --n or --n-range");
  if (range->second - range->first >= kMaxEvalIndices)
    throw UsageError("eval range holds more than 1000000 indices");
  const auto ks = kinds_from(cfg, ctx);
  const auto xs = enumerate(ctx);

  table.columns = {"n", "k", "x", "value"};
  table.json_kinds = "iiss";
  const std::size_t per_n = ks.size() * xs.size();
  const std::size_t count = (range->second - range->first + 1) * per_n;
  table.rows.resize(count);
  parallel_for(count, cfg.jobs, [&](std::size_t i) {
    const Exponent n = range->first + i / per_n;
    const std::int64_t k = ks[(i % per_n) / xs.size()];
    const FqElem& x = xs[i % xs.size()];
    const FqElem v = eval_recursion(ctx, reduced_index(ctx, n, x), k, x);
    table.rows[i] = {std::to_string(n), std::to_string(k), ctx.render(x), ctx.render(v)};
  });
  return kOk;
}

int cmd_scan_pp(const RunConfig& cfg, const FieldCtx& ctx, Table& table) {
  const Exponent top = ctx.q() * ctx.q() - 1;
  const auto range = indices_from(cfg).value_or(std::pair<Exponent, Exponent>{0, top});
  if (range.second > top) throw UsageError("scan range must lie in [0, q^2-1]");
  const auto ks = kinds_from(cfg, ctx);
  if (!cfg.allow_large && ctx.q() > kDefaultScanFieldLimit &&
      range.second - range.first + 1 > kDefaultScanFieldLimit * kDefaultScanFieldLimit)
    throw UsageError("scan over more than 169 indices for q > 13 needs --allow-large");

  table.columns = {"n", "k", "is_pp", "witness_x1", "witness_x2", "mod6_class"};
  table.json_kinds = "iibssi";
  for (auto k : ks)
    for (const auto& r : pp_scan(ctx, k, range.first, range.second, {cfg.jobs, true}))
      table.rows.push_back({std::to_string(r.n), std::to_string(k), bool_text(r.is_pp),
                            r.witness ? ctx.render(r.witness->first) : "",
                            r.witness ? ctx.render(r.witness->second) : "",
                            std::to_string(r.n % 6)});
  return kOk;
}

int cmd_moments(const RunConfig& cfg, const FieldCtx& ctx, Table& table) {
  const Exponent top = ctx.q() * ctx.q() - 1;
  const auto range = indices_from(cfg).value_or(std::pair<Exponent, Exponent>{1, top});
  if (range.first < 1 || range.second > top)
    throw UsageError("moment rows need 1 <= n <= q^2-1");
  if (ctx.q() > kDefaultScanFieldLimit && !cfg.allow_large)
    throw UsageError("moments for q > 13 need --allow-large");
  const auto ks = kinds_from(cfg, ctx);

  table.columns = {"n", "k", "direct", "reconstructed", "agrees"};
  table.json_kinds = "iissb";
  std::size_t mismatches = 0, divergent = 0;
  std::vector<std::string> literal_lines;
  for (auto k : ks) {
    const auto rows = moment_table(ctx, k, range.first, range.second, cfg.jobs);
    for (const auto& r : rows) {
      mismatches += !r.agrees;
      table.rows.push_back({std::to_string(r.n), std::to_string(k), ctx.render(r.direct),
                            ctx.render(r.reconstructed), bool_text(r.agrees)});
    }
    if (cfg.paper_literal) {
      const auto literal = first_moments_by_rows(ctx, k, compute_c(ctx, k, CForm::Literal));
      for (const auto& r : rows)
        if (!(literal[r.n] == r.direct)) {
          ++divergent;
          literal_lines.push_back("literal-divergence n=" + std::to_string(r.n) +
                                  " k=" + std::to_string(k) + " literal=" +
                                  ctx.render(literal[r.n]) + " direct=" + ctx.render(r.direct));
        }
    }
  }
  table.trailer = std::move(literal_lines);
  if (cfg.paper_literal) table.trailer.push_back("literal-divergences=" + std::to_string(divergent));
  table.trailer.push_back("mismatches=" + std::to_string(mismatches));
  return mismatches ? kFailure : kOk;
}

int cmd_verify(const RunConfig& cfg, const FieldCtx& ctx, Table& table) {
  VerifyOptions options;
  options.skip.insert(cfg.skip.begin(), cfg.skip.end());
  options.allow_large = cfg.allow_large;
  options.jobs = cfg.jobs;
  const VerifyReport report = run_verification(ctx, options);

  table.columns = {"section", "id", "status", "detail"};
  table.json_kinds = "ssss";
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    failed += !c.passed;
    table.rows.push_back({"check", c.id(), c.passed ? "pass" : "fail", c.detail});
  }
  for (const auto& item : errata()) {
    const ErratumState st = erratum_state(item, report);
    const char* status = st == ErratumState::Validated ? "validated"
                         : st == ErratumState::Failed  ? "failed"
                                                       : "not-run";
    std::string checks;
    for (const auto& id : item.checks) checks += (checks.empty() ? "" : " ") + id;
    table.rows.push_back({"erratum", item.id, status,
                          item.issue + " | resolved: " + item.resolution + " | checks: " + checks});
  }
  for (const auto& note : report.notes) table.trailer.push_back("note: " + note);
  table.trailer.push_back("checks=" + std::to_string(report.checks.size()) +
                          " failed=" + std::to_string(failed) +
                          " errata=" + std::to_string(errata().size()));
  return failed ? kFailure : kOk;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out += (i ? "," : "") + csv_field(table.columns[i]);
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  }
  for (const auto& line : table.trailer) out += "# " + line + "\n";
  return out;
}

std::string to_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const std::string& cell = row[i];
      switch (table.json_kinds[i]) {
        case 'i':
          obj[table.columns[i]] = std::stoull(cell);
          break;
        case 'b':
          obj[table.columns[i]] = cell == "true";
          break;
        default:
          obj[table.columns[i]] = cell;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reversed Dickson polynomials over finite fields", "dicksonlab"};
  app.set_config("--config", "", "Key-value file with option defaults; flags win");
  app.add_option("--p", cfg.p, "Field characteristic, a prime > 3")->required();
  app.add_option("--e", cfg.e, "Extension degree, q = p^e")->capture_default_str();
  app.add_option("--k", cfg.k, "Kind index in [0, p) or 'all'")->capture_default_str();
  auto* n_opt = app.add_option("--n", cfg.n, "Single index n");
  auto* range_opt = app.add_option("--n-range", cfg.n_range, "Index range <lo>:<hi>, inclusive");
  n_opt->excludes(range_opt);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  auto* jobs_opt = app.add_option("--jobs", cfg.jobs, "Worker threads (fallback: DICKSONLAB_JOBS)")
                       ->check(CLI::Range(std::size_t{1}, kMaxJobs));
  app.add_option("--skip", cfg.skip, "Verification suites to skip")
      ->delimiter(',')
      ->check(CLI::IsMember(kVerifySuites));
  app.add_flag("--paper-literal", cfg.paper_literal,
               "moments: also report rows where the literal recurrence constants diverge");
  app.add_flag("--allow-large", cfg.allow_large, "Lift the q <= 13 limit on scans and moments");
  app.require_subcommand(1, 1);
  for (const char* name : {"eval", "scan-pp", "moments", "verify"}) {
    static const std::map<std::string, std::string> help = {
        {"eval", "Print D_{n,k}(1, x) for every x in F_q"},
        {"scan-pp", "Permutation census over an index range"},
        {"moments", "First moments, direct and reconstructed"},
        {"verify", "Run the verification suites and the errata report"}};
    app.add_subcommand(name, help.at(name))->fallthrough()->callback([&cfg, name] {
      cfg.command = name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dicksonlab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const FieldCtx ctx = field_from(cfg);
    if (jobs_opt->count() == 0) cfg.jobs = jobs_from_env();
    Table table;
    int code = kOk;
    if (cfg.command == "eval")
      code = cmd_eval(cfg, ctx, table);
    else if (cfg.command == "scan-pp")
      code = cmd_scan_pp(cfg, ctx, table);
    else if (cfg.command == "moments")
      code = cmd_moments(cfg, ctx, table);
    else
      code = cmd_verify(cfg, ctx, table);

    std::string body;
    if (cfg.format == "json") {
      body = to_json(table);
      for (const auto& line : table.trailer) err << "# " << line << "\n";
    } else {
      body = to_csv(table);
    }
    if (cfg.out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file " + cfg.out_path);
      file << body;
    }
    return code;
  } catch (const UsageError& e) {
    err << "dicksonlab: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "dicksonlab: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::BadRange || e.code() == Errc::OutOfRange ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "dicksonlab: internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace dickson::cli

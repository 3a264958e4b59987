#include "keane/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "keane/params_json.hpp"
#include "keane/report.hpp"
#include "keane/rules.hpp"

namespace keane::cli {
namespace {

// Every subcommand takes its parameter sequence either from a JSON file or
// from a named generator rule; exactly one source must be given.
struct ParamSource {
  std::string params_file;
  std::string rule;
  int K = 0;
  long n1 = 10;
  std::string alpha;
};

void add_param_options(CLI::App* cmd, ParamSource& src) {
  cmd->add_option("--params", src.params_file, "parameter sequence JSON file");
  cmd->add_option("--rule", src.rule,
                  "generator rule tag: minimal-admissible, flip00, flip01, flip10, "
                  "flip11, power-m, alpha2, alpha3, generic, appendix");
  cmd->add_option("--K", src.K, "number of parameter pairs to generate");
  cmd->add_option("--n1", src.n1, "seed n_1 for rules that take one (default 10)");
  cmd->add_option("--alpha", src.alpha, "exponent alpha as p/q (alpha rules only)");
}

ParamSeq resolve_params(const ParamSource& src) {
  const bool have_file = !src.params_file.empty();
  const bool have_rule = !src.rule.empty();
  if (have_file == have_rule)
    throw domain_error("choose exactly one parameter source: --params FILE or --rule TAG");
  if (have_file) {
    std::ifstream in(src.params_file);
    if (!in) throw domain_error("cannot open parameter file: " + src.params_file);
    return params_from_stream(in);
  }
  if (src.K < 1) throw domain_error("--rule requires --K at least 1");
  std::optional<Rat> alpha;
  if (!src.alpha.empty()) alpha = parse_rational(src.alpha);
  return generate_rule(src.rule, src.K, alpha, Int(src.n1));
}

// Writes through `body` either to the stream `out` or, when `path` is set, to
// that file (with a short note on the diagnostic stream).
void emit(const std::string& path, std::ostream& out, std::ostream& err,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw domain_error("cannot open output file: " + path);
  body(file);
  file.flush();
  if (!file) throw domain_error("write failed: " + path);
  err << "wrote " << path << "\n";
}

std::int64_t step_budget() {
  const char* env = std::getenv("KEANE_STEP_BUDGET");
  if (env == nullptr) return kDefaultStepBudget;
  const std::string text(env);
  try {
    std::size_t pos = 0;
    const long long value = std::stoll(text, &pos);
    if (pos != text.size() || value < 1) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw domain_error("KEANE_STEP_BUDGET must be a positive integer");
  }
}

// A config file is a JSON object {"command": "...", "<option>": value, ...}.
// String values pass through verbatim, integers are printed in decimal, and
// booleans turn the option into a bare flag (true) or drop it (false).
std::vector<std::string> args_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open config file: " + path);
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw domain_error("config file must hold a JSON object");
  if (!doc.contains("command") || !doc["command"].is_string())
    throw domain_error("config file needs a string \"command\" entry");
  std::vector<std::string> args{doc["command"].get<std::string>()};
  for (const auto& [key, value] : doc.items()) {
    if (key == "command") continue;
    if (key == "config") throw domain_error("config files cannot nest \"config\"");
    const std::string flag = "--" + key;
    if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      args.push_back(flag);
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else {
      throw domain_error("config entry \"" + key + "\" must be a string, integer, or boolean");
    }
  }
  return args;
}

int run_parsed(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tower constructions for a four-interval exchange family"};
  app.name("keane");
  app.require_subcommand(1);

  auto* params_cmd =
      app.add_subcommand("params", "generate or re-emit a parameter sequence as JSON");
  ParamSource params_src;
  add_param_options(params_cmd, params_src);
  std::string params_out;
  params_cmd->add_option("--out", params_out, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand(
      "verify", "check the per-level measure bounds and emit a CSV verdict table");
  ParamSource verify_src;
  add_param_options(verify_cmd, verify_src);
  int k_lo = 0, k_hi = -1, verify_depth = 3;
  bool verify_no_cones = false;
  std::string verify_csv;
  verify_cmd->add_option("--k-lo", k_lo, "first level to check (default 0)");
  verify_cmd->add_option("--k-hi", k_hi, "last level to check (default K-2)");
  verify_cmd->add_option("--depth", verify_depth,
                         "levels of lookahead per enclosure (default 3)");
  verify_cmd->add_flag("--no-cones", verify_no_cones,
                       "do not restrict deep directions to invariant cones");
  verify_cmd->add_option("--csv", verify_csv, "write the CSV here instead of stdout");

  auto* dim_cmd =
      app.add_subcommand("dimension", "two-sided dimension bound sequence as CSV");
  ParamSource dim_src;
  add_param_options(dim_cmd, dim_src);
  int direction = 0, dim_k_max = -1, dim_depth = 3, dim_digits = 60;
  bool dim_no_cones = false;
  std::string dim_csv;
  dim_cmd->add_option("--direction", direction, "measure whose dimension is bounded (2 or 3)")
      ->required();
  dim_cmd->add_option("--k-max", dim_k_max, "deepest level to bound (default K-2)");
  dim_cmd->add_option("--depth", dim_depth, "levels of lookahead per enclosure (default 3)");
  dim_cmd->add_option("--digits", dim_digits, "logarithm accuracy in decimal digits");
  dim_cmd->add_flag("--no-cones", dim_no_cones,
                    "do not restrict deep directions to invariant cones");
  dim_cmd->add_option("--csv", dim_csv, "write the CSV here instead of stdout");

  auto* gen_cmd = app.add_subcommand(
      "generic", "tower-1 covering table and revisit-phase counts as CSV");
  ParamSource gen_src;
  add_param_options(gen_cmd, gen_src);
  int gen_k_lo = 1, gen_k_hi = -1, gen_digits = 60;
  std::string gen_eps = "1/4";
  std::string gen_csv;
  gen_cmd->add_option("--k-lo", gen_k_lo, "first level (default 1)");
  gen_cmd->add_option("--k-hi", gen_k_hi, "last level (default K-1)");
  gen_cmd->add_option("--digits", gen_digits, "root accuracy in decimal digits");
  gen_cmd->add_option("--eps", gen_eps, "phase cutoff eps as p/q (default 1/4)");
  gen_cmd->add_option("--csv", gen_csv, "write the CSV here instead of stdout");

  auto* rec_cmd = app.add_subcommand("recurrence", "pointwise recurrence checks");
  ParamSource rec_src;
  add_param_options(rec_cmd, rec_src);
  std::string rec_check = "stat";
  rec_cmd->add_option("--check", rec_check, "nice | most | stat (default stat)")
      ->check(CLI::IsMember({"nice", "most", "stat"}));
  int rec_k = -1, rec_level = 2, rec_depth = 3, rec_digits = 0, rec_samples = 1;
  long rec_N = 1000;
  std::string rec_c = "1", rec_exponent = "1/2", rec_threshold = "1";
  std::string rec_x, rec_y, rec_csv;
  std::uint64_t rec_seed = 0;
  rec_cmd->add_option("--k", rec_k, "level for nice/most (defaults 2 / 1)");
  rec_cmd->add_option("--level", rec_level, "tower level for stat (default 2)");
  rec_cmd->add_option("--depth", rec_depth, "levels of lookahead per enclosure (default 3)");
  rec_cmd->add_option("--digits", rec_digits, "power accuracy in decimal digits");
  rec_cmd->add_option("--c", rec_c, "covering widening constant c as p/q (nice only)");
  rec_cmd->add_option("--exponent", rec_exponent, "radius/statistic exponent as p/q");
  rec_cmd->add_option("--threshold", rec_threshold, "statistic threshold as p/q");
  rec_cmd->add_option("--N", rec_N, "orbit steps for stat (default 1000)");
  rec_cmd->add_option("--x", rec_x, "start point as p/q (default: sample with --seed)");
  rec_cmd->add_option("--y", rec_y, "target point as p/q (stat only, required)");
  auto* seed_opt = rec_cmd->add_option("--seed", rec_seed, "RNG seed for sampled start points");
  rec_cmd->add_option("--samples", rec_samples, "number of sampled start points (default 1)");
  rec_cmd->add_option("--csv", rec_csv, "write the CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(raw.rbegin(), raw.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (params_cmd->parsed()) {
    const ParamSeq seq = resolve_params(params_src);
    const AdmissibilityReport report = check_admissible(seq.pairs);
    for (const auto& issue : report.issues) err << "note: " << issue << "\n";
    emit(params_out, out, err, [&](std::ostream& o) { o << params_to_json(seq); });
    return 0;
  }

  if (verify_cmd->parsed()) {
    const ParamSeq seq = resolve_params(verify_src);
    const KeaneFamily fam(seq.pairs);
    if (k_hi < 0) k_hi = fam.K() - 2;
    const EnclosureOptions opt{verify_depth, !verify_no_cones};
    const std::vector<LemmaRow> rows = lemma_suite(fam, k_lo, k_hi, opt);
    emit(verify_csv, out, err, [&](std::ostream& o) { write_lemma_csv(o, rows); });
    long pass = 0, inconclusive = 0, fail = 0;
    for (const auto& row : rows) {
      if (row.verdict == Verdict::Pass) ++pass;
      else if (row.verdict == Verdict::Fail) ++fail;
      else ++inconclusive;
    }
    err << "verify: " << rows.size() << " rows, " << pass << " pass, " << inconclusive
        << " inconclusive, " << fail << " fail\n";
    return fail > 0 ? 1 : 0;
  }

  if (dim_cmd->parsed()) {
    const ParamSeq seq = resolve_params(dim_src);
    const KeaneFamily fam(seq.pairs);
    if (dim_k_max < 0) dim_k_max = fam.K() - 2;
    const EnclosureOptions opt{dim_depth, !dim_no_cones};
    const std::vector<DimRow> rows = dim_bounds(fam, direction, dim_k_max, opt, dim_digits);
    emit(dim_csv, out, err, [&](std::ostream& o) { write_dimension_csv(o, rows); });
    return 0;
  }

  if (gen_cmd->parsed()) {
    const ParamSeq seq = resolve_params(gen_src);
    const KeaneFamily fam(seq.pairs);
    if (gen_k_hi < 0) gen_k_hi = fam.K() - 1;
    if (gen_k_lo < 1) throw domain_error("--k-lo must be at least 1");
    const Rat eps = parse_rational(gen_eps);
    std::vector<CoveringRow> rows;
    for (int k = gen_k_lo; k <= gen_k_hi; ++k) rows.push_back(covering_row(fam, k, gen_digits));
    emit(gen_csv, out, err, [&](std::ostream& o) {
      write_covering_csv(o, rows);
      o << "\nk,eps,total,late\n";
      for (int k = gen_k_lo; k <= gen_k_hi; ++k) {
        const PhaseCount pc = phase_count(fam, k, eps);
        o << k << "," << rat_string(eps) << "," << pc.total.get_str() << ","
          << pc.late.get_str() << "\n";
      }
    });
    return 0;
  }

  // recurrence
  const ParamSeq seq = resolve_params(rec_src);
  const KeaneFamily fam(seq.pairs);
  const EnclosureOptions opt{rec_depth, true};

  if (rec_check == "nice") {
    const int k = rec_k >= 0 ? rec_k : 2;
    const int digits = rec_digits > 0 ? rec_digits : 60;
    const ControlledNiceResult res = controlled_nice_check(
        fam, k, parse_rational(rec_c), parse_rational(rec_exponent), opt, digits);
    out << "controlled-nice k=" << res.k << " c=" << rat_string(res.c)
        << " exponent=" << rat_string(res.exponent) << " scale=" << res.scale.get_str()
        << " radius=[" << to_decimal(res.radius.lo, 15, Round::Down) << ","
        << to_decimal(res.radius.hi, 15, Round::Up) << "]"
        << " lhs<=" << to_decimal(res.lhs_hi, 15, Round::Up)
        << " rhs<=" << to_decimal(res.rhs_hi, 15, Round::Up)
        << " margin=" << to_decimal(res.margin, 15, Round::Down) << " "
        << verdict_string(res.verdict) << "\n";
    return res.verdict == Verdict::Fail ? 1 : 0;
  }

  if (rec_check == "most") {
    const int k = rec_k >= 0 ? rec_k : 1;
    const ControlMostResult res = control_most_bound(fam, k, opt);
    out << "control-most k=" << res.k << " lhs<=" << to_decimal(res.lhs_hi, 15, Round::Up)
        << " bound=" << to_decimal(res.rhs, 15, Round::Down)
        << " products-below-next-n=" << (res.products_below_next_n ? "yes" : "no")
        << " witness-decreasing=" << (res.witness_decreasing ? "yes" : "no") << " "
        << verdict_string(res.verdict) << "\n";
    return res.verdict == Verdict::Fail ? 1 : 0;
  }

  // stat
  if (rec_y.empty()) throw domain_error("--check stat needs --y");
  const std::int64_t budget = step_budget();
  const int digits = rec_digits > 0 ? rec_digits : 30;
  const FloorTable table = FloorTable::build(fam, rec_level, budget);
  const Box4 m2 = component_measures(fam, 2, rec_level, opt);
  const Box4 m3 = component_measures(fam, 3, rec_level, opt);
  const Rat y = parse_rational(rec_y);
  const Rat exponent = parse_rational(rec_exponent);
  const Rat threshold = parse_rational(rec_threshold);

  std::vector<Rat> starts;
  if (!rec_x.empty()) {
    if (rec_samples != 1) throw domain_error("--samples needs sampled start points; drop --x");
    starts.push_back(parse_rational(rec_x));
  } else {
    if (seed_opt->count() == 0)
      throw domain_error("sampling start points needs --seed (or pass --x)");
    if (rec_samples < 1) throw domain_error("--samples must be at least 1");
    std::mt19937_64 rng(rec_seed);
    const auto& floors = table.floors();
    const Int two64 = ipow(Int(2), 64);
    for (int s = 0; s < rec_samples; ++s) {
      const std::uint64_t pick = rng();
      const std::uint64_t offset = rng();
      const Floor& floor = floors[static_cast<std::size_t>(pick % floors.size())];
      const Rat frac = make_rat(Int(static_cast<unsigned long>(offset)), two64);
      starts.push_back(floor.span.lo + (floor.span.hi - floor.span.lo) * frac);
    }
  }

  int exit_code = 0;
  emit(rec_csv, out, err, [&](std::ostream& o) {
    bool first = true;
    for (const Rat& x : starts) {
      const RecurrenceRun run_result = recurrence_stat(fam, table, m2, m3, x, y, exponent,
                                                       rec_N, threshold, budget, digits);
      if (!first) o << "\n";
      first = false;
      o << "# level=" << run_result.level << " exponent=" << rat_string(run_result.exponent)
        << " x=" << rat_string(run_result.x) << " y=" << rat_string(run_result.y)
        << " N=" << run_result.requested << (run_result.truncated ? " truncated" : "")
        << " threshold=" << rat_string(run_result.threshold)
        << " verdict=" << verdict_string(run_result.verdict) << "\n";
      write_recurrence_csv(o, run_result);
      if (run_result.verdict == Verdict::Fail) exit_code = 1;
    }
  });
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (args.size() != 2 || i != 0)
          throw domain_error("--config FILE must be the only arguments");
        return run(args_from_config(args[1]), out, err);
      }
    }
    return run_parsed(args, out, err);
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace keane::cli

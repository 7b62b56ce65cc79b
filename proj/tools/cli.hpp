#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baxter/baxter.hpp"

namespace baxter::cli {

enum ExitCode : int { kOk = 0, kFindings = 1, kUsage = 2, kCap = 3 };

struct GlobalOptions {
  std::string format = "text";
  unsigned jobs = 1;
  std::uint32_t max_terms = kDefaultMemoCap;
  std::uint32_t naive_cap = kDefaultNaiveCap;
  std::uint64_t seed = 42;
  bool operator_notation = false;
  std::string output;
};

namespace detail {

struct TreeArgs {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  [[nodiscard]] Tree tree() const { return Tree{a, b, c}; }
};

inline void add_tree_args(CLI::App* cmd, TreeArgs& t) {
  cmd->add_option("--a", t.a, "dots on the left leg")->required();
  cmd->add_option("--b", t.b, "dots on the right leg")->required();
  cmd->add_option("--c", t.c, "dots on the neck")->capture_default_str();
}

inline void write_combination(std::ostream& out, const GlobalOptions& g, const Tree& lhs, const Combination& rhs) {
  if (g.format == "json") out << to_json(rhs).dump() << "\n";
  else if (g.format == "latex") out << render_latex(lhs, rhs, g.operator_notation) << "\n";
  else out << render_text(lhs, rhs) << "\n";
}

inline void write_report(std::ostream& out, const GlobalOptions& g, const DiscrepancyReport& r) {
  if (g.format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "grid " << r.a_max << "x" << r.b_max << ", mode " << r.mode << ": " << r.cells << " cells, "
      << r.trees_compared << " trees compared, " << r.mismatches.size() << " mismatches\n";
  for (const auto& [label, n] : r.by_sum()) out << "  " << label << ": " << n << "\n";
  for (const auto& m : r.mismatches)
    out << "  (" << m.a << "," << m.b << ") " << m.tree << " expected " << m.expected << ", got " << m.got << " ["
        << m.sum << "]\n";
}

inline void write_model_report(std::ostream& out, const GlobalOptions& g, const models::ModelCheckReport& r) {
  if (g.format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "model " << models::model_name(r.model) << ", mode " << mode_name(r.mode) << ", grid " << r.a_max << "x"
      << r.b_max << ", " << r.trials << " trials, seed " << r.seed << ": " << r.checks << " checks, "
      << r.failures.size() << " failures\n";
  for (const auto& f : r.failures)
    out << "  (" << f.a << "," << f.b << ") trial " << f.trial << " " << f.source << "\n";
}

inline void write_count_report(std::ostream& out, const GlobalOptions& g, const models::ChainCountReport& r) {
  if (g.format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << std::setw(4) << "a" << std::setw(4) << "m" << std::setw(14) << "enumeration" << std::setw(14) << "prefix-sum"
      << std::setw(16) << "C(a+m,m)-1" << "  status\n";
  for (const auto& row : r.rows) {
    out << std::setw(4) << row.a << std::setw(4) << row.m << std::setw(14) << row.enumeration << std::setw(14)
        << row.prefix_sum << std::setw(16) << row.printed << "  "
        << (row.printed_agrees() && row.operator_agrees() ? "agree" : "DISAGREE") << "\n";
  }
  out << r.disagreements().size() << " of " << r.rows.size() << " rows disagree\n";
}

inline void write_bench(std::ostream& out, const GlobalOptions& g, const std::vector<BenchRow>& rows) {
  if (g.format == "json") {
    out << to_json(rows).dump() << "\n";
    return;
  }
  out << std::setw(5) << "a=b" << std::setw(12) << "naive_ms" << std::setw(8) << "terms" << std::setw(11) << "rewrites"
      << std::setw(12) << "memo_ms" << std::setw(8) << "terms" << std::setw(12) << "closed_ms" << std::setw(8)
      << "terms" << "  agree\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    out << std::setw(5) << r.n;
    if (r.naive_ms) out << std::setw(12) << *r.naive_ms << std::setw(8) << *r.naive_terms << std::setw(11) << *r.naive_rewrites;
    else out << std::setw(12) << "-" << std::setw(8) << "-" << std::setw(11) << "-";
    out << std::setw(12) << r.memo_ms << std::setw(8) << r.memo_terms << std::setw(12) << r.closed_ms << std::setw(8)
        << r.closed_terms << "  " << (r.agree ? "yes" : "NO") << "\n";
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace detail

/// Runs the command line `args` (without the program name).  Returns the
/// process exit code: 0 success, 1 verification findings, 2 usage error,
/// 3 resource cap exceeded.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms and closed-form identities for Rota-Baxter tree terms T(a,b,c)", "baxter"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "latex", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for verify and model-check")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", g.max_terms, "cap on a+b for memoized normalization")->capture_default_str();
  app.add_option("--naive-cap", g.naive_cap, "cap on a+b for naive expansion")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for pseudo-random model inputs")->capture_default_str();
  app.add_flag("--operator-notation", g.operator_notation, "render trees as P^c(P^a(x)P^b(y)) in LaTeX");
  app.add_option("--output", g.output, "write to this file instead of standard output");

  detail::TreeArgs tree;
  std::string mode_str = "reconciled";
  bool naive = false;
  bool restricted = false;
  std::uint32_t max_a = 0;
  std::uint32_t max_b = 0;
  std::uint32_t max_m = 0;
  std::uint32_t trials = 3;
  std::string model_str;
  std::string source = "normal-form";
  std::uint32_t max_ab = 12;
  unsigned repetitions = 3;
  const auto mode_check = CLI::IsMember({"as-published", "reconciled"});

  auto* expand = app.add_subcommand("expand", "normal form of T(a,b,c) by rewriting");
  detail::add_tree_args(expand, tree);
  expand->add_flag("--naive", naive, "use the unmemoized replace-until-fixpoint oracle");

  auto* closed = app.add_subcommand("closed-form", "closed-form identity for T(a,b,c)");
  detail::add_tree_args(closed, tree);
  closed->add_option("--mode", mode_str)->check(mode_check)->capture_default_str();
  closed->add_flag("--restricted", restricted, "weight-zero identity");

  auto* verify = app.add_subcommand("verify", "compare closed forms with normal forms over a grid");
  verify->add_option("--max-a", max_a)->required();
  verify->add_option("--max-b", max_b)->required();
  verify->add_option("--mode", mode_str)->check(mode_check)->capture_default_str();
  verify->add_flag("--restricted", restricted, "check the weight-zero identity at λ = 0");

  auto* model_check = app.add_subcommand("model-check", "evaluate identities in a concrete Rota-Baxter algebra");
  model_check->add_option("--model", model_str)->required()->check(CLI::IsMember({"integral", "sum"}));
  model_check->add_option("--max-a", max_a)->required();
  model_check->add_option("--max-b", max_b)->required();
  model_check->add_option("--trials", trials)->capture_default_str();
  model_check->add_option("--mode", mode_str)->check(mode_check)->capture_default_str();

  auto* count = app.add_subcommand("count", "chain counts against the binomial closed form");
  count->add_option("--max-a", max_a)->required();
  count->add_option("--max-m", max_m)->required();

  auto* emit = app.add_subcommand("emit-latex", "LaTeX for one identity");
  detail::add_tree_args(emit, tree);
  emit->add_option("--source", source)
      ->check(CLI::IsMember({"normal-form", "naive", "restricted", "closed-form"}))
      ->capture_default_str();
  emit->add_option("--mode", mode_str)->check(mode_check)->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time naive, memoized and closed-form generation on a = b");
  bench->add_option("--max-ab", max_ab)->capture_default_str();
  bench->add_option("--repetitions", repetitions)->capture_default_str();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> argv_storage{"baxter"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      err << "error: cannot open " << g.output << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = g.output.empty() ? out : file;

  try {
    const Mode mode = parse_mode(mode_str);
    const Normalizer normalizer(g.max_terms);
    if (expand->parsed()) {
      const Tree t = tree.tree();
      detail::write_combination(sink, g, t, naive ? normal_form_naive(t, g.naive_cap) : normalizer.normal_form(t));
      return kOk;
    }
    if (closed->parsed()) {
      const Tree t = tree.tree();
      detail::write_combination(sink, g, t,
                                restricted ? restricted_identity(t.a, t.b, t.c) : generic_identity(t.a, t.b, t.c, mode));
      return kOk;
    }
    if (emit->parsed()) {
      const Tree t = tree.tree();
      Combination rhs;
      if (source == "normal-form") rhs = normalizer.normal_form(t);
      else if (source == "naive") rhs = normal_form_naive(t, g.naive_cap);
      else if (source == "restricted") rhs = restricted_identity(t.a, t.b, t.c);
      else rhs = generic_identity(t.a, t.b, t.c, mode);
      sink << render_latex(t, rhs, g.operator_notation) << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      const auto report = validate(max_a, max_b, mode, restricted, g.jobs, normalizer);
      detail::write_report(sink, g, report);
      return report.empty() ? kOk : kFindings;
    }
    if (model_check->parsed()) {
      const auto model = model_str == "integral" ? models::Model::kIntegral : models::Model::kSum;
      const auto report = models::model_check(model, max_a, max_b, trials, g.seed, mode, g.jobs, normalizer);
      detail::write_model_report(sink, g, report);
      return report.passed() ? kOk : kFindings;
    }
    if (count->parsed()) {
      detail::write_count_report(sink, g, models::chain_count_formula_report(max_a, max_m));
      return kOk;
    }
    if (bench->parsed()) {
      detail::write_bench(sink, g, run_bench(max_ab, repetitions, g.naive_cap, g.max_terms));
      return kOk;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace baxter::cli

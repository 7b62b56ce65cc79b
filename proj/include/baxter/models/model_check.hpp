#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "baxter/closed_form.hpp"
#include "baxter/models/polynomial.hpp"
#include "baxter/models/sequence.hpp"
#include "baxter/rewrite.hpp"

namespace baxter::models {

enum class Model : std::uint8_t { kIntegral, kSum };

[[nodiscard]] inline std::string_view model_name(Model m) { return m == Model::kIntegral ? "integral" : "sum"; }

inline constexpr int kInputCoeffBound = 9;
inline constexpr std::size_t kInputMaxDegree = 4;

/// Integer coefficients in [-9, 9], degree at most 4.
[[nodiscard]] inline RationalPolynomial random_polynomial(std::mt19937_64& rng,
                                                          std::size_t max_degree = kInputMaxDegree) {
  std::uniform_int_distribution<int> coeff(-kInputCoeffBound, kInputCoeffBound);
  std::uniform_int_distribution<std::size_t> degree(0, max_degree);
  std::vector<Rational> v(degree(rng) + 1);
  for (auto& c : v) c = coeff(rng);
  return RationalPolynomial(std::move(v));
}

/// Integer values in [-9, 9].
[[nodiscard]] inline FiniteSequence random_sequence(std::mt19937_64& rng, std::size_t horizon) {
  std::uniform_int_distribution<int> value(-kInputCoeffBound, kInputCoeffBound);
  std::vector<Rational> v(horizon);
  for (auto& c : v) c = value(rng);
  return FiniteSequence(std::move(v));
}

/// Horizon used for T(a,b,.) checks in the sequence model.
[[nodiscard]] constexpr std::size_t sequence_horizon(std::uint32_t a, std::uint32_t b) { return 2 * (a + b) + 4; }

struct ModelCheckFailure {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t trial = 0;
  std::string source;  // "normal-form", "restricted" or "closed-form"
};

struct ModelCheckReport {
  Model model = Model::kIntegral;
  Mode mode = Mode::kReconciled;
  std::uint32_t a_max = 0;
  std::uint32_t b_max = 0;
  std::uint32_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<ModelCheckFailure> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Evaluates the normal form and the closed-form identities for every
/// 1 <= a <= a_max, 1 <= b <= b_max in the chosen model, on `trials`
/// pseudo-random input pairs per cell.  Inputs for cell (a,b,trial) are drawn
/// from their own generator seeded from (seed, a, b, trial), so the report
/// is independent of traversal order.
namespace detail {

struct CellOutcome {
  std::size_t checks = 0;
  std::vector<ModelCheckFailure> failures;
};

inline CellOutcome check_cell(Model model, std::uint32_t a, std::uint32_t b, std::uint32_t trials, std::uint64_t seed,
                              Mode mode, const Normalizer& normalizer) {
  CellOutcome out;
  const Tree lhs{a, b, 0};
  std::vector<std::pair<std::string, Combination>> sources{{"normal-form", normalizer.normal_form(lhs)}};
  if (model == Model::kIntegral) sources.emplace_back("restricted", restricted_identity(a, b, 0));
  sources.emplace_back("closed-form", generic_identity(a, b, 0, mode));
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), a, b, trial};
    std::mt19937_64 rng(seq);
    for (const auto& [name, rhs] : sources) {
      bool ok = false;
      if (model == Model::kIntegral) {
        const auto f = random_polynomial(rng);
        const auto g = random_polynomial(rng);
        ok = check_combination_integral(lhs, rhs, f, g);
      } else {
        const auto f = random_sequence(rng, sequence_horizon(a, b));
        const auto g = random_sequence(rng, sequence_horizon(a, b));
        ok = check_combination_sum(lhs, rhs, f, g);
      }
      ++out.checks;
      if (!ok) out.failures.push_back({a, b, trial, name});
    }
  }
  return out;
}

}  // namespace detail

/// Evaluates the normal form and the closed-form identities for every
/// 1 <= a <= a_max, 1 <= b <= b_max in the chosen model, on `trials`
/// pseudo-random input pairs per cell.  Inputs for cell (a,b,trial) come from
/// a generator seeded by (seed, a, b, trial), so the report does not depend
/// on jobs or traversal order.
[[nodiscard]] inline ModelCheckReport model_check(Model model, std::uint32_t a_max, std::uint32_t b_max,
                                                  std::uint32_t trials, std::uint64_t seed, Mode mode,
                                                  unsigned jobs = 1,
                                                  const Normalizer& normalizer = default_normalizer()) {
  ModelCheckReport report{model, mode, a_max, b_max, trials, seed, 0, {}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t a = 1; a <= a_max; ++a)
    for (std::uint32_t b = 1; b <= b_max; ++b) cells.emplace_back(a, b);

  std::vector<detail::CellOutcome> outcomes(cells.size());
  auto run_range = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < cells.size(); k += stride)
      outcomes[k] = detail::check_cell(model, cells[k].first, cells[k].second, trials, seed, mode, normalizer);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, run_range, w, workers));
    for (auto& t : tasks) t.get();
  }
  for (auto& o : outcomes) {
    report.checks += o.checks;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

[[nodiscard]] inline Json to_json(const ModelCheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"a", f.a}, {"b", f.b}, {"trial", f.trial}, {"source", f.source}});
  return {{"model", std::string(model_name(r.model))}, {"mode", std::string(mode_name(r.mode))},   {"grid", {r.a_max, r.b_max}},
          {"trials", r.trials},           {"seed", std::to_string(r.seed)}, {"checks", r.checks},
          {"failures", failures},         {"passed", r.passed()}};
}

}  // namespace baxter::models

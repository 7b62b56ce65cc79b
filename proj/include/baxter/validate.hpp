#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "baxter/closed_form.hpp"
#include "baxter/rewrite.hpp"

namespace baxter {

struct Mismatch {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Tree tree;
  LambdaPoly expected;  // oracle
  LambdaPoly got;       // closed form
  std::string sum;      // sums whose contribution disagrees, e.g. "D2" or "D1+D2"
};

/// Term-level diff of closed forms against the rewriting oracle over a grid.
struct DiscrepancyReport {
  std::uint32_t a_max = 0;
  std::uint32_t b_max = 0;
  std::string mode;
  bool lambda_zero = false;
  std::size_t cells = 0;
  std::size_t trees_compared = 0;
  std::vector<Mismatch> mismatches;  // sorted by (a, b, tree)

  [[nodiscard]] bool empty() const { return mismatches.empty(); }

  /// Mismatch count per individual sum label.
  [[nodiscard]] std::map<std::string, std::size_t> by_sum() const {
    std::map<std::string, std::size_t> out;
    for (const auto& m : mismatches) {
      std::size_t start = 0;
      while (start <= m.sum.size()) {
        const auto plus = m.sum.find('+', start);
        const auto end = plus == std::string::npos ? m.sum.size() : plus;
        ++out[m.sum.substr(start, end - start)];
        start = end + 1;
      }
    }
    return out;
  }
};

namespace detail {

template <std::size_t N>
std::vector<Mismatch> diff_cell(std::uint32_t a, std::uint32_t b, const std::array<Combination, N>& formula,
                                const std::array<Combination, N>& oracle, const std::array<std::string, N>& labels,
                                std::size_t& compared) {
  Combination got;
  Combination expected;
  for (std::size_t k = 0; k < N; ++k) {
    got += formula[k];
    expected += oracle[k];
  }
  std::set<Tree> keys;
  for (const auto& [t, p] : got) keys.insert(t);
  for (const auto& [t, p] : expected) keys.insert(t);
  compared = keys.size();

  std::vector<Mismatch> out;
  for (const Tree& t : keys) {
    LambdaPoly g = got.coeff(t);
    LambdaPoly e = expected.coeff(t);
    if (g == e) continue;
    std::string sum;
    for (std::size_t k = 0; k < N; ++k) {
      if (formula[k].coeff(t) == oracle[k].coeff(t)) continue;
      if (!sum.empty()) sum += "+";
      sum += labels[k];
    }
    out.push_back({a, b, t, std::move(e), std::move(g), sum});
  }
  return out;
}

inline std::vector<Mismatch> validate_cell(std::uint32_t a, std::uint32_t b, Mode mode, bool lambda_zero,
                                           const Normalizer& normalizer, std::size_t& compared) {
  const Tree t{a, b, 0};
  FamilySplit oracle = normalizer.split_by_last_move(t);
  if (lambda_zero) {
    // merge-terminated paths carry a positive power of λ and vanish here
    std::array<Combination, 2> zero_oracle{specialize_lambda(oracle[0], 0), specialize_lambda(oracle[2], 0)};
    if (!specialize_lambda(oracle[1], 0).empty() || !specialize_lambda(oracle[3], 0).empty() ||
        !specialize_lambda(oracle[4], 0).empty())
      throw std::logic_error("merge paths survived at weight zero");
    return diff_cell<2>(a, b, restricted_identity_sums(a, b, 0), zero_oracle, {"R1", "R2"}, compared);
  }
  std::array<std::string, kFamilyCount> labels;
  for (std::size_t k = 0; k < kFamilyCount; ++k) labels[k] = std::string(family_label(static_cast<Family>(k)));
  return diff_cell<kFamilyCount>(a, b, generic_identity_sums(a, b, 0, mode), oracle, labels, compared);
}

}  // namespace detail

/// Compares the closed form against the normal form of T(a,b,0) for every
/// 1 <= a <= a_max, 1 <= b <= b_max.  With lambda_zero the weight-zero
/// identity is compared against the normal form at λ = 0.
///
/// Each mismatching tree is attributed to the sums whose contribution differs
/// from the oracle's paths grouped by their final move.  The result does not
/// depend on jobs.
[[nodiscard]] inline DiscrepancyReport validate(std::uint32_t a_max, std::uint32_t b_max, Mode mode, bool lambda_zero,
                                                unsigned jobs = 1,
                                                const Normalizer& normalizer = default_normalizer()) {
  DiscrepancyReport report;
  report.a_max = a_max;
  report.b_max = b_max;
  report.mode = lambda_zero ? "restricted" : std::string(mode_name(mode));
  report.lambda_zero = lambda_zero;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t a = 1; a <= a_max; ++a)
    for (std::uint32_t b = 1; b <= b_max; ++b) cells.emplace_back(a, b);
  report.cells = cells.size();

  std::vector<std::vector<Mismatch>> found(cells.size());
  std::vector<std::size_t> compared(cells.size(), 0);
  auto run_range = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < cells.size(); k += stride)
      found[k] = detail::validate_cell(cells[k].first, cells[k].second, mode, lambda_zero, normalizer, compared[k]);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, run_range, w, workers));
    for (auto& t : tasks) t.get();
  }

  for (std::size_t k = 0; k < cells.size(); ++k) {
    report.trees_compared += compared[k];
    for (auto& m : found[k]) report.mismatches.push_back(std::move(m));
  }
  return report;
}

[[nodiscard]] inline Json to_json(const DiscrepancyReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"a", m.a},
                          {"b", m.b},
                          {"tree", to_json(m.tree)},
                          {"expected", to_json(m.expected)},
                          {"got", to_json(m.got)},
                          {"sum", m.sum}});
  Json by_sum = Json::object();
  for (const auto& [label, n] : r.by_sum()) by_sum[label] = n;
  return {{"grid", {r.a_max, r.b_max}},
          {"mode", r.mode},
          {"lambda_zero", r.lambda_zero},
          {"mismatches", mismatches},
          {"summary",
           {{"cells", r.cells}, {"trees_compared", r.trees_compared}, {"mismatches", r.mismatches.size()},
            {"by_sum", by_sum}}}};
}

}  // namespace baxter

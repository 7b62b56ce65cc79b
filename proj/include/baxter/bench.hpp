#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include "baxter/closed_form.hpp"
#include "baxter/rewrite.hpp"

namespace baxter {

struct BenchRow {
  std::uint32_t n = 0;  // a = b = n, c = 0
  std::optional<double> naive_ms;
  std::optional<std::size_t> naive_terms;
  std::optional<std::uint64_t> naive_rewrites;
  double memo_ms = 0;
  std::size_t memo_terms = 0;
  double closed_ms = 0;
  std::size_t closed_terms = 0;
  bool agree = false;
};

namespace detail {

template <class F>
double best_of_ms(unsigned repetitions, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (unsigned r = 0; r < std::max(1u, repetitions); ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

}  // namespace detail

/// Diagonal sweep a = b = 1..max_ab timing naive expansion (within its cap),
/// memoized normalization on a cold cache, and the reconciled closed form.
/// Times are the best of `repetitions` runs.
[[nodiscard]] inline std::vector<BenchRow> run_bench(std::uint32_t max_ab, unsigned repetitions,
                                                     std::uint32_t naive_cap = kDefaultNaiveCap,
                                                     std::uint32_t memo_cap = kDefaultMemoCap) {
  std::vector<BenchRow> rows;
  for (std::uint32_t n = 1; n <= max_ab; ++n) {
    BenchRow row;
    row.n = n;
    const Tree t{n, n, 0};
    Combination memo;
    Combination closed;
    row.memo_ms = detail::best_of_ms(repetitions, [&] {
      const Normalizer cold(memo_cap);
      memo = cold.normal_form(t);
    });
    row.closed_ms = detail::best_of_ms(repetitions, [&] { closed = generic_identity(n, n, 0, Mode::kReconciled); });
    row.memo_terms = memo.size();
    row.closed_terms = closed.size();
    row.agree = memo == closed;
    if (2 * n <= naive_cap) {
      NaiveExpansion naive;
      row.naive_ms = detail::best_of_ms(repetitions, [&] { naive = naive_expansion(t, naive_cap); });
      row.naive_terms = naive.result.size();
      row.naive_rewrites = naive.rewrites;
      row.agree = row.agree && naive.result == memo;
    }
    rows.push_back(row);
  }
  return rows;
}

[[nodiscard]] inline Json to_json(const std::vector<BenchRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"n", r.n},
                       {"memo_ms", r.memo_ms},
                       {"memo_terms", r.memo_terms},
                       {"closed_ms", r.closed_ms},
                       {"closed_terms", r.closed_terms},
                       {"agree", r.agree}};
    row["naive_ms"] = r.naive_ms ? Json(*r.naive_ms) : Json(nullptr);
    row["naive_terms"] = r.naive_terms ? Json(*r.naive_terms) : Json(nullptr);
    row["naive_rewrites"] = r.naive_rewrites ? Json(*r.naive_rewrites) : Json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace baxter

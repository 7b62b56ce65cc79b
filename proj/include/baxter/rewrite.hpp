#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baxter/combination.hpp"

namespace baxter {

inline constexpr std::uint32_t kDefaultMemoCap = 2000;
inline constexpr std::uint32_t kDefaultNaiveCap = 14;

/// One application of P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy) at the root:
/// a left dot moves up, a right dot moves up, or one of each merges (weight λ).
[[nodiscard]] inline Combination expand_step(const Tree& t) {
  if (is_normal_form(t)) throw NoApplicableMove("no applicable move: " + t.to_string() + " is already normal");
  Combination out;
  out.add(Tree{t.a - 1, t.b, t.c + 1}, 1);
  out.add(Tree{t.a, t.b - 1, t.c + 1}, 1);
  out.add(Tree{t.a - 1, t.b - 1, t.c + 1}, LambdaPoly::lambda());
  return out;
}

/// The move and target shape through which a rewriting path terminates.
/// The order matches the five sums of the generic closed form.
enum class Family : std::uint8_t {
  kLeftMove = 0,       // left dot up, lands on T(0,i,.)
  kMergeToRightLeg,    // merge, lands on T(0,i,.)
  kRightMove,          // right dot up, lands on T(i,0,.)
  kMergeToLeftLeg,     // merge, lands on T(i,0,.)
  kMergeToNeck,        // merge, lands on T(0,0,.)
};
inline constexpr std::size_t kFamilyCount = 5;
using FamilySplit = std::array<Combination, kFamilyCount>;

[[nodiscard]] constexpr std::string_view family_label(Family f) {
  constexpr std::array<std::string_view, kFamilyCount> labels{"D1", "D2", "D3", "D4", "D5"};
  return labels[static_cast<std::size_t>(f)];
}

namespace detail {

// Coefficient attached to a leg state, indexed by λ exponent.  The neck
// length is implied: every move adds one neck dot, and the total
// legs + neck + exponent is constant along a path.
using Weights = std::vector<BigInt>;

inline void add_shifted(Weights& dst, const Weights& src, std::size_t shift) {
  if (src.empty()) return;
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t e = 0; e < src.size(); ++e)
    if (src[e] != 0) dst[e + shift] += src[e];
}

// Weighted path counts from T(a,b,0) to every normal shape, split by the
// final move.  Processes leg states (a',b') row by row in decreasing a',
// each state pushing its weight to its three successors.
inline FamilySplit tabulate(std::uint32_t a, std::uint32_t b) {
  std::array<std::vector<Weights>, kFamilyCount> sinks;
  sinks[0].resize(b + 1);  // indexed by right-leg length
  sinks[1].resize(b + 1);
  sinks[2].resize(a + 1);  // indexed by left-leg length
  sinks[3].resize(a + 1);
  sinks[4].resize(1);

  std::vector<Weights> row(b + 1);
  row[b] = Weights{1};
  for (std::uint32_t ap = a; ap >= 1; --ap) {
    std::vector<Weights> below(b + 1);
    for (std::uint32_t bp = b; bp >= 1; --bp) {
      const Weights& w = row[bp];
      if (w.empty()) continue;
      // left dot up
      if (ap == 1) add_shifted(sinks[0][bp], w, 0);
      else add_shifted(below[bp], w, 0);
      // right dot up
      if (bp == 1) add_shifted(sinks[2][ap], w, 0);
      else add_shifted(row[bp - 1], w, 0);
      // merge
      if (ap == 1 && bp == 1) add_shifted(sinks[4][0], w, 1);
      else if (ap == 1) add_shifted(sinks[1][bp - 1], w, 1);
      else if (bp == 1) add_shifted(sinks[3][ap - 1], w, 1);
      else add_shifted(below[bp - 1], w, 1);
    }
    row = std::move(below);
  }

  FamilySplit out;
  const std::uint32_t total = a + b;
  auto emit = [&](Family f, std::uint32_t left, std::uint32_t right, const Weights& w) {
    for (std::size_t e = 0; e < w.size(); ++e) {
      if (w[e] == 0) continue;
      const auto ex = static_cast<LambdaPoly::Exponent>(e);
      out[static_cast<std::size_t>(f)].add_term(Tree{left, right, total - left - right - ex}, ex, w[e]);
    }
  };
  for (std::uint32_t i = 1; i <= b; ++i) {
    emit(Family::kLeftMove, 0, i, sinks[0][i]);
    emit(Family::kMergeToRightLeg, 0, i, sinks[1][i]);
  }
  for (std::uint32_t i = 1; i <= a; ++i) {
    emit(Family::kRightMove, i, 0, sinks[2][i]);
    emit(Family::kMergeToLeftLeg, i, 0, sinks[3][i]);
  }
  emit(Family::kMergeToNeck, 0, 0, sinks[4][0]);
  return out;
}

}  // namespace detail

/// Memoized normalizer.
///
/// Normal forms of T(a,b,0) are cached per (a,b); T(a,b,c) is served as the
/// cached value shifted by c.  Safe to call from several threads at once.
class Normalizer {
 public:
  explicit Normalizer(std::uint32_t cap = kDefaultMemoCap) : cap_(cap) {}

  Normalizer(const Normalizer&) = delete;
  Normalizer& operator=(const Normalizer&) = delete;

  [[nodiscard]] std::uint32_t cap() const { return cap_; }

  [[nodiscard]] Combination normal_form(const Tree& t) const {
    if (is_normal_form(t)) return Combination::single(t);
    return neck_shift(*base(t.a, t.b), t.c);
  }

  /// Normal form split by the move that ends each rewriting path.
  /// Requires both legs nonempty.
  [[nodiscard]] FamilySplit split_by_last_move(const Tree& t) const {
    if (is_normal_form(t)) throw NoApplicableMove("no applicable move: " + t.to_string() + " is already normal");
    check_cap(t);
    FamilySplit parts = detail::tabulate(t.a, t.b);
    for (auto& p : parts) p = neck_shift(p, t.c);
    return parts;
  }

  [[nodiscard]] std::size_t cached_entries() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  void check_cap(const Tree& t) const {
    if (std::uint64_t{t.a} + t.b > cap_)
      throw CapExceeded("a+b = " + std::to_string(std::uint64_t{t.a} + t.b) + " exceeds the normalization cap " +
                        std::to_string(cap_));
  }

  std::shared_ptr<const Combination> base(std::uint32_t a, std::uint32_t b) const {
    check_cap(Tree{a, b, 0});
    const auto key = std::make_pair(a, b);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Combination total;
    for (const auto& part : detail::tabulate(a, b)) total += part;
    auto value = std::make_shared<const Combination>(std::move(total));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

  std::uint32_t cap_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Combination>> cache_;
};

inline const Normalizer& default_normalizer() {
  static const Normalizer instance;
  return instance;
}

[[nodiscard]] inline Combination normal_form(const Tree& t) { return default_normalizer().normal_form(t); }

struct NaiveExpansion {
  Combination result;
  std::uint64_t rewrites = 0;  // expand_step applications
};

/// Literal replace-until-fixpoint expansion: the term list is rescanned and
/// every non-normal term is replaced by its three successors until none
/// remain.  Nothing is shared between terms; the cost is exponential.
[[nodiscard]] inline NaiveExpansion naive_expansion(const Tree& t, std::uint32_t cap = kDefaultNaiveCap) {
  if (std::uint64_t{t.a} + t.b > cap)
    throw CapExceeded("a+b = " + std::to_string(std::uint64_t{t.a} + t.b) + " exceeds the naive expansion cap " +
                      std::to_string(cap));
  NaiveExpansion out;
  std::vector<std::pair<Tree, LambdaPoly>> terms{{t, LambdaPoly(1)}};
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::pair<Tree, LambdaPoly>> next;
    next.reserve(terms.size() * 3);
    for (auto& [tree, coeff] : terms) {
      if (is_normal_form(tree)) {
        next.emplace_back(tree, std::move(coeff));
        continue;
      }
      changed = true;
      ++out.rewrites;
      for (const auto& [child, weight] : expand_step(tree)) next.emplace_back(child, coeff * weight);
    }
    terms = std::move(next);
  }
  for (const auto& [tree, coeff] : terms) out.result.add(tree, coeff);
  return out;
}

[[nodiscard]] inline Combination normal_form_naive(const Tree& t, std::uint32_t cap = kDefaultNaiveCap) {
  return naive_expansion(t, cap).result;
}

}  // namespace baxter

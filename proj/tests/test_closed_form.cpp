#include <set>
#include <string>

#include <gtest/gtest.h>

#include "baxter/closed_form.hpp"
#include "baxter/validate.hpp"

namespace baxter {
namespace {

const LambdaPoly kLambda = LambdaPoly::lambda();
constexpr std::array kAllSums{Family::kLeftMove, Family::kMergeToRightLeg, Family::kRightMove, Family::kMergeToLeftLeg,
                              Family::kMergeToNeck};

std::set<std::pair<std::uint32_t, std::uint32_t>> points(std::uint32_t a, std::uint32_t b, Family f, Mode m) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& p : enumerate_domain(a, b, f, m)) out.emplace(p.i, p.j);
  return out;
}

// Solves k1 + k3 = a - a', k2 + k3 = b - b', k1 + k2 + k3 = j - 1 for the
// leg state (a',b') reached one move before the target.
struct Solved {
  long long k1, k2, k3, exponent;
};
Solved solve_move_counts(Family f, long long a, long long b, long long i, long long j) {
  long long pa = 1, pb = 1;
  bool merge_last = false;
  switch (f) {
    case Family::kLeftMove: pa = 1, pb = i; break;
    case Family::kMergeToRightLeg: pa = 1, pb = i + 1, merge_last = true; break;
    case Family::kRightMove: pa = i, pb = 1; break;
    case Family::kMergeToLeftLeg: pa = i + 1, pb = 1, merge_last = true; break;
    case Family::kMergeToNeck: merge_last = true; break;
  }
  const long long k3 = (a - pa) + (b - pb) - (j - 1);
  return {a - pa - k3, b - pb - k3, k3, k3 + (merge_last ? 1 : 0)};
}

TEST(Multinomial, Values) {
  EXPECT_EQ(multinomial(1, 0, 0, 1), 1);
  EXPECT_EQ(multinomial(2, 1, 1, 0), 2);
  EXPECT_EQ(multinomial(6, 2, 2, 2), 720 / (2 * 2 * 2));
  EXPECT_EQ(multinomial(0, 0, 0, 0), 1);
}

TEST(Multinomial, ZeroOutsideSupport) {
  EXPECT_EQ(multinomial(3, -1, 2, 2), 0);
  EXPECT_EQ(multinomial(3, 1, 1, 0), 0);
  EXPECT_EQ(multinomial(-1, 0, 0, -1), 0);
}

TEST(RestrictedIdentity, Examples) {
  EXPECT_EQ(restricted_identity(1, 1, 0), (Combination{{Tree{0, 1, 1}, 1}, {Tree{1, 0, 1}, 1}}));
  EXPECT_EQ(restricted_identity(2, 1, 0), (Combination{{Tree{0, 1, 2}, 1}, {Tree{1, 0, 2}, 1}, {Tree{2, 0, 1}, 1}}));
  EXPECT_EQ(restricted_identity(2, 2, 0),
            (Combination{{Tree{0, 1, 3}, 2}, {Tree{0, 2, 2}, 1}, {Tree{1, 0, 3}, 2}, {Tree{2, 0, 2}, 1}}));
}

TEST(RestrictedIdentity, RejectsEmptyLeg) {
  EXPECT_THROW((void)restricted_identity(0, 2, 0), std::invalid_argument);
  EXPECT_THROW((void)restricted_identity(3, 0, 1), std::invalid_argument);
}

TEST(RestrictedIdentity, MatchesWeightZeroNormalForm) {
  for (std::uint32_t a = 1; a <= 10; ++a)
    for (std::uint32_t b = 1; b <= 10; ++b)
      for (std::uint32_t c = 0; c <= 3; ++c)
        EXPECT_EQ(restricted_identity(a, b, c), specialize_lambda(normal_form(Tree{a, b, c}), 0)) << a << b << c;
}

TEST(GenericIdentity, DefiningIdentity) {
  EXPECT_EQ(generic_identity(1, 1, 0, Mode::kReconciled),
            (Combination{{Tree{0, 1, 1}, 1}, {Tree{1, 0, 1}, 1}, {Tree{0, 0, 1}, kLambda}}));
}

TEST(GenericIdentity, ReconciledTwoByTwo) {
  EXPECT_EQ(generic_identity(2, 2, 0, Mode::kReconciled), normal_form_naive(Tree{2, 2, 0}));
}

TEST(GenericIdentity, PublishedDiscrepancyAtTwoByTwo) {
  const auto sums = generic_identity_sums(2, 2, 0, Mode::kAsPublished);
  const Tree key{0, 1, 2};
  // printed c2 at (i,j) = (1,2): C(1; 0,0,1) λ^2
  EXPECT_EQ(sums[static_cast<std::size_t>(Family::kMergeToRightLeg)].coeff(key), kLambda * kLambda);
  EXPECT_EQ(normal_form(Tree{2, 2, 0}).coeff(key), kLambda * 2);
  EXPECT_EQ(generic_identity(2, 2, 0, Mode::kAsPublished).coeff(key), kLambda + kLambda * kLambda);
}

TEST(GenericIdentity, ReconciledMatchesNormalForm) {
  for (std::uint32_t a = 1; a <= 8; ++a)
    for (std::uint32_t b = 1; b <= 8; ++b)
      for (std::uint32_t c = 0; c <= 2; ++c)
        ASSERT_EQ(generic_identity(a, b, c, Mode::kReconciled), normal_form(Tree{a, b, c})) << a << b << c;
}

TEST(GenericIdentity, RejectsEmptyLeg) {
  EXPECT_THROW((void)generic_identity(0, 1, 0, Mode::kReconciled), std::invalid_argument);
  EXPECT_THROW((void)generic_identity(1, 0, 0, Mode::kAsPublished), std::invalid_argument);
}

TEST(GenericIdentity, NonnegativeCoefficients) {
  for (auto mode : {Mode::kAsPublished, Mode::kReconciled})
    for (std::uint32_t a = 1; a <= 8; ++a)
      for (std::uint32_t b = 1; b <= 8; ++b) {
        for (const auto& [t, p] : generic_identity(a, b, 0, mode)) EXPECT_TRUE(p.nonnegative());
        for (const auto& [t, p] : restricted_identity(a, b, 0)) {
          EXPECT_TRUE(p.nonnegative());
          EXPECT_EQ(p.size(), 1u);
          EXPECT_EQ(p.terms().begin()->first, 0u);
        }
      }
}

TEST(GenericIdentity, NeckIndependence) {
  for (auto mode : {Mode::kAsPublished, Mode::kReconciled})
    for (std::uint32_t a = 1; a <= 6; ++a)
      for (std::uint32_t b = 1; b <= 6; ++b)
        for (std::uint32_t c = 0; c <= 3; ++c)
          EXPECT_EQ(generic_identity(a, b, c, mode), neck_shift(generic_identity(a, b, 0, mode), c));
}

TEST(EnumerateDomain, Examples) {
  using P = std::set<std::pair<std::uint32_t, std::uint32_t>>;
  EXPECT_EQ(points(2, 2, Family::kLeftMove, Mode::kAsPublished), (P{{1, 2}, {1, 3}, {2, 2}}));
  EXPECT_TRUE(points(1, 1, Family::kMergeToRightLeg, Mode::kAsPublished).empty());
  EXPECT_EQ(points(2, 2, Family::kMergeToNeck, Mode::kAsPublished), (P{{0, 2}, {0, 3}}));
  EXPECT_THROW((void)enumerate_domain(0, 2, Family::kLeftMove, Mode::kReconciled), std::invalid_argument);
}

TEST(EnumerateDomain, ReconciledDomainsAreExactlyTheSolvableMoveCounts) {
  for (std::uint32_t a = 1; a <= 8; ++a)
    for (std::uint32_t b = 1; b <= 8; ++b)
      for (Family f : kAllSums) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> solvable;
        const std::uint32_t imax = f == Family::kMergeToNeck ? 0 : std::max(a, b);
        const std::uint32_t imin = f == Family::kMergeToNeck ? 0 : 1;
        for (std::uint32_t i = imin; i <= imax; ++i) {
          // the surviving leg can only shrink
          if ((f == Family::kLeftMove && i > b) || (f == Family::kMergeToRightLeg && i + 1 > b) ||
              (f == Family::kRightMove && i > a) || (f == Family::kMergeToLeftLeg && i + 1 > a))
            continue;
          for (std::uint32_t j = 1; j <= a + b; ++j) {
            const auto s = solve_move_counts(f, a, b, i, j);
            if (s.k1 >= 0 && s.k2 >= 0 && s.k3 >= 0) solvable.emplace(i, j);
          }
        }
        EXPECT_EQ(points(a, b, f, Mode::kReconciled), solvable) << family_label(f) << " a=" << a << " b=" << b;
      }
}

TEST(CoefficientArgs, ReconciledMatchesSolvedMoveCounts) {
  for (std::uint32_t a = 1; a <= 8; ++a)
    for (std::uint32_t b = 1; b <= 8; ++b)
      for (Family f : kAllSums)
        for (const auto& p : enumerate_domain(a, b, f, Mode::kReconciled)) {
          const auto s = solve_move_counts(f, a, b, p.i, p.j);
          const auto k = coefficient_args(f, Mode::kReconciled, a, b, p.i, p.j);
          EXPECT_EQ(k, (CoefficientArgs{p.j - 1LL, s.k1, s.k2, s.k3, s.exponent})) << family_label(f);
          EXPECT_GT(multinomial(k.n, k.k1, k.k2, k.k3), 0);
        }
}

TEST(CoefficientArgs, PublishedSharesTheUnchangedSums) {
  for (Family f : {Family::kLeftMove, Family::kMergeToLeftLeg, Family::kMergeToNeck})
    for (long long i = 0; i <= 4; ++i)
      for (long long j = 1; j <= 8; ++j)
        EXPECT_EQ(coefficient_args(f, Mode::kAsPublished, 4, 4, i, j), coefficient_args(f, Mode::kReconciled, 4, 4, i, j));
}

TEST(Validate, RestrictedIsClean) {
  const auto r = validate(10, 10, Mode::kReconciled, true);
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(r.cells, 100u);
  EXPECT_EQ(r.mode, "restricted");
}

TEST(Validate, ReconciledIsClean) { EXPECT_TRUE(validate(8, 8, Mode::kReconciled, false).empty()); }

TEST(Validate, PublishedMismatchesAreLocalized) {
  const auto r = validate(8, 8, Mode::kAsPublished, false);
  ASSERT_FALSE(r.empty());
  for (const auto& m : r.mismatches) EXPECT_TRUE(m.sum == "D2" || m.sum == "D3") << m.sum;
  const auto by_sum = r.by_sum();
  EXPECT_GT(by_sum.count("D2"), 0u);
  EXPECT_GT(by_sum.count("D3"), 0u);
  for (const char* clean : {"D1", "D4", "D5"}) EXPECT_EQ(by_sum.count(clean), 0u) << clean;
}

TEST(Validate, ReportIsSortedAndIndependentOfJobs) {
  const auto serial = validate(6, 6, Mode::kAsPublished, false, 1);
  const auto parallel = validate(6, 6, Mode::kAsPublished, false, 4);
  EXPECT_EQ(to_json(serial).dump(), to_json(parallel).dump());
  for (std::size_t k = 1; k < serial.mismatches.size(); ++k) {
    const auto& p = serial.mismatches[k - 1];
    const auto& q = serial.mismatches[k];
    EXPECT_LT(std::tie(p.a, p.b, p.tree), std::tie(q.a, q.b, q.tree));
  }
}

TEST(Validate, JsonSchema) {
  const auto j = to_json(validate(2, 2, Mode::kAsPublished, false));
  EXPECT_EQ(j["grid"], Json::array({2, 2}));
  EXPECT_EQ(j["mode"], "as-published");
  ASSERT_FALSE(j["mismatches"].empty());
  const auto& first = j["mismatches"][0];
  for (const char* key : {"a", "b", "tree", "expected", "got", "sum"}) EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_TRUE(first["expected"][0][1].is_string());
}

}  // namespace
}  // namespace baxter

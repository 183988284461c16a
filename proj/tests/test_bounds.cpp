#include <gtest/gtest.h>

#include <algorithm>

#include "dgr/bounds.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"
#include "dgr/errors.hpp"

using namespace dgr;

namespace {

BoundResult eval(BoundId id, int n, std::optional<Rational> m = std::nullopt, std::optional<int> kappa = std::nullopt,
                 std::optional<int> lambda = std::nullopt) {
  return evaluate({id, n, m, kappa, lambda});
}

bool has_note(const BoundResult& r, const std::string& note) {
  return std::find(r.notes.begin(), r.notes.end(), note) != r.notes.end();
}

}  // namespace

TEST(MStar, Examples) {
  EXPECT_EQ(m_star(6, 23, 2), 23);
  EXPECT_EQ(m_star(6, 24, 2), 25);
  for (int m = 0; m < 40; ++m) EXPECT_EQ(m_star(9, m, 1), m);
  EXPECT_EQ(m_star(8, 40, 3), 41);  // 47 = 2 (mod 3)
  EXPECT_EQ(m_star(8, Rational(81, 2), 3), 41);
  EXPECT_THROW(m_star(6, 1, 0), InvalidInput);
}

TEST(Evaluate, Examples) {
  const auto s = eval(BoundId::size_digraph, 5, Rational(10));
  ASSERT_TRUE(s.value);
  EXPECT_EQ(*s.value, Rational(7, 2));
  const auto k = eval(BoundId::kappa_digraph, 6, Rational(25), 2);
  EXPECT_EQ(k.m_star, 25);
  // m = 25 exceeds the stated range n^2 - 2n - 1 = 23, so the value is only
  // available through the raw formula.
  EXPECT_FALSE(k.applicable);
  EXPECT_TRUE(has_note(k, "m_above_n2_minus_2n_minus_1"));
  EXPECT_EQ(formula_value({BoundId::kappa_digraph, 6, Rational(25), 2, std::nullopt}), Rational(9, 5));
  const auto l = eval(BoundId::lambda_graph, 12, Rational(30), std::nullopt, 2);
  ASSERT_TRUE(l.value);
  EXPECT_EQ(*l.value, Rational(127, 33));
}

TEST(Evaluate, OrderBounds) {
  EXPECT_EQ(*eval(BoundId::order, 7).value, Rational(7, 2));
  EXPECT_EQ(*eval(BoundId::digraph_order, 4).value, Rational(2));
  EXPECT_THROW(eval(BoundId::digraph_order, 2), InvalidInput);
  EXPECT_THROW(eval(BoundId::order, 1), InvalidInput);
  EXPECT_FALSE(eval(BoundId::order, 5).m_star.has_value());
}

TEST(Evaluate, MissingParameters) {
  EXPECT_THROW(eval(BoundId::order_size, 5), InvalidInput);
  EXPECT_THROW(eval(BoundId::kappa_graph, 5, Rational(3)), InvalidInput);
  EXPECT_THROW(eval(BoundId::lambda_graph, 5, Rational(3)), InvalidInput);
  EXPECT_THROW(eval(BoundId::lambda_graph, 5, Rational(3), std::nullopt, 4), InvalidInput);
  EXPECT_THROW(eval(BoundId::kappa_digraph, 5, Rational(3), 0), InvalidInput);
  EXPECT_THROW(parse_bound_id("nope"), InvalidInput);
  for (BoundId id : all_bounds()) EXPECT_EQ(parse_bound_id(to_string(id)), id);
}

TEST(Evaluate, RangeGuards) {
  const auto r = eval(BoundId::kappa_graph, 6, Rational(11), 1);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.value);
  EXPECT_TRUE(has_note(r, "m_above_binom_n_minus_1_2"));
  EXPECT_TRUE(eval(BoundId::kappa_graph, 6, Rational(10), 1).applicable);
  EXPECT_TRUE(has_note(eval(BoundId::kappa_graph, 4, Rational(2), 4), "kappa_above_n_minus_1"));
  EXPECT_TRUE(has_note(eval(BoundId::order_size, 4, Rational(-1)), "m_negative"));
  EXPECT_TRUE(has_note(eval(BoundId::order_size, 4, Rational(7)), "m_above_binom_n_2"));
  EXPECT_TRUE(has_note(eval(BoundId::lambda_graph, 3, Rational(3), std::nullopt, 3), "lambda_above_n_minus_1"));
}

TEST(Evaluate, LambdaThresholds) {
  // lambda = 2, n = 12: threshold ceil(20) - 2 = 18.
  EXPECT_EQ(*eval(BoundId::lambda_graph, 12, Rational(17), std::nullopt, 2).value, Rational(4));
  EXPECT_EQ(*eval(BoundId::lambda_graph, 12, Rational(18), std::nullopt, 2).value,
            Rational(4) - Rational(36, 33) + Rational(5, 3));
  // lambda = 3, n = 10: threshold ceil(22.5) - 2 = 21.
  EXPECT_EQ(*eval(BoundId::lambda_graph, 10, Rational(20), std::nullopt, 3).value, Rational(5, 2));
  EXPECT_EQ(*eval(BoundId::lambda_graph, 10, Rational(21), std::nullopt, 3).value,
            Rational(5, 2) - Rational(21, 18) + Rational(3, 2));
  // Eulerian lambda = 2, n = 12: threshold ceil(10) - 1 = 9.
  EXPECT_EQ(*eval(BoundId::eulerian_lambda, 12, Rational(8), std::nullopt, 2).value, Rational(4));
  EXPECT_EQ(*eval(BoundId::eulerian_lambda, 12, Rational(9), std::nullopt, 2).value,
            Rational(4) - Rational(18, 33) + Rational(5, 3));
  // Eulerian lambda = 3, n = 8: threshold ceil(9) - 1 = 8.
  EXPECT_EQ(*eval(BoundId::eulerian_lambda, 8, Rational(15, 2), std::nullopt, 3).value, Rational(2));
  EXPECT_EQ(*eval(BoundId::eulerian_lambda, 8, Rational(8), std::nullopt, 3).value,
            Rational(2) - Rational(8, 14) + Rational(3, 2));
}

TEST(BoundProperties, Specialization) {
  for (int n = 2; n <= 40; ++n) {
    for (int m = 0; m <= binomial2(n - 1); ++m) {
      const auto a = eval(BoundId::kappa_graph, n, Rational(m), 1);
      const auto b = eval(BoundId::order_size, n, Rational(m));
      ASSERT_TRUE(a.value && b.value);
      EXPECT_EQ(*a.value, *b.value);
    }
    for (int m = 0; m <= claimed_family_max(n); ++m) {
      const auto a = eval(BoundId::kappa_digraph, n, Rational(m), 1);
      const auto b = eval(BoundId::size_digraph, n, Rational(m));
      ASSERT_TRUE(a.value && b.value) << n << " " << m;
      EXPECT_EQ(*a.value, *b.value);
    }
  }
}

TEST(BoundProperties, EulerianSizeReusesGraphForm) {
  for (int n = 2; n <= 20; ++n) {
    for (int twice = 0; twice <= 2 * binomial2(n); ++twice) {
      const Rational m0(twice, 2);
      EXPECT_EQ(formula_value({BoundId::eulerian_size, n, m0, std::nullopt, std::nullopt}),
                formula_value({BoundId::order_size, n, m0, std::nullopt, std::nullopt}));
      EXPECT_EQ(formula_value({BoundId::eulerian_kappa, n, m0, 2, std::nullopt}),
                formula_value({BoundId::kappa_graph, n, m0, 2, std::nullopt}));
    }
  }
}

// Strictly decreasing in m wherever the expression is linear in m. The
// kappa_digraph bound is a step function through m* (constant across each
// residue class window), and the lambda bounds are piecewise, so for those
// the check is monotone non-increasing within each piece.
TEST(BoundProperties, MonotoneInM) {
  for (int n = 3; n <= 16; ++n) {
    for (BoundId id : all_bounds()) {
      if (!needs_size(id)) continue;
      for (int param = 1; param <= 3; ++param) {
        BoundQuery q{id, n, std::nullopt, std::nullopt, std::nullopt};
        if (needs_kappa(id)) q.kappa = param;
        if (needs_lambda(id)) {
          if (param == 1) continue;
          q.lambda = param;
        }
        std::optional<Rational> prev;
        std::optional<bool> prev_piece;
        const bool step = id == BoundId::kappa_digraph && param > 1;
        const bool piecewise = needs_lambda(id);
        for (int twice = 0; twice <= 2 * n * n; ++twice) {
          q.m = is_eulerian_bound(id) ? Rational(twice, 2) : Rational(twice / 2);
          if (!is_eulerian_bound(id) && twice % 2) continue;
          const auto r = evaluate(q);
          if (!r.applicable) {
            prev.reset();
            continue;
          }
          bool piece = false;
          if (piecewise) {
            const bool eulerian = is_eulerian_bound(id);
            const Rational scaled = q.lambda == 2 ? Rational(5 * n, eulerian ? 6 : 3) : Rational(9 * n, eulerian ? 8 : 4);
            piece = *q.m >= ceil(scaled) - (eulerian ? 1 : 2);
          }
          if (prev && (!piecewise || piece == *prev_piece)) {
            if (step || (piecewise && !piece)) {
              EXPECT_LE(*r.value, *prev) << to_string(id) << " n=" << n;
            } else {
              EXPECT_LT(*r.value, *prev) << to_string(id) << " n=" << n;
            }
          }
          prev = r.value;
          prev_piece = piece;
        }
      }
    }
  }
}

// rho(DPK) against the kappa_digraph formula at the member's own size.
// kappa in {1, 2}: exact equality for every member with n <= 9.
TEST(BoundProperties, DpkAttainsKappaDigraphBound) {
  for (int kappa = 1; kappa <= 2; ++kappa) {
    for (int n = 4; n <= 9; ++n) {
      for (const auto& p : path_complete_family(n, kappa)) {
        const auto d = kappa_pc_digraph(p);
        const Rational rho = remoteness(d).value;
        const BoundQuery q{BoundId::kappa_digraph, n, Rational(static_cast<std::int64_t>(d.size())), kappa,
                           std::nullopt};
        EXPECT_EQ(m_star(n, *q.m, kappa), static_cast<std::int64_t>(d.size()));
        EXPECT_EQ(formula_value(q), rho) << p.describe();
        const auto r = evaluate(q);
        if (r.applicable) EXPECT_LE(rho, *r.value);
      }
    }
  }
}

// kappa = 3: family sizes are all = 1 (mod 3) while the stated anchor
// n^2 - 2n - 1 is = 2 (mod 3), so m* = m + 1 and the stated bound sits
// 1/(3(n-1)) below rho(DPK). Anchoring at the counted maximum (n-1)^2
// restores equality. This pins the discrepancy rather than hiding it.
TEST(BoundProperties, DpkKappaThreeAnchorDiscrepancy) {
  const int kappa = 3;
  int members = 0;
  for (int n = 8; n <= 9; ++n) {
    for (const auto& p : path_complete_family(n, kappa)) {
      ++members;
      const auto d = kappa_pc_digraph(p);
      const auto m = static_cast<std::int64_t>(d.size());
      const Rational rho = remoteness(d).value;
      EXPECT_EQ(m % kappa, 1);
      EXPECT_EQ(m_star(n, Rational(m), kappa), m + 1);
      const Rational stated = formula_value({BoundId::kappa_digraph, n, Rational(m), kappa, std::nullopt});
      EXPECT_EQ(rho - stated, Rational(1, kappa * (n - 1))) << p.describe();
      const std::int64_t counted_anchor = static_cast<std::int64_t>(n - 1) * (n - 1);
      const std::int64_t mstar = round_up_to_class(Rational(m), counted_anchor, kappa);
      EXPECT_EQ(mstar, m);
      const Rational corrected = Rational(n, kappa) + 2 - Rational(1, kappa) - Rational(kappa - 1, n - 1) -
                                 Rational(mstar, kappa * (n - 1));
      EXPECT_EQ(corrected, rho);
    }
  }
  EXPECT_GT(members, 0);
}

TEST(Sharpness, Examples) {
  const auto a = sharpness_guard(BoundId::kappa_digraph, 6, Rational(25), 2);
  // Congruence holds; the stated upper range (m <= 23) fails, while 25 is the
  // counted size of the only family member: audit-flagged.
  EXPECT_EQ(std::count(a.reasons.begin(), a.reasons.end(), "congruence"), 0);
  EXPECT_FALSE(a.met);
  EXPECT_EQ(std::count(a.reasons.begin(), a.reasons.end(), "upper_range"), 1);
  EXPECT_TRUE(a.audit_flagged);
  const auto b = sharpness_guard(BoundId::kappa_digraph, 6, Rational(24), 2);
  EXPECT_FALSE(b.met);
  EXPECT_EQ(std::count(b.reasons.begin(), b.reasons.end(), "congruence"), 1);
  for (int m = 0; m < 30; ++m) {
    const auto c = sharpness_guard(BoundId::kappa_graph, 9, Rational(m), 1);
    EXPECT_EQ(std::count(c.reasons.begin(), c.reasons.end(), "congruence"), 0);
    const auto d = sharpness_guard(BoundId::size_digraph, 9, Rational(m), std::nullopt);
    EXPECT_EQ(std::count(d.reasons.begin(), d.reasons.end(), "congruence"), 0);
  }
  EXPECT_THROW(sharpness_guard(BoundId::kappa_graph, 6, Rational(3), std::nullopt), InvalidInput);
  EXPECT_TRUE(sharpness_guard(BoundId::digraph_order, 5, Rational(0), std::nullopt).met);
  EXPECT_FALSE(sharpness_guard(BoundId::lambda_graph, 9, Rational(20), 2).met);
}

TEST(Sharpness, KappaGraphRange) {
  // n = 7, kappa = 2: C(6,2) = 15 = 1 (mod 2) so b = 1; lower bound
  // (7*5 - 8 - 2 + 1 - 1) / 2 = 12.5.
  EXPECT_TRUE(sharpness_guard(BoundId::kappa_graph, 7, Rational(13), 2).met);
  EXPECT_TRUE(sharpness_guard(BoundId::kappa_graph, 7, Rational(15), 2).met);
  const auto low = sharpness_guard(BoundId::kappa_graph, 7, Rational(11), 2);
  EXPECT_EQ(low.reasons, std::vector<std::string>{"lower_range"});
  const auto high = sharpness_guard(BoundId::kappa_graph, 7, Rational(17), 2);
  EXPECT_EQ(high.reasons, std::vector<std::string>{"upper_range"});
}

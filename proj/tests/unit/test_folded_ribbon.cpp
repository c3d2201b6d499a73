#include <gtest/gtest.h>

#include <cmath>

#include "flatribbon/folded_ribbon.hpp"

using namespace flatribbon::fold;

namespace {

const double kSqrt5 = std::sqrt(5.0);

// Reference totals at w = 1, summed from the waypoint coordinates with
// exact arithmetic and frozen here.
constexpr double kTotalN2 = 10.75621499883999;
constexpr double kTotalN4 = 13.99228297633978;
constexpr double kTotalN100 = 169.3235458963297;

// Each extra pair of half twists adds one x4x5 round trip of 2 (3w + a)/2.
double reference_total(int n, double w) { return (kTotalN2 + (n - 2) / 2.0 * (1.0 + kSqrt5)) * w; }

}  // namespace

TEST(Layout, RejectsBadArguments) {
  EXPECT_THROW(build_layout(0.0, 4), std::invalid_argument);
  EXPECT_THROW(build_layout(-1.0, 4), std::invalid_argument);
  EXPECT_THROW(build_layout(1.0, 3), std::invalid_argument);
  EXPECT_THROW(build_layout(1.0, 0), std::invalid_argument);
  EXPECT_THROW(build_layout(1.0, 4).at("Z"), std::out_of_range);
}

TEST(Layout, FoldOffsetAndX2) {
  const auto l = build_layout(1.0, 4);
  EXPECT_NEAR(l.fold_offset, kSqrt5 - 2.0, 1e-15);
  EXPECT_NEAR(l.at("x2").x, 2.118034, 1e-6);
  EXPECT_NEAR(l.at("x2").y, 0.5, 1e-12);
}

TEST(Layout, HalfAngleGivesGoldenTangent) {
  const double t = forced_tan_half_theta2();
  EXPECT_NEAR(t, 0.2840790438, 1e-10);
  EXPECT_NEAR(std::tan(2.0 * std::atan(t)), (kSqrt5 - 1.0) / 2.0, 1e-12);
}

TEST(Layout, X5X6IsVerticalAndX6X7Displacement) {
  for (double w : {0.5, 1.0, 3.0}) {
    const auto l = build_layout(w, 4);
    EXPECT_NEAR(l.at("x5").x, l.at("x6").x, 1e-12);
    const double a = l.fold_offset;
    EXPECT_NEAR(l.at("x7").x - l.at("x6").x, w, 1e-12);
    // x6 -> x7 drops by (3w + a)/2 when tan(theta2) = 2w / (3w + a)
    const double tan_theta2 = std::tan(2.0 * std::atan(l.tan_half_theta2));
    EXPECT_NEAR(tan_theta2, 2.0 * w / (3.0 * w + a), 1e-12);
  }
}

TEST(Segments, ClosedFormsMatchCoordinates) {
  for (double w : {0.5, 1.0, 3.0}) {
    const auto l = build_layout(w, 4);
    const auto closed = segment_lengths(l);
    const auto direct = waypoint_distances(l);
    ASSERT_EQ(closed.size(), 9u);
    ASSERT_EQ(direct.size(), 9u);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      EXPECT_EQ(closed[i].first, direct[i].first);
      EXPECT_NEAR(closed[i].second, direct[i].second, 1e-9 * w) << closed[i].first << " w=" << w;
    }
  }
}

TEST(Segments, SpotValues) {
  const auto l = build_layout(1.0, 4);
  const auto s = segment_lengths(l);
  EXPECT_NEAR(s[1].second, 1.809016994, 1e-9);  // x2x3
  EXPECT_NEAR(s[3].second, 1.618033989, 1e-9);  // x4x5
  EXPECT_NEAR(s[5].second, 1.902113033, 1e-9);  // x6x7
}

TEST(Path, TwoHalfTwistsSkipTheTwistBlock) {
  const auto p = fold_path(2);
  EXPECT_EQ(p.twist_repeats, 0);
  EXPECT_EQ(p.waypoints, (std::vector<std::string>{"x1", "x2", "x3", "x6", "x7", "x8", "x9", "x1"}));
  EXPECT_EQ(p.to_string(), "x1 x2 [x3 x6 x7] x8 x9 x1");
}

TEST(Path, RepeatCount) {
  EXPECT_EQ(fold_path(4).twist_repeats, 1);
  EXPECT_EQ(fold_path(10).twist_repeats, 4);
  EXPECT_EQ(fold_path(6).to_string(), "x1 x2 [x3 (x4 x5)^2 x6 x7] x8 x9 x1");
  EXPECT_THROW(fold_path(5), std::invalid_argument);
}

TEST(Total, ReferenceValues) {
  EXPECT_NEAR(total_length(1.0, 4), kTotalN4, 1e-9);
  EXPECT_NEAR(total_length(1.0, 2), kTotalN2, 1e-9);
  EXPECT_NEAR(total_length(1.0, 100), kTotalN100, 1e-9);
  EXPECT_NEAR(upper_bound(100), kTotalN100, 1e-9);
}

TEST(Total, LinearInHalfTwistsAndWidth) {
  for (int n = 2; n <= 60; n += 2) {
    for (double w : {0.5, 1.0, 3.0}) {
      EXPECT_NEAR(total_length(w, n), reference_total(n, w), 1e-9 * w) << n;
      EXPECT_NEAR(total_length(w, n), upper_bound(n) * w, 1e-9 * w) << n;
    }
  }
}

TEST(Total, DoesNotDependOnTheHalfAngle) {
  for (double t : {0.1, 0.2840790438, 0.5}) {
    const auto l = build_layout(1.0, 6, t);
    EXPECT_NEAR(path_length(l, fold_path(6)), reference_total(6, 1.0), 1e-9);
  }
}

TEST(UpperBound, OddUsesNextEven) {
  for (int n = 1; n <= 99; n += 2) EXPECT_DOUBLE_EQ(upper_bound(n), upper_bound(n + 1));
  EXPECT_THROW(upper_bound(0), std::invalid_argument);
}

TEST(Slope, ThresholdBehaviour) {
  EXPECT_NEAR(slope_constant(), (kSqrt5 + 2.0) / 2.0, 1e-15);
  int first = -1;
  for (int n = 1; n <= 100; ++n) {
    if (bound_vs_crossing(n).slope_check) {
      first = n;
      break;
    }
  }
  EXPECT_EQ(first, 8);
  EXPECT_FALSE(bound_vs_crossing(9).slope_check);
  for (int n = 10; n <= 10000; ++n) ASSERT_TRUE(bound_vs_crossing(n).slope_check) << n;
  EXPECT_EQ(bound_vs_crossing(7).crossing_number, 9);
}

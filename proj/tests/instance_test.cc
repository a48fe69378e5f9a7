// Copyright 2026 The distrep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "distrep/instance.h"
#include "test_support.h"

namespace distrep {
namespace {

TEST(Ingest, ScalesByTwo) {
  const std::vector<RawRect> raw = {{0, 1, 0, 1}};
  const Instance inst = ingest(raw);
  ASSERT_EQ(inst.n(), 1);
  EXPECT_EQ(inst.rects[0], (Rect{0, 2, 0, 2}));
  EXPECT_EQ(inst.D, 2);
  EXPECT_FALSE(inst.identical_point_pair);
}

TEST(Ingest, DetectsIdenticalPointPair) {
  const std::vector<RawRect> raw = {{5, 5, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  const Instance inst = ingest(raw);
  ASSERT_TRUE(inst.identical_point_pair);
  EXPECT_EQ(inst.identical_point_pair->first, 1);
  EXPECT_EQ(inst.identical_point_pair->second, 2);
}

TEST(Ingest, IdenticalBoxesAreNotAPointPair) {
  const std::vector<RawRect> raw = {{0, 1, 0, 1}, {0, 1, 0, 1}};
  EXPECT_FALSE(ingest(raw).identical_point_pair);
}

TEST(Ingest, Errors) {
  auto message = [](std::vector<RawRect> raw) {
    try {
      ingest(raw);
    } catch (const IngestError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message({{3, 2, 0, 1}}), "left > right at index 0");
  EXPECT_EQ(message({{0, 1, 0, 1}, {0, 1, 4, 1}}), "bottom > top at index 1");
  EXPECT_EQ(message({{-1, 1, 0, 1}}), "negative coordinate at index 0");
  EXPECT_EQ(message({{0, kMaxInputCoordinate + 1, 0, 1}}),
            "coordinate exceeds 2^29 at index 0");
}

TEST(Ingest, RoundTripsThroughRawRects) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const auto raw = testing::random_rects(rng, 1 + k % 12, 50);
    const Instance inst = ingest(raw);
    EXPECT_EQ(raw_rects(inst), raw);
    for (const Rect& r : inst.rects) {
      for (int64_t c : {r.left, r.right, r.bottom, r.top}) {
        EXPECT_EQ(c % 2, 0);
        EXPECT_GE(c, 0);
        EXPECT_LE(c, inst.D);
      }
    }
  }
}

TEST(Norms, NamesAndFactors) {
  EXPECT_EQ(parse_norm("l1"), Norm::kL1);
  EXPECT_EQ(parse_norm("l2"), Norm::kL2);
  EXPECT_EQ(parse_norm("linf"), Norm::kLinf);
  EXPECT_THROW(parse_norm("l3"), std::invalid_argument);
  EXPECT_EQ(approx_factor_squared(Norm::kL1), 25);
  EXPECT_EQ(approx_factor_squared(Norm::kL2), 34);
  EXPECT_EQ(approx_factor_squared(Norm::kLinf), 36);
}

TEST(Distance, Examples) {
  const Point o{QuadScalar(0), QuadScalar(0)};
  const Point p{QuadScalar(3), QuadScalar(4)};
  EXPECT_EQ(distance(o, o, Norm::kL1), QuadScalar(0));
  EXPECT_EQ(distance(o, p, Norm::kL1), QuadScalar(7));
  EXPECT_EQ(distance(o, p, Norm::kLinf), QuadScalar(4));
  EXPECT_EQ(distance(o, p, Norm::kL2), QuadScalar(25));
  const Point s{QuadScalar(0, 1), QuadScalar(0)};
  EXPECT_EQ(distance(o, s, Norm::kL2), QuadScalar(2));
}

TEST(Distance, IntegerFormAgrees) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const int64_t dx = testing::uniform(rng, -1000, 1000);
    const int64_t dy = testing::uniform(rng, -1000, 1000);
    const Point o{QuadScalar(0), QuadScalar(0)};
    const Point p{QuadScalar(dx), QuadScalar(dy)};
    for (Norm norm : {Norm::kL1, Norm::kL2, Norm::kLinf}) {
      EXPECT_EQ(distance(o, p, norm), QuadScalar(int_distance(dx, dy, norm)));
    }
  }
}

TEST(RectCenter, Examples) {
  auto center = [](Rect r) {
    const Point c = rect_center(r);
    return std::make_pair(c.x, c.y);
  };
  EXPECT_EQ(center({0, 2, 0, 2}), std::make_pair(QuadScalar(1), QuadScalar(1)));
  EXPECT_EQ(center({4, 4, 6, 6}), std::make_pair(QuadScalar(4), QuadScalar(6)));
  EXPECT_EQ(center({0, 6, 2, 2}), std::make_pair(QuadScalar(3), QuadScalar(2)));
}

TEST(VerifyPoints, ReportsViolations) {
  const std::vector<RawRect> raw = {{0, 1, 0, 1}, {0, 1, 0, 1}};
  const Instance inst = ingest(raw);
  const std::vector<Point> good = {{QuadScalar(0), QuadScalar(0)},
                                   {QuadScalar(2), QuadScalar(2)}};
  EXPECT_FALSE(verify_points(inst, good, Rational(4), Norm::kL1));
  EXPECT_TRUE(verify_points(inst, good, Rational(5), Norm::kL1));
  EXPECT_FALSE(verify_points(inst, good, Rational(8), Norm::kL2));
  EXPECT_TRUE(verify_points(inst, good, Rational(9), Norm::kL2));
  const std::vector<Point> outside = {{QuadScalar(0), QuadScalar(0)},
                                      {QuadScalar(3), QuadScalar(2)}};
  EXPECT_TRUE(verify_points(inst, outside, Rational(1), Norm::kLinf));
  const std::vector<Point> too_few = {{QuadScalar(0), QuadScalar(0)}};
  EXPECT_TRUE(verify_points(inst, too_few, Rational(1), Norm::kLinf));
}

}  // namespace
}  // namespace distrep

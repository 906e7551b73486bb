#include <doctest.h>

#include <random>

#include "blowup/cone.hpp"

using namespace blowup;

namespace {

// Smallest m over the box that passes, found by binary search; the pass
// predicate is monotone in m since m.xi in R+C implies (m+1).xi in R+C.
BigInt minimal_m_over_box(const RationalCone2D& cone, const Vec2& R,
                          const BigInt& upper, long box) {
  BigInt lo = 1, hi = upper;
  if (!brute_force_verify(cone, R, hi, box).ok) return hi + 1;  // bound unsound
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (brute_force_verify(cone, R, mid, box).ok)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

TEST_CASE("hyperplane distance") {
  CHECK(hyperplane_distance_sq({0, 0}, {3, 4}).num == 0);
  CHECK(hyperplane_distance_sq({1, 0}, {0, 1}).num == 0);
  const auto d = hyperplane_distance_sq({1, 1}, {1, -2});
  CHECK(d.num == 1);
  CHECK(d.den == 5);
  CHECK_THROWS_AS(hyperplane_distance_sq({1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("cone construction and membership") {
  const RationalCone2D quad({1, 0}, {0, 1});
  CHECK(contains(quad, {3, 0}));
  CHECK_FALSE(interior_contains(quad, {3, 0}));
  CHECK(interior_contains(quad, {1, 1}));
  CHECK_FALSE(contains(quad, {-1, 2}));
  CHECK_THROWS_AS(RationalCone2D({1, 2}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(RationalCone2D({0, 0}, {1, 0}), std::invalid_argument);

  // generators are normalized to primitive vectors
  const RationalCone2D scaled({3, 0}, {0, 7});
  CHECK(scaled.v1 == Vec2{1, 0});
  CHECK(scaled.v2 == Vec2{0, 1});
}

TEST_CASE("lattice distance constant") {
  const RationalCone2D quad({1, 0}, {0, 1});
  const auto c1 = lattice_distance_constant_sq(quad);
  CHECK(c1.num == 1);
  CHECK(c1.den == 1);

  const RationalCone2D c({1, 0}, {1, 2});
  const auto c2 = lattice_distance_constant_sq(c);
  CHECK(c2.num == 1);
  CHECK(c2.den == 5);

  const RationalCone2D sym({2, 1}, {1, 2});
  const auto c3 = lattice_distance_constant_sq(sym);
  CHECK(c3.num == 1);
  CHECK(c3.den == 5);
}

TEST_CASE("effective multiple bound examples") {
  const RationalCone2D quad({1, 0}, {0, 1});
  CHECK(effective_multiple_bound(quad, {1, 1}) == 2);
  // 2 xi - R stays in the cone for xi = (1,1)
  CHECK(contains(quad, {2 * 1 - 1, 2 * 1 - 1}));

  const RationalCone2D c({1, 0}, {1, 2});
  CHECK(effective_multiple_bound(c, {2, 1}) == 5);

  CHECK_THROWS_AS(effective_multiple_bound(quad, {3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(effective_multiple_bound(quad, {-1, -1}), std::invalid_argument);
}

TEST_CASE("brute force verification") {
  const RationalCone2D quad({1, 0}, {0, 1});
  CHECK(brute_force_verify(quad, {1, 1}, 2, 50).ok);
  const auto res1 = brute_force_verify(quad, {1, 1}, 1, 5);
  // the exhaustive search defines the answer; m = 1 passes for the first
  // quadrant with R = (1,1) since xi - R keeps nonnegative coordinates
  CHECK(res1.ok);

  // a genuinely failing instance reports its witness
  const RationalCone2D c({1, 0}, {1, 2});
  const auto res2 = brute_force_verify(c, {2, 1}, 1, 10);
  CHECK_FALSE(res2.ok);
  REQUIRE(res2.has_witness);
  CHECK(interior_contains(c, res2.witness));
  CHECK_FALSE(contains(c, {res2.witness.x - 2, res2.witness.y - 1}));
}

TEST_CASE("integral points keep their distance from hyperplanes") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> dist(-100, 100);
  int checked = 0;
  while (checked < 1000) {
    Vec2 P{dist(rng), dist(rng)}, u{dist(rng), dist(rng)};
    if (u.x == 0 && u.y == 0) continue;
    if (dot(P, u) == 0) continue;
    const auto d = hyperplane_distance_sq(P, u);
    CHECK(d.num * norm_sq(u) >= d.den);  // d >= 1/|u|^2 cross-multiplied
    ++checked;
  }
}

TEST_CASE("scaling closure of the shifted-cone condition") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> gen(-20, 20), pt(-15, 15), tdist(1, 6);
  int checked = 0;
  while (checked < 200) {
    Vec2 a{gen(rng), gen(rng)}, b{gen(rng), gen(rng)};
    if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) continue;
    if (a.x * b.y - a.y * b.x == 0) continue;
    const RationalCone2D cone(a, b);
    Vec2 R{pt(rng), pt(rng)}, xi{pt(rng), pt(rng)};
    if (!interior_contains(cone, R) || !interior_contains(cone, xi)) continue;
    const BigInt m = effective_multiple_bound(cone, R);
    if (!contains(cone, {m * xi.x - R.x, m * xi.y - R.y})) continue;
    const long t = tdist(rng);
    CHECK(contains(cone, {m * t * xi.x - R.x, m * t * xi.y - R.y}));
    ++checked;
  }
}

TEST_CASE("soundness on random cones, with minimality gap") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> gen(-20, 20), pt(-20, 20);
  int checked = 0;
  while (checked < 25) {
    Vec2 a{gen(rng), gen(rng)}, b{gen(rng), gen(rng)};
    if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) continue;
    if (a.x * b.y - a.y * b.x == 0) continue;
    const RationalCone2D cone(a, b);
    Vec2 R{pt(rng), pt(rng)};
    if (!interior_contains(cone, R)) continue;
    const BigInt m = effective_multiple_bound(cone, R);
    CHECK(brute_force_verify(cone, R, m, 40).ok);
    CHECK(minimal_m_over_box(cone, R, m, 40) <= m);
    ++checked;
  }
}

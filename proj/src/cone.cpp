#include "blowup/cone.hpp"

#include <stdexcept>

namespace blowup {

BigInt dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
BigInt norm_sq(const Vec2& v) { return dot(v, v); }

namespace {

Vec2 make_primitive(Vec2 v) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  if (g > 1) {
    v.x /= g;
    v.y /= g;
  }
  return v;
}

// primitive normal of R_+ v, signed to be non-negative on `other`
Vec2 inward_normal(const Vec2& v, const Vec2& other) {
  Vec2 u{-v.y, v.x};
  if (dot(u, other) < 0) {
    u.x = -u.x;
    u.y = -u.y;
  }
  return u;
}

}  // namespace

RationalCone2D::RationalCone2D(Vec2 a, Vec2 b)
    : v1(make_primitive(std::move(a))), v2(make_primitive(std::move(b))) {
  if ((v1.x == 0 && v1.y == 0) || (v2.x == 0 && v2.y == 0))
    throw std::invalid_argument("cone: zero generator");
  const BigInt cross = v1.x * v2.y - v1.y * v2.x;
  if (cross == 0)
    throw std::invalid_argument("cone: generators must be linearly independent");
  u1 = inward_normal(v1, v2);
  u2 = inward_normal(v2, v1);
}

ExactDistanceSq hyperplane_distance_sq(const Vec2& P, const Vec2& u) {
  if (u.x == 0 && u.y == 0)
    throw std::invalid_argument("hyperplane_distance_sq: zero normal");
  const BigInt s = dot(P, u);
  return {s * s, norm_sq(u)};
}

ExactDistanceSq lattice_distance_constant_sq(const RationalCone2D& cone) {
  BigInt n1 = norm_sq(cone.u1), n2 = norm_sq(cone.u2);
  return {BigInt(1), n1 > n2 ? n1 : n2};
}

bool contains(const RationalCone2D& cone, const Vec2& P) {
  return dot(P, cone.u1) >= 0 && dot(P, cone.u2) >= 0;
}

bool interior_contains(const RationalCone2D& cone, const Vec2& P) {
  return dot(P, cone.u1) > 0 && dot(P, cone.u2) > 0;
}

BigInt effective_multiple_bound(const RationalCone2D& cone, const Vec2& R) {
  if (!interior_contains(cone, R))
    throw std::invalid_argument(
        "effective_multiple_bound: anchor must be strictly interior");
  // m = ceil(|R| / c): smallest m with m^2 >= |R|^2 * max|u_i|^2
  const ExactDistanceSq c_sq = lattice_distance_constant_sq(cone);
  const BigInt target = norm_sq(R) * c_sq.den;
  BigInt m = sqrt(target);
  if (m * m < target) ++m;
  return m;
}

VerifyResult brute_force_verify(const RationalCone2D& cone, const Vec2& R,
                                const BigInt& m, long box_radius) {
  if (m < 1) throw std::invalid_argument("brute_force_verify: m must be >= 1");
  if (box_radius < 1)
    throw std::invalid_argument("brute_force_verify: box radius must be >= 1");
  VerifyResult res;
  res.ok = true;
  for (long x = -box_radius; x <= box_radius; ++x) {
    for (long y = -box_radius; y <= box_radius; ++y) {
      Vec2 xi{x, y};
      if (!interior_contains(cone, xi)) continue;
      Vec2 shifted{m * xi.x - R.x, m * xi.y - R.y};
      if (!contains(cone, shifted)) {
        res.ok = false;
        res.has_witness = true;
        res.witness = xi;
        return res;
      }
    }
  }
  return res;
}

}  // namespace blowup

#pragma once

#include "blowup/divisor.hpp"

namespace blowup {

struct Vec2 {
  BigInt x;
  BigInt y;
  bool operator==(const Vec2&) const = default;
};

BigInt dot(const Vec2& a, const Vec2& b);
BigInt norm_sq(const Vec2& v);

// Exact squared distance <P,u>^2 / |u|^2 as a rational.
struct ExactDistanceSq {
  BigInt num;
  BigInt den;  // > 0
};

// Strictly convex planar cone R_+ v1 + R_+ v2, generators stored primitive.
// u1, u2 are the primitive inward normals: <v1,u1> = 0, <v2,u1> > 0 and
// symmetrically.
struct RationalCone2D {
  Vec2 v1, v2;
  Vec2 u1, u2;
  RationalCone2D(Vec2 a, Vec2 b);
};

ExactDistanceSq hyperplane_distance_sq(const Vec2& P, const Vec2& u);

// c^2 with c the uniform lower bound on the distance from any integral point
// strictly inside the cone to its boundary: c^2 = 1 / max(|u1|^2, |u2|^2).
ExactDistanceSq lattice_distance_constant_sq(const RationalCone2D& cone);

// Smallest positive integer m with m.c >= |R|: then m.xi lies in R + C for
// every integral point xi strictly inside C.
BigInt effective_multiple_bound(const RationalCone2D& cone, const Vec2& R);

bool contains(const RationalCone2D& cone, const Vec2& P);
bool interior_contains(const RationalCone2D& cone, const Vec2& P);

struct VerifyResult {
  bool ok = false;
  bool has_witness = false;
  Vec2 witness;
};

// Checks m.xi in R + C for every integral xi strictly inside the cone with
// |xi|_inf <= box_radius; reports the first failure in (x, y) index order.
VerifyResult brute_force_verify(const RationalCone2D& cone, const Vec2& R,
                                const BigInt& m, long box_radius);

}  // namespace blowup

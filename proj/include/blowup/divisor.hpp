#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Thrown when a divisor string does not match the `d;m1,m2,...` grammar.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Divisor class D = dH - sum_i m_i E_i on the blow-up X_r of the plane at r
// points, written (d; m_1,...,m_r).  r = 0 is a class on the plane itself.
struct DivisorClass {
  BigInt d;
  std::vector<BigInt> mults;

  DivisorClass() = default;
  DivisorClass(BigInt deg, std::vector<BigInt> ms)
      : d(std::move(deg)), mults(std::move(ms)) {}

  // (d; m^r) shorthand
  static DivisorClass uniform(BigInt deg, const BigInt& m, std::size_t r) {
    return DivisorClass(std::move(deg), std::vector<BigInt>(r, m));
  }

  std::size_t r() const { return mults.size(); }
  bool is_zero() const;

  bool operator==(const DivisorClass&) const = default;
};

struct SurfaceContext {
  std::size_t r = 0;
  BigInt p_a = 0;  // 0 whenever the context denotes X_r
};

// Intersection pairing: H^2 = 1, E_i^2 = -1, H.E_i = 0.
BigInt intersect(const DivisorClass& a, const DivisorClass& b);

// K_{X_r} = (-3; -1^r)
DivisorClass canonical_class(std::size_t r);

// vdim(D) = p_a + (D^2 - K.D)/2; on X_r this is d(d+3)/2 - sum m_i(m_i+1)/2.
BigInt vdim(const SurfaceContext& ctx, const DivisorClass& D);
BigInt vdim(const DivisorClass& D);

// edim(D) = max(-1, vdim(D))
BigInt edim(const SurfaceContext& ctx, const DivisorClass& D);
BigInt edim(const DivisorClass& D);

DivisorClass scale(const BigInt& n, const DivisorClass& D);
DivisorClass add(const DivisorClass& a, const DivisorClass& b);

// D = g.P with g > 0 the gcd of all entries and P primitive.  Throws on the
// zero class.
std::pair<BigInt, DivisorClass> primitive_part(const DivisorClass& D);

// Grammar: `d;m1,m2,...` with exponent shorthand `m^k`, e.g. `57;18^10`.
// A bare `d` or `d;` is a class on the plane (r = 0).
DivisorClass parse_divisor(const std::string& s);
std::string format_divisor(const DivisorClass& D);

}  // namespace blowup

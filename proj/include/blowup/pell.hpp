#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blowup/divisor.hpp"

namespace blowup {

// Periodic continued fraction of sqrt(r), r not a square: [a0; period...].
// The period is minimal; its last element is 2*a0.
struct ContinuedFraction {
  unsigned long a0 = 0;
  std::vector<unsigned long> period;
};

struct Convergent {
  BigInt p;
  BigInt q;
  unsigned k = 0;
};

// Row of the Pell divisor sequence on X_10: D_k = (d_k; m_k^10) with
// vdim(D_k) = 0, and its factorization D_k = c_k . F_k for k >= 1.
struct PellDivisorRecord {
  unsigned k = 0;
  DivisorClass D;
  BigInt d;
  BigInt m;
  bool has_factorization = false;
  BigInt c;
  DivisorClass F;
};

struct Question2Witness {
  unsigned k = 0;
  DivisorClass F;
  BigInt F_sq;
  BigInt minimal_multiple;  // = c_k, the first multiple with vdim >= 0
  std::vector<std::pair<BigInt, BigInt>> sampled_vdims;  // (h, vdim(hF)), h < c_k
  BigInt vdim_at_c;
  std::string assumption;  // "SHGH_CONDITIONAL"
};

struct Question3Witness {
  unsigned k = 0;
  DivisorClass G;  // (c_k - 1) F_k
  BigInt G_sq;     // (c_k - 1)^2
  BigInt vdim_G;   // negative
  std::string assumption;
};

ContinuedFraction cf_expansion(unsigned long r);

// k-th convergent p_k/q_k of sqrt(r), gcd(p_k, q_k) = 1.
Convergent convergent(unsigned long r, unsigned k);

// (a + b sqrt(r))^exp in Z[sqrt(r)], exp >= 1.
std::pair<BigInt, BigInt> zsqrt_pow(unsigned long r,
                                    std::pair<BigInt, BigInt> base,
                                    unsigned exp);

// First `count` solutions of x^2 - 10 y^2 = sign, increasing.  Only r = 10
// is supported.
std::vector<std::pair<BigInt, BigInt>> pell_solutions(unsigned long r, int sign,
                                                      unsigned count);

PellDivisorRecord pell_divisor(unsigned k);

// (d_k, m_k) for k = 0..count-1 via the affine recurrence
// d' = 19d + 60m + 57, m' = 6d + 19m + 18.
std::vector<std::pair<BigInt, BigInt>> pell_divisor_by_recurrence(unsigned count);

// vdim(h F_k): h(h - p_{k-1})/2 for odd k, 5h(h - q_{k-1}) for even k.
BigInt vdim_multiple_closed_form(unsigned k, const BigInt& h);

Question2Witness question2_witness(unsigned k);
Question3Witness question3_witness(unsigned k);

}  // namespace blowup

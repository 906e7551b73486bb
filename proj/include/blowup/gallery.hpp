#pragma once

#include <vector>

#include "blowup/divisor.hpp"

namespace blowup {

// Formal integer combination of F1, F2 and fiber classes E_{a,b} on E x E,
// (a, b) coprime.
struct FiberTerm {
  BigInt a;
  BigInt b;
  BigInt coeff;
};

struct AbelianClass {
  BigInt f1 = 0;
  BigInt f2 = 0;
  std::vector<FiberTerm> fibers;

  static AbelianClass F1() { return {1, 0, {}}; }
  static AbelianClass F2() { return {0, 1, {}}; }
  static AbelianClass fiber(BigInt a, BigInt b, BigInt coeff = 1);
};

// Pairing table: F1.F1 = F2.F2 = 0, F1.F2 = 1, E_{a,b}.F1 = b^2,
// E_{a,b}.F2 = a^2, E_{a,b}^2 = 0; cross term E_{a,b}.E_{c,d} = (ad - bc)^2,
// admitted only because it reproduces the table on F1 = E_{1,0}, F2 = E_{0,1}.
BigInt pair_abelian(const AbelianClass& X, const AbelianClass& Y);

struct KollarRecord {
  BigInt n, b;
  BigInt A_sq;       // 2b^2
  BigInt A_dot_FF;   // n^2 + b^2 + 1
  BigInt D_sq;       // 4b^2
  BigInt D_dot_K;    // 2(n^2 + b^2 + 1)
  BigRat ratio;      // D.K / D^2
};

// E x E double-cover numbers for A_n = F1 + E_{n,b}; (n, b) coprime, b != 0.
KollarRecord kollar_record(const BigInt& n, const BigInt& b);

struct RationalCoverRecord {
  DivisorClass A;
  BigInt D_sq;     // 2
  BigInt D_dot_K;  // 2 A.(K_Y + H)
  BigRat ratio;
};

// Double cover of X_r branched along a conic transform: D = pullback of A,
// requires A^2 = 1 and r >= 9.
RationalCoverRecord rational_cover_record(const DivisorClass& A);

struct HarbourneRecord {
  unsigned k = 0;
  BigInt d_k;
  BigInt vdim_G;  // computed via the double-cover formulas; equals -d_k
  BigInt h0_conditional;  // 1 under SHGH
  BigInt h1_conditional;  // -vdim_G
};

std::vector<HarbourneRecord> harbourne_sequence(unsigned k_max);

// Self-intersection lower bound -p_a - alpha - 1 Harbourne's conjecture
// would imply.
BigInt bnc_bound(const BigInt& p_a, const BigInt& alpha);

// The m4 candidate 6 alpha + 2 p_a - 4 for irreducible curves; alpha >= 1.
BigInt q4_bound_from_harbourne(const BigInt& p_a, const BigInt& alpha);

}  // namespace blowup

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blowup/divisor.hpp"
#include "blowup/shgh.hpp"

namespace blowup {

// Fat-point interpolation instance: plane curves of degree d with r assigned
// points of multiplicities m_i, over F_p at uniformly random points.
struct InterpolationInstance {
  long d = 0;
  std::vector<long> mults;           // positive
  std::uint64_t prime = 2147483647;  // must exceed d
  std::uint64_t seed = 0;
  unsigned trials = 1;
};

enum class RankVerdict { EMPTY_GENERIC, EFFECTIVE_DIM_AT_MOST, INCONCLUSIVE };

const char* to_string(RankVerdict v);

struct RankReport {
  long n_coef = 0;         // (d+1)(d+2)/2
  long n_cond = 0;         // sum m_i(m_i+1)/2
  long best_rank = 0;      // max over trials
  long kernel_dim = 0;     // n_coef - best_rank
  RankVerdict verdict = RankVerdict::INCONCLUSIVE;
  long dim_upper_bound = -1;  // projective: kernel_dim - 1
  unsigned trials = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
};

struct Point { std::uint64_t x = 0, y = 0; };

// n_cond x n_coef matrix over F_p: row block i holds all partial derivatives
// of order < m_i of the generic degree-d form, evaluated at point i.  Columns
// follow a fixed graded-lex monomial order.
std::vector<std::vector<std::uint64_t>> build_matrix(
    const InterpolationInstance& inst, const std::vector<Point>& points);

long rank_mod_p(std::vector<std::vector<std::uint64_t>> mat, std::uint64_t p);

// Max rank over `trials` independent random samples; full rank certifies
// emptiness at very general points (semicontinuity), deficient rank gives a
// dimension upper bound.  Deterministic given the seed.
RankReport generic_rank(const InterpolationInstance& inst);

struct ShghCrossCheck {
  ConditionalDim shgh;
  RankReport rank;
  BigInt interp_dim_upper;  // kernel_dim - 1
  bool match = false;
  // SHGH predicts empty but no sample reached full rank: a potential
  // counterexample.  (The reverse mismatch is only a sampling failure.)
  bool counterexample_alarm = false;
};

ShghCrossCheck cross_check_shgh(const DivisorClass& D, std::uint64_t prime,
                                unsigned trials, std::uint64_t seed);

}  // namespace blowup

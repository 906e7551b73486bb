#include "blowup/interp.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace blowup {

const char* to_string(RankVerdict v) {
  switch (v) {
    case RankVerdict::EMPTY_GENERIC: return "EMPTY_GENERIC";
    case RankVerdict::EFFECTIVE_DIM_AT_MOST: return "EFFECTIVE_DIM_AT_MOST";
    case RankVerdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

using u64 = std::uint64_t;

void validate(const InterpolationInstance& inst) {
  if (inst.d < 0) throw std::invalid_argument("interp: degree must be >= 0");
  if (inst.prime <= static_cast<u64>(inst.d))
    throw std::invalid_argument("interp: characteristic must exceed the degree");
  mpz_class p(inst.prime);
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("interp: modulus is not prime");
  if (inst.prime >= (1ull << 32))
    throw std::invalid_argument("interp: prime must fit in 32 bits");
  for (long m : inst.mults) {
    if (m < 1) throw std::invalid_argument("interp: multiplicities must be positive");
    if (m > inst.d + 1)
      throw std::invalid_argument("interp: multiplicity exceeds d + 1");
  }
}

u64 pow_falling(u64 n, unsigned k, u64 p) {
  // n (n-1) ... (n-k+1) mod p, for n < p
  u64 acc = 1;
  for (unsigned i = 0; i < k; ++i) acc = acc * ((n - i) % p) % p;
  return acc;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

long n_coef_of(long d) { return (d + 1) * (d + 2) / 2; }

long n_cond_of(const std::vector<long>& mults) {
  long n = 0;
  for (long m : mults) n += m * (m + 1) / 2;
  return n;
}

}  // namespace

std::vector<std::vector<u64>> build_matrix(const InterpolationInstance& inst,
                                           const std::vector<Point>& points) {
  validate(inst);
  if (points.size() != inst.mults.size())
    throw std::invalid_argument("interp: one point per multiplicity required");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].x == points[j].x && points[i].y == points[j].y)
        throw std::invalid_argument("interp: coincident sample points");

  const u64 p = inst.prime;
  const long d = inst.d;
  const long cols = n_coef_of(d);

  // Graded-lex monomial order on x^a y^b, a + b <= d: total degree
  // ascending, then a descending.
  std::vector<std::pair<long, long>> monos;
  monos.reserve(cols);
  for (long t = 0; t <= d; ++t)
    for (long a = t; a >= 0; --a) monos.emplace_back(a, t - a);

  std::vector<std::vector<u64>> mat;
  mat.reserve(n_cond_of(inst.mults));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const u64 x0 = points[i].x % p, y0 = points[i].y % p;
    std::vector<u64> xpow(d + 1), ypow(d + 1);
    xpow[0] = ypow[0] = 1;
    for (long e = 1; e <= d; ++e) {
      xpow[e] = xpow[e - 1] * x0 % p;
      ypow[e] = ypow[e - 1] * y0 % p;
    }
    const long m = inst.mults[i];
    for (long s = 0; s < m; ++s) {
      for (long t = 0; t + s < m; ++t) {
        // row for d^{s+t} / dx^s dy^t
        std::vector<u64> row(cols, 0);
        for (long c = 0; c < cols; ++c) {
          const long a = monos[c].first, b = monos[c].second;
          if (a < s || b < t) continue;
          u64 v = pow_falling(a, s, p) * pow_falling(b, t, p) % p;
          v = v * xpow[a - s] % p;
          v = v * ypow[b - t] % p;
          row[c] = v;
        }
        mat.push_back(std::move(row));
      }
    }
  }
  return mat;
}

long rank_mod_p(std::vector<std::vector<u64>> mat, u64 p) {
  const long rows = static_cast<long>(mat.size());
  if (rows == 0) return 0;
  const long cols = static_cast<long>(mat[0].size());
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long i = rank; i < rows; ++i) {
      if (mat[i][col] != 0) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    const u64 inv = pow_mod(mat[rank][col], p - 2, p);
    auto& prow = mat[rank];
    for (long j = col; j < cols; ++j) prow[j] = prow[j] * inv % p;
    for (long i = rank + 1; i < rows; ++i) {
      const u64 f = mat[i][col];
      if (f == 0) continue;
      const u64 nf = p - f;
      auto& row = mat[i];
      for (long j = col; j < cols; ++j) row[j] = (row[j] + nf * prow[j]) % p;
    }
    ++rank;
  }
  return rank;
}

RankReport generic_rank(const InterpolationInstance& inst) {
  validate(inst);
  if (inst.trials < 1) throw std::invalid_argument("interp: trials must be >= 1");
  RankReport rep;
  rep.n_coef = n_coef_of(inst.d);
  rep.n_cond = n_cond_of(inst.mults);
  rep.trials = inst.trials;
  rep.prime = inst.prime;
  rep.seed = inst.seed;

  for (unsigned trial = 0; trial < inst.trials; ++trial) {
    std::mt19937_64 rng(inst.seed + trial);
    std::uniform_int_distribution<u64> dist(0, inst.prime - 1);
    std::set<std::pair<u64, u64>> seen;
    std::vector<Point> pts;
    while (pts.size() < inst.mults.size()) {
      Point q{dist(rng), dist(rng)};
      if (seen.insert({q.x, q.y}).second) pts.push_back(q);
    }
    const long rank = rank_mod_p(build_matrix(inst, pts), inst.prime);
    rep.best_rank = std::max(rep.best_rank, rank);
    if (rep.best_rank == rep.n_coef) break;  // cannot improve
  }
  rep.kernel_dim = rep.n_coef - rep.best_rank;
  rep.dim_upper_bound = rep.kernel_dim - 1;
  rep.verdict = rep.kernel_dim == 0 ? RankVerdict::EMPTY_GENERIC
                                    : RankVerdict::EFFECTIVE_DIM_AT_MOST;
  return rep;
}

ShghCrossCheck cross_check_shgh(const DivisorClass& D, std::uint64_t prime,
                                unsigned trials, std::uint64_t seed) {
  if (D.d < 0)
    throw std::invalid_argument("cross_check_shgh: degree must be >= 0");
  InterpolationInstance inst;
  if (!D.d.fits_slong_p())
    throw std::invalid_argument("cross_check_shgh: degree too large");
  inst.d = D.d.get_si();
  for (const auto& m : D.mults) {
    if (m < 0)
      throw std::invalid_argument("cross_check_shgh: negative multiplicity");
    if (m == 0) continue;  // zero multiplicities impose no condition
    if (!m.fits_slong_p())
      throw std::invalid_argument("cross_check_shgh: multiplicity too large");
    inst.mults.push_back(m.get_si());
  }
  inst.prime = prime;
  inst.trials = trials;
  inst.seed = seed;

  ShghCrossCheck cc;
  cc.shgh = shgh_dim(D);
  cc.rank = generic_rank(inst);
  cc.interp_dim_upper = cc.rank.kernel_dim - 1;
  if (cc.shgh.value == -1) {
    cc.match = cc.rank.verdict == RankVerdict::EMPTY_GENERIC;
    cc.counterexample_alarm = !cc.match;
  } else {
    cc.match = cc.interp_dim_upper == cc.shgh.value;
    cc.counterexample_alarm = false;
  }
  return cc;
}

}  // namespace blowup

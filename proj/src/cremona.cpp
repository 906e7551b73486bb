#include "blowup/cremona.hpp"

#include <algorithm>
#include <stdexcept>

namespace blowup {

DivisorClass cremona_transform(const DivisorClass& D, std::size_t i,
                               std::size_t j, std::size_t k) {
  if (i == j || i == k || j == k)
    throw std::invalid_argument("cremona_transform: indices must be distinct");
  if (i < 1 || j < 1 || k < 1 || i > D.r() || j > D.r() || k > D.r())
    throw std::invalid_argument("cremona_transform: index out of range");
  const BigInt &mi = D.mults[i - 1], &mj = D.mults[j - 1], &mk = D.mults[k - 1];
  DivisorClass out = D;
  out.d = 2 * D.d - mi - mj - mk;
  out.mults[i - 1] = D.d - mj - mk;
  out.mults[j - 1] = D.d - mi - mk;
  out.mults[k - 1] = D.d - mi - mj;
  return out;
}

std::vector<DivisorClass> degree_growing_orbit(std::size_t r, unsigned steps) {
  if (r < 9)
    throw std::invalid_argument(
        "degree_growing_orbit: r must be >= 9 (the Weyl group is finite for "
        "r <= 8 and the orbit need not grow)");
  if (steps < 1)
    throw std::invalid_argument("degree_growing_orbit: steps must be >= 1");

  std::vector<DivisorClass> orbit;
  orbit.reserve(steps + 1);
  orbit.push_back(DivisorClass::uniform(1, 0, r));
  for (unsigned t = 0; t < steps; ++t) {
    const DivisorClass& cur = orbit.back();
    // three smallest multiplicities, ties to lowest index
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return cur.mults[a] < cur.mults[b];
    });
    DivisorClass next =
        cremona_transform(cur, idx[0] + 1, idx[1] + 1, idx[2] + 1);
    for (const auto& m : next.mults) {
      if (m < 0)
        throw std::logic_error(
            "degree_growing_orbit: negative multiplicity reached, strategy bug");
    }
    orbit.push_back(std::move(next));
  }
  return orbit;
}

bool is_isometry_witness(const DivisorClass& D, const DivisorClass& E,
                         std::size_t i, std::size_t j, std::size_t k) {
  return intersect(D, E) ==
         intersect(cremona_transform(D, i, j, k), cremona_transform(E, i, j, k));
}

}  // namespace blowup

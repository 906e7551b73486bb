#pragma once

#include <cstddef>
#include <vector>

#include "blowup/divisor.hpp"

namespace blowup {

// Quadratic Cremona transformation based at points i, j, k (1-based, distinct):
// d' = 2d - m_i - m_j - m_k, m_i' = d - m_j - m_k, etc.  A lattice isometry
// fixing the canonical class; an involution.
DivisorClass cremona_transform(const DivisorClass& D, std::size_t i,
                               std::size_t j, std::size_t k);

// A_0 = (1; 0^r), then repeatedly transform at the three indices of smallest
// current multiplicity (ties to the lowest index).  Requires r >= 9.
// Returns A_0,...,A_n.
std::vector<DivisorClass> degree_growing_orbit(std::size_t r, unsigned steps);

bool is_isometry_witness(const DivisorClass& D, const DivisorClass& E,
                         std::size_t i, std::size_t j, std::size_t k);

}  // namespace blowup

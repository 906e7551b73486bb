#pragma once

#include "blowup/divisor.hpp"

namespace blowup {

enum class DimStatus {
  UNCONDITIONAL_LOWER_BOUND,
  SHGH_CONDITIONAL_EXACT,
  UNKNOWN,
};

enum class Effectivity { EFFECTIVE, EMPTY, UNKNOWN };

const char* to_string(DimStatus s);
const char* to_string(Effectivity e);

struct ConditionalDim {
  BigInt value;  // >= -1
  DimStatus status = DimStatus::UNKNOWN;
  bool criterion_met = false;
};

struct EffectivityVerdict {
  Effectivity verdict = Effectivity::UNKNOWN;
  bool shgh_conditional = false;
};

// Gimigliano criterion: d > m_(1) + m_(2) + m_(3) (three largest
// multiplicities) after dropping zero multiplicities; any negative
// multiplicity fails the criterion.
bool shgh_applicable(const DivisorClass& D);

// dim |D| = edim(D), exact under SHGH when the criterion holds, otherwise an
// unconditional lower bound.  Negative-degree classes are empty.
ConditionalDim shgh_dim(const DivisorClass& D);

EffectivityVerdict conditional_effectivity(const DivisorClass& D);

}  // namespace blowup

#include "blowup/shgh.hpp"

#include <algorithm>

namespace blowup {

const char* to_string(DimStatus s) {
  switch (s) {
    case DimStatus::UNCONDITIONAL_LOWER_BOUND: return "UNCONDITIONAL_LOWER_BOUND";
    case DimStatus::SHGH_CONDITIONAL_EXACT: return "SHGH_CONDITIONAL_EXACT";
    case DimStatus::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* to_string(Effectivity e) {
  switch (e) {
    case Effectivity::EFFECTIVE: return "EFFECTIVE";
    case Effectivity::EMPTY: return "EMPTY";
    case Effectivity::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

bool has_negative_mult(const DivisorClass& D) {
  return std::any_of(D.mults.begin(), D.mults.end(),
                     [](const BigInt& m) { return m < 0; });
}

}  // namespace

bool shgh_applicable(const DivisorClass& D) {
  if (has_negative_mult(D)) return false;
  std::vector<BigInt> ms;
  ms.reserve(D.mults.size());
  for (const auto& m : D.mults)
    if (m != 0) ms.push_back(m);  // zero multiplicities impose no condition
  std::sort(ms.begin(), ms.end(), std::greater<BigInt>());
  BigInt top3 = 0;
  for (std::size_t i = 0; i < 3 && i < ms.size(); ++i) top3 += ms[i];
  return D.d > top3;
}

ConditionalDim shgh_dim(const DivisorClass& D) {
  if (D.d < 0)
    return {BigInt(-1), DimStatus::UNCONDITIONAL_LOWER_BOUND, false};
  if (has_negative_mult(D)) return {edim(D), DimStatus::UNKNOWN, false};
  if (shgh_applicable(D))
    return {edim(D), DimStatus::SHGH_CONDITIONAL_EXACT, true};
  return {edim(D), DimStatus::UNCONDITIONAL_LOWER_BOUND, false};
}

EffectivityVerdict conditional_effectivity(const DivisorClass& D) {
  if (D.d < 0) return {Effectivity::EMPTY, false};
  if (edim(D) >= 0) return {Effectivity::EFFECTIVE, false};
  if (shgh_applicable(D)) return {Effectivity::EMPTY, true};
  return {Effectivity::UNKNOWN, false};
}

}  // namespace blowup

#include "blowup/gallery.hpp"

#include <stdexcept>

#include "blowup/pell.hpp"

namespace blowup {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt pair_fibers(const BigInt& a, const BigInt& b, const BigInt& c,
                   const BigInt& d) {
  BigInt t = a * d - b * c;
  return t * t;
}

// The extended cross-term formula must reproduce the stated pairings of F1,
// F2 and E_{a,b}; refuse the pairing if it ever fails to.
bool cross_term_consistent() {
  const BigInt samples[][2] = {{2, 3}, {5, -7}, {1, 0}, {0, 1}, {-4, 9}};
  for (const auto& s : samples) {
    const BigInt &a = s[0], &b = s[1];
    if (pair_fibers(1, 0, a, b) != b * b) return false;   // F1.E_{a,b} = b^2
    if (pair_fibers(0, 1, a, b) != a * a) return false;   // F2.E_{a,b} = a^2
    if (pair_fibers(a, b, a, b) != 0) return false;       // E_{a,b}^2 = 0
  }
  return pair_fibers(1, 0, 0, 1) == 1;  // F1.F2 = 1
}

}  // namespace

AbelianClass AbelianClass::fiber(BigInt a, BigInt b, BigInt coeff) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("AbelianClass: fiber class needs (a,b) != (0,0)");
  if (gcd(a, b) != 1)
    throw std::invalid_argument("AbelianClass: fiber indices must be coprime");
  AbelianClass out;
  out.fibers.push_back({std::move(a), std::move(b), std::move(coeff)});
  return out;
}

BigInt pair_abelian(const AbelianClass& X, const AbelianClass& Y) {
  static const bool consistent = cross_term_consistent();
  if (!consistent)
    throw std::logic_error("pair_abelian: extended pairing refused, table check failed");
  // F1 = E_{1,0}, F2 = E_{0,1}; everything goes through the cross term.
  std::vector<FiberTerm> xs = X.fibers, ys = Y.fibers;
  if (X.f1 != 0) xs.push_back({1, 0, X.f1});
  if (X.f2 != 0) xs.push_back({0, 1, X.f2});
  if (Y.f1 != 0) ys.push_back({1, 0, Y.f1});
  if (Y.f2 != 0) ys.push_back({0, 1, Y.f2});
  BigInt acc = 0;
  for (const auto& x : xs)
    for (const auto& y : ys)
      acc += x.coeff * y.coeff * pair_fibers(x.a, x.b, y.a, y.b);
  return acc;
}

KollarRecord kollar_record(const BigInt& n, const BigInt& b) {
  if (b == 0) throw std::invalid_argument("kollar_record: b must be nonzero");
  if (gcd(n, b) != 1)
    throw std::invalid_argument("kollar_record: (n, b) must be coprime");
  const AbelianClass A = [&] {
    AbelianClass c = AbelianClass::fiber(n, b);
    c.f1 = 1;  // A_n = F1 + E_{n,b}
    return c;
  }();
  AbelianClass FF = AbelianClass::F1();
  FF.f2 = 1;
  KollarRecord rec;
  rec.n = n;
  rec.b = b;
  rec.A_sq = pair_abelian(A, A);
  rec.A_dot_FF = pair_abelian(A, FF);
  // double cover branched over B in |2(F1+F2)|: squares double, K_X = f*(F1+F2)
  rec.D_sq = 2 * rec.A_sq;
  rec.D_dot_K = 2 * rec.A_dot_FF;
  rec.ratio = BigRat(rec.D_dot_K, rec.D_sq);
  rec.ratio.canonicalize();
  return rec;
}

RationalCoverRecord rational_cover_record(const DivisorClass& A) {
  if (A.r() < 9)
    throw std::invalid_argument("rational_cover_record: need r >= 9");
  const BigInt a_sq = intersect(A, A);
  if (a_sq != 1)
    throw std::invalid_argument("rational_cover_record: need A^2 = 1");
  const DivisorClass H = DivisorClass::uniform(1, 0, A.r());
  const DivisorClass KplusH = add(canonical_class(A.r()), H);
  RationalCoverRecord rec;
  rec.A = A;
  rec.D_sq = 2 * a_sq;
  rec.D_dot_K = 2 * intersect(A, KplusH);  // K_X = f*(K_Y + H)
  rec.ratio = BigRat(rec.D_dot_K, rec.D_sq);
  rec.ratio.canonicalize();
  return rec;
}

std::vector<HarbourneRecord> harbourne_sequence(unsigned k_max) {
  if (k_max < 1)
    throw std::invalid_argument("harbourne_sequence: k_max must be >= 1");
  const DivisorClass H = DivisorClass::uniform(1, 0, 10);
  const DivisorClass KplusH = add(canonical_class(10), H);
  std::vector<HarbourneRecord> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    const PellDivisorRecord pd = pell_divisor(k);
    HarbourneRecord rec;
    rec.k = k;
    rec.d_k = pd.d;
    // G = pi*(D_k) on the double cover: G^2 = 2 D^2, K.G = 2 D.(K+H), p_a = 0
    const BigInt g_sq = 2 * intersect(pd.D, pd.D);
    const BigInt kg = 2 * intersect(pd.D, KplusH);
    rec.vdim_G = (g_sq - kg) / 2;
    rec.h0_conditional = 1;
    rec.h1_conditional = -rec.vdim_G;
    out.push_back(std::move(rec));
  }
  return out;
}

BigInt bnc_bound(const BigInt& p_a, const BigInt& alpha) {
  if (alpha < 0) throw std::invalid_argument("bnc_bound: alpha must be >= 0");
  return -p_a - alpha - 1;
}

BigInt q4_bound_from_harbourne(const BigInt& p_a, const BigInt& alpha) {
  if (alpha < 1)
    throw std::invalid_argument("q4_bound_from_harbourne: alpha must be >= 1");
  return 6 * alpha + 2 * p_a - 4;
}

}  // namespace blowup

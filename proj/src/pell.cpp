#include "blowup/pell.hpp"

#include <algorithm>
#include <stdexcept>

namespace blowup {

namespace {

bool is_perfect_square(unsigned long r, unsigned long* root) {
  unsigned long s = static_cast<unsigned long>(mpz_class(sqrt(mpz_class(r))).get_ui());
  if (root) *root = s;
  return s * s == r;
}

void check_radicand(unsigned long r, unsigned long* root) {
  if (r < 2 || is_perfect_square(r, root)) {
    throw std::invalid_argument("invalid radicand: " + std::to_string(r) +
                                " (need a non-square integer >= 2)");
  }
}

}  // namespace

ContinuedFraction cf_expansion(unsigned long r) {
  unsigned long a0;
  check_radicand(r, &a0);
  // Quadratic-surd recursion for sqrt(r); the period closes at a_i = 2 a0.
  ContinuedFraction cf;
  cf.a0 = a0;
  unsigned long m = 0, d = 1, a = a0;
  do {
    m = d * a - m;
    d = (r - m * m) / d;
    a = (a0 + m) / d;
    cf.period.push_back(a);
  } while (a != 2 * a0);
  return cf;
}

Convergent convergent(unsigned long r, unsigned k) {
  const ContinuedFraction cf = cf_expansion(r);
  BigInt p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  BigInt p = cf.a0, q = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const unsigned long a = cf.period[(i - 1) % cf.period.size()];
    BigInt pn = a * p + p_prev;
    BigInt qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  return Convergent{std::move(p), std::move(q), k};
}

std::pair<BigInt, BigInt> zsqrt_pow(unsigned long r,
                                    std::pair<BigInt, BigInt> base,
                                    unsigned exp) {
  if (exp < 1) throw std::invalid_argument("zsqrt_pow: exponent must be >= 1");
  BigInt x = 1, y = 0;  // accumulator, starts at 1
  BigInt a = std::move(base.first), b = std::move(base.second);
  while (exp > 0) {
    if (exp & 1u) {
      BigInt nx = x * a + y * b * r;
      BigInt ny = x * b + y * a;
      x = std::move(nx);
      y = std::move(ny);
    }
    exp >>= 1;
    if (exp > 0) {
      BigInt na = a * a + b * b * r;
      BigInt nb = 2 * a * b;
      a = std::move(na);
      b = std::move(nb);
    }
  }
  return {std::move(x), std::move(y)};
}

std::vector<std::pair<BigInt, BigInt>> pell_solutions(unsigned long r, int sign,
                                                      unsigned count) {
  if (r != 10) {
    throw std::invalid_argument(
        "pell_solutions: only r = 10 is supported (odd-parity of solutions is "
        "not established for general r)");
  }
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("pell_solutions: sign must be +1 or -1");
  std::vector<std::pair<BigInt, BigInt>> out;
  out.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    const unsigned idx = (sign == -1) ? 2 * k : 2 * k + 1;
    Convergent c = convergent(10, idx);
    out.emplace_back(std::move(c.p), std::move(c.q));
  }
  return out;
}

PellDivisorRecord pell_divisor(unsigned k) {
  PellDivisorRecord rec;
  rec.k = k;
  const Convergent c2k = convergent(10, 2 * k);
  rec.d = (c2k.p - 3) / 2;
  rec.m = (c2k.q - 1) / 2;
  rec.D = DivisorClass::uniform(rec.d, rec.m, 10);
  if (k >= 1) {
    const Convergent ck = convergent(10, k);
    const Convergent ckm1 = convergent(10, k - 1);
    rec.has_factorization = true;
    if (k % 2 == 1) {
      rec.c = ckm1.p;
      rec.F = DivisorClass::uniform(ck.p, ck.q, 10);
    } else {
      rec.c = ckm1.q;
      rec.F = DivisorClass::uniform(10 * ck.q, ck.p, 10);
    }
  }
  return rec;
}

std::vector<std::pair<BigInt, BigInt>> pell_divisor_by_recurrence(unsigned count) {
  if (count < 1)
    throw std::invalid_argument("pell_divisor_by_recurrence: count must be >= 1");
  std::vector<std::pair<BigInt, BigInt>> out;
  out.reserve(count);
  BigInt d = 0, m = 0;
  out.emplace_back(d, m);
  for (unsigned k = 1; k < count; ++k) {
    BigInt dn = 19 * d + 60 * m + 57;
    BigInt mn = 6 * d + 19 * m + 18;
    d = std::move(dn);
    m = std::move(mn);
    out.emplace_back(d, m);
  }
  return out;
}

BigInt vdim_multiple_closed_form(unsigned k, const BigInt& h) {
  if (k == 0)
    throw std::invalid_argument("vdim_multiple_closed_form: k = 0 is degenerate");
  if (h < 0) throw std::invalid_argument("vdim_multiple_closed_form: h must be >= 0");
  const Convergent prev = convergent(10, k - 1);
  if (k % 2 == 1) return h * (h - prev.p) / 2;
  return 5 * h * (h - prev.q);
}

Question2Witness question2_witness(unsigned k) {
  if (k % 2 == 0)
    throw std::invalid_argument("question2_witness: k must be odd");
  const PellDivisorRecord rec = pell_divisor(k);
  Question2Witness w;
  w.k = k;
  w.F = rec.F;
  w.F_sq = intersect(rec.F, rec.F);
  w.minimal_multiple = rec.c;
  // c_k grows geometrically; sample at most 1000 values of h plus c_k - 1.
  BigInt cap = rec.c - 1;
  if (cap > 1000) cap = 1000;
  for (BigInt h = 1; h <= cap; ++h)
    w.sampled_vdims.emplace_back(h, vdim_multiple_closed_form(k, h));
  if (rec.c - 1 > cap)
    w.sampled_vdims.emplace_back(rec.c - 1, vdim_multiple_closed_form(k, rec.c - 1));
  w.vdim_at_c = vdim_multiple_closed_form(k, rec.c);
  w.assumption = "SHGH_CONDITIONAL";
  return w;
}

Question3Witness question3_witness(unsigned k) {
  if (k % 2 == 0)
    throw std::invalid_argument("question3_witness: k must be odd");
  const PellDivisorRecord rec = pell_divisor(k);
  if (rec.c < 2)
    throw std::invalid_argument("question3_witness: c_k must be >= 2");
  Question3Witness w;
  w.k = k;
  w.G = scale(rec.c - 1, rec.F);
  w.G_sq = intersect(w.G, w.G);
  w.vdim_G = vdim(w.G);
  w.assumption = "SHGH_CONDITIONAL";
  return w;
}

}  // namespace blowup

#include <doctest.h>

#include <random>

#include "blowup/cremona.hpp"
#include "blowup/gallery.hpp"
#include "blowup/pell.hpp"

using namespace blowup;

TEST_CASE("abelian pairing table") {
  const auto F1 = AbelianClass::F1();
  const auto F2 = AbelianClass::F2();
  CHECK(pair_abelian(F1, F1) == 0);
  CHECK(pair_abelian(F2, F2) == 0);
  CHECK(pair_abelian(F1, F2) == 1);

  const auto E53 = AbelianClass::fiber(5, 3);
  CHECK(pair_abelian(F1, E53) == 9);
  CHECK(pair_abelian(F2, E53) == 25);
  CHECK(pair_abelian(E53, E53) == 0);

  // F1 = E_{1,0}, F2 = E_{0,1}
  CHECK(pair_abelian(AbelianClass::fiber(1, 0), AbelianClass::fiber(0, 1)) == 1);
  CHECK(pair_abelian(AbelianClass::fiber(1, 0), E53) == pair_abelian(F1, E53));

  // A_n = F1 + E_{n,b}: A_n^2 = 2b^2
  AbelianClass A = AbelianClass::fiber(7, 2);
  A.f1 = 1;
  CHECK(pair_abelian(A, A) == 8);

  CHECK_THROWS_AS(AbelianClass::fiber(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(AbelianClass::fiber(0, 0), std::invalid_argument);
}

TEST_CASE("abelian pairing is symmetric and bilinear") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto random_fiber = [&]() {
    while (true) {
      BigInt a = dist(rng), b = dist(rng);
      if (a == 0 && b == 0) continue;
      BigInt g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      return AbelianClass::fiber(a, b, dist(rng));
    }
  };
  for (int iter = 0; iter < 200; ++iter) {
    auto X = random_fiber(), Y = random_fiber(), Z = random_fiber();
    X.f1 = dist(rng);
    Y.f2 = dist(rng);
    CHECK(pair_abelian(X, Y) == pair_abelian(Y, X));
    AbelianClass YZ = Y;
    YZ.f1 += Z.f1;
    YZ.f2 += Z.f2;
    for (const auto& t : Z.fibers) YZ.fibers.push_back(t);
    CHECK(pair_abelian(X, YZ) == pair_abelian(X, Y) + pair_abelian(X, Z));
  }
}

TEST_CASE("kollar records") {
  const auto r1 = kollar_record(1, 1);
  CHECK(r1.A_sq == 2);
  CHECK(r1.A_dot_FF == 3);
  CHECK(r1.D_sq == 4);
  CHECK(r1.D_dot_K == 6);
  CHECK(r1.ratio == BigRat(3, 2));

  const auto r45 = kollar_record(45, 1);
  CHECK(r45.ratio == BigRat(2027, 2));
  CHECK(r45.ratio > 1000);

  const auto r0 = kollar_record(0, 1);
  CHECK(r0.ratio == 1);

  CHECK_THROWS_AS(kollar_record(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(kollar_record(1, 0), std::invalid_argument);
}

TEST_CASE("kollar ratio grows without bound") {
  BigRat prev(-1);
  for (long n = 0; n <= 60; ++n) {
    const auto rec = kollar_record(n, 1);
    CHECK(rec.ratio > prev);
    prev = rec.ratio;
  }
  // ratio exceeds T once n^2 > 2 b^2 T - b^2 - 1
  const BigInt T = 5000, b = 3;
  BigInt n = 1, g;
  do {
    ++n;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
  } while (n * n <= 2 * b * b * T - b * b - 1 || g != 1);
  CHECK(kollar_record(n, b).ratio > T);
}

TEST_CASE("rational cover records") {
  const auto r1 = rational_cover_record(DivisorClass::uniform(1, 0, 9));
  CHECK(r1.D_sq == 2);
  CHECK(r1.D_dot_K == -4);
  CHECK(r1.ratio == -2);

  const auto r2 = rational_cover_record(parse_divisor("2;1,1,1,0^6"));
  CHECK(r2.D_dot_K == -2);
  CHECK(r2.ratio == -1);

  CHECK_THROWS_AS(rational_cover_record(parse_divisor("2;1,0^8")),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_cover_record(parse_divisor("1;0^5")),
                  std::invalid_argument);
}

TEST_CASE("cover ratio increases along the orbit") {
  const auto orbit = degree_growing_orbit(9, 30);
  BigRat prev;
  bool first = true;
  for (const auto& A : orbit) {
    const auto rec = rational_cover_record(A);
    CHECK(rec.D_sq == 2);
    if (!first) CHECK(rec.ratio >= prev);
    if (A.d >= 10) CHECK(rec.ratio > 0);
    prev = rec.ratio;
    first = false;
  }
}

TEST_CASE("harbourne sequence") {
  const auto seq = harbourne_sequence(30);
  REQUIRE(seq.size() == 30);
  CHECK(seq[0].d_k == 57);
  CHECK(seq[0].vdim_G == -57);
  CHECK(seq[0].h1_conditional == 57);
  CHECK(seq[1].vdim_G == -2220);
  BigInt prev = 0;
  for (const auto& rec : seq) {
    CHECK(rec.vdim_G == -rec.d_k);  // two independent computation paths
    CHECK(rec.h0_conditional == 1);
    CHECK(rec.h1_conditional > prev);
    prev = rec.h1_conditional;
  }
  CHECK_THROWS_AS(harbourne_sequence(0), std::invalid_argument);
}

TEST_CASE("bound formulas") {
  CHECK(bnc_bound(0, 0) == -1);
  CHECK(bnc_bound(1, 3) == -5);
  CHECK(q4_bound_from_harbourne(0, 1) == 2);
  CHECK(q4_bound_from_harbourne(2, 5) == 30);
  CHECK_THROWS_AS(q4_bound_from_harbourne(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(bnc_bound(0, -1), std::invalid_argument);
  for (long pa = 0; pa <= 5; ++pa)
    for (long al = 0; al <= 5; ++al) {
      CHECK(bnc_bound(pa, al) <= -1);
      if (al >= 1) CHECK(q4_bound_from_harbourne(pa, al) >= 2);
    }
}

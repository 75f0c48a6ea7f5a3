#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

using namespace bk;

namespace {

// independent multiplication oracle: convolution over the subset lattice,
// c_S = sum over A union B = S of a_A b_B, computed without the gray arrays
RingElem mul_by_convolution(const Ring& R, const RingElem& a,
                            const RingElem& b) {
  const Field& F = R.field();
  std::vector<felem> c(R.coords(), 0);
  for (std::uint32_t A = 0; A < R.coords(); ++A)
    for (std::uint32_t B = 0; B < R.coords(); ++B)
      c[A | B] = F.add(c[A | B], F.mul(a.coeffs[A], b.coeffs[B]));
  return R.from_coeffs(std::move(c));
}

std::vector<Ring> small_rings() {
  return {Ring(Field::make(2, 1), 1), Ring(Field::make(2, 1), 2),
          Ring(Field::make(3, 1), 1), Ring(Field::make(2, 2), 1)};
}

}  // namespace

TEST_CASE("gray table of B_1 over F_2") {
  const Ring R(Field::make(2, 1), 1);
  CHECK(R.coords() == 2);
  CHECK(R.order() == std::uint64_t(4));
  CHECK(R.zero().gray == std::vector<felem>{0, 0});
  CHECK(R.one().gray == std::vector<felem>{1, 1});
  CHECK(R.gen(1).gray == std::vector<felem>{0, 1});
  CHECK(R.from_coeffs({1, 1}).gray == std::vector<felem>{1, 0});
}

TEST_CASE("gray image of 1 - v is (1,0) in every coefficient field") {
  for (const Ring& R : small_rings()) {
    if (R.k() != 1) continue;
    const RingElem x = R.sub(R.one(), R.gen(1));
    CHECK(x.gray == std::vector<felem>{1, 0});
  }
}

TEST_CASE("multiplication matches the subset convolution oracle") {
  for (const Ring& R : small_rings()) {
    const std::uint64_t N = *R.order();
    for (std::uint64_t i = 0; i < N; ++i) {
      const RingElem a = R.from_wire_rank(i);
      for (std::uint64_t j = 0; j < N; ++j) {
        const RingElem b = R.from_wire_rank(j);
        CHECK(R.mul(a, b) == mul_by_convolution(R, a, b));
      }
    }
  }
}

TEST_CASE("gray map is a ring isomorphism onto the coordinate product") {
  for (const Ring& R : small_rings()) {
    const Field& F = R.field();
    const std::uint64_t N = *R.order();
    std::set<std::vector<felem>> images;
    for (std::uint64_t i = 0; i < N; ++i)
      images.insert(R.from_wire_rank(i).gray);
    CHECK(images.size() == N);  // bijection
    for (std::uint64_t i = 0; i < N; ++i) {
      const RingElem a = R.from_wire_rank(i);
      CHECK(R.from_gray(a.gray) == a);
      for (std::uint64_t j = 0; j < N; ++j) {
        const RingElem b = R.from_wire_rank(j);
        const RingElem s = R.add(a, b), m = R.mul(a, b);
        for (std::uint32_t c = 0; c < R.coords(); ++c) {
          CHECK(s.gray[c] == F.add(a.gray[c], b.gray[c]));
          CHECK(m.gray[c] == F.mul(a.gray[c], b.gray[c]));
        }
      }
    }
  }
}

TEST_CASE("zeta and moebius transforms invert each other") {
  std::mt19937_64 rng(11);
  for (const Ring& R : {Ring(Field::make(2, 1), 3), Ring(Field::make(3, 1), 2),
                        Ring(Field::make(2, 2), 2)}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<felem> v(R.coords());
      for (auto& x : v) x = felem(rng() % R.field().q());
      std::vector<felem> w = v;
      R.zeta(w);
      R.moebius(w);
      CHECK(w == v);
      w = v;
      R.moebius(w);
      R.zeta(w);
      CHECK(w == v);
    }
  }
}

TEST_CASE("generators are commuting idempotents") {
  const Ring R(Field::make(3, 1), 3);
  for (std::uint32_t i = 1; i <= 3; ++i) {
    const RingElem vi = R.gen(i);
    CHECK(R.mul(vi, vi) == vi);
    for (std::uint32_t j = 1; j <= 3; ++j)
      CHECK(R.mul(vi, R.gen(j)) == R.mul(R.gen(j), vi));
  }
  CHECK_THROWS_AS(R.gen(0), BkError);
  CHECK_THROWS_AS(R.gen(4), BkError);
}

TEST_CASE("primitive idempotents resolve the identity") {
  for (const Ring& R : small_rings()) {
    RingElem sum = R.zero();
    for (std::uint32_t m = 0; m < R.coords(); ++m) {
      const RingElem e = R.idempotent(m);
      for (std::uint32_t c = 0; c < R.coords(); ++c)
        CHECK(e.gray[c] == (c == m ? 1 : 0));
      CHECK(R.mul(e, e) == e);
      for (std::uint32_t m2 = 0; m2 < m; ++m2)
        CHECK(R.mul(e, R.idempotent(m2)).is_zero());
      sum = R.add(sum, e);
    }
    CHECK(sum == R.one());
  }
}

TEST_CASE("conjugation is an involutive automorphism fixing the field") {
  for (const Ring& R : small_rings()) {
    const std::uint64_t N = *R.order();
    for (std::uint32_t i = 1; i <= R.k(); ++i)
      CHECK(R.conjugate(R.gen(i)) == R.sub(R.one(), R.gen(i)));
    for (felem a = 0; a < R.field().q(); ++a) {
      std::vector<felem> c(R.coords(), 0);
      c[0] = a;
      const RingElem x = R.from_coeffs(c);
      CHECK(R.conjugate(x) == x);
    }
    for (std::uint64_t i = 0; i < N; ++i) {
      const RingElem a = R.from_wire_rank(i);
      CHECK(R.conjugate(R.conjugate(a)) == a);
      for (std::uint64_t j = 0; j < N; ++j) {
        const RingElem b = R.from_wire_rank(j);
        CHECK(R.conjugate(R.add(a, b)) ==
              R.add(R.conjugate(a), R.conjugate(b)));
        CHECK(R.conjugate(R.mul(a, b)) ==
              R.mul(R.conjugate(a), R.conjugate(b)));
      }
    }
  }
}

TEST_CASE("tower gray map agrees with the lattice transform") {
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(2, 1), 2),
                        Ring(Field::make(2, 1), 3), Ring(Field::make(3, 1), 1),
                        Ring(Field::make(2, 2), 1)}) {
    const std::uint64_t N = *R.order();
    for (std::uint64_t i = 0; i < N; ++i) {
      const RingElem a = R.from_wire_rank(i);
      CHECK(R.tower_gray(a) == a.gray);
    }
    const auto perm = R.tower_permutation();
    CHECK(perm.size() == R.coords());
    for (std::uint32_t c = 0; c < R.coords(); ++c) CHECK(perm[c] == c);
  }
}

TEST_CASE("projection to level 0 flattens to the tower image") {
  const Ring R(Field::make(2, 2), 2);
  const std::uint64_t N = *R.order();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 64; ++t) {
    const RingElem a = R.from_wire_rank(rng() % N);
    const auto blocks = R.project_to_level(a, 0);
    CHECK(blocks.size() == R.coords());
    std::vector<felem> flat;
    for (const auto& b : blocks) {
      CHECK(b.size() == 1);
      flat.push_back(b[0]);
    }
    CHECK(flat == R.tower_gray(a));
  }
}

TEST_CASE("units are the elements with nowhere-zero gray image") {
  for (const Ring& R : small_rings()) {
    const std::uint32_t q = R.field().q();
    const std::uint64_t N = *R.order();
    std::uint64_t units = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
      const RingElem a = R.from_wire_rank(i);
      bool nowhere_zero = true;
      for (felem g : a.gray) nowhere_zero = nowhere_zero && g != 0;
      CHECK(R.is_unit(a) == nowhere_zero);
      if (nowhere_zero) ++units;
    }
    std::uint64_t expect = 1;
    for (std::uint32_t c = 0; c < R.coords(); ++c) expect *= q - 1;
    CHECK(units == expect);
  }
}

TEST_CASE("wire rank is a frozen bijection") {
  const Ring R1(Field::make(2, 1), 1);
  // key reads coeffs[0] first: 0 -> 0, v -> 1, 1 -> 2, 1 + v -> 3
  CHECK(R1.from_wire_rank(0) == R1.zero());
  CHECK(R1.from_wire_rank(1) == R1.gen(1));
  CHECK(R1.from_wire_rank(2) == R1.one());
  CHECK(R1.from_wire_rank(3) == R1.from_coeffs({1, 1}));
  for (const Ring& R : small_rings()) {
    const std::uint64_t N = *R.order();
    for (std::uint64_t i = 0; i < N; ++i)
      CHECK(R.wire_rank(R.from_wire_rank(i)) == i);
  }
}

TEST_CASE("ring order overflows to nullopt, never wraps") {
  CHECK(Ring(Field::make(2, 1), 4).order() == std::uint64_t(65536));
  CHECK_FALSE(Ring(Field::make(2, 16), 2).order().has_value());
  CHECK_FALSE(Ring(Field::make(2, 1), 8).order().has_value());
}

TEST_CASE("gamma marks nonzero field elements") {
  const Ring R(Field::make(3, 1), 1);
  CHECK(R.gamma(0) == 0);
  CHECK(R.gamma(1) == -1);
  CHECK(R.gamma(2) == -1);
}

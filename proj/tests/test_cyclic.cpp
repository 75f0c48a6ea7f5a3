#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "code.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "ring.hpp"

using namespace bk;

namespace {

using Word = std::vector<RingElem>;

// random code whose generators are closed under every cyclic shift
Code random_cyclic(const Ring& R, std::uint32_t n, std::mt19937_64& rng) {
  std::vector<Word> gens;
  const int seeds = 1 + int(rng() % 2);
  for (int s = 0; s < seeds; ++s) {
    Word w;
    for (std::uint32_t i = 0; i < n; ++i)
      w.push_back(R.from_wire_rank(rng() % *R.order()));
    for (std::uint32_t l = 0; l < n; ++l) gens.push_back(shift(w, l + 1));
  }
  return Code::from_generators(R, n, gens);
}

}  // namespace

TEST_CASE("shift moves every entry right") {
  const Ring R(Field::make(2, 1), 1);
  const Word w{R.one(), R.gen(1), R.zero()};
  const Word s1 = shift(w, 1);
  CHECK(s1[0] == R.zero());
  CHECK(s1[1] == R.one());
  CHECK(s1[2] == R.gen(1));
  CHECK(shift(shift(w, 1), 2) == w);
  CHECK(shift_row({1, 2, 3, 4}, 2) == Row{3, 4, 1, 2});
  CHECK_THROWS_AS(shift(w, 0), BkError);
  CHECK_THROWS_AS(shift(w, 4), BkError);
  try {
    shift_row({1, 2}, 3);
    CHECK(false);
  } catch (const BkError& e) {
    CHECK(e.code() == errc::bad_shift);
  }
}

TEST_CASE("quasi-cyclic code of index 2 over F_4 + vF_4") {
  const Ring R(Field::make(2, 2), 1);
  const felem alpha = 2;
  const RingElem v_plus_alpha = R.from_coeffs({alpha, 1});
  const Word g{v_plus_alpha, R.zero(), v_plus_alpha, R.zero()};
  const Code C = Code::from_generators(R, 4, {g});

  // the two gray rows of the generator, exactly as printed
  CHECK(g[0].gray == std::vector<felem>{2, 3});  // alpha, alpha + 1
  std::vector<felem> theta1, theta2;
  for (const auto& x : g) {
    theta1.push_back(x.gray[0]);
    theta2.push_back(x.gray[1]);
  }
  CHECK(theta1 == std::vector<felem>{2, 0, 2, 0});
  CHECK(theta2 == std::vector<felem>{3, 0, 3, 0});

  CHECK(is_quasi_cyclic(C, 2));
  CHECK_FALSE(is_quasi_cyclic(C, 1));
  const ComponentCyclicReport rep = component_cyclic_check(C, 2);
  CHECK(rep.code_qc);
  CHECK(rep.components_qc == std::vector<bool>{true, true});
  CHECK(rep.equivalence_holds);
  const ComponentCyclicReport rep1 = component_cyclic_check(C, 1);
  CHECK_FALSE(rep1.code_qc);
  CHECK(rep1.equivalence_holds);
}

TEST_CASE("cyclic two-generator code over F_4 + vF_4") {
  const Ring R(Field::make(2, 2), 1);
  const felem alpha = 2;
  const RingElem av1 = R.from_coeffs({1, alpha});  // alpha v + 1
  const Word g1{av1, R.gen(1)};
  const Word g2{R.gen(1), av1};

  // frozen gray matrices of both generators
  CHECK(g1[0].gray == std::vector<felem>{1, 3});
  CHECK(g1[1].gray == std::vector<felem>{0, 1});
  CHECK(g2[0].gray == std::vector<felem>{0, 1});
  CHECK(g2[1].gray == std::vector<felem>{1, 3});

  const Code C = Code::from_generators(R, 2, {g1, g2});
  CHECK(is_quasi_cyclic(C, 1));
  const auto polys = cyclic_component_generators(C);
  CHECK(polys.size() == 2);
  // both component codes are the whole space, generator polynomial 1
  CHECK(polys[0].generators == std::vector<FPoly>{{1}});
  CHECK(polys[1].generators == std::vector<FPoly>{{1}});
  const Code lifted =
      Code::from_generators(R, 2, lift_generators(R, 2, polys));
  CHECK(lifted.same_code(C));
}

TEST_CASE("extraction round trip on seeded cyclic codes") {
  std::mt19937_64 rng(51);
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(3, 1), 1),
                        Ring(Field::make(2, 2), 1)}) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const Code C = random_cyclic(R, n, rng);
        REQUIRE(is_quasi_cyclic(C, 1));
        const auto polys = cyclic_component_generators(C);
        const Code back =
            Code::from_generators(R, n, lift_generators(R, n, polys));
        CHECK(back.same_code(C));
        // each extracted generator divides x^n - 1: re-reducing changes
        // nothing and the polynomial is monic unless the component is zero
        for (const auto& pc : polys) {
          REQUIRE(pc.generators.size() == 1);
          const FPoly& gp = pc.generators[0];
          CHECK(!gp.empty());
          CHECK(gp.back() != 0);
        }
      }
    }
  }
}

TEST_CASE("zero and full components extract the boundary polynomials") {
  const Ring R(Field::make(2, 1), 1);
  // component 0 full, component 1 zero: generated by 1 - v everywhere
  const RingElem e0 = R.from_coeffs({1, 1});
  std::vector<Word> gens;
  for (std::uint32_t l = 0; l < 3; ++l)
    gens.push_back(shift(Word{e0, R.zero(), R.zero()}, l + 1));
  const Code C = Code::from_generators(R, 3, gens);
  const auto polys = cyclic_component_generators(C);
  CHECK(polys[0].generators == std::vector<FPoly>{{1}});
  // x^3 - 1 over F_2
  CHECK(polys[1].generators == std::vector<FPoly>{{1, 0, 0, 1}});
  const Code back = Code::from_generators(R, 3, lift_generators(R, 3, polys));
  CHECK(back.same_code(C));
}

TEST_CASE("extraction refuses codes that are not cyclic") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 2, {{R.one(), R.zero()}});
  CHECK_FALSE(is_quasi_cyclic(C, 1));
  try {
    cyclic_component_generators(C);
    CHECK(false);
  } catch (const BkError& e) {
    CHECK(e.code() == errc::not_cyclic);
  }
}

TEST_CASE("component polynomial fallback covers quasi-cyclic codes") {
  const Ring R(Field::make(2, 1), 1);
  const Word g{R.one(), R.zero(), R.one(), R.zero()};
  const Code C = Code::from_generators(R, 4, {g, shift(g, 2)});
  CHECK(is_quasi_cyclic(C, 2));
  const auto polys = component_polycodes(C);
  CHECK(polys.size() == 2);
  // rows come back trimmed to polynomial degree; padding restores them
  for (std::size_t i = 0; i < polys.size(); ++i) {
    CHECK(polys[i].component == i);
    CHECK(polys[i].generators.size() == C.components()[i].size());
    for (std::size_t j = 0; j < polys[i].generators.size(); ++j) {
      FPoly padded = polys[i].generators[j];
      CHECK(padded.size() <= 4);
      padded.resize(4, 0);
      CHECK(padded == C.components()[i][j]);
    }
  }
}

TEST_CASE("shift commutes with taking components") {
  std::mt19937_64 rng(52);
  const Ring R(Field::make(2, 2), 1);
  for (int trial = 0; trial < 10; ++trial) {
    Word w;
    for (int i = 0; i < 3; ++i)
      w.push_back(R.from_wire_rank(rng() % *R.order()));
    const Word s = shift(w, 1);
    for (std::uint32_t c = 0; c < R.coords(); ++c) {
      Row wr, sr;
      for (const auto& x : w) wr.push_back(x.gray[c]);
      for (const auto& x : s) sr.push_back(x.gray[c]);
      CHECK(shift_row(wr, 1) == sr);
    }
  }
}

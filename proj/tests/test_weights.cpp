#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "ring.hpp"
#include "weights.hpp"

using namespace bk;

namespace {

using Word = std::vector<RingElem>;

Word rand_word(const Ring& R, std::uint32_t n, std::mt19937_64& rng) {
  Word w;
  for (std::uint32_t i = 0; i < n; ++i)
    w.push_back(R.from_wire_rank(rng() % *R.order()));
  return w;
}

// recounts the complete enumerator straight from the codeword list
WeightEnumerator complete_oracle(const Code& C) {
  const Ring& R = C.ring();
  const std::uint32_t p = R.field().p();
  WeightEnumerator W{EnumKind::complete, p, {}};
  for (const auto& w : C.codewords()) {
    ExpVec e(*R.order(), 0);
    for (const auto& x : w) ++e[R.wire_rank(x)];
    auto [it, fresh] = W.terms.emplace(e, CycInt::integer(p, 1));
    if (!fresh) it->second += CycInt::integer(p, 1);
  }
  return W;
}

}  // namespace

TEST_CASE("cyclotomic integers: powers, relations, norms") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    // 1 + xi + ... + xi^(p-1) = 0
    CycInt s = CycInt::integer(p, 0);
    for (std::uint32_t e = 0; e < p; ++e) s += CycInt::xi_pow(p, e);
    CHECK(s.is_zero());
    // xi^p wraps to 1
    CHECK(CycInt::xi_pow(p, p) == CycInt::integer(p, 1));
    CHECK(CycInt::xi_pow(p, 1) * CycInt::xi_pow(p, p - 1) ==
          CycInt::integer(p, 1));
    // norm of 1 - xi: the product over all conjugates equals p
    CycInt prod = CycInt::integer(p, 1);
    for (std::uint32_t j = 1; j < p; ++j)
      prod = prod * (CycInt::integer(p, 1) - CycInt::xi_pow(p, j));
    CHECK(prod.is_rational());
    CHECK(prod.rational() == std::int64_t(p));
  }
}

TEST_CASE("cyclotomic division is exact or refused") {
  CycInt a = CycInt::integer(5, 6) + CycInt::xi_pow(5, 2) * CycInt::integer(5, 9);
  CycInt b = a;
  CHECK(b.divide_exact(3));
  CHECK(b * CycInt::integer(5, 3) == a);
  CHECK_FALSE(a.divide_exact(4));
  CHECK(CycInt::integer(3, -7).rational() == -7);
  CHECK_FALSE(CycInt::xi_pow(3, 1).is_rational());
}

TEST_CASE("gray and lee weight fixtures") {
  const Ring R(Field::make(2, 2), 1);
  const RingElem one_plus_v = R.from_coeffs({1, 1});
  CHECK(gray_weight(R, one_plus_v) == 1);   // gray (1, 0)
  CHECK(gray_weight(R, R.gen(1)) == 1);     // gray (0, 1)
  CHECK(gray_weight(R, R.one()) == 2);      // gray (1, 1)
  const RingElem alpha = R.from_coeffs({2, 0});
  CHECK(gray_weight(R, alpha) == 2);        // gray (a, a), digit sums 1 + 1
  CHECK(lee_weight(R, {one_plus_v, R.gen(1), R.gen(1)}) == 3);
  CHECK(lee_weight(R, {R.zero(), R.zero()}) == 0);
}

TEST_CASE("unit classes of B_1") {
  const Ring R2(Field::make(2, 1), 1);
  const UnitClasses c2 = unit_classes(R2);
  CHECK(c2.reps.size() == 4);  // only unit is 1, all orbits are singletons

  const Ring R4(Field::make(2, 2), 1);
  const UnitClasses c4 = unit_classes(R4);
  CHECK(c4.reps.size() == 4);
  std::uint64_t covered = 0;
  for (auto s : c4.orbit_sizes) covered += s;
  CHECK(covered == 16);
  // orbit sizes are 1 (zero), 9 (units), 3, 3 (the two idempotent rays)
  std::multiset<std::uint64_t> sizes(c4.orbit_sizes.begin(),
                                     c4.orbit_sizes.end());
  CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 3, 9});
  // representative of each class is its least member
  for (std::size_t i = 0; i < c4.reps.size(); ++i)
    CHECK(c4.class_of[c4.reps[i]] == i);
}

TEST_CASE("complete enumerator equals the direct recount") {
  std::mt19937_64 rng(41);
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(3, 1), 1),
                        Ring(Field::make(2, 2), 1)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint32_t n = 1 + trial % 2;
      const Code C = Code::from_generators(R, n, {rand_word(R, n, rng)});
      const WeightEnumerator got = complete_we(C);
      const WeightEnumerator want = complete_oracle(C);
      CHECK(got.terms == want.terms);
      CHECK(got.total() == want.total());
    }
  }
}

TEST_CASE("scalar enumerators have total |C| and a zero-weight unit term") {
  std::mt19937_64 rng(42);
  const Ring R(Field::make(3, 1), 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Code C = Code::from_generators(R, 2, {rand_word(R, 2, rng)});
    for (const WeightEnumerator& W : {hamming_we(C), lee_we(C)}) {
      CHECK(W.total() == std::int64_t(C.codewords().size()));
      const auto it = W.terms.find(ExpVec{0});
      CHECK(it != W.terms.end());
      CHECK(it->second == CycInt::integer(3, 1));
    }
  }
}

TEST_CASE("macwilliams transform on a length-1 ideal") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 1, {{R.gen(1)}});
  const std::uint64_t size = C.codewords().size();
  CHECK(size == 2);

  const CharMatrix T = char_matrix(R, CharMatrix::Kind::T);
  const WeightEnumerator dual_cwe =
      macwilliams(complete_we(C), T, size);
  CHECK(dual_cwe.terms == complete_we(C.dual(DualMode::euclidean)).terms);

  const CharMatrix TH = char_matrix(R, CharMatrix::Kind::T_H);
  const WeightEnumerator herm_cwe = macwilliams(complete_we(C), TH, size);
  // <v> is hermitian self-dual, so the transform returns its own enumerator
  CHECK(herm_cwe.terms == complete_we(C).terms);

  const CharMatrix S = char_matrix(R, CharMatrix::Kind::S);
  const UnitClasses cls = unit_classes(R);
  const WeightEnumerator dual_swe =
      macwilliams(symmetrize(complete_we(C), cls), S, size);
  CHECK(dual_swe.terms ==
        symmetrize(complete_we(C.dual(DualMode::euclidean)), cls).terms);
}

TEST_CASE("macwilliams transform property over seeded codes") {
  std::mt19937_64 rng(43);
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(3, 1), 1)}) {
    const CharMatrix T = char_matrix(R, CharMatrix::Kind::T);
    const CharMatrix TH = char_matrix(R, CharMatrix::Kind::T_H);
    const CharMatrix S = char_matrix(R, CharMatrix::Kind::S);
    const UnitClasses cls = unit_classes(R);
    for (int trial = 0; trial < 6; ++trial) {
      const std::uint32_t n = 1 + trial % 2;
      const Code C = Code::from_generators(R, n, {rand_word(R, n, rng)});
      const std::uint64_t size = C.codewords().size();
      const WeightEnumerator cwe = complete_we(C);
      const Code De = C.dual(DualMode::euclidean);
      const Code Dh = C.dual(DualMode::hermitian);
      CHECK(macwilliams(cwe, T, size).terms == complete_we(De).terms);
      CHECK(macwilliams(cwe, TH, size).terms == complete_we(Dh).terms);
      CHECK(macwilliams(symmetrize(cwe, cls), S, size).terms ==
            symmetrized_we(De).terms);
    }
  }
}

TEST_CASE("transform rejections") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 1, {{R.gen(1)}});
  const CharMatrix T = char_matrix(R, CharMatrix::Kind::T);
  // wrong size cannot divide the expanded coefficients
  try {
    macwilliams(complete_we(C), T, 3);
    CHECK(false);
  } catch (const BkError& e) {
    CHECK(e.code() == errc::non_integral_result);
  }
  // kind pairing is enforced
  try {
    macwilliams(hamming_we(C), T, 2);
    CHECK(false);
  } catch (const BkError& e) {
    CHECK(e.code() == errc::kind_mismatch);
  }
  try {
    symmetrize(hamming_we(C), unit_classes(R));
    CHECK(false);
  } catch (const BkError& e) {
    CHECK(e.code() == errc::kind_mismatch);
  }
}

TEST_CASE("field hamming distribution and transform") {
  const Field F2 = Field::make(2, 1);
  const Matrix rep{{1, 1}};
  const auto dist = field_hamming_distribution(F2, rep, 2);
  CHECK(dist == std::map<std::uint32_t, std::int64_t>{{0, 1}, {2, 1}});
  // the repetition code of length 2 is self-dual, transform fixes it
  CHECK(field_hamming_macwilliams(F2, dist, 2, 2) == dist);

  const Field F3 = Field::make(3, 1);
  const auto d3 = field_hamming_distribution(F3, {{1, 1}}, 2);
  CHECK(d3 == std::map<std::uint32_t, std::int64_t>{{0, 1}, {2, 2}});
  // dual is <(1,2)>, same distribution: formally self-dual
  CHECK(field_hamming_macwilliams(F3, d3, 2, 3) == d3);

  // full space transforms to the zero code and back
  const auto full = field_hamming_distribution(F2, {{1, 0}, {0, 1}}, 2);
  const auto zero = field_hamming_macwilliams(F2, full, 2, 4);
  CHECK(zero == std::map<std::uint32_t, std::int64_t>{{0, 1}});
  CHECK(field_hamming_macwilliams(F2, zero, 2, 1) == full);
}

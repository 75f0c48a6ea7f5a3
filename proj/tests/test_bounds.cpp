#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "bounds.hpp"
#include "code.hpp"
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

// enumeration oracle for both metrics
std::pair<std::uint32_t, std::uint32_t> distances_by_enumeration(
    const Code& C) {
  std::uint32_t dh = kInfiniteDistance, dl = kInfiniteDistance;
  for (const auto& w : C.codewords()) {
    const std::uint32_t hw = C.word_hamming_weight(w);
    if (hw == 0) continue;
    dh = std::min(dh, hw);
    dl = std::min(dl, C.word_gray_weight(w));
  }
  return {dh, dl};
}

}  // namespace

TEST_CASE("distances match the enumeration oracle") {
  std::mt19937_64 rng(61);
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(3, 1), 1),
                        Ring(Field::make(2, 2), 1), Ring(Field::make(2, 1), 2)}) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::uint32_t n = 1 + trial % 3;
      std::vector<Word> gens{rand_word(R, n, rng)};
      if (trial % 2) gens.push_back(rand_word(R, n, rng));
      const Code C = Code::from_generators(R, n, gens);
      const auto [dh, dl] = distances_by_enumeration(C);
      CHECK(min_distance(C, Metric::hamming) == dh);
      CHECK(min_distance(C, Metric::lee) == dl);
      if (!C.is_zero_code()) CHECK(dl >= dh);
    }
  }
}

TEST_CASE("zero code reports sentinels and no verdicts") {
  const Ring R(Field::make(2, 1), 1);
  const Code Z = Code::from_generators(R, 2, {});
  const BoundReport b = singleton_report(Z);
  CHECK(b.d_hamming == kInfiniteDistance);
  CHECK(b.d_lee == kInfiniteDistance);
  CHECK_FALSE(b.is_mds);
  CHECK_FALSE(b.is_mdr);
  CHECK_FALSE(b.is_mlds);
  CHECK_FALSE(b.is_mldr);
  CHECK(b.rank == 0);
}

TEST_CASE("full one-coordinate space meets every bound") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 1, {{R.one()}});
  const BoundReport b = singleton_report(C);
  CHECK(b.d_hamming == 1);
  CHECK(b.d_lee == 1);
  CHECK(b.rank == 1);
  CHECK(b.is_mds);
  CHECK(b.is_mdr);
  CHECK(b.is_mlds);
  CHECK(b.is_mldr);
}

TEST_CASE("doubled identity word over F_2 + vF_2") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 2, {{R.one(), R.one()}});
  const BoundReport b = singleton_report(C);
  CHECK(b.d_hamming == 2);
  CHECK(b.d_lee == 2);
  CHECK(b.is_mds);
  CHECK(b.is_mdr);
  CHECK_FALSE(b.is_mlds);
  CHECK_FALSE(b.is_mldr);
  // n - log_{|B|}|C| + 1 = 2 - 1 + 1 = 2 exactly
  CHECK(b.singleton_h_num == 2);
  CHECK(b.singleton_h_den == 1);
  CHECK(b.mdr_bound == 2);
}

TEST_CASE("half-size ideal gives a fractional singleton bound") {
  const Ring R(Field::make(2, 1), 1);
  const Code C = Code::from_generators(R, 1, {{R.gen(1)}});
  const BoundReport b = singleton_report(C);
  // |C| = 2, log_{|B_1|}|C| = 1/2, bound = 1 - 1/2 + 1 = 3/2
  CHECK(b.singleton_h_num == 3);
  CHECK(b.singleton_h_den == 2);
  CHECK(b.d_hamming == 1);
  CHECK_FALSE(b.is_mds);
  CHECK(b.is_mdr);
}

TEST_CASE("all-ones family over F_4 + vF_4 attains the Lee bound only once") {
  const Ring R(Field::make(2, 2), 1);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const Code C = Code::from_generators(R, n, {Word(n, R.one())});
    const BoundReport b = singleton_report(C);
    CHECK(b.log_p_size == 4);  // |C| = |B_1| = 16 at every length
    CHECK(b.d_lee == n);
    CHECK(b.is_mlds == (n == 1));
    CHECK(b.is_mldr == (n == 1));
  }
}

TEST_CASE("crt of same-rank self-dual components is MDS self-dual") {
  for (std::uint32_t p : {2u, 5u}) {
    const Ring R(Field::make(p, 1), 1);
    const Field& F = R.field();
    // the self-dual [2,1] code over F_p: <(1,w)> with 1 + w^2 = 0
    felem w = 0;
    for (felem c = 1; c < F.q(); ++c)
      if (F.add(F.mul(c, c), 1) == 0) w = c;
    REQUIRE((p == 2 ? w == 1 : w != 0));
    const Matrix comp{{1, w}};
    const Code C = Code::from_components(R, 2, {comp, comp});
    const BoundReport b = singleton_report(C);
    CHECK(b.is_mds);
    CHECK(b.is_mdr);
    CHECK(C.self_dual_status().euclid_dual);
  }
}

TEST_CASE("crt with one dominating MDS component is MDR, not MDS") {
  const Ring R(Field::make(2, 1), 1);
  const Matrix full{{1, 0}, {0, 1}};   // MDS [2,2,1]
  const Matrix rep{{1, 1}};            // MDS [2,1,2]
  const Code C = Code::from_components(R, 2, {full, rep});
  const BoundReport b = singleton_report(C);
  CHECK(b.rank == 2);
  CHECK(b.d_hamming == 1);
  CHECK(b.is_mdr);
  CHECK_FALSE(b.is_mds);
}

TEST_CASE("rank identity: printed form fails, dual form holds") {
  const Ring R(Field::make(2, 1), 1);
  // counterexample: the full module of length 2
  const Code full = Code::from_generators(
      R, 2, {{R.one(), R.zero()}, {R.zero(), R.one()}});
  const RankIdentity ri = rank_identity_check(full);
  CHECK_FALSE(ri.self_form_holds);  // rk + frk = 4, n = 2
  CHECK(ri.dual_form_holds);

  std::mt19937_64 rng(62);
  for (const Ring& S : {Ring(Field::make(2, 1), 1), Ring(Field::make(3, 1), 1),
                        Ring(Field::make(2, 2), 1)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::uint32_t n = 1 + trial % 3;
      std::vector<Word> gens{rand_word(S, n, rng)};
      if (trial % 2) gens.push_back(rand_word(S, n, rng));
      CHECK(rank_identity_check(Code::from_generators(S, n, gens))
                .dual_form_holds);
    }
  }
}

TEST_CASE("free MLDR with exact division forces MLDS") {
  std::mt19937_64 rng(63);
  for (const Ring& R : {Ring(Field::make(2, 1), 1), Ring(Field::make(2, 2), 1)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t n = 1 + trial % 3;
      const Code C =
          Code::from_generators(R, n, {rand_word(R, n, rng)});
      const BoundReport b = singleton_report(C);
      CHECK(b.free_mldr_implies_mlds);
      if (b.free_mldr_exact_division) CHECK(b.is_mlds);
    }
  }
}

TEST_CASE("singleton inequalities hold on random codes") {
  std::mt19937_64 rng(64);
  for (const Ring& R : {Ring(Field::make(2, 1), 2), Ring(Field::make(3, 1), 1)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t n = 1 + trial % 3;
      std::vector<Word> gens{rand_word(R, n, rng)};
      const Code C = Code::from_generators(R, n, gens);
      if (C.is_zero_code()) continue;
      const BoundReport b = singleton_report(C);
      CHECK(std::int64_t(b.d_hamming) * b.singleton_h_den <=
            b.singleton_h_num);
      CHECK(b.d_hamming <= b.mdr_bound);
      CHECK(b.mlds_lhs <= b.mlds_rhs);
      CHECK(b.mldr_lhs <= b.mldr_rhs);
      CHECK(b.d_lee >= b.d_hamming);
    }
  }
}

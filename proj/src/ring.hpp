#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "field.hpp"

namespace bk {

// Element of B_k = F_{p^r}[v_1..v_k]/(v_i^2 = v_i, v_i v_j = v_j v_i).
//
// coeffs: coordinates in the monomial basis {v_S}, indexed by subset bitmask
//         (v_i corresponds to bit i-1; coeffs[0] is the constant term).
// gray:   the image under the Gray map, i.e. gray[m] is the evaluation of the
//         element at v_i = bit i-1 of m. Kept consistent with coeffs at all
//         times; the two are related by the subset zeta/Moebius transforms.
struct RingElem {
  std::vector<felem> coeffs;
  std::vector<felem> gray;

  bool operator==(const RingElem& o) const { return coeffs == o.coeffs; }
  bool is_zero() const {
    for (felem c : coeffs)
      if (c) return false;
    return true;
  }
};

class Ring {
public:
  Ring(Field f, std::uint32_t k);

  const Field& field() const { return field_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t coords() const { return m_; }  // 2^k
  std::uint64_t log_p_order() const {
    return static_cast<std::uint64_t>(field_.r()) * m_;
  }
  // |B_k| = q^(2^k) when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  RingElem from_coeffs(std::vector<felem> coeffs) const;
  RingElem from_gray(std::vector<felem> gray) const;
  RingElem zero() const;
  RingElem one() const;
  RingElem gen(std::uint32_t i) const;  // v_i, 1 <= i <= k
  // idempotent with gray support exactly {m}; these are the primitive
  // idempotents of the maximal-ideal decomposition
  RingElem idempotent(std::uint32_t m) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scalar_mul(felem c, const RingElem& a) const;

  bool is_unit(const RingElem& a) const;
  // -1 if alpha is nonzero, else 0
  int gamma(felem alpha) const { return alpha != 0 ? -1 : 0; }

  // ring automorphism v_i -> 1 - v_i; permutes gray coordinates by bitmask
  // complement
  RingElem conjugate(const RingElem& a) const;

  // in-place subset-sum transforms on a length-2^k vector (k passes)
  void zeta(std::vector<felem>& v) const;
  void moebius(std::vector<felem>& v) const;

  // The recursive Gray map built from the one-variable step
  // a + b v_j -> (a, a + b), applied from v_k down. Agrees with gray as a
  // map into F^(2^k) but is computed by block recursion, independently of
  // the zeta transform.
  std::vector<felem> tower_gray(const RingElem& a) const;

  // Chain of one-variable steps from level k down to level j < k, giving
  // 2^(k-j) coefficient vectors of B_j elements.
  std::vector<std::vector<felem>> project_to_level(const RingElem& a,
                                                   std::uint32_t j) const;

  // Frozen element order: lexicographic on the wire encoding (subset-ordered
  // coefficients, each as its digit sequence). Rank arithmetic only valid
  // while q^(2^k) fits in 64 bits.
  RingElem from_wire_rank(std::uint64_t t) const;
  std::uint64_t wire_rank(const RingElem& a) const;

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && k_ == o.k_;
  }

  // The unique coordinate permutation with tower_gray(a)[i] = gray[perm[i]]
  // for every element a, extracted by exhausting the ring.
  std::vector<std::uint32_t> tower_permutation(
      std::uint64_t cap = 1u << 20) const;

private:
  Field field_;
  std::uint32_t k_;
  std::uint32_t m_;
};

}  // namespace bk

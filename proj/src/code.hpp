#pragma once

#include <cstdint>
#include <vector>

#include "ideal.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace bk {

constexpr std::uint64_t kDefaultEnumCap = 1ull << 24;

enum class GrayMapKind { phi, tower };

struct RankProfile {
  std::vector<std::uint32_t> component_ranks;
  std::uint32_t rank = 0;       // max over components
  std::uint32_t free_rank = 0;  // min over components
  bool is_free = false;         // all component ranks equal
};

struct SelfDualStatus {
  bool euclid_orthogonal = false;
  bool euclid_dual = false;
  bool hermitian_orthogonal = false;
  bool hermitian_dual = false;
  bool type_II = false;  // Euclidean self-dual with all gray weights = 0 mod 4
};

// Linear code over B_k: a submodule of B_k^n. Stored component-first: the
// 2^k projections through the gray coordinates, each as an RREF generator
// matrix over the field. The original generators are kept for shift tests
// and reporting; codes built from components get a minimal generating set.
class Code {
public:
  static Code from_generators(const Ring& R, std::uint32_t n,
                              std::vector<std::vector<RingElem>> gens);
  static Code from_components(const Ring& R, std::uint32_t n,
                              std::vector<Matrix> comps);

  const Ring& ring() const { return ring_; }
  std::uint32_t length() const { return n_; }
  const std::vector<std::vector<RingElem>>& generators() const {
    return gens_;
  }
  const std::vector<Matrix>& components() const { return comps_; }

  std::uint64_t log_p_size() const;  // log_p |C| = r * sum of component ranks
  RankProfile rank_profile() const;
  bool is_zero_code() const { return log_p_size() == 0; }

  bool contains(const std::vector<RingElem>& w) const;
  bool same_code(const Code& o) const;

  Code dual(DualMode mode) const;
  SelfDualStatus self_dual_status(std::uint64_t cap = kDefaultEnumCap) const;

  // All codewords in the frozen enumeration order: odometer over component
  // coefficient tuples, component 0 slowest, row 0 slowest within a
  // component, coefficient values ascending by wire rank.
  std::vector<std::vector<RingElem>> codewords(
      std::uint64_t cap = kDefaultEnumCap) const;

  // Generating set of size rank(C) stacking the component RREF rows through
  // the inverse Gray map (rows beyond a component's rank contribute zero).
  // Plain and modular independent, with prod_t I(u_t) = |C|.
  std::vector<std::vector<RingElem>> minimal_generating_set() const;

  // RREF generator matrix over the field of the Gray image, spanned by the
  // images of v_S * g over all generators g and subsets S. Coordinate j of a
  // word occupies columns j*2^k .. (j+1)*2^k - 1 (gray index ascending).
  Matrix gray_image(GrayMapKind kind = GrayMapKind::phi) const;

  // Gray weight (sum of base weights over all gray coordinates) of a word.
  std::uint32_t word_gray_weight(const std::vector<RingElem>& w) const;
  std::uint32_t word_hamming_weight(const std::vector<RingElem>& w) const;

private:
  Code(Ring r, std::uint32_t n) : ring_(std::move(r)), n_(n) {}
  Ring ring_;
  std::uint32_t n_;
  std::vector<std::vector<RingElem>> gens_;
  std::vector<Matrix> comps_;
};

// Plain independence: every vanishing combination has all its terms zero;
// checked over all scalar tuples (|B_k|^s of them, capped).
bool plain_independent(const Ring& R,
                       const std::vector<std::vector<RingElem>>& vecs,
                       std::uint64_t cap = kDefaultEnumCap);
// Modular independence: the theta images are linearly independent over the
// field for at least one gray coordinate.
bool modular_independent(const Ring& R,
                         const std::vector<std::vector<RingElem>>& vecs);

}  // namespace bk

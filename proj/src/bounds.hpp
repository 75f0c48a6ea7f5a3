#pragma once

#include <cstdint>
#include <limits>

#include "code.hpp"

namespace bk {

enum class Metric { hamming, lee };

// Sentinel distance for the zero code.
constexpr std::uint32_t kInfiniteDistance =
    std::numeric_limits<std::uint32_t>::max();

// Minimum nonzero weight. Hamming distances come from the component formula
// min over nonzero components of the component distance, cross-checked by
// direct enumeration when that is feasible; Lee distances enumerate the code
// with an early exit at weight 1.
std::uint32_t min_distance(const Code& C, Metric metric,
                           std::uint64_t cap = kDefaultEnumCap);

struct BoundReport {
  std::uint32_t n = 0;
  std::uint64_t log_p_size = 0;
  std::uint32_t d_hamming = 0;
  std::uint32_t d_lee = 0;
  std::uint32_t rank = 0;
  std::uint32_t free_rank = 0;
  bool is_free = false;

  // n - log_{|B_k|}|C| + 1 as a reduced fraction
  std::int64_t singleton_h_num = 0;
  std::int64_t singleton_h_den = 1;
  std::uint32_t mdr_bound = 0;   // n - rank + 1
  std::int64_t mlds_lhs = 0;     // floor((d_L - 1) / (r(p-1)))
  std::int64_t mlds_rhs = 0;     // 2^k n - log_{p^r}|C|
  std::int64_t mldr_lhs = 0;     // floor((d_L - 1) / (r(p-1)2^k))
  std::int64_t mldr_rhs = 0;     // n - rank

  bool is_mds = false;
  bool is_mdr = false;
  bool is_mlds = false;
  bool is_mldr = false;
  // free + MLDR + (r(p-1)2^k divides d_L - 1) forces MLDS; both the premise
  // and the implication are recorded.
  bool free_mldr_exact_division = false;
  bool free_mldr_implies_mlds = true;
};

// All fields exact; the MDS test compares |C| * |B_k|^(d_H - 1) with
// |B_k|^n as p-adic exponents, no real logarithms. Zero code: sentinel
// distances, every verdict false.
BoundReport singleton_report(const Code& C, std::uint64_t cap = kDefaultEnumCap);

struct RankIdentity {
  bool self_form_holds = false;  // rk(C) + frk(C) == n; fails in general
  bool dual_form_holds = false;  // rk(C) + frk(dual(C)) == n; always holds
};
RankIdentity rank_identity_check(const Code& C);

}  // namespace bk

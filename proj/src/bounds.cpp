#include "bounds.hpp"

#include <numeric>

#include "errors.hpp"
#include "weights.hpp"

namespace bk {

namespace {

// minimum Hamming weight of a field code by spanning its RREF rows
std::uint32_t field_min_weight(const Field& F, const Matrix& rr,
                               std::uint32_t n, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < rr.size(); ++i) {
    if (count > cap / F.q())
      fail(errc::too_large_to_enumerate, "component too large");
    count *= F.q();
  }
  std::uint32_t best = kInfiniteDistance;
  std::vector<std::uint32_t> odo(rr.size(), 0);
  while (true) {
    int idx = static_cast<int>(odo.size()) - 1;
    while (idx >= 0 && odo[idx] + 1 == F.q()) odo[idx--] = 0;
    if (idx < 0) break;
    ++odo[idx];
    Row w(n, 0);
    for (std::size_t t = 0; t < rr.size(); ++t) {
      if (odo[t] == 0) continue;
      const felem c = F.from_wire_rank(odo[t]);
      for (std::uint32_t j = 0; j < n; ++j)
        w[j] = F.add(w[j], F.mul(c, rr[t][j]));
    }
    std::uint32_t wt = 0;
    for (felem v : w)
      if (v != 0) ++wt;
    if (wt < best) best = wt;
    if (best == 1) break;
  }
  return best;
}

std::uint32_t hamming_by_components(const Code& C, std::uint64_t cap) {
  std::uint32_t best = kInfiniteDistance;
  for (const auto& comp : C.components()) {
    if (comp.empty()) continue;
    best = std::min(best,
                    field_min_weight(C.ring().field(), comp, C.length(), cap));
  }
  return best;
}

}  // namespace

std::uint32_t min_distance(const Code& C, Metric metric, std::uint64_t cap) {
  if (C.is_zero_code()) return kInfiniteDistance;

  if (metric == Metric::hamming) {
    const std::uint32_t by_comp = hamming_by_components(C, cap);
    std::uint64_t words = 1;
    bool enumerable = true;
    const std::uint64_t lq = C.log_p_size() / C.ring().field().r();
    for (std::uint64_t i = 0; i < lq && enumerable; ++i) {
      if (words > cap / C.ring().field().q())
        enumerable = false;
      else
        words *= C.ring().field().q();
    }
    if (enumerable) {
      std::uint32_t direct = kInfiniteDistance;
      for (const auto& w : C.codewords(cap)) {
        const std::uint32_t wt = C.word_hamming_weight(w);
        if (wt > 0 && wt < direct) direct = wt;
      }
      if (direct != by_comp)
        fail(errc::property_failed,
             "component distance formula disagrees with enumeration");
    }
    return by_comp;
  }

  std::uint32_t best = kInfiniteDistance;
  for (const auto& w : C.codewords(cap)) {
    const std::uint32_t wt = lee_weight(C.ring(), w);
    if (wt > 0 && wt < best) best = wt;
    if (best == 1) break;
  }
  return best;
}

BoundReport singleton_report(const Code& C, std::uint64_t cap) {
  const Ring& R = C.ring();
  const std::uint32_t r = R.field().r();
  const std::uint32_t p = R.field().p();
  const std::uint64_t m = R.coords();

  BoundReport rep;
  rep.n = C.length();
  rep.log_p_size = C.log_p_size();
  const RankProfile rp = C.rank_profile();
  rep.rank = rp.rank;
  rep.free_rank = rp.free_rank;
  rep.is_free = rp.is_free;

  const std::int64_t log_bk = static_cast<std::int64_t>(r) * m;  // log_p|B_k|
  rep.singleton_h_num = static_cast<std::int64_t>(rep.n + 1) * log_bk -
                        static_cast<std::int64_t>(rep.log_p_size);
  rep.singleton_h_den = log_bk;
  const std::int64_t g = std::gcd(rep.singleton_h_num, rep.singleton_h_den);
  if (g > 1) {
    rep.singleton_h_num /= g;
    rep.singleton_h_den /= g;
  }
  rep.mdr_bound = rep.n - rep.rank + 1;
  const std::int64_t sum_ranks = static_cast<std::int64_t>(rep.log_p_size) / r;
  rep.mlds_rhs = static_cast<std::int64_t>(m) * rep.n - sum_ranks;
  rep.mldr_rhs = static_cast<std::int64_t>(rep.n) - rep.rank;

  if (C.is_zero_code()) {
    rep.d_hamming = kInfiniteDistance;
    rep.d_lee = kInfiniteDistance;
    return rep;
  }

  rep.d_hamming = min_distance(C, Metric::hamming, cap);
  rep.d_lee = min_distance(C, Metric::lee, cap);

  // |C| * |B_k|^(d_H - 1) == |B_k|^n, as exponents of p
  rep.is_mds = static_cast<std::int64_t>(rep.log_p_size) +
                   static_cast<std::int64_t>(rep.d_hamming - 1) * log_bk ==
               static_cast<std::int64_t>(rep.n) * log_bk;
  rep.is_mdr = rep.d_hamming == rep.mdr_bound;

  const std::int64_t lee_step = static_cast<std::int64_t>(r) * (p - 1);
  rep.mlds_lhs = (rep.d_lee - 1) / lee_step;
  rep.mldr_lhs = (rep.d_lee - 1) / (lee_step * static_cast<std::int64_t>(m));
  rep.is_mlds = rep.mlds_lhs == rep.mlds_rhs;
  rep.is_mldr = rep.mldr_lhs == rep.mldr_rhs;

  rep.free_mldr_exact_division =
      rep.is_free && rep.is_mldr &&
      (rep.d_lee - 1) % (lee_step * static_cast<std::int64_t>(m)) == 0;
  rep.free_mldr_implies_mlds = !rep.free_mldr_exact_division || rep.is_mlds;
  return rep;
}

RankIdentity rank_identity_check(const Code& C) {
  const RankProfile rp = C.rank_profile();
  const RankProfile dp = C.dual(DualMode::euclidean).rank_profile();
  RankIdentity out;
  out.self_form_holds = rp.rank + rp.free_rank == C.length();
  out.dual_form_holds = rp.rank + dp.free_rank == C.length();
  return out;
}

}  // namespace bk

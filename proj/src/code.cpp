#include "code.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bk {

Code Code::from_generators(const Ring& R, std::uint32_t n,
                           std::vector<std::vector<RingElem>> gens) {
  if (n < 1) fail(errc::length_mismatch, "code length must be >= 1");
  for (const auto& g : gens) {
    if (g.size() != n) fail(errc::length_mismatch, "generator length mismatch");
    for (const auto& c : g)
      if (c.coeffs.size() != R.coords())
        fail(errc::shape_mismatch, "generator coordinate from wrong ring");
  }
  Code code(R, n);
  code.comps_.resize(R.coords());
  for (std::uint32_t i = 0; i < R.coords(); ++i) {
    Matrix rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
      Row row(n);
      for (std::uint32_t j = 0; j < n; ++j) row[j] = g[j].gray[i];
      rows.push_back(std::move(row));
    }
    code.comps_[i] = rref(R.field(), std::move(rows));
  }
  code.gens_ = std::move(gens);
  return code;
}

Code Code::from_components(const Ring& R, std::uint32_t n,
                           std::vector<Matrix> comps) {
  if (n < 1) fail(errc::length_mismatch, "code length must be >= 1");
  if (comps.size() != R.coords())
    fail(errc::shape_mismatch, "need one component per gray coordinate");
  Code code(R, n);
  code.comps_.resize(R.coords());
  for (std::uint32_t i = 0; i < R.coords(); ++i) {
    for (const auto& row : comps[i])
      if (row.size() != n)
        fail(errc::length_mismatch, "component row length mismatch");
    code.comps_[i] = rref(R.field(), comps[i]);
  }
  code.gens_ = code.minimal_generating_set();
  return code;
}

std::uint64_t Code::log_p_size() const {
  std::uint64_t s = 0;
  for (const auto& c : comps_) s += c.size();
  return s * ring_.field().r();
}

RankProfile Code::rank_profile() const {
  RankProfile rp;
  for (const auto& c : comps_)
    rp.component_ranks.push_back(static_cast<std::uint32_t>(c.size()));
  rp.rank = *std::max_element(rp.component_ranks.begin(),
                              rp.component_ranks.end());
  rp.free_rank = *std::min_element(rp.component_ranks.begin(),
                                   rp.component_ranks.end());
  rp.is_free = rp.rank == rp.free_rank;
  return rp;
}

bool Code::contains(const std::vector<RingElem>& w) const {
  if (w.size() != n_) fail(errc::length_mismatch, "word length mismatch");
  for (std::uint32_t i = 0; i < ring_.coords(); ++i) {
    Row row(n_);
    for (std::uint32_t j = 0; j < n_; ++j) row[j] = w[j].gray[i];
    if (!in_rowspace(ring_.field(), comps_[i], std::move(row))) return false;
  }
  return true;
}

bool Code::same_code(const Code& o) const {
  return n_ == o.n_ && comps_ == o.comps_;
}

Code Code::dual(DualMode mode) const {
  std::vector<Matrix> dual_comps(ring_.coords());
  const std::uint32_t mask = ring_.coords() - 1;
  for (std::uint32_t i = 0; i < ring_.coords(); ++i) {
    const std::uint32_t src = mode == DualMode::hermitian ? (i ^ mask) : i;
    dual_comps[i] = kernel(ring_.field(), comps_[src], n_);
  }
  return from_components(ring_, n_, std::move(dual_comps));
}

SelfDualStatus Code::self_dual_status(std::uint64_t cap) const {
  SelfDualStatus st;
  const std::uint32_t mask = ring_.coords() - 1;
  st.euclid_orthogonal = true;
  st.hermitian_orthogonal = true;
  for (std::uint32_t i = 0; i < ring_.coords(); ++i) {
    for (const auto& a : comps_[i]) {
      for (const auto& b : comps_[i])
        if (dot(ring_.field(), a, b) != 0) st.euclid_orthogonal = false;
      for (const auto& b : comps_[i ^ mask])
        if (dot(ring_.field(), a, b) != 0) st.hermitian_orthogonal = false;
    }
  }
  st.euclid_dual = same_code(dual(DualMode::euclidean));
  st.hermitian_dual = same_code(dual(DualMode::hermitian));
  st.type_II = false;
  if (st.euclid_dual) {
    st.type_II = true;
    for (const auto& w : codewords(cap))
      if (word_gray_weight(w) % 4 != 0) {
        st.type_II = false;
        break;
      }
  }
  return st;
}

std::vector<std::vector<RingElem>> Code::codewords(std::uint64_t cap) const {
  const std::uint64_t log_q_size = log_p_size() / ring_.field().r();
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < log_q_size; ++i) {
    if (count > cap / ring_.field().q())
      fail(errc::too_large_to_enumerate, "code too large to enumerate");
    count *= ring_.field().q();
  }
  if (count > cap)
    fail(errc::too_large_to_enumerate, "code too large to enumerate");

  // coefficient slots: (component, row) pairs in frozen order
  struct Slot {
    std::uint32_t comp, row;
  };
  std::vector<Slot> slots;
  for (std::uint32_t i = 0; i < ring_.coords(); ++i)
    for (std::uint32_t t = 0; t < comps_[i].size(); ++t)
      slots.push_back({i, t});

  std::vector<std::vector<RingElem>> words;
  words.reserve(count);
  std::vector<std::uint32_t> odo(slots.size(), 0);  // wire ranks
  const Field& F = ring_.field();
  while (true) {
    // component words as field rows
    std::vector<Row> comp_words(ring_.coords(), Row(n_, 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (odo[s] == 0) continue;
      const felem c = F.from_wire_rank(odo[s]);
      const Row& base = comps_[slots[s].comp][slots[s].row];
      Row& acc = comp_words[slots[s].comp];
      for (std::uint32_t j = 0; j < n_; ++j)
        acc[j] = F.add(acc[j], F.mul(c, base[j]));
    }
    std::vector<RingElem> w;
    w.reserve(n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::vector<felem> g(ring_.coords());
      for (std::uint32_t i = 0; i < ring_.coords(); ++i)
        g[i] = comp_words[i][j];
      w.push_back(ring_.from_gray(std::move(g)));
    }
    words.push_back(std::move(w));
    int idx = static_cast<int>(slots.size()) - 1;
    while (idx >= 0 && odo[idx] + 1 == F.q()) odo[idx--] = 0;
    if (idx < 0) break;
    ++odo[idx];
  }
  return words;
}

std::vector<std::vector<RingElem>> Code::minimal_generating_set() const {
  const RankProfile rp = rank_profile();
  std::vector<std::vector<RingElem>> out;
  for (std::uint32_t t = 0; t < rp.rank; ++t) {
    std::vector<RingElem> w;
    w.reserve(n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::vector<felem> g(ring_.coords(), 0);
      for (std::uint32_t i = 0; i < ring_.coords(); ++i)
        if (t < comps_[i].size()) g[i] = comps_[i][t][j];
      w.push_back(ring_.from_gray(std::move(g)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

Matrix Code::gray_image(GrayMapKind kind) const {
  const std::uint32_t m = ring_.coords();
  Matrix rows;
  for (const auto& g : gens_) {
    for (std::uint32_t s = 0; s < m; ++s) {
      // v_S * g, with S the subset for bitmask s
      std::vector<felem> sc(m, 0);
      sc[s] = ring_.field().one();
      RingElem vs = ring_.from_coeffs(std::move(sc));
      Row row(static_cast<std::size_t>(m) * n_);
      for (std::uint32_t j = 0; j < n_; ++j) {
        RingElem prod = ring_.mul(vs, g[j]);
        std::vector<felem> img = kind == GrayMapKind::tower
                                     ? ring_.tower_gray(prod)
                                     : prod.gray;
        for (std::uint32_t i = 0; i < m; ++i)
          row[static_cast<std::size_t>(j) * m + i] = img[i];
      }
      rows.push_back(std::move(row));
    }
  }
  return rref(ring_.field(), std::move(rows));
}

std::uint32_t Code::word_gray_weight(const std::vector<RingElem>& w) const {
  std::uint32_t wt = 0;
  for (const auto& c : w)
    for (felem g : c.gray) wt += ring_.field().base_weight(g);
  return wt;
}

std::uint32_t Code::word_hamming_weight(const std::vector<RingElem>& w) const {
  std::uint32_t wt = 0;
  for (const auto& c : w)
    if (!c.is_zero()) ++wt;
  return wt;
}

bool plain_independent(const Ring& R,
                       const std::vector<std::vector<RingElem>>& vecs,
                       std::uint64_t cap) {
  if (vecs.empty()) return true;
  const std::size_t n = vecs[0].size();
  for (const auto& v : vecs)
    if (v.size() != n) fail(errc::length_mismatch, "vector length mismatch");
  auto ord = R.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (!ord || total > cap / *ord)
      fail(errc::too_large_to_enumerate, "too many scalar tuples");
    total *= *ord;
  }
  if (total > cap)
    fail(errc::too_large_to_enumerate, "too many scalar tuples");

  std::vector<std::uint64_t> odo(vecs.size(), 0);
  while (true) {
    std::vector<RingElem> scalars;
    scalars.reserve(vecs.size());
    for (std::uint64_t t : odo) scalars.push_back(R.from_wire_rank(t));
    // sum of scalar * vector, tracking each term
    bool sum_zero = true;
    std::vector<bool> term_zero(vecs.size(), true);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<felem> acc(R.coords(), 0);
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        RingElem t = R.mul(scalars[i], vecs[i][j]);
        if (!t.is_zero()) term_zero[i] = false;
        for (std::uint32_t c = 0; c < R.coords(); ++c)
          acc[c] = R.field().add(acc[c], t.gray[c]);
      }
      for (felem v : acc)
        if (v != 0) sum_zero = false;
    }
    if (sum_zero) {
      for (bool tz : term_zero)
        if (!tz) return false;
    }
    int idx = static_cast<int>(odo.size()) - 1;
    while (idx >= 0 && odo[idx] + 1 == *ord) odo[idx--] = 0;
    if (idx < 0) break;
    ++odo[idx];
  }
  return true;
}

bool modular_independent(const Ring& R,
                         const std::vector<std::vector<RingElem>>& vecs) {
  if (vecs.empty()) return true;
  const std::size_t n = vecs[0].size();
  for (std::uint32_t i = 0; i < R.coords(); ++i) {
    Matrix rows;
    for (const auto& v : vecs) {
      Row row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = v[j].gray[i];
      rows.push_back(std::move(row));
    }
    if (rank_of(R.field(), rows) == vecs.size()) return true;
  }
  return false;
}

}  // namespace bk

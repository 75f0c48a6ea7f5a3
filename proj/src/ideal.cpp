#include "ideal.hpp"

#include "errors.hpp"

namespace bk {

std::vector<std::uint8_t> ideal_support(const Ring& R,
                                        const std::vector<RingElem>& gens) {
  if (gens.empty()) fail(errc::empty_generator_list, "ideal needs a generator");
  std::vector<std::uint8_t> supp(R.coords(), 0);
  for (const auto& g : gens)
    for (std::uint32_t i = 0; i < R.coords(); ++i)
      if (g.gray[i] != 0) supp[i] = 1;
  return supp;
}

RingElem support_idempotent(const Ring& R, const std::vector<RingElem>& gens) {
  auto supp = ideal_support(R, gens);
  std::vector<felem> g(R.coords(), 0);
  for (std::uint32_t i = 0; i < R.coords(); ++i)
    if (supp[i]) g[i] = R.field().one();
  return R.from_gray(std::move(g));
}

std::uint64_t ideal_log_p_size(const Ring& R,
                               const std::vector<RingElem>& gens) {
  auto supp = ideal_support(R, gens);
  std::uint64_t cnt = 0;
  for (auto s : supp) cnt += s;
  return cnt * R.field().r();
}

RingElem collapse_generators(const Ring& R, const std::vector<RingElem>& gens) {
  if (gens.empty()) fail(errc::empty_generator_list, "ideal needs a generator");
  const std::size_t m = gens.size();
  if (m > 24) fail(errc::cap_exceeded, "too many generators to collapse");
  const std::uint64_t e = R.field().q() - 1;
  RingElem acc = R.zero();
  for (std::uint64_t A = 1; A < (1ull << m); ++A) {
    RingElem prod = R.one();
    int sz = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (A & (1ull << j)) {
        prod = R.mul(prod, gens[j]);
        ++sz;
      }
    // prod^(q-1) has gray coordinates in {0,1}
    std::vector<felem> pw(R.coords());
    for (std::uint32_t i = 0; i < R.coords(); ++i)
      pw[i] = R.field().pow(prod.gray[i], e);
    RingElem t = R.from_gray(std::move(pw));
    acc = (sz % 2 == 1) ? R.add(acc, t) : R.sub(acc, t);
  }
  return acc;
}

std::vector<RingElem> ideal_elements(const Ring& R,
                                     const std::vector<RingElem>& gens,
                                     std::uint64_t cap) {
  auto supp = ideal_support(R, gens);
  std::vector<std::uint32_t> pos;
  for (std::uint32_t i = 0; i < R.coords(); ++i)
    if (supp[i]) pos.push_back(i);
  std::uint64_t count = 1;
  bool over = false;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (count > cap / R.field().q()) {
      over = true;
      break;
    }
    count *= R.field().q();
  }
  if (over || count > cap)
    fail(errc::too_large_to_enumerate, "ideal too large to enumerate");

  std::vector<RingElem> out;
  out.reserve(count);
  std::vector<felem> vals(pos.size(), 0);
  while (true) {
    std::vector<felem> g(R.coords(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) g[pos[i]] = vals[i];
    out.push_back(R.from_gray(std::move(g)));
    int idx = static_cast<int>(pos.size()) - 1;
    while (idx >= 0 && vals[idx] + 1 == R.field().q()) vals[idx--] = 0;
    if (idx < 0) break;
    ++vals[idx];
  }
  return out;
}

RingElem annihilator_generator(const Ring& R,
                               const std::vector<RingElem>& gens,
                               DualMode mode) {
  auto supp = ideal_support(R, gens);
  std::vector<felem> g(R.coords(), 0);
  for (std::uint32_t i = 0; i < R.coords(); ++i)
    if (!supp[i]) g[i] = R.field().one();
  RingElem e = R.from_gray(std::move(g));
  return mode == DualMode::hermitian ? R.conjugate(e) : e;
}

RingElem formula_dual_generator(const Ring& R,
                                const std::vector<RingElem>& gens,
                                DualMode mode) {
  RingElem g = collapse_generators(R, gens);
  // Indices of monomials with nonzero coefficient, i.e. those with
  // gamma(alpha_S) = -1; any T touching a zero coefficient contributes 0.
  std::vector<std::uint32_t> supp;
  for (std::uint32_t s = 0; s < R.coords(); ++s)
    if (R.gamma(g.coeffs[s]) != 0) supp.push_back(s);
  if (supp.size() > 24)
    fail(errc::cap_exceeded, "monomial support too large for the closed form");

  const felem neg_one = R.field().neg(R.field().one());
  std::vector<felem> coeffs(R.coords(), 0);
  coeffs[0] = R.field().one();
  for (std::uint64_t T = 1; T < (1ull << supp.size()); ++T) {
    std::uint32_t uni = 0;
    int sz = 0;
    for (std::size_t i = 0; i < supp.size(); ++i)
      if (T & (1ull << i)) {
        uni |= supp[i];
        ++sz;
      }
    const felem term = (sz % 2 == 1) ? neg_one : R.field().one();
    coeffs[uni] = R.field().add(coeffs[uni], term);
  }
  RingElem u = R.from_coeffs(std::move(coeffs));
  return mode == DualMode::hermitian ? R.conjugate(u) : u;
}

std::vector<std::vector<RingElem>> maximal_ideal_generators(const Ring& R) {
  std::vector<std::vector<RingElem>> out;
  out.reserve(R.coords());
  for (std::uint32_t i = 0; i < R.coords(); ++i) {
    std::vector<RingElem> gens;
    if (R.k() == 0) {
      gens.push_back(R.zero());
    } else {
      for (std::uint32_t j = 1; j <= R.k(); ++j) {
        RingElem vj = R.gen(j);
        if (i & (1u << (j - 1)))
          gens.push_back(R.sub(R.one(), vj));  // 1 - v_j vanishes at v_j = 1
        else
          gens.push_back(vj);
      }
    }
    out.push_back(std::move(gens));
  }
  return out;
}

std::uint64_t coordinate_ideal_log_p(const Ring& R,
                                     const std::vector<RingElem>& word) {
  std::vector<std::uint8_t> supp(R.coords(), 0);
  for (const auto& c : word)
    for (std::uint32_t i = 0; i < R.coords(); ++i)
      if (c.gray[i] != 0) supp[i] = 1;
  std::uint64_t cnt = 0;
  for (auto s : supp) cnt += s;
  return cnt * R.field().r();
}

}  // namespace bk

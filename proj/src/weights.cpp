#include "weights.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bk {

CycInt CycInt::integer(std::uint32_t p, std::int64_t v) {
  CycInt z(p);
  z.c_[0] = v;
  return z;
}

CycInt CycInt::xi_pow(std::uint32_t p, std::uint64_t e) {
  CycInt z(p);
  e %= p;
  if (e == p - 1) {
    for (auto& v : z.c_) v = -1;  // xi^{p-1} = -(1 + xi + ... + xi^{p-2})
  } else {
    z.c_[e] = 1;
  }
  return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt z(*this);
  z += o;
  return z;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (p_ != o.p_) fail(errc::shape_mismatch, "cyclotomic basis mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  if (p_ != o.p_) fail(errc::shape_mismatch, "cyclotomic basis mismatch");
  CycInt z(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] -= o.c_[i];
  return z;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (p_ != o.p_) fail(errc::shape_mismatch, "cyclotomic basis mismatch");
  // convolve on exponents, wrap mod p, then eliminate xi^{p-1}
  std::vector<std::int64_t> acc(p_, 0);
  for (std::uint32_t i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p_ - 1; ++j)
      acc[(i + j) % p_] += c_[i] * o.c_[j];
  }
  CycInt z(p_);
  for (std::uint32_t e = 0; e < p_ - 1; ++e) z.c_[e] = acc[e] - acc[p_ - 1];
  return z;
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t CycInt::rational() const { return c_[0]; }

bool CycInt::divide_exact(std::int64_t d) {
  for (auto& v : c_) {
    if (v % d != 0) return false;
    v /= d;
  }
  return true;
}

std::int64_t WeightEnumerator::total() const {
  CycInt s(p);
  for (const auto& [e, c] : terms) s += c;
  if (!s.is_rational())
    fail(errc::non_integral_result, "enumerator total is irrational");
  return s.rational();
}

std::uint32_t gray_weight(const Ring& R, const RingElem& x) {
  std::uint32_t w = 0;
  for (felem g : x.gray) w += R.field().base_weight(g);
  return w;
}

std::uint32_t lee_weight(const Ring& R, const std::vector<RingElem>& word) {
  std::uint32_t w = 0;
  for (const auto& x : word) w += gray_weight(R, x);
  return w;
}

UnitClasses unit_classes(const Ring& R, std::uint64_t cap) {
  auto ord = R.order();
  if (!ord || *ord > cap)
    fail(errc::too_large_to_enumerate, "ring too large for orbit enumeration");
  const std::uint64_t N = *ord;

  std::vector<std::uint64_t> units;
  for (std::uint64_t t = 0; t < N; ++t)
    if (R.is_unit(R.from_wire_rank(t))) units.push_back(t);

  UnitClasses cls;
  cls.class_of.assign(N, 0);
  std::vector<bool> seen(N, false);
  for (std::uint64_t t = 0; t < N; ++t) {
    if (seen[t]) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(cls.reps.size());
    cls.reps.push_back(t);
    RingElem x = R.from_wire_rank(t);
    std::uint64_t size = 0;
    for (std::uint64_t u : units) {
      std::uint64_t y = R.wire_rank(R.mul(R.from_wire_rank(u), x));
      if (!seen[y]) {
        seen[y] = true;
        cls.class_of[y] = id;
        ++size;
      }
    }
    cls.orbit_sizes.push_back(size);
  }
  return cls;
}

namespace {

void add_term(std::map<ExpVec, CycInt>& terms, const ExpVec& e,
              const CycInt& c) {
  auto it = terms.find(e);
  if (it == terms.end())
    terms.emplace(e, c);
  else
    it->second += c;
}

}  // namespace

WeightEnumerator complete_we(const Code& C, std::uint64_t cap) {
  const Ring& R = C.ring();
  auto ord = R.order();
  if (!ord)
    fail(errc::too_large_to_enumerate, "ring too large for enumerator");
  const std::size_t N = static_cast<std::size_t>(*ord);
  WeightEnumerator W{EnumKind::complete, R.field().p(), {}};
  const CycInt one = CycInt::integer(W.p, 1);
  for (const auto& w : C.codewords(cap)) {
    ExpVec e(N, 0);
    for (const auto& x : w) ++e[R.wire_rank(x)];
    add_term(W.terms, e, one);
  }
  return W;
}

WeightEnumerator symmetrize(const WeightEnumerator& cwe,
                            const UnitClasses& cls) {
  if (cwe.kind != EnumKind::complete)
    fail(errc::kind_mismatch, "can only fold a complete enumerator");
  WeightEnumerator W{EnumKind::symmetrized, cwe.p, {}};
  for (const auto& [e, c] : cwe.terms) {
    ExpVec f(cls.reps.size(), 0);
    for (std::size_t b = 0; b < e.size(); ++b) f[cls.class_of[b]] += e[b];
    add_term(W.terms, f, c);
  }
  return W;
}

WeightEnumerator symmetrized_we(const Code& C, std::uint64_t cap) {
  return symmetrize(complete_we(C, cap), unit_classes(C.ring()));
}

WeightEnumerator hamming_we(const Code& C, std::uint64_t cap) {
  WeightEnumerator W{EnumKind::hamming, C.ring().field().p(), {}};
  const CycInt one = CycInt::integer(W.p, 1);
  for (const auto& w : C.codewords(cap))
    add_term(W.terms, {C.word_hamming_weight(w)}, one);
  return W;
}

WeightEnumerator lee_we(const Code& C, std::uint64_t cap) {
  WeightEnumerator W{EnumKind::lee, C.ring().field().p(), {}};
  const CycInt one = CycInt::integer(W.p, 1);
  for (const auto& w : C.codewords(cap))
    add_term(W.terms, {lee_weight(C.ring(), w)}, one);
  return W;
}

namespace {

CycInt chi(const Ring& R, const RingElem& a, const RingElem& b, bool conj_b) {
  RingElem prod = R.mul(a, conj_b ? R.conjugate(b) : b);
  return CycInt::xi_pow(R.field().p(), gray_weight(R, prod));
}

}  // namespace

CharMatrix char_matrix(const Ring& R, CharMatrix::Kind kind,
                       std::uint64_t row_cap) {
  auto ord = R.order();
  if (!ord || *ord > row_cap)
    fail(errc::matrix_too_large, "character matrix exceeds the row cap");
  const std::uint64_t N = *ord;
  CharMatrix M{kind, R.field().p(), {}, {}};

  if (kind != CharMatrix::Kind::S) {
    const bool herm = kind == CharMatrix::Kind::T_H;
    for (std::uint64_t a = 0; a < N; ++a) {
      M.index.push_back(a);
      RingElem ea = R.from_wire_rank(a);
      std::vector<CycInt> row;
      row.reserve(N);
      for (std::uint64_t b = 0; b < N; ++b)
        row.push_back(chi(R, ea, R.from_wire_rank(b), herm));
      M.entries.push_back(std::move(row));
    }
    return M;
  }

  const UnitClasses cls = unit_classes(R, row_cap);
  std::vector<std::vector<std::uint64_t>> orbits(cls.reps.size());
  for (std::uint64_t b = 0; b < N; ++b) orbits[cls.class_of[b]].push_back(b);

  auto s_row = [&](std::uint64_t a) {
    RingElem ea = R.from_wire_rank(a);
    std::vector<CycInt> row;
    row.reserve(cls.reps.size());
    for (const auto& orb : orbits) {
      CycInt s(M.p);
      for (std::uint64_t g : orb) s += chi(R, ea, R.from_wire_rank(g), false);
      row.push_back(std::move(s));
    }
    return row;
  };

  M.index = cls.reps;
  for (std::uint64_t rep : cls.reps) M.entries.push_back(s_row(rep));
  // rows must not depend on the choice of representative
  for (std::uint64_t a = 0; a < N; ++a) {
    if (s_row(a) != M.entries[cls.class_of[a]])
      fail(errc::property_failed, "S-matrix row varies within a unit class");
  }
  return M;
}

namespace {

using Poly = std::map<ExpVec, CycInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

}  // namespace

WeightEnumerator macwilliams(const WeightEnumerator& W, const CharMatrix& M,
                             std::uint64_t size) {
  const bool ok_kind =
      (W.kind == EnumKind::complete && M.kind != CharMatrix::Kind::S) ||
      (W.kind == EnumKind::symmetrized && M.kind == CharMatrix::Kind::S);
  if (!ok_kind)
    fail(errc::kind_mismatch, "enumerator kind does not match matrix kind");
  if (W.p != M.p) fail(errc::kind_mismatch, "cyclotomic basis mismatch");
  const std::size_t N = M.entries.size();

  WeightEnumerator out{W.kind, W.p, {}};
  for (const auto& [e, c] : W.terms) {
    if (e.size() != N)
      fail(errc::shape_mismatch, "exponent vector does not fit the matrix");
    Poly acc;
    acc.emplace(ExpVec(N, 0), c);
    for (std::size_t a = 0; a < N; ++a) {
      if (e[a] == 0) continue;
      Poly lin;
      for (std::size_t b = 0; b < N; ++b) {
        if (M.entries[a][b].is_zero()) continue;
        ExpVec unit(N, 0);
        unit[b] = 1;
        lin.emplace(std::move(unit), M.entries[a][b]);
      }
      for (std::uint32_t t = 0; t < e[a]; ++t) acc = poly_mul(acc, lin);
    }
    for (const auto& [ee, cc] : acc) add_term(out.terms, ee, cc);
  }

  for (auto it = out.terms.begin(); it != out.terms.end();) {
    CycInt& c = it->second;
    if (!c.divide_exact(static_cast<std::int64_t>(size)))
      fail(errc::non_integral_result, "transform coefficient not divisible");
    if (!c.is_rational() || c.rational() < 0)
      fail(errc::non_integral_result, "transform coefficient not a count");
    if (c.is_zero())
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

std::map<std::uint32_t, std::int64_t> field_hamming_distribution(
    const Field& F, const Matrix& gens, std::uint32_t n, std::uint64_t cap) {
  Matrix rr = rref(F, gens);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < rr.size(); ++i) {
    if (count > cap / F.q())
      fail(errc::too_large_to_enumerate, "field code too large");
    count *= F.q();
  }
  if (count > cap) fail(errc::too_large_to_enumerate, "field code too large");

  std::map<std::uint32_t, std::int64_t> dist;
  std::vector<std::uint32_t> odo(rr.size(), 0);
  while (true) {
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
    ++dist[wt];
    int idx = static_cast<int>(odo.size()) - 1;
    while (idx >= 0 && odo[idx] + 1 == F.q()) odo[idx--] = 0;
    if (idx < 0) break;
    ++odo[idx];
  }
  return dist;
}

std::map<std::uint32_t, std::int64_t> field_hamming_macwilliams(
    const Field& F, const std::map<std::uint32_t, std::int64_t>& dist,
    std::uint32_t n, std::uint64_t size) {
  // binomial table up to n
  std::vector<std::vector<std::int64_t>> ch(n + 1,
                                            std::vector<std::int64_t>(n + 1));
  for (std::uint32_t i = 0; i <= n; ++i) {
    ch[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j)
      ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
  }
  auto choose = [&](std::uint32_t a, std::uint32_t b) -> std::int64_t {
    return b <= a ? ch[a][b] : 0;
  };
  const std::int64_t qm1 = static_cast<std::int64_t>(F.q()) - 1;

  std::map<std::uint32_t, std::int64_t> out;
  for (std::uint32_t j = 0; j <= n; ++j) {
    std::int64_t sum = 0;
    for (const auto& [i, a] : dist) {
      // Krawtchouk K_j(i) over F_q
      std::int64_t kr = 0;
      for (std::uint32_t l = 0; l <= j; ++l) {
        std::int64_t term = choose(i, l) * choose(n - i, j - l);
        std::int64_t pw = 1;
        for (std::uint32_t t = 0; t < j - l; ++t) pw *= qm1;
        term *= pw;
        kr += (l % 2 == 0) ? term : -term;
      }
      sum += a * kr;
    }
    if (sum % static_cast<std::int64_t>(size) != 0)
      fail(errc::non_integral_result, "transform coefficient not divisible");
    const std::int64_t v = sum / static_cast<std::int64_t>(size);
    if (v < 0)
      fail(errc::non_integral_result, "transform coefficient not a count");
    if (v != 0) out[j] = v;
  }
  return out;
}

}  // namespace bk

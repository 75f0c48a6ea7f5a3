#include "cyclic.hpp"

#include "errors.hpp"

namespace bk {

namespace {

void fp_trim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_degree(const FPoly& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

FPoly fp_monic(const Field& F, FPoly a) {
  fp_trim(a);
  if (a.empty()) return a;
  const felem inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

FPoly fp_mod(const Field& F, FPoly a, const FPoly& b) {
  const int db = fp_degree(b);
  const felem lead_inv = F.inv(b[db]);
  for (int da = fp_degree(a); da >= db; da = fp_degree(a)) {
    const felem c = F.mul(a[da], lead_inv);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = F.sub(a[da - db + j], F.mul(c, b[j]));
  }
  fp_trim(a);
  return a;
}

FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FPoly r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, std::move(a));
}

FPoly x_pow_minus_one(const Field& F, std::uint32_t n) {
  FPoly f(n + 1, 0);
  f[0] = F.neg(F.one());
  f[n] = F.one();
  return f;
}

}  // namespace

std::vector<RingElem> shift(const std::vector<RingElem>& x, std::uint32_t l) {
  const std::uint32_t n = static_cast<std::uint32_t>(x.size());
  if (l < 1 || l > n) fail(errc::bad_shift, "shift amount out of range");
  std::vector<RingElem> out(x.size(), x[0]);
  for (std::uint32_t j = 0; j < n; ++j) out[(j + l) % n] = x[j];
  return out;
}

Row shift_row(const Row& x, std::uint32_t l) {
  const std::uint32_t n = static_cast<std::uint32_t>(x.size());
  if (l < 1 || l > n) fail(errc::bad_shift, "shift amount out of range");
  Row out(n);
  for (std::uint32_t j = 0; j < n; ++j) out[(j + l) % n] = x[j];
  return out;
}

bool is_quasi_cyclic(const Code& C, std::uint32_t l) {
  if (l < 1 || l > C.length())
    fail(errc::bad_shift, "shift amount out of range");
  for (const auto& g : C.generators())
    if (!C.contains(shift(g, l))) return false;
  return true;
}

ComponentCyclicReport component_cyclic_check(const Code& C, std::uint32_t l) {
  ComponentCyclicReport rep;
  const Field& F = C.ring().field();
  bool all_qc = true;
  for (const auto& comp : C.components()) {
    bool qc = true;
    for (const auto& row : comp)
      if (!in_rowspace(F, comp, shift_row(row, l))) qc = false;
    rep.components_qc.push_back(qc);
    all_qc = all_qc && qc;
  }
  rep.code_qc = is_quasi_cyclic(C, l);
  rep.equivalence_holds = rep.code_qc == all_qc;
  return rep;
}

std::vector<PolyCode> cyclic_component_generators(const Code& C) {
  if (!is_quasi_cyclic(C, 1)) fail(errc::not_cyclic, "code is not cyclic");
  const Field& F = C.ring().field();
  const std::uint32_t n = C.length();
  const FPoly xn1 = x_pow_minus_one(F, n);

  std::vector<PolyCode> out;
  for (std::uint32_t i = 0; i < C.ring().coords(); ++i) {
    const Matrix& comp = C.components()[i];
    FPoly g = xn1;
    for (const auto& row : comp) g = fp_gcd(F, g, row);

    // re-span x^j * g mod x^n - 1 and compare row spaces
    Matrix span;
    const int dg = fp_degree(g);
    for (std::uint32_t j = 0; j + dg < n; ++j) {
      FPoly sh(j, 0);
      sh.insert(sh.end(), g.begin(), g.end());
      sh = fp_mod(F, std::move(sh), xn1);
      sh.resize(n, 0);
      span.push_back(std::move(sh));
    }
    if (rref(F, std::move(span)) != comp)
      fail(errc::not_cyclic, "component is not an ideal modulo x^n - 1");
    out.push_back({i, {std::move(g)}});
  }
  return out;
}

std::vector<PolyCode> component_polycodes(const Code& C) {
  std::vector<PolyCode> out;
  for (std::uint32_t i = 0; i < C.ring().coords(); ++i) {
    PolyCode pc{i, {}};
    for (const auto& row : C.components()[i]) {
      FPoly g = row;
      fp_trim(g);
      pc.generators.push_back(std::move(g));
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<std::vector<RingElem>> lift_generators(
    const Ring& R, std::uint32_t n, const std::vector<PolyCode>& polycodes) {
  if (polycodes.size() != R.coords())
    fail(errc::shape_mismatch, "need one polynomial code per component");
  const Field& F = R.field();
  const FPoly xn1 = x_pow_minus_one(F, n);

  std::vector<std::vector<RingElem>> gens;
  for (std::uint32_t i = 0; i < R.coords(); ++i) {
    if (polycodes[i].component != i)
      fail(errc::shape_mismatch, "polynomial codes out of component order");
    for (const auto& g : polycodes[i].generators) {
      FPoly red = fp_mod(F, g, xn1);
      red.resize(n, 0);
      // the generator alone only spans its scalar multiples inside one gray
      // coordinate; the component code needs the whole shift family of g
      for (std::uint32_t s = 0; s < n; ++s) {
        FPoly sh = s == 0 ? red : shift_row(red, s);
        bool zero = true;
        for (felem c : sh) zero = zero && c == 0;
        if (zero && s > 0) continue;
        std::vector<RingElem> vec;
        vec.reserve(n);
        for (std::uint32_t j = 0; j < n; ++j) {
          std::vector<felem> gray(R.coords(), 0);
          gray[i] = sh[j];
          vec.push_back(R.from_gray(std::move(gray)));
        }
        gens.push_back(std::move(vec));
      }
    }
  }
  return gens;
}

}  // namespace bk

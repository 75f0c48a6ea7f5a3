#include "zppoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bk::zppoly {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return trim(r);
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t av = i < a.size() ? a[i] : 0;
    std::uint32_t bv = i < b.size() ? b[i] : 0;
    r[i] = (av + p - bv) % p;
  }
  return trim(r);
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return trim(r);
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(std::move(a));
  const int dm = degree(m);
  if (dm < 0) fail(errc::division_by_zero, "polynomial modulus is zero");
  while (degree(a) >= dm) {
    const int da = degree(a);
    // m is monic, so the quotient coefficient is just the leading coeff of a.
    const std::uint32_t c = a[da];
    for (int i = 0; i <= dm; ++i) {
      std::uint64_t sub_term = static_cast<std::uint64_t>(c) * m[i] % p;
      a[da - dm + i] =
          static_cast<std::uint32_t>((a[da - dm + i] + p - sub_term) % p);
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly x_pow_mod(std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  Poly base = mod(Poly{0, 1}, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    // Make b monic so mod() applies.
    std::uint32_t lead = b[degree(b)];
    if (lead != 1) {
      // lead^(p-2) is the inverse mod p.
      std::uint64_t inv = 1, base = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b)
        c = static_cast<std::uint32_t>(c * inv % p);
    }
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint32_t lead = a[degree(a)];
    if (lead != 1) {
      std::uint64_t inv = 1, base = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : a)
        c = static_cast<std::uint32_t>(c * inv % p);
    }
  }
  return a;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int r = degree(f);
  if (r < 1) return false;
  if (r == 1) return true;
  // f irreducible over Z_p iff x^(p^r) == x (mod f) and for every prime
  // divisor l of r, gcd(x^(p^(r/l)) - x, f) = 1.
  std::uint64_t pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  Poly xr = x_pow_mod(pr, f, p);
  if (trim(sub(xr, Poly{0, 1}, p)) != Poly{}) return false;
  int rem = r;
  for (int l = 2; l <= rem; ++l) {
    if (rem % l != 0) continue;
    while (rem % l == 0) rem /= l;
    std::uint64_t pd = 1;
    for (int i = 0; i < r / l; ++i) pd *= p;
    Poly xd = x_pow_mod(pd, f, p);
    Poly g = gcd(sub(xd, Poly{0, 1}, p), f, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  if (r == 1) return Poly{0, 1};
  // Odometer over the r lower coefficients, first coefficient slowest, so
  // candidates appear in lexicographic order of the coefficient sequence.
  std::vector<std::uint32_t> low(r, 0);
  while (true) {
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    int pos = static_cast<int>(r) - 1;
    while (pos >= 0 && low[pos] == p - 1) low[pos--] = 0;
    if (pos < 0) fail(errc::reducible_polynomial,
                      "no irreducible polynomial found");
    ++low[pos];
  }
}

}  // namespace bk::zppoly

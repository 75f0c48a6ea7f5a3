#include "ring.hpp"

#include "errors.hpp"

namespace bk {

Ring::Ring(Field f, std::uint32_t k) : field_(std::move(f)), k_(k) {
  if (k > 16) fail(errc::cap_exceeded, "k exceeds supported bound");
  m_ = 1u << k;
}

std::optional<std::uint64_t> Ring::order() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (n > UINT64_MAX / field_.q()) return std::nullopt;
    n *= field_.q();
  }
  return n;
}

void Ring::zeta(std::vector<felem>& v) const {
  for (std::uint32_t b = 0; b < k_; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t m = 0; m < m_; ++m)
      if (m & bit) v[m] = field_.add(v[m], v[m ^ bit]);
  }
}

void Ring::moebius(std::vector<felem>& v) const {
  for (std::uint32_t b = 0; b < k_; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t m = 0; m < m_; ++m)
      if (m & bit) v[m] = field_.sub(v[m], v[m ^ bit]);
  }
}

RingElem Ring::from_coeffs(std::vector<felem> coeffs) const {
  if (coeffs.size() != m_)
    fail(errc::shape_mismatch, "coefficient vector has wrong length");
  for (felem c : coeffs)
    if (c >= field_.q()) fail(errc::shape_mismatch, "coefficient out of range");
  RingElem e;
  e.gray = coeffs;
  zeta(e.gray);
  e.coeffs = std::move(coeffs);
  return e;
}

RingElem Ring::from_gray(std::vector<felem> gray) const {
  if (gray.size() != m_)
    fail(errc::shape_mismatch, "gray vector has wrong length");
  for (felem c : gray)
    if (c >= field_.q()) fail(errc::shape_mismatch, "coordinate out of range");
  RingElem e;
  e.coeffs = gray;
  moebius(e.coeffs);
  e.gray = std::move(gray);
  return e;
}

RingElem Ring::zero() const {
  RingElem e;
  e.coeffs.assign(m_, 0);
  e.gray.assign(m_, 0);
  return e;
}

RingElem Ring::one() const {
  RingElem e;
  e.coeffs.assign(m_, 0);
  e.coeffs[0] = field_.one();
  e.gray.assign(m_, field_.one());
  return e;
}

RingElem Ring::gen(std::uint32_t i) const {
  if (i < 1 || i > k_) fail(errc::level_out_of_range, "no such generator");
  std::vector<felem> c(m_, 0);
  c[1u << (i - 1)] = field_.one();
  return from_coeffs(std::move(c));
}

RingElem Ring::idempotent(std::uint32_t m) const {
  if (m >= m_) fail(errc::shape_mismatch, "gray index out of range");
  std::vector<felem> g(m_, 0);
  g[m] = field_.one();
  return from_gray(std::move(g));
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  RingElem e;
  e.coeffs.resize(m_);
  e.gray.resize(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    e.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
    e.gray[i] = field_.add(a.gray[i], b.gray[i]);
  }
  return e;
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  RingElem e;
  e.coeffs.resize(m_);
  e.gray.resize(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    e.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
    e.gray[i] = field_.sub(a.gray[i], b.gray[i]);
  }
  return e;
}

RingElem Ring::neg(const RingElem& a) const {
  RingElem e;
  e.coeffs.resize(m_);
  e.gray.resize(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    e.coeffs[i] = field_.neg(a.coeffs[i]);
    e.gray[i] = field_.neg(a.gray[i]);
  }
  return e;
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  // multiplication is coordinatewise on the gray side (the Gray map is a
  // ring isomorphism onto the product of 2^k copies of the field)
  std::vector<felem> g(m_);
  for (std::uint32_t i = 0; i < m_; ++i)
    g[i] = field_.mul(a.gray[i], b.gray[i]);
  return from_gray(std::move(g));
}

RingElem Ring::scalar_mul(felem c, const RingElem& a) const {
  RingElem e;
  e.coeffs.resize(m_);
  e.gray.resize(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    e.coeffs[i] = field_.mul(c, a.coeffs[i]);
    e.gray[i] = field_.mul(c, a.gray[i]);
  }
  return e;
}

bool Ring::is_unit(const RingElem& a) const {
  for (felem g : a.gray)
    if (g == 0) return false;
  return true;
}

RingElem Ring::conjugate(const RingElem& a) const {
  std::vector<felem> g(m_);
  for (std::uint32_t i = 0; i < m_; ++i) g[i] = a.gray[(m_ - 1) ^ i];
  return from_gray(std::move(g));
}

namespace {
std::vector<felem> tower_step(const Field& f, std::vector<felem> c) {
  if (c.size() == 1) return c;
  const std::size_t half = c.size() / 2;
  std::vector<felem> alpha(c.begin(), c.begin() + half);
  std::vector<felem> absum(half);
  for (std::size_t i = 0; i < half; ++i)
    absum[i] = f.add(c[i], c[half + i]);
  std::vector<felem> lo = tower_step(f, std::move(alpha));
  std::vector<felem> hi = tower_step(f, std::move(absum));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}
}  // namespace

std::vector<felem> Ring::tower_gray(const RingElem& a) const {
  return tower_step(field_, a.coeffs);
}

std::vector<std::vector<felem>> Ring::project_to_level(const RingElem& a,
                                                       std::uint32_t j) const {
  if (j >= k_) fail(errc::level_out_of_range, "target level must be below k");
  std::vector<std::vector<felem>> comps{a.coeffs};
  for (std::uint32_t level = k_; level > j; --level) {
    std::vector<std::vector<felem>> next;
    next.reserve(comps.size() * 2);
    for (auto& c : comps) {
      const std::size_t half = c.size() / 2;
      std::vector<felem> alpha(c.begin(), c.begin() + half);
      std::vector<felem> absum(half);
      for (std::size_t i = 0; i < half; ++i)
        absum[i] = field_.add(c[i], c[half + i]);
      next.push_back(std::move(alpha));
      next.push_back(std::move(absum));
    }
    comps = std::move(next);
  }
  return comps;
}

RingElem Ring::from_wire_rank(std::uint64_t t) const {
  std::vector<felem> coeffs(m_);
  for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
    coeffs[i] = field_.from_wire_rank(
        static_cast<std::uint32_t>(t % field_.q()));
    t /= field_.q();
  }
  return from_coeffs(std::move(coeffs));
}

std::uint64_t Ring::wire_rank(const RingElem& a) const {
  std::uint64_t t = 0;
  for (std::uint32_t i = 0; i < m_; ++i)
    t = t * field_.q() + field_.wire_rank(a.coeffs[i]);
  return t;
}

std::vector<std::uint32_t> Ring::tower_permutation(std::uint64_t cap) const {
  auto ord = order();
  if (!ord || *ord > cap)
    fail(errc::too_large_to_enumerate, "ring too large to exhaust");
  // candidate target coordinates per position, narrowed element by element
  std::vector<std::vector<bool>> cand(m_, std::vector<bool>(m_, true));
  for (std::uint64_t t = 0; t < *ord; ++t) {
    RingElem a = from_wire_rank(t);
    const std::vector<felem> tw = tower_gray(a);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j)
        if (tw[i] != a.gray[j]) cand[i][j] = false;
  }
  std::vector<std::uint32_t> perm(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t hits = 0, pick = 0;
    for (std::uint32_t j = 0; j < m_; ++j)
      if (cand[i][j]) {
        ++hits;
        pick = j;
      }
    if (hits != 1)
      fail(errc::property_failed, "tower map is not a gray permutation");
    perm[i] = pick;
  }
  return perm;
}

}  // namespace bk

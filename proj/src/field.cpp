#include "field.hpp"

#include "errors.hpp"
#include "zppoly.hpp"

namespace bk {

namespace {
constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableLimit = 1024;
}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t r,
                  std::vector<std::uint32_t> irr) {
  if (!zppoly::is_prime(p)) fail(errc::not_prime, "p is not prime");
  if (r < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(errc::cap_exceeded, "field order exceeds 2^16");
  }

  if (irr.empty()) {
    irr = zppoly::smallest_irreducible(p, r);
  } else {
    if (irr.size() != r + 1 || irr.back() != 1)
      fail(errc::degree_mismatch, "modulus must be monic of degree r");
    for (auto c : irr)
      if (c >= p) fail(errc::degree_mismatch, "modulus coefficient out of range");
    if (r == 1) {
      if (irr != std::vector<std::uint32_t>{0, 1})
        fail(errc::degree_mismatch, "r = 1 requires the modulus x");
    } else if (!zppoly::is_irreducible(irr, p)) {
      fail(errc::reducible_polynomial, "modulus is reducible");
    }
  }

  Field f;
  f.p_ = p;
  f.r_ = r;
  f.q_ = static_cast<std::uint32_t>(q);
  f.irr_ = std::move(irr);
  f.tabled_ = f.q_ <= kTableLimit;
  if (f.tabled_) {
    f.add_table_.resize(static_cast<std::size_t>(f.q_) * f.q_);
    f.mul_table_.resize(static_cast<std::size_t>(f.q_) * f.q_);
    for (felem a = 0; a < f.q_; ++a) {
      for (felem b = 0; b < f.q_; ++b) {
        // digitwise add
        felem s = 0, pw = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < f.r_; ++i) {
          s += (x % p + y % p) % p * pw;
          x /= p;
          y /= p;
          pw *= p;
        }
        f.add_table_[static_cast<std::size_t>(a) * f.q_ + b] = s;
        f.mul_table_[static_cast<std::size_t>(a) * f.q_ + b] =
            f.mul_direct(a, b);
      }
    }
    f.inv_table_.assign(f.q_, 0);
    for (felem a = 1; a < f.q_; ++a) {
      for (felem b = 1; b < f.q_; ++b) {
        if (f.mul_table_[static_cast<std::size_t>(a) * f.q_ + b] == 1) {
          f.inv_table_[a] = b;
          break;
        }
      }
    }
  }
  return f;
}

felem Field::add(felem a, felem b) const {
  if (tabled_) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  felem s = 0, pw = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    s += (a % p_ + b % p_) % p_ * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return s;
}

felem Field::neg(felem a) const {
  felem s = 0, pw = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    s += (p_ - a % p_) % p_ * pw;
    a /= p_;
    pw *= p_;
  }
  return s;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_direct(felem a, felem b) const {
  // convolution of digit vectors, then reduction by the monic modulus
  std::uint32_t da[17] = {0}, db[17] = {0};
  std::uint64_t conv[33] = {0};
  for (std::uint32_t i = 0; i < r_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < r_; ++i)
    for (std::uint32_t j = 0; j < r_; ++j)
      conv[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  for (int i = 2 * static_cast<int>(r_) - 2; i >= static_cast<int>(r_); --i) {
    std::uint64_t c = conv[i] % p_;
    if (c == 0) continue;
    // subtract c * x^(i-r) * irr
    for (std::uint32_t j = 0; j < r_; ++j)
      conv[i - r_ + j] += (p_ - irr_[j] % p_) * c;
  }
  felem out = 0, pw = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += static_cast<felem>(conv[i] % p_) * pw;
    pw *= p_;
  }
  return out;
}

felem Field::mul(felem a, felem b) const {
  if (tabled_) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_direct(a, b);
}

felem Field::pow(felem a, std::uint64_t e) const {
  felem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

felem Field::inv(felem a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero");
  if (tabled_) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::uint32_t Field::base_weight(felem a) const {
  std::uint32_t w = 0;
  while (a > 0) {
    w += a % p_;
    a /= p_;
  }
  return w;
}

std::vector<std::uint32_t> Field::digits(felem a) const {
  std::vector<std::uint32_t> d(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

felem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != r_) fail(errc::shape_mismatch, "wrong digit count");
  felem a = 0, pw = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (d[i] >= p_) fail(errc::shape_mismatch, "digit out of range");
    a += d[i] * pw;
    pw *= p_;
  }
  return a;
}

felem Field::from_wire_rank(std::uint32_t t) const {
  // big-endian base-p expansion: digit 0 is the slowest position
  std::vector<std::uint32_t> d(r_);
  for (int i = static_cast<int>(r_) - 1; i >= 0; --i) {
    d[i] = t % p_;
    t /= p_;
  }
  return from_digits(d);
}

std::uint32_t Field::wire_rank(felem a) const {
  auto d = digits(a);
  std::uint32_t t = 0;
  for (std::uint32_t i = 0; i < r_; ++i) t = t * p_ + d[i];
  return t;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_prime: return "not_prime";
    case errc::reducible_polynomial: return "reducible_polynomial";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::length_mismatch: return "length_mismatch";
    case errc::too_large_to_enumerate: return "too_large_to_enumerate";
    case errc::matrix_too_large: return "matrix_too_large";
    case errc::kind_mismatch: return "kind_mismatch";
    case errc::non_integral_result: return "non_integral_result";
    case errc::empty_generator_list: return "empty_generator_list";
    case errc::not_cyclic: return "not_cyclic";
    case errc::bad_shift: return "bad_shift";
    case errc::level_out_of_range: return "level_out_of_range";
    case errc::parse_error: return "parse_error";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::property_failed: return "property_failed";
  }
  return "unknown";
}

}  // namespace bk

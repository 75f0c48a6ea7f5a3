#pragma once

#include <cstdint>
#include <vector>

namespace bk {

// Index of a field element. An element a of F_{p^r} is a polynomial
// d_0 + d_1 x + ... + d_{r-1} x^{r-1} over Z_p in the fixed polynomial basis;
// its index is d_0 + d_1 p + ... + d_{r-1} p^{r-1}.
using felem = std::uint32_t;

// Exact arithmetic in F_{p^r} = Z_p[x]/(irr). The modulus is either supplied
// or chosen as the lexicographically smallest monic irreducible of degree r
// (coefficient sequence compared constant term first). For r = 1 the modulus
// is fixed to x, i.e. the prime field itself.
//
// Field orders up to 2^16 are supported; small fields keep full operation
// tables, larger ones multiply digit vectors directly.
class Field {
public:
  static Field make(std::uint32_t p, std::uint32_t r,
                    std::vector<std::uint32_t> irr = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& irr() const { return irr_; }

  felem zero() const { return 0; }
  felem one() const { return 1; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;  // errors on 0
  felem pow(felem a, std::uint64_t e) const;

  // Sum of the integer lifts of the basis coefficients; 0 <= wt <= r(p-1),
  // and wt = 0 exactly for the zero element. Basis-relative by construction.
  std::uint32_t base_weight(felem a) const;

  std::vector<std::uint32_t> digits(felem a) const;
  felem from_digits(const std::vector<std::uint32_t>& d) const;

  // Frozen scan order: lexicographic on the digit sequence (constant term
  // first, i.e. digit 0 is the most significant position of the key).
  felem from_wire_rank(std::uint32_t t) const;
  std::uint32_t wire_rank(felem a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && r_ == o.r_ && irr_ == o.irr_;
  }

private:
  Field() = default;
  felem mul_direct(felem a, felem b) const;

  std::uint32_t p_ = 2, r_ = 1, q_ = 2;
  std::vector<std::uint32_t> irr_;
  bool tabled_ = false;
  std::vector<felem> mul_table_;  // q*q when tabled
  std::vector<felem> add_table_;
  std::vector<felem> inv_table_;
};

}  // namespace bk

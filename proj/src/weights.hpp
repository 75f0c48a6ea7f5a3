#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "code.hpp"
#include "ring.hpp"

namespace bk {

// Element of Z[xi], xi = exp(2*pi*i/p), stored on the basis xi^0..xi^{p-2}
// with the relation 1 + xi + ... + xi^{p-1} = 0. For p = 2 this is plain
// integer arithmetic with xi = -1. Representation on this basis is unique,
// so equality is coordinatewise.
class CycInt {
public:
  explicit CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0) {}
  static CycInt integer(std::uint32_t p, std::int64_t v);
  static CycInt xi_pow(std::uint32_t p, std::uint64_t e);

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_rational() const;        // all coordinates beyond xi^0 vanish
  std::int64_t rational() const;   // only meaningful when is_rational()
  bool divide_exact(std::int64_t d);  // false unless d divides every coord

  std::uint32_t p() const { return p_; }
  const std::vector<std::int64_t>& coords() const { return c_; }

private:
  std::uint32_t p_;
  std::vector<std::int64_t> c_;
};

enum class EnumKind { complete, symmetrized, hamming, lee };

// Exponent vectors index the complete enumerator by wire rank of the ring
// element, the symmetrized one by unit-class position, and the scalar-weight
// kinds by the single weight value.
using ExpVec = std::vector<std::uint32_t>;

struct WeightEnumerator {
  EnumKind kind;
  std::uint32_t p;
  std::map<ExpVec, CycInt> terms;

  // Evaluation at all variables = 1; |C| for a code's enumerator.
  std::int64_t total() const;
};

struct UnitClasses {
  std::vector<std::uint64_t> reps;      // wire ranks, ascending
  std::vector<std::uint32_t> class_of;  // indexed by wire rank
  std::vector<std::uint64_t> orbit_sizes;
};

std::uint32_t gray_weight(const Ring& R, const RingElem& x);
std::uint32_t lee_weight(const Ring& R, const std::vector<RingElem>& word);

// Orbits of B_k under multiplication by units; representative = least orbit
// member in the wire order.
UnitClasses unit_classes(const Ring& R, std::uint64_t cap = 1u << 20);

WeightEnumerator complete_we(const Code& C,
                             std::uint64_t cap = kDefaultEnumCap);
WeightEnumerator symmetrize(const WeightEnumerator& cwe,
                            const UnitClasses& cls);
WeightEnumerator symmetrized_we(const Code& C,
                                std::uint64_t cap = kDefaultEnumCap);
WeightEnumerator hamming_we(const Code& C, std::uint64_t cap = kDefaultEnumCap);
WeightEnumerator lee_we(const Code& C, std::uint64_t cap = kDefaultEnumCap);

constexpr std::uint64_t kDefaultMatrixCap = 1u << 12;

// Character matrices over Z[xi]: T and T_H are |B_k| square indexed by wire
// rank, S is square on unit-class representatives with entries summed over
// the column class. Building S checks that rows agree across each class.
struct CharMatrix {
  enum class Kind { T, T_H, S };
  Kind kind;
  std::uint32_t p;
  std::vector<std::uint64_t> index;  // wire ranks labelling rows/columns
  std::vector<std::vector<CycInt>> entries;
};

CharMatrix char_matrix(const Ring& R, CharMatrix::Kind kind,
                       std::uint64_t row_cap = kDefaultMatrixCap);

// Substitutes X_a <- sum_b M[a][b] X_b into W, expands exactly, divides by
// size, and insists every resulting coefficient is a non-negative rational
// integer. Kinds must pair complete/T, complete/T_H, symmetrized/S.
WeightEnumerator macwilliams(const WeightEnumerator& W, const CharMatrix& M,
                             std::uint64_t size);

// Hamming weight distribution of a field code (generator rows over F_q) and
// its exact MacWilliams transform via Krawtchouk sums.
std::map<std::uint32_t, std::int64_t> field_hamming_distribution(
    const Field& F, const Matrix& gens, std::uint32_t n,
    std::uint64_t cap = kDefaultEnumCap);
std::map<std::uint32_t, std::int64_t> field_hamming_macwilliams(
    const Field& F, const std::map<std::uint32_t, std::int64_t>& dist,
    std::uint32_t n, std::uint64_t size);

}  // namespace bk

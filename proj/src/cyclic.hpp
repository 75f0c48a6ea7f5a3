#pragma once

#include <cstdint>
#include <vector>

#include "code.hpp"

namespace bk {

// Polynomials over the field, coefficient array constant-term-first.
using FPoly = std::vector<felem>;

// One component's polynomial generators modulo x^n - 1.
struct PolyCode {
  std::uint32_t component = 0;
  std::vector<FPoly> generators;
};

// Right cyclic shift by l, 1 <= l <= n.
std::vector<RingElem> shift(const std::vector<RingElem>& x, std::uint32_t l);
Row shift_row(const Row& x, std::uint32_t l);

// Shift-closure tested on generators only; sufficient by linearity.
bool is_quasi_cyclic(const Code& C, std::uint32_t l);

struct ComponentCyclicReport {
  std::vector<bool> components_qc;
  bool code_qc = false;
  bool equivalence_holds = false;  // code QC iff every component QC
};
ComponentCyclicReport component_cyclic_check(const Code& C, std::uint32_t l);

// Single generator polynomial per component of a cyclic code: the monic gcd
// of the component's row polynomials with x^n - 1. Zero component gives
// x^n - 1, full component gives 1. The re-spanned row space must reproduce
// the component exactly.
std::vector<PolyCode> cyclic_component_generators(const Code& C);

// Multi-generator fallback for quasi-cyclic codes: component rows read off
// as polynomials, no divisibility claim.
std::vector<PolyCode> component_polycodes(const Code& C);

// Rebuilds a code over B_k from per-component polynomial generators: each
// generator of component i is embedded with field coefficients, multiplied
// by the i-th primitive idempotent, and read as a length-n vector. The span
// equals the CRT combination of the polynomial row spaces.
std::vector<std::vector<RingElem>> lift_generators(
    const Ring& R, std::uint32_t n, const std::vector<PolyCode>& polycodes);

}  // namespace bk

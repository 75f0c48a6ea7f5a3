#pragma once

#include <cstdint>
#include <vector>

namespace bk::zppoly {

// Dense polynomials over Z_p, coefficients stored constant term first.
// Used only for field construction (irreducibility) and for the generator
// polynomial arithmetic of cyclic codes over the base prime field is not
// handled here; codes use field.hpp arithmetic instead.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f);
int degree(const Poly& f);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
// Remainder of a modulo monic m.
Poly mod(Poly a, const Poly& m, std::uint32_t p);
// x^e modulo monic m.
Poly x_pow_mod(std::uint64_t e, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);

bool is_prime(std::uint32_t p);
// Monic f of degree >= 1 over Z_p.
bool is_irreducible(const Poly& f, std::uint32_t p);
// Lexicographically smallest monic irreducible of degree r, comparing the
// coefficient sequence constant term first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t r);

}  // namespace bk::zppoly

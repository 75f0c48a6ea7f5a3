#pragma once

#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace bk {

enum class DualMode { euclidean, hermitian };

// Ideals of B_k. Since B_k is a product of 2^k fields under the Gray map, an
// ideal is determined by its gray support (the set of coordinates where some
// generator is nonzero); all ideals are principal.

// Gray support of the ideal generated by gens: flags indexed by gray
// coordinate. Errors if gens is empty.
std::vector<std::uint8_t> ideal_support(const Ring& R,
                                        const std::vector<RingElem>& gens);

// Idempotent generator with gray vector equal to the support indicator.
RingElem support_idempotent(const Ring& R, const std::vector<RingElem>& gens);

// log_p of the ideal cardinality (= r * |support|).
std::uint64_t ideal_log_p_size(const Ring& R,
                               const std::vector<RingElem>& gens);

// Single generator by the inclusion-exclusion closed form
//   g = sum over nonempty A of (-1)^(|A|+1) (prod_{j in A} a_j)^(q-1).
// Generates the same ideal as gens (tested against enumeration).
RingElem collapse_generators(const Ring& R, const std::vector<RingElem>& gens);

// All elements of the ideal, by spanning the support coordinates. Errors when
// the count exceeds cap.
std::vector<RingElem> ideal_elements(const Ring& R,
                                     const std::vector<RingElem>& gens,
                                     std::uint64_t cap);

// Exact annihilator {u : u x = 0 for all x in the ideal}; for the hermitian
// mode the result is conjugated. This is the dual used by the library.
RingElem annihilator_generator(const Ring& R,
                               const std::vector<RingElem>& gens,
                               DualMode mode);

// The closed dual formula driven by the gamma function of the collapsed
// generator's monomial support:
//   1 + sum over nonempty T of (prod_{i in T} gamma(alpha_{S_i})) v_{union T},
// unions accumulated in subset order. Agrees with the annihilator whenever
// the monomial expansion evaluates without cancellation (e.g. all monomial
// ideals); kept separate so the two routes can be compared.
RingElem formula_dual_generator(const Ring& R,
                                const std::vector<RingElem>& gens,
                                DualMode mode);

// The 2^k maximal ideals; entry i is generated by {w_1..w_k} with
// w_j = v_j or 1 - v_j chosen so the ideal is the kernel of the projection
// to gray coordinate i. For k = 0 the single entry is {0}.
std::vector<std::vector<RingElem>> maximal_ideal_generators(const Ring& R);

// log_p cardinality of the ideal generated by the coordinates of a vector.
std::uint64_t coordinate_ideal_log_p(const Ring& R,
                                     const std::vector<RingElem>& word);

}  // namespace bk

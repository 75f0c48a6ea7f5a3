#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "code.hpp"
#include "cyclic.hpp"
#include "ring.hpp"
#include "weights.hpp"

namespace bk {

inline constexpr const char* kToolName = "bkcodes";
inline constexpr const char* kToolVersion = "1.0.0";

// Frozen-order identifiers stamped into every report so fixtures stay
// comparable across versions.
nlohmann::ordered_json frozen_orders();
nlohmann::ordered_json tool_stamp();

// Scalars of a code-spec document. Generators live in the parsed Code.
struct CodeSpecDoc {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::vector<std::uint32_t> irr;  // empty = smallest irreducible
  std::uint32_t k = 0;
  std::uint32_t n = 1;
  std::uint64_t cap = kDefaultEnumCap;
  std::uint32_t shift_index = 1;
  std::vector<std::string> analyses;  // empty = run everything
};

struct ParsedSpec {
  CodeSpecDoc doc;
  Ring ring;
  Code code;
};

// Strict parse: unknown keys anywhere in the document are rejected.
ParsedSpec load_spec(const std::string& json_text);

// Wire encodings: a ring element is an array of 2^k field elements in subset
// order, each field element an array of r residues, basis-ascending.
nlohmann::ordered_json ring_elem_json(const Ring& R, const RingElem& x);
RingElem ring_elem_from_json(const Ring& R, const nlohmann::json& j);
nlohmann::ordered_json word_json(const Ring& R,
                                 const std::vector<RingElem>& w);
nlohmann::ordered_json generators_json(
    const Ring& R, const std::vector<std::vector<RingElem>>& gens);
nlohmann::ordered_json field_elem_json(const Field& F, felem x);
nlohmann::ordered_json matrix_json(const Field& F, const Matrix& m);
nlohmann::ordered_json fpoly_json(const Field& F, const FPoly& g);

// Re-emits a parsed spec as a canonical spec document (used for search
// witnesses and verify counterexamples; output re-parses to the same code).
nlohmann::ordered_json spec_json(const Ring& R, std::uint32_t n,
                                 const std::vector<std::vector<RingElem>>& gens);

// Enumerator serialization: (exponent vector, coefficient coordinates) pairs
// in term order.
nlohmann::ordered_json enumerator_json(const WeightEnumerator& W);
std::string enumerator_digest(const WeightEnumerator& W);

std::string fnv1a64_hex(const std::string& data);
// base^exp as a decimal string, exact
std::string decimal_power(std::uint32_t base, std::uint64_t exp);

}  // namespace bk

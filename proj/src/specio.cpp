#include "specio.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bk {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json frozen_orders() {
  ordered_json o;
  o["subset_order"] = "bitmask-ascending";
  o["field_wire"] = "residues-basis-ascending, rank big-endian base p";
  o["element_order"] = "lexicographic on the wire encoding";
  o["enumeration"] = "component odometer, component 0 slowest, row 0 slowest";
  return o;
}

nlohmann::ordered_json tool_stamp() {
  ordered_json t;
  t["name"] = kToolName;
  t["version"] = kToolVersion;
  t["orders"] = frozen_orders();
  return t;
}

namespace {

void require_object(const json& j, const char* where) {
  if (!j.is_object())
    fail(errc::parse_error, std::string(where) + " must be an object");
}

void reject_unknown_keys(const json& j,
                         const std::vector<std::string>& allowed,
                         const char* where) {
  for (const auto& [key, val] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(errc::parse_error,
           std::string("unknown key \"") + key + "\" in " + where);
  }
}

std::uint64_t get_uint(const json& j, const char* key, bool required,
                       std::uint64_t fallback) {
  if (!j.contains(key)) {
    if (required)
      fail(errc::parse_error, std::string("missing key \"") + key + "\"");
    return fallback;
  }
  const json& v = j.at(key);
  if (!v.is_number_unsigned())
    fail(errc::parse_error,
         std::string("key \"") + key + "\" must be an unsigned integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> get_u32_array(const json& v, const char* where) {
  if (!v.is_array())
    fail(errc::parse_error, std::string(where) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned())
      fail(errc::parse_error,
           std::string(where) + " entries must be unsigned integers");
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

RingElem ring_elem_from_json(const Ring& R, const json& j) {
  if (!j.is_array() || j.size() != R.coords())
    fail(errc::parse_error, "ring element needs one entry per subset");
  std::vector<felem> coeffs;
  coeffs.reserve(R.coords());
  for (const auto& fe : j) {
    std::vector<std::uint32_t> digits = get_u32_array(fe, "field element");
    for (std::uint32_t d : digits)
      if (d >= R.field().p())
        fail(errc::parse_error, "residue out of range");
    coeffs.push_back(R.field().from_digits(digits));
  }
  return R.from_coeffs(std::move(coeffs));
}

ParsedSpec load_spec(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded())
    fail(errc::parse_error, "document is not valid JSON");
  require_object(j, "spec");
  reject_unknown_keys(j, {"p", "r", "irr", "k", "n", "generators", "options"},
                      "spec");

  CodeSpecDoc doc;
  doc.p = static_cast<std::uint32_t>(get_uint(j, "p", true, 0));
  doc.r = static_cast<std::uint32_t>(get_uint(j, "r", true, 0));
  doc.k = static_cast<std::uint32_t>(get_uint(j, "k", true, 0));
  doc.n = static_cast<std::uint32_t>(get_uint(j, "n", true, 0));
  if (j.contains("irr")) doc.irr = get_u32_array(j.at("irr"), "irr");

  if (j.contains("options")) {
    const json& o = j.at("options");
    require_object(o, "options");
    reject_unknown_keys(o, {"cap", "shift_index", "analyses"}, "options");
    doc.cap = get_uint(o, "cap", false, kDefaultEnumCap);
    doc.shift_index =
        static_cast<std::uint32_t>(get_uint(o, "shift_index", false, 1));
    if (o.contains("analyses")) {
      const json& a = o.at("analyses");
      if (!a.is_array())
        fail(errc::parse_error, "analyses must be an array of names");
      for (const auto& s : a) {
        if (!s.is_string())
          fail(errc::parse_error, "analyses must be an array of names");
        const std::string name = s.get<std::string>();
        static const std::vector<std::string> known{
            "structure", "duality", "weights", "bounds", "cyclic"};
        if (std::find(known.begin(), known.end(), name) == known.end())
          fail(errc::parse_error, "unknown analysis \"" + name + "\"");
        doc.analyses.push_back(name);
      }
    }
  }

  std::vector<std::uint32_t> irr_poly(doc.irr.begin(), doc.irr.end());
  Field F = Field::make(doc.p, doc.r, irr_poly);
  Ring R(F, doc.k);

  if (!j.contains("generators") || !j.at("generators").is_array())
    fail(errc::parse_error, "generators must be an array");
  std::vector<std::vector<RingElem>> gens;
  for (const auto& gj : j.at("generators")) {
    if (!gj.is_array() || gj.size() != doc.n)
      fail(errc::parse_error, "generator length must equal n");
    std::vector<RingElem> g;
    g.reserve(doc.n);
    for (const auto& ej : gj) g.push_back(ring_elem_from_json(R, ej));
    gens.push_back(std::move(g));
  }
  Code C = Code::from_generators(R, doc.n, std::move(gens));
  return ParsedSpec{std::move(doc), std::move(R), std::move(C)};
}

nlohmann::ordered_json field_elem_json(const Field& F, felem x) {
  ordered_json out = ordered_json::array();
  for (std::uint32_t d : F.digits(x)) out.push_back(d);
  return out;
}

nlohmann::ordered_json ring_elem_json(const Ring& R, const RingElem& x) {
  ordered_json out = ordered_json::array();
  for (felem c : x.coeffs) out.push_back(field_elem_json(R.field(), c));
  return out;
}

nlohmann::ordered_json word_json(const Ring& R,
                                 const std::vector<RingElem>& w) {
  ordered_json out = ordered_json::array();
  for (const auto& x : w) out.push_back(ring_elem_json(R, x));
  return out;
}

nlohmann::ordered_json generators_json(
    const Ring& R, const std::vector<std::vector<RingElem>>& gens) {
  ordered_json out = ordered_json::array();
  for (const auto& g : gens) out.push_back(word_json(R, g));
  return out;
}

nlohmann::ordered_json matrix_json(const Field& F, const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) {
    ordered_json rj = ordered_json::array();
    for (felem v : row) rj.push_back(field_elem_json(F, v));
    out.push_back(std::move(rj));
  }
  return out;
}

nlohmann::ordered_json fpoly_json(const Field& F, const FPoly& g) {
  ordered_json out = ordered_json::array();
  for (felem c : g) out.push_back(field_elem_json(F, c));
  return out;
}

nlohmann::ordered_json spec_json(
    const Ring& R, std::uint32_t n,
    const std::vector<std::vector<RingElem>>& gens) {
  ordered_json out;
  out["p"] = R.field().p();
  out["r"] = R.field().r();
  out["irr"] = R.field().irr();
  out["k"] = R.k();
  out["n"] = n;
  out["generators"] = generators_json(R, gens);
  return out;
}

nlohmann::ordered_json enumerator_json(const WeightEnumerator& W) {
  ordered_json out;
  switch (W.kind) {
    case EnumKind::complete: out["kind"] = "complete"; break;
    case EnumKind::symmetrized: out["kind"] = "symmetrized"; break;
    case EnumKind::hamming: out["kind"] = "hamming"; break;
    case EnumKind::lee: out["kind"] = "lee"; break;
  }
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : W.terms) {
    ordered_json t = ordered_json::array();
    t.push_back(e);
    t.push_back(c.coords());
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string enumerator_digest(const WeightEnumerator& W) {
  return fnv1a64_hex(enumerator_json(W).dump());
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string decimal_power(std::uint32_t base, std::uint64_t exp) {
  std::vector<std::uint32_t> digits{1};  // little-endian decimal
  for (std::uint64_t e = 0; e < exp; ++e) {
    std::uint32_t carry = 0;
    for (auto& d : digits) {
      const std::uint32_t v = d * base + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    out.push_back(static_cast<char>('0' + *it));
  return out;
}

}  // namespace bk

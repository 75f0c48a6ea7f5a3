#pragma once

#include <cstdint>
#include <string>

namespace bk {

// JSON-in, JSON-out entry points shared by the C API and the CLI. All output
// is deterministic for fixed inputs and seeds.

std::string analyze_json(const std::string& spec_text);

struct VerifyOutcome {
  bool pass = false;
  std::string doc;
};
// params: {"suite": name, "p","r","k","n","seed","cap","inject_fault"}
VerifyOutcome verify_json(const std::string& params_json);

// params: {"predicate": name, "p","r","k","n","seed","budget"}
std::string search_json(const std::string& params_json);

std::string ring_table_json(std::uint32_t p, std::uint32_t r, std::uint32_t k);

}  // namespace bk

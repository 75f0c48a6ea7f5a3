#pragma once

#include <stdexcept>
#include <string>

namespace bk {

// Error identities surfaced across the library and mirrored by the C API.
enum class errc {
  ok = 0,
  invalid_argument,
  not_prime,
  reducible_polynomial,
  degree_mismatch,
  division_by_zero,
  shape_mismatch,
  length_mismatch,
  too_large_to_enumerate,
  matrix_too_large,
  kind_mismatch,
  non_integral_result,
  empty_generator_list,
  not_cyclic,
  bad_shift,
  level_out_of_range,
  parse_error,
  cap_exceeded,
  property_failed,
};

const char* errc_name(errc c);

class BkError : public std::runtime_error {
public:
  BkError(errc c, const std::string& what)
      : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw BkError(c, what);
}

}  // namespace bk

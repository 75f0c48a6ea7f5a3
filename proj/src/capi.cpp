#include "bkcodes.h"

#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "code.hpp"
#include "drivers.hpp"
#include "errors.hpp"
#include "ring.hpp"
#include "specio.hpp"

using namespace bk;

struct bk_ring {
  Ring impl;
};

struct bk_code {
  Code impl;
};

namespace {

bk_status status_of(errc e) {
  switch (e) {
    case errc::ok: return BK_OK;
    case errc::invalid_argument: return BK_EINVAL;
    case errc::not_prime: return BK_ENOT_PRIME;
    case errc::reducible_polynomial: return BK_EREDUCIBLE;
    case errc::degree_mismatch: return BK_EDEGREE;
    case errc::division_by_zero: return BK_EDIVZERO;
    case errc::shape_mismatch: return BK_ESHAPE;
    case errc::length_mismatch: return BK_ELENGTH;
    case errc::too_large_to_enumerate: return BK_ETOO_LARGE;
    case errc::matrix_too_large: return BK_EMATRIX_TOO_LARGE;
    case errc::kind_mismatch: return BK_EKIND;
    case errc::non_integral_result: return BK_ENON_INTEGRAL;
    case errc::empty_generator_list: return BK_EEMPTY_GENS;
    case errc::not_cyclic: return BK_ENOT_CYCLIC;
    case errc::bad_shift: return BK_EBAD_SHIFT;
    case errc::level_out_of_range: return BK_ELEVEL;
    case errc::parse_error: return BK_EPARSE;
    case errc::cap_exceeded: return BK_ECAP;
    case errc::property_failed: return BK_EPROPERTY;
  }
  return BK_EINTERNAL;
}

thread_local std::string g_last_error;

template <typename F>
bk_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return BK_OK;
  } catch (const BkError& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BK_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BK_EINTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RingElem elem_from_residues(const Ring& R, const uint32_t* buf) {
  std::vector<felem> coeffs;
  coeffs.reserve(R.coords());
  for (uint32_t i = 0; i < R.coords(); ++i) {
    std::vector<uint32_t> digits(buf + static_cast<size_t>(i) * R.field().r(),
                                 buf + static_cast<size_t>(i + 1) *
                                           R.field().r());
    for (uint32_t d : digits)
      if (d >= R.field().p())
        fail(errc::invalid_argument, "residue out of range");
    coeffs.push_back(R.field().from_digits(digits));
  }
  return R.from_coeffs(std::move(coeffs));
}

void elem_to_residues(const Ring& R, const RingElem& x, uint32_t* buf) {
  size_t pos = 0;
  for (felem c : x.coeffs)
    for (uint32_t d : R.field().digits(c)) buf[pos++] = d;
}

void vector_to_residues(const Ring& R, const std::vector<felem>& v,
                        uint32_t* buf) {
  size_t pos = 0;
  for (felem c : v)
    for (uint32_t d : R.field().digits(c)) buf[pos++] = d;
}

}  // namespace

extern "C" {

const char* bk_version(void) { return kToolVersion; }

const char* bk_last_error(void) { return g_last_error.c_str(); }

const char* bk_status_name(bk_status s) {
  switch (s) {
    case BK_OK: return "ok";
    case BK_EINVAL: return "invalid argument";
    case BK_ENOT_PRIME: return "not a prime";
    case BK_EREDUCIBLE: return "reducible polynomial";
    case BK_EDEGREE: return "degree mismatch";
    case BK_EDIVZERO: return "division by zero";
    case BK_ESHAPE: return "shape mismatch";
    case BK_ELENGTH: return "length mismatch";
    case BK_ETOO_LARGE: return "too large to enumerate";
    case BK_EMATRIX_TOO_LARGE: return "matrix too large";
    case BK_EKIND: return "kind mismatch";
    case BK_ENON_INTEGRAL: return "non-integral result";
    case BK_EEMPTY_GENS: return "empty generator list";
    case BK_ENOT_CYCLIC: return "not cyclic";
    case BK_EBAD_SHIFT: return "bad shift";
    case BK_ELEVEL: return "level out of range";
    case BK_EPARSE: return "parse error";
    case BK_ECAP: return "cap exceeded";
    case BK_EPROPERTY: return "property failed";
    case BK_EINTERNAL: return "internal error";
  }
  return "unknown";
}

bk_status bk_ring_new(uint32_t p, uint32_t r, const uint32_t* irr,
                      size_t irr_len, uint32_t k, bk_ring** out) {
  if (!out) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] {
    std::vector<uint32_t> mod(irr, irr + irr_len);
    Field F = Field::make(p, r, std::move(mod));
    *out = new bk_ring{Ring(F, k)};
  });
}

void bk_ring_free(bk_ring* R) { delete R; }

uint32_t bk_ring_coords(const bk_ring* R) { return R->impl.coords(); }

uint32_t bk_ring_residues(const bk_ring* R) {
  return R->impl.coords() * R->impl.field().r();
}

uint64_t bk_ring_log_p_order(const bk_ring* R) {
  return R->impl.log_p_order();
}

bk_status bk_elem_add(const bk_ring* R, const uint32_t* a, const uint32_t* b,
                      uint32_t* out) {
  if (!R || !a || !b || !out) return BK_EINVAL;
  return guarded([&] {
    elem_to_residues(R->impl,
                     R->impl.add(elem_from_residues(R->impl, a),
                                 elem_from_residues(R->impl, b)),
                     out);
  });
}

bk_status bk_elem_mul(const bk_ring* R, const uint32_t* a, const uint32_t* b,
                      uint32_t* out) {
  if (!R || !a || !b || !out) return BK_EINVAL;
  return guarded([&] {
    elem_to_residues(R->impl,
                     R->impl.mul(elem_from_residues(R->impl, a),
                                 elem_from_residues(R->impl, b)),
                     out);
  });
}

bk_status bk_elem_conjugate(const bk_ring* R, const uint32_t* a,
                            uint32_t* out) {
  if (!R || !a || !out) return BK_EINVAL;
  return guarded([&] {
    elem_to_residues(R->impl,
                     R->impl.conjugate(elem_from_residues(R->impl, a)), out);
  });
}

bk_status bk_gray_map(const bk_ring* R, const uint32_t* coeffs,
                      uint32_t* gray) {
  if (!R || !coeffs || !gray) return BK_EINVAL;
  return guarded([&] {
    vector_to_residues(R->impl, elem_from_residues(R->impl, coeffs).gray,
                       gray);
  });
}

bk_status bk_gray_unmap(const bk_ring* R, const uint32_t* gray,
                        uint32_t* coeffs) {
  if (!R || !gray || !coeffs) return BK_EINVAL;
  return guarded([&] {
    const Ring& ring = R->impl;
    std::vector<felem> g;
    g.reserve(ring.coords());
    for (uint32_t i = 0; i < ring.coords(); ++i) {
      std::vector<uint32_t> digits(
          gray + static_cast<size_t>(i) * ring.field().r(),
          gray + static_cast<size_t>(i + 1) * ring.field().r());
      g.push_back(ring.field().from_digits(digits));
    }
    elem_to_residues(ring, ring.from_gray(std::move(g)), coeffs);
  });
}

bk_status bk_code_new(const bk_ring* R, uint32_t n, const uint32_t* gens,
                      size_t gen_count, bk_code** out) {
  if (!R || !out || (gen_count > 0 && !gens)) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] {
    const Ring& ring = R->impl;
    const size_t stride = static_cast<size_t>(ring.coords()) *
                          ring.field().r();
    std::vector<std::vector<RingElem>> gvecs;
    for (size_t g = 0; g < gen_count; ++g) {
      std::vector<RingElem> word;
      word.reserve(n);
      for (uint32_t j = 0; j < n; ++j)
        word.push_back(elem_from_residues(
            ring, gens + (g * n + j) * stride));
      gvecs.push_back(std::move(word));
    }
    *out = new bk_code{Code::from_generators(ring, n, std::move(gvecs))};
  });
}

void bk_code_free(bk_code* C) { delete C; }

uint64_t bk_code_log_p_size(const bk_code* C) { return C->impl.log_p_size(); }

uint32_t bk_code_rank(const bk_code* C) {
  return C->impl.rank_profile().rank;
}

uint32_t bk_code_free_rank(const bk_code* C) {
  return C->impl.rank_profile().free_rank;
}

bk_status bk_code_dual(const bk_code* C, int hermitian, bk_code** out) {
  if (!C || !out) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] {
    *out = new bk_code{
        C->impl.dual(hermitian ? DualMode::hermitian : DualMode::euclidean)};
  });
}

int bk_code_same(const bk_code* A, const bk_code* B) {
  if (!A || !B) return 0;
  return A->impl.same_code(B->impl) ? 1 : 0;
}

bk_status bk_code_min_distance(const bk_code* C, int metric, uint64_t cap,
                               uint32_t* out) {
  if (!C || !out) return BK_EINVAL;
  return guarded([&] {
    *out = min_distance(C->impl, metric ? Metric::lee : Metric::hamming,
                        cap ? cap : kDefaultEnumCap);
  });
}

bk_status bk_analyze_json(const char* spec_json, char** out) {
  if (!spec_json || !out) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] { *out = copy_out(analyze_json(spec_json)); });
}

bk_status bk_verify_json(const char* params_json, char** out) {
  if (!params_json || !out) return BK_EINVAL;
  *out = nullptr;
  bool pass = false;
  const bk_status s = guarded([&] {
    VerifyOutcome v = verify_json(params_json);
    pass = v.pass;
    *out = copy_out(v.doc);
  });
  if (s != BK_OK) return s;
  return pass ? BK_OK : BK_EPROPERTY;
}

bk_status bk_search_json(const char* params_json, char** out) {
  if (!params_json || !out) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] { *out = copy_out(search_json(params_json)); });
}

bk_status bk_ring_table_json(uint32_t p, uint32_t r, uint32_t k, char** out) {
  if (!out) return BK_EINVAL;
  *out = nullptr;
  return guarded([&] { *out = copy_out(ring_table_json(p, r, k)); });
}

void bk_string_free(char* s) { delete[] s; }

}  // extern "C"

/* C interface for the bkcodes library: exact linear algebra and coding
 * theory over the rings B_k = F_{p^r}[v_1..v_k]/(v_i^2 = v_i).
 *
 * Conventions
 *   - Ring elements travel as flat residue arrays of length 2^k * r:
 *     2^k field elements in subset order (bitmask ascending), each as r
 *     residues mod p, basis-ascending. Words are n such blocks.
 *   - Every function returns a bk_status; results come out through pointers.
 *   - Strings returned through char** are heap-allocated; release them with
 *     bk_string_free.
 */
#ifndef BKCODES_H
#define BKCODES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_EINVAL,
  BK_ENOT_PRIME,
  BK_EREDUCIBLE,
  BK_EDEGREE,
  BK_EDIVZERO,
  BK_ESHAPE,
  BK_ELENGTH,
  BK_ETOO_LARGE,
  BK_EMATRIX_TOO_LARGE,
  BK_EKIND,
  BK_ENON_INTEGRAL,
  BK_EEMPTY_GENS,
  BK_ENOT_CYCLIC,
  BK_EBAD_SHIFT,
  BK_ELEVEL,
  BK_EPARSE,
  BK_ECAP,
  BK_EPROPERTY,
  BK_EINTERNAL
} bk_status;

typedef struct bk_ring bk_ring;
typedef struct bk_code bk_code;

const char* bk_version(void);
const char* bk_status_name(bk_status s);
/* message for the most recent failure on this thread; empty after success */
const char* bk_last_error(void);

/* irr may be NULL (irr_len 0) to pick the default modulus; otherwise it is
 * the r+1 coefficients of a monic irreducible, constant term first. */
bk_status bk_ring_new(uint32_t p, uint32_t r, const uint32_t* irr,
                      size_t irr_len, uint32_t k, bk_ring** out);
void bk_ring_free(bk_ring* R);

uint32_t bk_ring_coords(const bk_ring* R);       /* 2^k */
uint32_t bk_ring_residues(const bk_ring* R);     /* 2^k * r per element */
uint64_t bk_ring_log_p_order(const bk_ring* R);

/* elem buffers hold bk_ring_residues(R) entries */
bk_status bk_elem_add(const bk_ring* R, const uint32_t* a, const uint32_t* b,
                      uint32_t* out);
bk_status bk_elem_mul(const bk_ring* R, const uint32_t* a, const uint32_t* b,
                      uint32_t* out);
bk_status bk_elem_conjugate(const bk_ring* R, const uint32_t* a,
                            uint32_t* out);
/* coefficient vector -> gray vector and back */
bk_status bk_gray_map(const bk_ring* R, const uint32_t* coeffs,
                      uint32_t* gray);
bk_status bk_gray_unmap(const bk_ring* R, const uint32_t* gray,
                        uint32_t* coeffs);

/* generators: gen_count words, each n elements, each element a residue
 * block; laid out contiguously */
bk_status bk_code_new(const bk_ring* R, uint32_t n, const uint32_t* gens,
                      size_t gen_count, bk_code** out);
void bk_code_free(bk_code* C);

uint64_t bk_code_log_p_size(const bk_code* C);
uint32_t bk_code_rank(const bk_code* C);
uint32_t bk_code_free_rank(const bk_code* C);
bk_status bk_code_dual(const bk_code* C, int hermitian, bk_code** out);
int bk_code_same(const bk_code* A, const bk_code* B);
/* metric: 0 Hamming, 1 Lee; UINT32_MAX signals the zero code */
bk_status bk_code_min_distance(const bk_code* C, int metric, uint64_t cap,
                               uint32_t* out);

/* JSON entry points; on success (and for bk_verify_json also on property
 * failure, status BK_EPROPERTY) *out receives the report document. */
bk_status bk_analyze_json(const char* spec_json, char** out);
bk_status bk_verify_json(const char* params_json, char** out);
bk_status bk_search_json(const char* params_json, char** out);
bk_status bk_ring_table_json(uint32_t p, uint32_t r, uint32_t k, char** out);

void bk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BKCODES_H */

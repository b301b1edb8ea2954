#ifndef REPGROWTH_H
#define REPGROWTH_H

/* C interface to the repgrowth library. Handles are opaque; every call that
 * can fail returns an rg_status and leaves a message in rg_last_error() for
 * the calling thread. Strings returned through char** are owned by the caller
 * and released with rg_string_free. Exact integers cross the boundary as
 * decimal strings. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RG_API __declspec(dllexport)
#else
#define RG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rg_status {
  RG_OK = 0,
  RG_ERR_INVALID_ARGUMENT = 1,
  RG_ERR_PARSE = 2,
  RG_ERR_DOMAIN = 3,
  RG_ERR_SCHEMA = 4,
  RG_ERR_SIZE_MISMATCH = 5,
  RG_ERR_ORTHOGONALITY = 6,
  RG_ERR_LIMIT = 7,
  RG_ERR_INTERNAL = 8,
  RG_ERR_CALLBACK = 9
} rg_status;

typedef struct rg_root_system rg_root_system;
typedef struct rg_table rg_table;
typedef struct rg_combo rg_combo;

/// Returns 0 to continue, nonzero to stop (the call then returns RG_ERR_CALLBACK).
typedef int (*rg_line_callback)(const char* line, void* user);

RG_API const char* rg_version(void);
RG_API const char* rg_status_name(rg_status status);
/// Message of the last failed call on this thread ("" if none).
RG_API const char* rg_last_error(void);
RG_API void rg_string_free(char* s);

/* ---- compact Lie groups ---- */

/// type: "A2", "B3", "A1xG2", ... (case-insensitive).
RG_API rg_status rg_root_system_create(const char* type, rg_root_system** out);
RG_API void rg_root_system_free(rg_root_system* rs);
RG_API int rg_root_system_rank(const rg_root_system* rs);
/// {"type", "rank", "cartan_matrix", "positive_roots"}.
RG_API rg_status rg_root_system_json(const rg_root_system* rs, char** out_json);

/// Weyl dimension of the irreducible with highest weight w (len = rank), as a decimal string.
RG_API rg_status rg_dimension(const rg_root_system* rs, const int64_t* w, size_t len, char** out_decimal);

/// Decomposition of chi_w1 (x) chi_w2 as a JSON list of {"weight", "mult"}
/// sorted by weight. w2 may be NULL, in which case chi_w1^power is decomposed.
RG_API rg_status rg_decompose_json(const rg_root_system* rs, const int64_t* w1, const int64_t* w2, size_t len,
                                   unsigned power, char** out_json);

/// Growth report of chi_w: dimension, |chi|, |chi^2|, exponent, constituent count.
/// digits is the number of significant digits used when printing the exponent.
RG_API rg_status rg_growth_json(const rg_root_system* rs, const int64_t* w, size_t len, int digits, char** out_json);
/// Same report for SU(2) from the closed form.
RG_API rg_status rg_su2_closed_form_json(uint64_t n, int digits, char** out_json);
/// Report for chi_{k delta} on SU(n).
RG_API rg_status rg_delta_family_json(int n, int64_t k, int digits, char** out_json);
/// Strict growth witness for two nontrivial irreducibles.
RG_API rg_status rg_strict_growth_json(const rg_root_system* rs, const int64_t* w1, const int64_t* w2, size_t len,
                                       char** out_json);

RG_API const char* rg_sweep_csv_header(void);
/// Streams one CSV line (no newline) per nontrivial dominant weight with
/// coordinates <= max_coord, in lexicographic order.
RG_API rg_status rg_sweep_csv(const rg_root_system* rs, int64_t max_coord, unsigned threads, int digits,
                              rg_line_callback cb, void* user);
/// Closed-form SU(2) lines for n = 1..max_n, identical in format to rg_sweep_csv on A1.
RG_API rg_status rg_su2_sweep_csv(int64_t max_n, int digits, rg_line_callback cb, void* user);

/// Significant decimal digits for a binary precision in bits (10..53).
RG_API rg_status rg_digits_for_bits(int bits, int* out_digits);

/* ---- finite groups ---- */

/// "psl2:<q>" or "extraspecial:<p>:<n>".
RG_API rg_status rg_table_builtin(const char* name, rg_table** out);
RG_API rg_status rg_table_load_json(const char* json_text, rg_table** out);
RG_API void rg_table_free(rg_table* t);
RG_API size_t rg_table_num_characters(const rg_table* t);
RG_API rg_status rg_table_export_json(const rg_table* t, char** out_json);
/// {"group", "order", "num_classes", "degrees", "perfect", "quasisimple", ...}.
RG_API rg_status rg_table_summary_json(const rg_table* t, char** out_json);
/// Index of the first irreducible of the given degree (decimal).
RG_API rg_status rg_table_find_degree(const rg_table* t, const char* degree, size_t* out_index);

RG_API rg_status rg_combo_create(const rg_table* t, rg_combo** out);
RG_API rg_status rg_combo_irreducible(const rg_table* t, size_t index, rg_combo** out);
RG_API void rg_combo_free(rg_combo* c);
/// Adds mult (decimal, non-negative) copies of irreducible `index`.
RG_API rg_status rg_combo_add(rg_combo* c, size_t index, const char* mult);
/// Product of the factors, decomposed into irreducibles.
RG_API rg_status rg_combo_product(const rg_combo* const* factors, size_t count, rg_combo** out);
RG_API rg_status rg_combo_power(const rg_combo* c, unsigned k, rg_combo** out);
RG_API rg_status rg_combo_measure(const rg_combo* c, char** out_decimal);
RG_API rg_status rg_combo_multiplicity_sum(const rg_combo* c, char** out_decimal);
/// {"mults": [...], "degree", "measure", "multiplicity_sum", "constituents"}.
RG_API rg_status rg_combo_json(const rg_combo* c, char** out_json);

/// {"N": int|null, "max_N", "measures": [...], "monotone_next": bool|null}.
RG_API rg_status rg_cover_json(const rg_combo* c, unsigned max_n, char** out_json);
/// Inequality (i) and strictness for a product of irreducibles.
RG_API rg_status rg_bound_json(const rg_table* t, const size_t* indices, size_t count, char** out_json);
/// <chi_i^k, chi_j> for all nontrivial pairs.
RG_API rg_status rg_power_positivity_json(const rg_table* t, unsigned k, char** out_json);
/// Seeded randomized checks of the measure inequalities over `pairs` random
/// combo pairs, plus the reducible-factor search.
RG_API rg_status rg_random_checks_json(const rg_table* t, size_t pairs, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif

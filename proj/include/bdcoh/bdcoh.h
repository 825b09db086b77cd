/* C interface to libbdcoh.
 *
 * Every call returns a bdcoh_status; results come back through out
 * parameters. On failure bdcoh_last_error() describes what went wrong (per
 * thread, valid until the next failing call on that thread). Strings handed
 * out by the library are released with bdcoh_string_free, handles with their
 * own *_free. Inputs and structured outputs are JSON; the schemas are listed
 * in README.md.
 */
#ifndef BDCOH_H
#define BDCOH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BDCOH_API __declspec(dllexport)
#else
#define BDCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdcoh_status {
    BDCOH_OK = 0,
    BDCOH_MALFORMED_INPUT = 1,
    BDCOH_NON_ASSOCIATIVE,
    BDCOH_NO_IDENTITY,
    BDCOH_NO_INVERSE,
    BDCOH_INDEX_OUT_OF_RANGE,
    BDCOH_DEGREE_OVERFLOW,
    BDCOH_NOT_A_COCYCLE,
    BDCOH_DEGREE_MISMATCH,
    BDCOH_GROUP_MISMATCH,
    BDCOH_PAIRING_NOT_BILINEAR,
    BDCOH_NOT_EQUIVARIANT_INPUT,
    BDCOH_LEMMA_VIOLATION,
    BDCOH_SITUATION_NOT_VALIDATED,
    BDCOH_NOT_PRIME,
    BDCOH_UNKNOWN_ELEMENT,
    BDCOH_CONTEXT_MISMATCH,
    BDCOH_NON_ABELIAN_GROUP,
    BDCOH_FAMILY_NOT_VALIDATED,
    BDCOH_TABLES_NOT_CLOSED,
    BDCOH_INTERNAL
} bdcoh_status;

typedef struct bdcoh_group bdcoh_group;
typedef struct bdcoh_module bdcoh_module;
typedef struct bdcoh_cohomology bdcoh_cohomology;
typedef struct bdcoh_ses bdcoh_ses;
typedef struct bdcoh_family bdcoh_family;
typedef struct bdcoh_bd bdcoh_bd;
typedef struct bdcoh_report bdcoh_report;

BDCOH_API const char* bdcoh_version(void);
BDCOH_API const char* bdcoh_last_error(void);
BDCOH_API const char* bdcoh_status_name(bdcoh_status status);
BDCOH_API void bdcoh_string_free(char* s);

/* Cap on |G|^n * dim A entries per cochain table; 0 restores the default
 * (BDCOH_TABLE_LIMIT or 3e6). */
BDCOH_API bdcoh_status bdcoh_set_table_limit(uint64_t entries);
BDCOH_API uint64_t bdcoh_table_limit(void);

/* groups */
BDCOH_API bdcoh_status bdcoh_group_from_json(const char* json, bdcoh_group** out);
BDCOH_API bdcoh_status bdcoh_group_cyclic(size_t n, bdcoh_group** out);
BDCOH_API bdcoh_status bdcoh_group_order(const bdcoh_group* g, size_t* out);
BDCOH_API bdcoh_status bdcoh_group_to_json(const bdcoh_group* g, char** out);
BDCOH_API void bdcoh_group_free(bdcoh_group* g);

/* modules and algebras ("mult" and "unit" make an algebra) */
BDCOH_API bdcoh_status bdcoh_module_from_json(const bdcoh_group* g, const char* json, bdcoh_module** out);
BDCOH_API bdcoh_status bdcoh_module_cyclic_ring(const bdcoh_group* g, uint64_t m, bdcoh_module** out);
BDCOH_API bdcoh_status bdcoh_module_is_algebra(const bdcoh_module* m, int* out);
BDCOH_API void bdcoh_module_free(bdcoh_module* m);

/* cohomology */
BDCOH_API bdcoh_status bdcoh_cohomology_build(const bdcoh_module* m, size_t max_degree, bdcoh_cohomology** out);
BDCOH_API bdcoh_status bdcoh_cohomology_rank(const bdcoh_cohomology* c, size_t n, size_t* out);
/* Writes up to cap factors; *len receives the full count. */
BDCOH_API bdcoh_status bdcoh_cohomology_invariant_factors(const bdcoh_cohomology* c, size_t n, uint64_t* buf,
                                                          size_t cap, size_t* len);
/* {"degree", "invariant_factors", "order", ..., "representatives": [[values]]} */
BDCOH_API bdcoh_status bdcoh_cohomology_summary_json(const bdcoh_cohomology* c, size_t n, int with_representatives,
                                                     char** out);
/* {"m", "n", "table": [[coords of e_i u e_j]]}; the module must be an algebra */
BDCOH_API bdcoh_status bdcoh_cup_table_json(const bdcoh_cohomology* c, size_t m, size_t n, char** out);
BDCOH_API void bdcoh_cohomology_free(bdcoh_cohomology* c);

/* short exact sequences; g may be NULL when the JSON carries "group" */
BDCOH_API bdcoh_status bdcoh_ses_from_json(const char* json, const bdcoh_group* g, bdcoh_ses** out);
BDCOH_API bdcoh_status bdcoh_ses_bockstein(const bdcoh_group* g, uint64_t p, bdcoh_ses** out);
BDCOH_API bdcoh_status bdcoh_ses_to_json(const bdcoh_ses* s, char** out);
BDCOH_API bdcoh_status bdcoh_ses_validate(const bdcoh_ses* s, bdcoh_report** out);
/* {"degrees": [{"degree": n, "matrix": [[...]]}]} for n <= max_degree */
BDCOH_API bdcoh_status bdcoh_ses_theta_json(const bdcoh_ses* s, size_t max_degree, char** out);
/* Derivation on basis pairs of total degree <= max_degree and theta o theta = 0
 * below max_degree. BDCOH_SITUATION_NOT_VALIDATED if the sequence fails. */
BDCOH_API bdcoh_status bdcoh_ses_identities(const bdcoh_ses* s, size_t max_degree, bdcoh_report** out);
BDCOH_API void bdcoh_ses_free(bdcoh_ses* s);

/* families */
BDCOH_API bdcoh_status bdcoh_family_from_json(const char* json, const bdcoh_group* g, bdcoh_family** out);
BDCOH_API bdcoh_status bdcoh_family_c3(bdcoh_family** out);
BDCOH_API bdcoh_status bdcoh_family_cp(uint64_t p, bdcoh_family** out);
BDCOH_API bdcoh_status bdcoh_family_to_json(const bdcoh_family* f, char** out);
BDCOH_API bdcoh_status bdcoh_family_validate(const bdcoh_family* f, size_t cutoff, bdcoh_report** out);
BDCOH_API void bdcoh_family_free(bdcoh_family* f);

/* BD algebra of a family; creation always succeeds for a well-formed family,
 * operations need a passing validation */
BDCOH_API bdcoh_status bdcoh_bd_create(const bdcoh_family* f, size_t cutoff, bdcoh_bd** out);
BDCOH_API bdcoh_status bdcoh_bd_validation(const bdcoh_bd* bd, bdcoh_report** out);
BDCOH_API bdcoh_status bdcoh_bd_verify_axioms(const bdcoh_bd* bd, size_t cutoff, bdcoh_report** out);
/* Triples up to cutoff, pairs up to pair_cutoff (0: cutoff + 2). With force
 * set the identities are evaluated on an unvalidated family as well. */
BDCOH_API bdcoh_status bdcoh_bd_verify_axioms_ex(const bdcoh_bd* bd, size_t cutoff, size_t pair_cutoff, int force,
                                                 bdcoh_report** out);
BDCOH_API bdcoh_status bdcoh_bd_verify_pr(const bdcoh_bd* bd, size_t cutoff, int r, bdcoh_report** out);
/* {"rows": [{"g", "degree", "index", "image"}]} */
BDCOH_API bdcoh_status bdcoh_bd_delta_table_json(const bdcoh_bd* bd, size_t max_degree, char** out);
BDCOH_API void bdcoh_bd_free(bdcoh_bd* bd);

/* generic P_r / BD_r tables */
BDCOH_API bdcoh_status bdcoh_pr_verify_json(const char* instance_json, bdcoh_report** out);

/* reports */
BDCOH_API bdcoh_status bdcoh_report_passed(const bdcoh_report* r, int* out);
/* {"title", "passed", "checks": [...], "notes": [...]} */
BDCOH_API bdcoh_status bdcoh_report_to_json(const bdcoh_report* r, char** out);
BDCOH_API void bdcoh_report_free(bdcoh_report* r);

#ifdef __cplusplus
}
#endif

#endif /* BDCOH_H */

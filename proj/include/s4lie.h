#ifndef S4LIE_H
#define S4LIE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define S4_API __declspec(dllexport)
#else
#define S4_API __attribute__((visibility("default")))
#endif

typedef enum s4_status {
  S4_OK = 0,
  S4_ERR_FORMAT,
  S4_ERR_CONTEXT,
  S4_ERR_SHAPE,
  S4_ERR_INVALID_INVOLUTION,
  S4_ERR_INVALID_FORM,
  S4_ERR_MISSING_STRUCTURE,
  S4_ERR_AXIOM,
  S4_ERR_CONSTRUCTION,
  S4_ERR_UNDERDETERMINED,
  S4_ERR_NOT_A_TRIPLE,
  S4_ERR_CONTAINMENT,
  S4_ERR_FIELD_CAPABILITY,
  S4_ERR_ACTION_STRUCTURE,
  S4_ERR_GRADING,
  S4_ERR_UNKNOWN_NAME,
  S4_ERR_PRECONDITION,
  S4_ERR_INVALID_ARGUMENT,
  S4_ERR_INTERNAL
} s4_status;

typedef enum s4_kind { S4_KIND_HURWITZ, S4_KIND_COMPOSITION, S4_KIND_STA, S4_KIND_LRTA } s4_kind;
typedef enum s4_mode { S4_MODE_AUTO, S4_MODE_FULL, S4_MODE_SAMPLE } s4_mode;
typedef enum s4_derivations { S4_DER_INNER, S4_DER_FULL } s4_derivations;
typedef enum s4_verdict { S4_SIMPLE, S4_INVARIANT_IDEAL, S4_INCONCLUSIVE } s4_verdict;

typedef struct s4_check_options {
  s4_mode mode;
  size_t count; /* samples; 0 keeps the default */
  uint64_t seed;
} s4_check_options;

typedef struct s4_algebra s4_algebra;
typedef struct s4_delta s4_delta;
typedef struct s4_lie s4_lie;
typedef struct s4_report s4_report;

/* Message of the last failing call on this thread; never NULL. */
S4_API const char* s4_last_error(void);
S4_API const char* s4_status_name(s4_status status);
S4_API void s4_string_free(char* s);
S4_API s4_status s4_set_threads(unsigned n);

/* Catalog. Names are valid for the lifetime of the library. */
S4_API size_t s4_catalog_count(void);
S4_API const char* s4_catalog_name(size_t i);
/* delta may be NULL; *delta is NULL for hurwitz and composition entries. */
S4_API s4_status s4_catalog_build(const char* name, s4_algebra** algebra, s4_delta** delta, s4_kind* kind);
S4_API s4_status s4_catalog_check(const char* name, const s4_check_options* opt, s4_report** out);

S4_API s4_status s4_algebra_from_json(const char* text, s4_algebra** out);
S4_API s4_status s4_algebra_to_json(const s4_algebra* a, char** out);
S4_API size_t s4_algebra_dim(const s4_algebra* a);
/* Involution law and form symmetry; user JSON is not validated on load. */
S4_API s4_status s4_algebra_validate(const s4_algebra* a);
/* Same structure constants over a larger field, e.g. "Qsqrt:-1". */
S4_API s4_status s4_algebra_extend(const s4_algebra* a, const char* field, s4_algebra** out);
S4_API void s4_algebra_free(s4_algebra* a);

S4_API s4_status s4_delta_from_json(const char* text, const s4_algebra* a, s4_delta** out);
S4_API s4_status s4_delta_to_json(const s4_delta* d, char** out);
S4_API void s4_delta_free(s4_delta* d);

S4_API s4_status s4_check_sta(const s4_algebra* a, const s4_delta* d, const s4_check_options* opt, s4_report** out);
S4_API s4_status s4_check_lrta(const s4_algebra* a, const s4_delta* d, const s4_check_options* opt, s4_report** out);
/* Hurwitz axioms when the algebra has a unit and an involution, symmetric composition otherwise. */
S4_API s4_status s4_check_composition(const s4_algebra* a, s4_report** out);
S4_API s4_status s4_check_degree5(const s4_algebra* a, size_t count, uint64_t seed, s4_report** out);

S4_API int s4_report_passed(const s4_report* r);
S4_API s4_status s4_report_to_json(const s4_report* r, char** out);
S4_API s4_status s4_report_to_text(const s4_report* r, char** out);
S4_API void s4_report_free(s4_report* r);

/* lrta = 0 builds g(A,*) with A4, otherwise g(A,.,bar) with S4. force skips the axiom check. */
S4_API s4_status s4_lie_construct(const s4_algebra* a, const s4_delta* d, int lrta, int force, s4_lie** out);
S4_API s4_status s4_lie_from_json(const char* text, s4_lie** out);
S4_API s4_status s4_lie_to_json(const s4_lie* l, char** out);
S4_API size_t s4_lie_dim(const s4_lie* l);
S4_API void s4_lie_free(s4_lie* l);
/* Jacobi in the given mode plus grading and, when present, the group action. */
S4_API s4_status s4_lie_verify(const s4_lie* l, s4_mode jacobi, size_t count, uint64_t seed, s4_report** out);
S4_API s4_status s4_lie_extract(const s4_lie* l, s4_algebra** algebra, s4_delta** delta, int* lrta);
S4_API s4_status s4_lie_simple(const s4_lie* l, uint64_t seed, s4_verdict* verdict, s4_report** out);

/* dim g(para(C_ds) (x) para(C_dt)), ds, dt in {1,2,4,8}; the axiom check is skipped. */
S4_API s4_status s4_magic_square_dim(size_t ds, size_t dt, size_t* dim);

/* alpha is a scalar string in the algebra's field. Reports may be NULL. */
S4_API s4_status s4_kantor_build(const s4_algebra* a, s4_derivations der, const char* alpha, s4_lie** out,
                                 s4_report** report);
S4_API s4_status s4_kantor_psi_check(const s4_algebra* a, s4_derivations der, const char* alpha, s4_report** out);
S4_API s4_status s4_kantor_af(const s4_algebra* a, s4_derivations der, const char* const gamma[3], s4_lie** out,
                              s4_report** report);
/* Needs a field with sqrt(-1); rational algebras are extended to Qsqrt:-1 first. */
S4_API s4_status s4_kantor_s4(const s4_algebra* a, s4_derivations der, s4_lie** out, s4_report** report);

#ifdef __cplusplus
}
#endif

#endif

#ifndef PEA_H
#define PEA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define PEA_API __attribute__((visibility("default")))
#else
#define PEA_API
#endif

typedef enum {
  PEA_OK = 0,
  PEA_ERR_INPUT = 1,         /* malformed document, bad name, bad argument */
  PEA_ERR_REFUSED = 2,       /* precondition of an operation does not hold */
  PEA_ERR_TOO_LARGE = 3,     /* enumeration cap exceeded */
  PEA_ERR_INCONSISTENCY = 4, /* an internal cross-check failed */
  PEA_ERR_INTERNAL = 5
} pea_status;

typedef enum { PEA_KIND_GPEA = 0, PEA_KIND_PEA = 1 } pea_kind;

typedef struct pea_table pea_table;

/* Message and exception type of the last failure on this thread. */
PEA_API const char* pea_last_error(void);
PEA_API const char* pea_last_error_type(void);

PEA_API pea_status pea_table_parse(const char* text, pea_table** out);
PEA_API pea_status pea_table_load(const char* path, pea_table** out);
/* diamond, boolean4, chain:N */
PEA_API pea_status pea_table_builtin(const char* name, pea_table** out);
PEA_API void pea_table_free(pea_table* t);

PEA_API pea_status pea_table_write(const pea_table* t, char** out);
PEA_API size_t pea_table_size(const pea_table* t);
PEA_API const char* pea_table_name(const pea_table* t, size_t index);
/* *out is the index of a+b, or -1 when undefined. */
PEA_API pea_status pea_table_add(const pea_table* t, size_t a, size_t b, int* out);
PEA_API pea_status pea_table_check_axioms(const pea_table* t, pea_kind kind, int* passed);

/* Reports are JSON objects with "command", "input_digest", "seed",
   "results" and "passed". Free them with pea_string_free. */
PEA_API pea_status pea_report_verify(const pea_table* t, pea_kind kind, char** out);
/* discrete < 0 skips the enumeration; state may be NULL. */
PEA_API pea_status pea_report_states(const pea_table* t, int discrete, int extremal, const char* state, char** out);
PEA_API pea_status pea_report_decompose(const pea_table* t, size_t n, char** out);
PEA_API pea_status pea_report_ideals(const pea_table* t, char** out);
PEA_API pea_status pea_report_quotient(const pea_table* t, const char* ideal, char** out);
PEA_API pea_status pea_report_unitize(const pea_table* t, char** out);
/* options: {"builtin"|"gamma"|"lex", "group", "order", "h", "bound", "samples", "seed"} */
PEA_API pea_status pea_report_construct(const char* options, char** out);
PEA_API pea_status pea_report_suite(size_t max_size, size_t gpea_max_size, size_t samples, uint64_t seed, char** out);

PEA_API void pea_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

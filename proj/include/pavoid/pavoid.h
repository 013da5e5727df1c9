/*
 * C interface to the pavoid library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every fallible call returns a pav_status; on failure the
 * message for the calling thread is available from pav_last_error() until
 * the next failing call on that thread. Strings returned through char** out
 * parameters are heap allocated and must be released with pav_string_free.
 * Strings returned as const char* are owned by the handle they came from.
 */
#ifndef PAVOID_PAVOID_H
#define PAVOID_PAVOID_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PAVOID_BUILDING)
#    define PAV_API __declspec(dllexport)
#  else
#    define PAV_API __declspec(dllimport)
#  endif
#else
#  define PAV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pav_status {
  PAV_OK = 0,
  PAV_E_PARSE = 1,        /* malformed word or morphism text */
  PAV_E_ARGUMENT = 2,     /* bad argument value or alphabet mismatch */
  PAV_E_PRECONDITION = 3, /* e.g. non-uniform morphism given to a checker */
  PAV_E_IO = 4,           /* file could not be read */
  PAV_E_NOT_FOUND = 5,    /* unknown catalog name */
  PAV_E_INTERNAL = 99
} pav_status;

typedef enum pav_pattern { PAV_SQUARE = 0, PAV_OVERLAP = 1, PAV_CUBE = 2 } pav_pattern;

typedef enum pav_definition { PAV_DEF_OVERLAP = 0, PAV_DEF_SQUARE = 1 } pav_definition;

typedef enum pav_direction { PAV_FORWARD = 0, PAV_BACKWARD = 1 } pav_direction;

typedef struct pav_occurrence {
  pav_pattern kind;
  size_t start;
  size_t period;
} pav_occurrence;

typedef struct pav_morphism pav_morphism;
typedef struct pav_verdict pav_verdict;
typedef struct pav_certificate pav_certificate;

PAV_API const char* pav_version(void);
PAV_API const char* pav_last_error(void);
PAV_API void pav_string_free(char* s);

/* ---- words ---------------------------------------------------------- */

/* *found is set to 1 and *occ filled when the word contains the pattern. */
PAV_API pav_status pav_find_pattern(const char* alphabet, const char* word, pav_pattern kind,
                                    int* found, pav_occurrence* occ);

PAV_API pav_status pav_count_factor(const char* alphabet, const char* word, const char* factor,
                                    size_t* count);

/* ---- morphisms ------------------------------------------------------ */

PAV_API pav_status pav_morphism_parse(const char* text, pav_morphism** out);
PAV_API pav_status pav_morphism_read_file(const char* path, pav_morphism** out);
PAV_API pav_status pav_morphism_from_catalog(const char* name, pav_morphism** out);
PAV_API void pav_morphism_free(pav_morphism* m);

PAV_API size_t pav_catalog_size(void);
/* NULL when index is out of range. */
PAV_API const char* pav_catalog_name(size_t index);

/* Morphism file text; round-trips through pav_morphism_parse. */
PAV_API pav_status pav_morphism_format(const pav_morphism* m, char** out);
PAV_API const char* pav_morphism_source(const pav_morphism* m);
PAV_API const char* pav_morphism_target(const pav_morphism* m);
/* Image of the letter at index i of the source alphabet; NULL if out of range. */
PAV_API const char* pav_morphism_image(const pav_morphism* m, size_t i);
/* *n is the common image length, or 0 when the morphism is not uniform. */
PAV_API pav_status pav_morphism_uniformity(const pav_morphism* m, size_t* n);

PAV_API pav_status pav_morphism_apply(const pav_morphism* m, const char* word, char** out);
PAV_API pav_status pav_morphism_iterate(const pav_morphism* m, char seed, size_t length,
                                        char** out);

/* ---- definition checkers ------------------------------------------- */

typedef enum pav_witness_kind {
  PAV_WITNESS_IMAGE = 0,  /* word, image, occurrence */
  PAV_WITNESS_BORDER = 1, /* a, b, v, s, u, side, offender */
  PAV_WITNESS_ENDS = 2    /* a, b, side, shared */
} pav_witness_kind;

/* side: for borders 0 = S is a suffix of h(offender), 1 = U is a prefix of
 * h(offender); for ends 0 = first letters, 1 = last letters. Letters are
 * reported as symbols. Unused fields are NULL / zero. */
typedef struct pav_witness {
  pav_witness_kind kind;
  const char* word;
  const char* image;
  pav_occurrence occurrence;
  char a;
  char b;
  const char* v;
  const char* s;
  const char* u;
  int side;
  char offender;
  char shared;
} pav_witness;

PAV_API pav_status pav_check_definition(const pav_morphism* m, pav_definition def,
                                        pav_verdict** out);
PAV_API void pav_verdict_free(pav_verdict* v);
PAV_API int pav_verdict_pass(const pav_verdict* v);
PAV_API size_t pav_verdict_report_count(const pav_verdict* v);
PAV_API const char* pav_verdict_report_condition(const pav_verdict* v, size_t report);
PAV_API int pav_verdict_report_holds(const pav_verdict* v, size_t report);
PAV_API size_t pav_verdict_report_examined(const pav_verdict* v, size_t report);
PAV_API size_t pav_verdict_witness_count(const pav_verdict* v, size_t report);
PAV_API pav_status pav_verdict_witness(const pav_verdict* v, size_t report, size_t index,
                                       pav_witness* out);
/* One-line human description of a witness; NULL if out of range. */
PAV_API const char* pav_verdict_witness_text(const pav_verdict* v, size_t report, size_t index);
PAV_API size_t pav_verdict_warning_count(const pav_verdict* v);
PAV_API const char* pav_verdict_warning(const pav_verdict* v, size_t index);

/* ---- bounded certification ---------------------------------------- */

PAV_API pav_status pav_certify(const pav_morphism* m, pav_pattern kind, pav_direction dir,
                               size_t max_len, pav_certificate** out);
PAV_API void pav_certificate_free(pav_certificate* c);
PAV_API int pav_certificate_found(const pav_certificate* c);
/* Valid only when found; strings owned by the certificate. */
PAV_API pav_status pav_certificate_counterexample(const pav_certificate* c, pav_direction* dir,
                                                  const char** word, const char** image,
                                                  pav_occurrence* occ);
PAV_API size_t pav_certificate_max_len(const pav_certificate* c);
/* Words examined at the given length (1..max_len); 0 otherwise. */
PAV_API uint64_t pav_certificate_words_at(const pav_certificate* c, size_t length);
PAV_API uint64_t pav_certificate_words_checked(const pav_certificate* c);
/* Tile diagnosis of a forward counterexample. */
PAV_API pav_status pav_certificate_explain(const pav_morphism* m, const pav_certificate* c,
                                           char** out);

PAV_API size_t pav_minimum_backward_length(pav_pattern kind);

#ifdef __cplusplus
}
#endif

#endif /* PAVOID_PAVOID_H */

/*
 * C interface to the cornerhom library.
 *
 * Complexes are opaque handles. Every function returns a ch_status; on
 * failure ch_last_error() describes the problem (per thread). Strings handed
 * out through char** must be released with ch_string_free.
 */
#ifndef CORNERHOM_H
#define CORNERHOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CH_API __declspec(dllexport)
#else
#define CH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ch_complex ch_complex;

typedef enum ch_status {
    CH_OK = 0,
    CH_INVALID_ARGUMENT = 1,
    CH_PARSE_ERROR = 2,
    CH_VALIDATION_ERROR = 3,
    CH_IO_ERROR = 4,
    CH_HYPOTHESIS_ERROR = 5,
    CH_INTERNAL_ERROR = 6
} ch_status;

typedef enum ch_format { CH_FORMAT_TEXT = 0, CH_FORMAT_JSON = 1 } ch_format;

typedef struct ch_characters {
    long chi0;
    long chi1;
    long chi;
    long chi_faces;
} ch_characters;

CH_API const char* ch_version(void);
CH_API const char* ch_last_error(void);
CH_API const char* ch_status_name(ch_status status);
CH_API void ch_string_free(char* s);

/* name is "cube", "two_chambers:3", ... */
CH_API ch_status ch_complex_from_builder(const char* name, ch_complex** out);
/* Structural parse only; use ch_validate to check the axioms. */
CH_API ch_status ch_complex_from_document(const char* text, ch_complex** out);
CH_API ch_status ch_complex_load(const char* path, ch_complex** out);
CH_API ch_status ch_complex_save(const ch_complex* c, const char* path);
CH_API void ch_complex_free(ch_complex* c);

CH_API ch_status ch_complex_product(const ch_complex* a, const ch_complex* b, ch_complex** out);
CH_API ch_status ch_complex_serialize(const ch_complex* c, char** out);
CH_API ch_status ch_complex_face_count(const ch_complex* c, size_t* out);

/* *ok is 1 when every axiom holds; text lists the violations. */
CH_API ch_status ch_validate(const ch_complex* c, int* ok, char** text);

/* These require a valid complex and return CH_VALIDATION_ERROR otherwise. */
CH_API ch_status ch_homology(const ch_complex* c, ch_format format, char** out);
CH_API ch_status ch_characters_text(const ch_complex* c, ch_format format, char** out);
CH_API ch_status ch_corner_characters(const ch_complex* c, ch_characters* out);
CH_API ch_status ch_report(const ch_complex* c, ch_format format, char** out);
/* Long exact sequence of the pair (X, X_m); *exact is 1 if exact everywhere. */
CH_API ch_status ch_les(const ch_complex* c, size_t m, int* exact, char** text);

/* *passed is 1 when the whole invariant suite holds; log is deterministic. */
CH_API ch_status ch_selftest(uint64_t seed, int* passed, char** log);

#ifdef __cplusplus
}
#endif

#endif

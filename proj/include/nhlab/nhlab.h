#ifndef NHLAB_H
#define NHLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NHLAB_API __declspec(dllexport)
#else
#define NHLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the numeric values match the C++ error categories. */
typedef enum nhlab_status {
  NHLAB_OK = 0,
  NHLAB_ERR_PARSE = 1,
  NHLAB_ERR_CONFIG = 2,
  NHLAB_ERR_UNSUPPORTED_FIELD = 3,
  NHLAB_ERR_DIVISION_NOT_EXACT = 4,
  NHLAB_ERR_DIVISION_BY_ZERO = 5,
  NHLAB_ERR_RING_MISMATCH = 6,
  NHLAB_ERR_DIMENSION_MISMATCH = 7,
  NHLAB_ERR_SYSTEM_MISMATCH = 8,
  NHLAB_ERR_INFINITE_GROUP = 9,
  NHLAB_ERR_INVALID_ARGUMENT = 10,
  NHLAB_ERR_TAKEUCHI_VIOLATION = 11,
  NHLAB_ERR_FIELD_MISMATCH = 12,
  NHLAB_ERR_ENUMERATION_LIMIT = 13,
  NHLAB_ERR_INTERNAL = 14
} nhlab_status;

/* A Coxeter system together with its nil Hecke algebra. */
typedef struct nhlab_system nhlab_system;
/* An element of the nil Hecke algebra of a system. */
typedef struct nhlab_element nhlab_element;

typedef struct nhlab_verify_options {
  uint64_t seed;
  int samples;
  unsigned max_deg;
  unsigned max_support;
  int trunc;         /* < 0: suite default */
  int m;             /* mixed suite dihedral order; <= 0: use the system */
  int max_len;       /* basis suite word length; <= 0: suite default */
  int checked;       /* nonzero: verify Takeuchi membership before multiplying */
  unsigned threads;  /* 0: hardware concurrency */
} nhlab_verify_options;

/* Message of the last failure on the calling thread, "" if none. */
NHLAB_API const char* nhlab_last_error(void);
/* Byte offset of the last parse failure on the calling thread, -1 otherwise. */
NHLAB_API long nhlab_last_error_position(void);
NHLAB_API const char* nhlab_status_name(nhlab_status status);

/* Frees strings returned through char** out parameters. */
NHLAB_API void nhlab_string_free(char* text);

NHLAB_API void nhlab_verify_options_default(nhlab_verify_options* opts);

/* Builds a system from the text of a config file, or from a file path. */
NHLAB_API nhlab_status nhlab_system_parse(const char* config_text, nhlab_system** out);
NHLAB_API nhlab_status nhlab_system_load(const char* path, nhlab_system** out);
/* Named presets: "s2", "gl<n>", "dihedral<m>" ("dihedralinf" for the infinite one). */
NHLAB_API nhlab_status nhlab_system_preset(const char* name, nhlab_system** out);
NHLAB_API void nhlab_system_free(nhlab_system* sys);
NHLAB_API size_t nhlab_system_rank(const nhlab_system* sys);
/* Human-readable summary: generators, variables, field, order. */
NHLAB_API nhlab_status nhlab_system_describe(const nhlab_system* sys, char** out);

NHLAB_API nhlab_status nhlab_element_parse(const nhlab_system* sys, const char* expr, nhlab_element** out);
NHLAB_API void nhlab_element_free(nhlab_element* e);
NHLAB_API nhlab_status nhlab_element_render(const nhlab_element* e, char** out);
NHLAB_API nhlab_status nhlab_element_add(const nhlab_element* a, const nhlab_element* b, nhlab_element** out);
NHLAB_API nhlab_status nhlab_element_mul(const nhlab_element* a, const nhlab_element* b, nhlab_element** out);
/* Sets *equal to 1 when the elements agree, 0 otherwise. */
NHLAB_API nhlab_status nhlab_element_equal(const nhlab_element* a, const nhlab_element* b, int* equal);

/* The structure maps applied to an expression; results are rendered text. */
NHLAB_API nhlab_status nhlab_eval(const nhlab_system* sys, const char* expr, char** out);
NHLAB_API nhlab_status nhlab_act(const nhlab_system* sys, const char* expr, const char* poly, char** out);
/* normal_form nonzero: print every term as f * d_v (x) d_w. */
NHLAB_API nhlab_status nhlab_delta(const nhlab_system* sys, const char* expr, int normal_form, char** out);
NHLAB_API nhlab_status nhlab_red(const nhlab_system* sys, const char* expr, int normal_form, char** out);
NHLAB_API nhlab_status nhlab_epsilon(const nhlab_system* sys, const char* expr, char** out);
/* Convention line printed once before tensor output. */
NHLAB_API const char* nhlab_blue_header(void);
NHLAB_API const char* nhlab_red_header(void);

/* Table of mixed braid relations for generators s and t (names), or for every
   finite pair when both are NULL. With m > 0 the dihedral preset of order m is used.
   *all_pass is 1 when every relation holds. */
NHLAB_API nhlab_status nhlab_mixed(const nhlab_system* sys, const char* s, const char* t, int m, char** out,
                                   int* all_pass);
/* Runs a suite by name ("all" for every applicable one) and returns the report. */
NHLAB_API nhlab_status nhlab_verify(const nhlab_system* sys, const char* suite, const nhlab_verify_options* opts,
                                    char** out, int* all_pass);
NHLAB_API nhlab_status nhlab_gallery(const nhlab_verify_options* opts, char** out, int* all_pass);
/* Space-separated suite names accepted by nhlab_verify. */
NHLAB_API const char* nhlab_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif

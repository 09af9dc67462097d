#ifndef SUGEOM_H
#define SUGEOM_H

/* C interface to the sugeom engine.  Handles are opaque; every function
   returning sg_status leaves a message retrievable with sg_last_error()
   on failure. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

typedef enum {
  SG_OK = 0,
  SG_CHECK_FAILED = 1, /* a mathematical check did not hold */
  SG_INPUT_ERROR = 2,  /* malformed input, unknown name, bad argument */
  SG_UNSUPPORTED = 3,  /* input outside what the engine handles exactly */
  SG_INTERNAL = 4
} sg_status;

typedef enum {
  SG_CHECK_DEFAULT = 0,
  SG_CHECK_SU2,
  SG_CHECK_SU3,
  SG_CHECK_SU4,
  SG_CHECK_BALANCED,
  SG_CHECK_HYPO
} sg_check_kind;

enum {
  SG_SHOW_TORSION = 1,
  SG_SHOW_CONNECTION = 2,
  SG_SHOW_CURVATURE = 4,
  SG_SHOW_NABLA = 8,
  SG_SHOW_ALL = 15
};

typedef struct sg_structure sg_structure;
typedef struct sg_report sg_report;

SG_API const char* sg_version(void);
SG_API const char* sg_status_string(sg_status status);
/* Message of the last failure on the calling thread ("" if none). */
SG_API const char* sg_last_error(void);

SG_API sg_status sg_structure_parse(const char* text, sg_structure** out);
SG_API sg_status sg_structure_load(const char* path, sg_structure** out);
SG_API void sg_structure_free(sg_structure* s);
SG_API int sg_structure_dimension(const sg_structure* s);

/* Commands.  On SG_OK or SG_CHECK_FAILED *out holds a report. */
SG_API sg_status sg_validate(const sg_structure* s, sg_report** out);
SG_API sg_status sg_cohomology(const sg_structure* s, int max_degree, sg_report** out);
SG_API sg_status sg_check(const sg_structure* s, sg_check_kind kind, sg_report** out);
SG_API sg_status sg_evolve_verify(const sg_structure* s, sg_report** out);
/* The report's file (sg_report_file) is the suspended structure file. */
SG_API sg_status sg_suspend(const sg_structure* s, sg_report** out);
SG_API sg_status sg_bismut(const sg_structure* s, unsigned show, sg_report** out);
SG_API sg_status sg_holonomy(const sg_structure* s, int max_order, sg_report** out);

SG_API const char* sg_report_text(const sg_report* r);
SG_API const char* sg_report_file(const sg_report* r);
SG_API int sg_report_pass(const sg_report* r);
/* Named facts recorded by the report, in sorted key order. */
SG_API size_t sg_report_fact_count(const sg_report* r);
SG_API const char* sg_report_fact_key(const sg_report* r, size_t i);
SG_API const char* sg_report_fact_value(const sg_report* r, size_t i);
SG_API void sg_report_free(sg_report* r);

/* Built-in catalog, entries sorted by name. */
SG_API size_t sg_catalog_size(void);
SG_API const char* sg_catalog_name(size_t i);
SG_API const char* sg_catalog_location(size_t i);
SG_API const char* sg_catalog_payload(size_t i);
/* Full report followed by the expectation table. */
SG_API sg_status sg_catalog_run(const char* name, sg_report** out);
/* Report of the entry's structure without expectations. */
SG_API sg_status sg_catalog_report(const char* name, sg_report** out);
/* Summary table; the text is identical for every jobs value. */
SG_API sg_status sg_catalog_run_all(int jobs, sg_report** out);

#ifdef __cplusplus
}
#endif

#endif

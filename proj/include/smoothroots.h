/*
 * smoothroots public C API.
 *
 * A session wraps one analysis request (a JSON document describing a curve of
 * monic polynomials or normal matrices as truncated two-sided jets). Run a
 * stage, then read the report. All returned strings are owned by the session
 * and stay valid until the next run or destruction.
 */
#ifndef SMOOTHROOTS_H
#define SMOOTHROOTS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
    SR_OK = 0,
    SR_ERROR_INVALID_ARGUMENT = 1,
    SR_ERROR_PARSE = 2,
    SR_ERROR_UNDECIDABLE = 3, /* truncation order too low to decide */
    SR_ERROR_NUMERIC = 4,     /* clustering ambiguity, singular lift systems */
    SR_ERROR_UNSUPPORTED = 5,
    SR_ERROR_INTERNAL = 6
} sr_status;

typedef struct sr_session sr_session;

/* Create a session from request JSON. Syntax is checked here; semantic
 * validation happens on run. */
sr_status sr_session_create(const char* request_json, sr_session** out_session);
void sr_session_destroy(sr_session* session);

/* Numeric option overrides, applied at run time. Names: "order", "samples",
 * "delta", "tol_zero", "tol_cluster", "tol_hensel", "tol_match". */
sr_status sr_session_set_option(sr_session* session, const char* name, double value);

/* Restrict the analysis to a subset of the request's points. */
sr_status sr_session_select_points(sr_session* session, const int* indices, size_t count);

/* stage is one of "analyze", "solve", "verify" (each implies the previous). */
sr_status sr_session_run(sr_session* session, const char* stage);

/* Report of the last successful run, as deterministic JSON. NULL before the
 * first run. */
const char* sr_session_report_json(const sr_session* session);

/* Render the factorization trees of the last run: format "dot" or "ascii". */
const char* sr_session_render(sr_session* session, const char* format);

/* Message of the last failure; empty string when the last call succeeded. */
const char* sr_session_error_message(const sr_session* session);

/* Number of warnings carried in the last report (hard errors are statuses,
 * warnings never are). */
int sr_session_warning_count(const sr_session* session);

const char* sr_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SMOOTHROOTS_H */

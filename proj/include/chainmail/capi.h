#ifndef CHAINMAIL_CAPI_H
#define CHAINMAIL_CAPI_H

/* C interface to the chainmail toolkit. All functions are thread-compatible
 * (no shared mutable state besides a thread-local error message). Every
 * out-parameter string is heap-allocated and must be released with
 * cm_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_PARSE = 1,    /* malformed input text */
  CM_ERR_INVALID = 2,  /* structurally invalid graph or diagram */
  CM_ERR_ARG = 3,      /* unknown id, bad range, bad parameter */
  CM_ERR_MATH = 4,     /* mathematical precondition fails (no certificate) */
  CM_ERR_INTERNAL = 5  /* broken invariant; please report */
} cm_status;

typedef struct cm_graph cm_graph;

const char* cm_version(void);

/* Message for the most recent failing call on this thread. */
const char* cm_last_error(void);

void cm_string_free(char* s);

/* Graph JSON: {"vertices":[{"id","weight"}...],
 *              "edges":[{"u","v","sign"}...],
 *              "rotation":{id:[edge indices]} (optional)}        */
cm_status cm_graph_parse(const char* json, cm_graph** out);
void cm_graph_free(cm_graph* g);
cm_status cm_graph_serialize(const cm_graph* g, char** out_json);

/* Laplacian, determinant, signature, homology and the spin table. */
cm_status cm_analyze_report(const cm_graph* g, char** out_report);

/* Hypothesis checks plus invariance of det / spin structures / framing slopes
 * over members 0..n_max. out_all_pass is 1 when everything passed. */
cm_status cm_family_report(const cm_graph* g, const char* pivot, unsigned long n_max,
                           char** out_report, int* out_all_pass);

/* Obstruction certificate; out_n_decimal receives the threshold N in decimal.
 * Fails with CM_ERR_MATH when the hypotheses do not hold. */
cm_status cm_obstruction_certificate(const cm_graph* g, const char* pivot,
                                     char** out_certificate, char** out_n_decimal);

/* Planar-diagram pipeline. outer_white selects the outer face color (0 =
 * black). root may be NULL for the default. The Tait and reduced graphs are
 * also returned as JSON when the pointers are non-NULL. */
cm_status cm_tait_report(const char* pd_text, int outer_white, const char* root,
                         char** out_report, char** out_tait_json, char** out_reduced_json);

/* Weight-one certificate for killing one generator. With a non-NULL pivot the
 * certificate is produced for every family member n in [n_from, n_to]. */
cm_status cm_pi1_report(const cm_graph* g, const char* kill, const char* pivot,
                        unsigned long n_from, unsigned long n_to, char** out_report,
                        int* out_all_valid);

/* Exhaustive search for family bases inside the bounds. */
cm_status cm_prospect_report(int max_vertices, long long weight_min, long long weight_max,
                             int max_multiplicity, unsigned long long candidate_cap,
                             char** out_report, int* out_partial);

#ifdef __cplusplus
}
#endif

#endif /* CHAINMAIL_CAPI_H */

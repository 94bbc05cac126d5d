/* C API for the ckgraph library: exact invariants of directed graphs as
 * surrogates for their graph C*-algebras, the Cuntz Splice and related
 * moves, and the chain-complex verification pipeline.
 *
 * Conventions:
 *   - ckg_graph is an opaque handle; free it with ckg_graph_free.
 *   - Strings returned through char** are heap-allocated; free them with
 *     ckg_string_free.
 *   - Return codes: 0 success (verdict true where applicable), 1 verdict
 *     false, 2 usage/precondition/parse error. After a code-2 return,
 *     ckg_last_error() describes the failure (thread-local).
 */
#ifndef CKGRAPH_H
#define CKGRAPH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ckg_graph ckg_graph;

enum {
    CKG_OK = 0,
    CKG_VERDICT_FALSE = 1,
    CKG_ERROR = 2
};

/* Parse a graph from its JSON form:
 * {"vertices": ["v","w"], "edges": [{"src":"v","dst":"w","mult":3}, ...]}
 * with "inf" as the ω multiplicity. */
int ckg_graph_from_json(const char* json, ckg_graph** out);
void ckg_graph_free(ckg_graph* g);
int ckg_graph_to_json(const ckg_graph* g, char** out_json);

/* DOT rendering of the graph. */
int ckg_graph_to_dot(const ckg_graph* g, char** out_dot);

/* Purely-infinite criteria report; returns 1 when the verdict is false. */
int ckg_check(const ckg_graph* g, char** out_report_json);

/* Ideal lattice of admissible pairs (requires Condition (K)). */
int ckg_ideal_lattice(const ckg_graph* g, char** out_json);

/* Primitive-ideal space (points, specialization order, H_x sets). */
int ckg_prim_space(const ckg_graph* g, char** out_json);
int ckg_prim_space_dot(const ckg_graph* g, char** out_dot);

/* Unfiltered K-theory (K0, K1) of the graph. */
int ckg_k_theory(const ckg_graph* g, char** out_json);

/* Filtered K-theory diagram over the primitive-ideal space. Requires a
 * regular graph. verbose adds presentation and transition matrices. */
int ckg_filtered_xk(const ckg_graph* g, int verbose, char** out_json);

/* Cuntz Splice at vertex v; the result JSON carries the spliced graph and
 * the fresh vertex ids u1, u2. */
int ckg_cuntz_splice(const ckg_graph* g, const char* v, char** out_json);

/* Full invariance verification at v (lattice order iso, commuting cube,
 * quasi-isomorphism, graded-group cross-check). Returns 1 when some stage
 * fails. break_psi corrupts the sign block of ψ₀ (negative control). */
int ckg_verify(const ckg_graph* g, const char* v, int break_psi, int verbose,
               char** out_report_json);

/* Depth-truncated desingularization. order_json is an array of
 * {"vertex": "v", "pattern": ["w","x"], "period_start": 0} entries, one per
 * infinite emitter. The result JSON carries the graph, frontier and tails. */
int ckg_desingularize(const ckg_graph* g, const char* order_json, int depth, char** out_json);

/* Structural check that truncated desingularization commutes with the
 * Cuntz Splice at v. Returns 1 when the comparison fails. */
int ckg_commute(const ckg_graph* g, const char* v, const char* order_json, int depth,
                char** out_report_json);

/* Randomized verification: `trials` generated instances through the full
 * pipeline. Returns 1 if any instance fails. */
int ckg_fuzz(uint64_t seed, int trials, int max_vertices, int max_mult, int break_psi,
             char** out_summary_json);

const char* ckg_last_error(void);
void ckg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CKGRAPH_H */

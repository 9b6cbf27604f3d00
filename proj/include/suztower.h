/*
 * suztower.h
 *
 * C interface to the suztower engine: construction and verification of the
 * Suzuki-tower near polygons (the generalized hexagons of orders (2,1) and
 * (2,2), the Hall-Janko near octagon, the G2(4) near octagon), their
 * valuation geometries, and the reconstruction models.
 *
 * All state lives behind opaque handles. Functions return SUZ_OK on success;
 * on failure they return an error code and the context keeps a readable
 * message (suz_last_error). Strings returned through char** are allocated by
 * the library and must be released with suz_string_free.
 *
 * Geometry names: h21, h2, h2d, l3cubed, hj, g24, vab, g24model.
 * Valuation sets exist for: h2d, hj.
 */
#ifndef SUZTOWER_H
#define SUZTOWER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SUZ_OK = 0,
    SUZ_ERR_INVALID_ARGUMENT = 1,
    SUZ_ERR_MISSING_INPUT = 2,
    SUZ_ERR_PARSE = 3,
    SUZ_ERR_DIGEST_MISMATCH = 4,
    SUZ_ERR_VERIFY = 5,
    SUZ_ERR_BUDGET = 6,
    SUZ_ERR_INTERNAL = 7
} suz_status;

typedef struct suz_ctx suz_ctx;
typedef struct suz_geometry suz_geometry;

/* context ----------------------------------------------------------------- */

suz_ctx* suz_ctx_new(void);
void suz_ctx_free(suz_ctx* ctx);

/* keys: cache_dir, gens_u33, gens_j2, gens_g24, seed, threads, budget,
 * format (tsv|json), timings (0|1) */
suz_status suz_ctx_set_option(suz_ctx* ctx, const char* key, const char* value);

/* message describing the most recent failure on this context */
const char* suz_last_error(const suz_ctx* ctx);

void suz_string_free(char* s);

/* geometries --------------------------------------------------------------- */

suz_status suz_geometry_build(suz_ctx* ctx, const char* name, suz_geometry** out);
void suz_geometry_free(suz_geometry* g);

int32_t suz_geometry_num_points(const suz_geometry* g);
int32_t suz_geometry_num_lines(const suz_geometry* g);
/* s+1 points per line, t+1 lines per point; SUZ_ERR_VERIFY when no order */
suz_status suz_geometry_order(const suz_geometry* g, int32_t* s, int32_t* t);
int32_t suz_geometry_diameter(const suz_geometry* g);

suz_status suz_geometry_save(suz_ctx* ctx, const suz_geometry* g, const char* path);
suz_status suz_geometry_load(suz_ctx* ctx, const char* path, suz_geometry** out);

/* reports ------------------------------------------------------------------ */
/* Each report renders in the configured format; *out_all_pass is optional. */

suz_status suz_report_build(suz_ctx* ctx, const char* cli_name, char** out,
                            int* out_all_pass);
suz_status suz_report_verify(suz_ctx* ctx, const char* name_or_all, char** out,
                             int* out_all_pass);
suz_status suz_report_valuations(suz_ctx* ctx, const char* name, char** out,
                                 int* out_all_pass);
suz_status suz_report_vgeom(suz_ctx* ctx, const char* name, char** out,
                            int* out_all_pass);
suz_status suz_report_tables(suz_ctx* ctx, const char* name, char** out,
                             int* out_all_pass);
/* lemma_id: b-graph-connected, valbc, valb-bijection, valc-special,
 * c-graph-connected, or NULL/"" for all */
suz_status suz_report_lemmas(suz_ctx* ctx, const char* lemma_id, char** out,
                             int* out_all_pass);
suz_status suz_report_embed(suz_ctx* ctx, const char* small_name,
                            const char* big_name, char** out, int* out_all_pass);
/* the one-shot verification pipeline over every stage */
suz_status suz_report_pipeline(suz_ctx* ctx, char** out, int* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SUZTOWER_H */

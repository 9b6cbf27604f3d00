// extern-C surface over the pipeline; see include/suztower.h

#include "suztower.h"

#include <cstring>
#include <string>

#include "pipeline.hpp"

using namespace suz;

struct suz_ctx {
    PipelineConfig cfg;
    std::unique_ptr<Pipeline> pipeline;  // rebuilt when options change
    std::string last_error;

    Pipeline& get() {
        if (!pipeline) pipeline = std::make_unique<Pipeline>(cfg);
        return *pipeline;
    }
};

struct suz_geometry {
    GeometryPtr geom;
};

namespace {

suz_status status_of(const PipelineError& e) {
    switch (e.kind) {
        case PipelineErrorKind::MissingInput: return SUZ_ERR_MISSING_INPUT;
        case PipelineErrorKind::Parse: return SUZ_ERR_PARSE;
        case PipelineErrorKind::DigestMismatch: return SUZ_ERR_DIGEST_MISMATCH;
        case PipelineErrorKind::Verify: return SUZ_ERR_VERIFY;
        case PipelineErrorKind::Budget: return SUZ_ERR_BUDGET;
        case PipelineErrorKind::Internal: return SUZ_ERR_INTERNAL;
    }
    return SUZ_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
suz_status guarded(suz_ctx* ctx, Fn&& fn) {
    if (!ctx) return SUZ_ERR_INVALID_ARGUMENT;
    try {
        return fn();
    } catch (const PipelineError& e) {
        ctx->last_error = e.what();
        return status_of(e);
    } catch (const ParseError& e) {
        ctx->last_error = e.what();
        return SUZ_ERR_PARSE;
    } catch (const CacheError& e) {
        ctx->last_error = e.what();
        return SUZ_ERR_DIGEST_MISMATCH;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SUZ_ERR_INTERNAL;
    }
}

suz_status render_report(suz_ctx* ctx, const VerificationReport& rep, char** out,
                         int* out_all_pass) {
    if (out) *out = dup_string(rep.render(ctx->cfg.format, ctx->cfg.timings));
    if (out_all_pass) *out_all_pass = rep.all_pass() ? 1 : 0;
    return SUZ_OK;
}

bool valid_valuation_name(const std::string& name) {
    return name == "h2d" || name == "hj";
}

}  // namespace

extern "C" {

suz_ctx* suz_ctx_new(void) { return new suz_ctx(); }

void suz_ctx_free(suz_ctx* ctx) { delete ctx; }

suz_status suz_ctx_set_option(suz_ctx* ctx, const char* key, const char* value) {
    if (!ctx || !key || !value) return SUZ_ERR_INVALID_ARGUMENT;
    std::string k = key, v = value;
    try {
        if (k == "cache_dir") ctx->cfg.cache_dir = v;
        else if (k == "gens_u33") ctx->cfg.gens_u33 = v;
        else if (k == "gens_j2") ctx->cfg.gens_j2 = v;
        else if (k == "gens_g24") ctx->cfg.gens_g24 = v;
        else if (k == "seed") ctx->cfg.seed = std::stoull(v);
        else if (k == "threads") ctx->cfg.threads = std::max(1, std::stoi(v));
        else if (k == "budget") ctx->cfg.budget = std::stoull(v);
        else if (k == "format") {
            if (v != "tsv" && v != "json") {
                ctx->last_error = "format must be tsv or json";
                return SUZ_ERR_INVALID_ARGUMENT;
            }
            ctx->cfg.format = v;
        } else if (k == "timings") ctx->cfg.timings = v == "1" || v == "true";
        else {
            ctx->last_error = "unknown option: " + k;
            return SUZ_ERR_INVALID_ARGUMENT;
        }
    } catch (const std::exception&) {
        ctx->last_error = "invalid value for option " + k + ": " + v;
        return SUZ_ERR_INVALID_ARGUMENT;
    }
    ctx->pipeline.reset();
    return SUZ_OK;
}

const char* suz_last_error(const suz_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void suz_string_free(char* s) { std::free(s); }

suz_status suz_geometry_build(suz_ctx* ctx, const char* name, suz_geometry** out) {
    if (!name || !out) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        const auto& names = Pipeline::geometry_names();
        if (std::find(names.begin(), names.end(), std::string(name)) == names.end()) {
            ctx->last_error = "unknown geometry: " + std::string(name);
            return SUZ_ERR_INVALID_ARGUMENT;
        }
        *out = new suz_geometry{ctx->get().geometry(name)};
        return SUZ_OK;
    });
}

void suz_geometry_free(suz_geometry* g) { delete g; }

int32_t suz_geometry_num_points(const suz_geometry* g) {
    return g ? g->geom->num_points() : -1;
}

int32_t suz_geometry_num_lines(const suz_geometry* g) {
    return g ? g->geom->num_lines() : -1;
}

suz_status suz_geometry_order(const suz_geometry* g, int32_t* s, int32_t* t) {
    if (!g) return SUZ_ERR_INVALID_ARGUMENT;
    OrderResult ord = order_of(*g->geom);
    if (!ord.has_order) return SUZ_ERR_VERIFY;
    if (s) *s = ord.s;
    if (t) *t = ord.t;
    return SUZ_OK;
}

int32_t suz_geometry_diameter(const suz_geometry* g) {
    return g ? g->geom->distances().diameter() : -1;
}

suz_status suz_geometry_save(suz_ctx* ctx, const suz_geometry* g, const char* path) {
    if (!g || !path) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        save_geometry(*g->geom, path);
        return SUZ_OK;
    });
}

suz_status suz_geometry_load(suz_ctx* ctx, const char* path, suz_geometry** out) {
    if (!path || !out) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        *out = new suz_geometry{load_geometry(path)};
        return SUZ_OK;
    });
}

suz_status suz_report_build(suz_ctx* ctx, const char* cli_name, char** out,
                            int* out_all_pass) {
    if (!cli_name) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        std::string n = cli_name;
        if (n != "h21" && n != "hex22" && n != "l3cubed" && n != "hj" && n != "g24") {
            ctx->last_error = "unknown build target: " + n;
            return SUZ_ERR_INVALID_ARGUMENT;
        }
        return render_report(ctx, ctx->get().build_report(n), out, out_all_pass);
    });
}

suz_status suz_report_verify(suz_ctx* ctx, const char* name_or_all, char** out,
                             int* out_all_pass) {
    return guarded(ctx, [&] {
        std::vector<std::string> names;
        std::string n = name_or_all ? name_or_all : "all";
        if (n == "all" || n.empty())
            names = {"h21", "h2", "h2d", "l3cubed", "hj", "g24"};
        else
            names = {n};
        for (const auto& name : names) {
            const auto& known = Pipeline::geometry_names();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                ctx->last_error = "unknown geometry: " + name;
                return SUZ_ERR_INVALID_ARGUMENT;
            }
        }
        return render_report(ctx, ctx->get().verify_report(names), out, out_all_pass);
    });
}

suz_status suz_report_valuations(suz_ctx* ctx, const char* name, char** out,
                                 int* out_all_pass) {
    if (!name) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        if (!valid_valuation_name(name)) {
            ctx->last_error = "valuations are enumerated for h2d and hj only";
            return SUZ_ERR_INVALID_ARGUMENT;
        }
        return render_report(ctx, ctx->get().valuations_report(name), out,
                             out_all_pass);
    });
}

suz_status suz_report_vgeom(suz_ctx* ctx, const char* name, char** out,
                            int* out_all_pass) {
    if (!name) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        if (!valid_valuation_name(name)) {
            ctx->last_error = "valuation geometries exist for h2d and hj only";
            return SUZ_ERR_INVALID_ARGUMENT;
        }
        return render_report(ctx, ctx->get().vgeom_report(name), out, out_all_pass);
    });
}

suz_status suz_report_tables(suz_ctx* ctx, const char* name, char** out,
                             int* out_all_pass) {
    if (!name) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        if (!valid_valuation_name(name)) {
            ctx->last_error = "tables exist for h2d and hj only";
            return SUZ_ERR_INVALID_ARGUMENT;
        }
        return render_report(ctx, ctx->get().tables_report(name), out, out_all_pass);
    });
}

suz_status suz_report_lemmas(suz_ctx* ctx, const char* lemma_id, char** out,
                             int* out_all_pass) {
    return guarded(ctx, [&] {
        std::string id = lemma_id ? lemma_id : "";
        return render_report(ctx, ctx->get().lemmas_report(id), out, out_all_pass);
    });
}

suz_status suz_report_embed(suz_ctx* ctx, const char* small_name,
                            const char* big_name, char** out, int* out_all_pass) {
    if (!small_name || !big_name) return SUZ_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        const auto& known = Pipeline::geometry_names();
        for (const char* n : {small_name, big_name})
            if (std::find(known.begin(), known.end(), std::string(n)) == known.end()) {
                ctx->last_error = "unknown geometry: " + std::string(n);
                return SUZ_ERR_INVALID_ARGUMENT;
            }
        return render_report(ctx, ctx->get().embed_report(small_name, big_name), out,
                             out_all_pass);
    });
}

suz_status suz_report_pipeline(suz_ctx* ctx, char** out, int* out_all_pass) {
    return guarded(ctx,
                   [&] { return render_report(ctx, ctx->get().full_report(), out,
                                              out_all_pass); });
}

}  // extern "C"

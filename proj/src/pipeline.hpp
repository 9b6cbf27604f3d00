/*
 * pipeline.hpp
 *
 * Orchestration: builds the named geometries with an on-disk cache keyed by
 * input digests and recipe versions, enumerates valuation sets and valuation
 * geometries, reproduces the expected tables, runs the lemma checks and the
 * embedding suite, and assembles verification reports.
 *
 * Cached artifacts are re-verified against their expected statistics on every
 * load; a digest mismatch is an error, not a silent rebuild.
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cache.hpp"
#include "constructions.hpp"
#include "embed.hpp"
#include "report.hpp"
#include "valuations.hpp"

namespace suz {

struct PipelineConfig {
    std::string cache_dir = "cache";
    std::string gens_u33;
    std::string gens_j2;
    std::string gens_g24;
    uint64_t seed = 20240901;
    int threads = 1;
    uint64_t budget = 1000000000ULL;
    std::string format = "tsv";  // tsv | json
    bool timings = false;
};

enum class PipelineErrorKind { MissingInput, Parse, DigestMismatch, Verify, Budget, Internal };

struct PipelineError : std::runtime_error {
    PipelineErrorKind kind;
    PipelineError(PipelineErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg);

    const PipelineConfig& config() const { return cfg_; }

    // h21 | h2 | h2d | l3cubed | hj | g24 | vab | g24model
    GeometryPtr geometry(const std::string& name);
    // h2d | hj
    ValuationSetPtr valuations(const std::string& name);
    std::shared_ptr<const ValuationGeometry> vgeom(const std::string& name);
    // model geometries together with their valuation indexing
    const ModelGeometry& model(const std::string& name);  // vab | g24model

    const HjBuild* hj_build();    // details of the involution construction
    const G24Build* g24_build();

    // reports; every quantitative check carries expected and observed values
    VerificationReport build_report(const std::string& cli_name);  // h21|hex22|l3cubed|hj|g24
    VerificationReport verify_report(const std::vector<std::string>& names);
    VerificationReport valuations_report(const std::string& name);
    VerificationReport vgeom_report(const std::string& name);
    VerificationReport tables_report(const std::string& name);
    VerificationReport lemmas_report(const std::string& id = "");  // "" = all
    VerificationReport embed_report(const std::string& small_name,
                                    const std::string& big_name);
    // model statistics, line-type counts and the verified type-A copy
    VerificationReport model_report(const std::string& name);  // vab | g24model
    // sampled *-product properties on a valuation set (h2d | hj)
    VerificationReport star_property_report(const std::string& name);
    // budgeted isomorphism checks between built and reconstructed geometries
    VerificationReport extended_isomorphism_report();
    VerificationReport full_report();

    // base point -> model point via classical valuations; the embedded copy
    EmbeddingMap classical_copy_embedding(const std::string& model_name);

    // statistics block for one named geometry (also run on cache load)
    VerificationReport geometry_stats_report(const std::string& name);

    std::optional<EmbeddingMap> find_named_embedding(const std::string& small_name,
                                                     const std::string& big_name,
                                                     SearchOutcome* outcome);

    static const std::vector<std::string>& geometry_names();

private:
    PipelineConfig cfg_;
    std::map<std::string, GeometryPtr> geoms_;
    std::map<std::string, ValuationSetPtr> vals_;
    std::map<std::string, std::shared_ptr<const ValuationGeometry>> vgeoms_;
    std::map<std::string, ModelGeometry> models_;
    std::optional<HjBuild> hj_build_;
    std::optional<G24Build> g24_build_;

    std::string cache_path(const std::string& file) const;
    std::string gens_path(const std::string& group) const;
    GeneratorSet load_gens(const std::string& group) const;
    std::string input_digest(const std::string& group) const;
    void ensure_cache_dir() const;

    GeometryPtr build_or_load_geometry(const std::string& name);
    void save_named(const std::string& name, const Geometry& g,
                    const std::string& recipe, const std::string& input_digest);
    GeometryPtr try_load_named(const std::string& name, const std::string& recipe,
                               const std::string& input_digest);
};

}  // namespace suz

/*
 * cache.hpp
 *
 * Content digests and the versioned text formats used as on-disk caches:
 *
 *   GEOM v1 <num_points> <num_lines> <label>    one line per geometry line,
 *                                               sorted lexicographically
 *   VALS v1 <geom-digest> <count>               one value row per valuation,
 *                                               sorted lexicographically
 *   VGEOM v1 <vals-digest> <count>              "a b c TYPE special" per line
 *   EMB v1 <source-digest> <target-digest>      one target index per source
 *                                               point per line
 *
 * Digests are 16 hex digits of FNV-1a64 over the exact file bytes; they key
 * cache consistency, not security.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "valuations.hpp"

namespace suz {

uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string geometry_to_text(const Geometry& g);
Geometry geometry_from_text(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);  // throws CacheError if missing

void save_geometry(const Geometry& g, const std::string& path);
GeometryPtr load_geometry(const std::string& path);
std::string geometry_digest(const Geometry& g);

std::string valuations_to_text(const std::vector<ValueVector>& vals,
                               const std::string& geom_digest);
// Throws CacheError if the stored digest differs from expect_geom_digest.
std::vector<ValueVector> valuations_from_text(const std::string& text,
                                              const std::string& expect_geom_digest);

std::string vgeom_to_text(const ValuationGeometry& vg, const std::string& vals_digest);
std::vector<VLine> vgeom_from_text(const std::string& text,
                                   const std::string& expect_vals_digest);

std::string embedding_to_text(const std::vector<int32_t>& map,
                              const std::string& src_digest,
                              const std::string& tgt_digest);
std::vector<int32_t> embedding_from_text(const std::string& text,
                                         const std::string& expect_src,
                                         const std::string& expect_tgt);

}  // namespace suz

/*
 * constructions.hpp
 *
 * Builders for the named geometries of the tower
 *   H(2,1)  ->  H(2)^D  ->  HJ  ->  G24
 * plus the order-(2,2) companions H(2) and L3 x L3 x L3, and the small
 * fixtures (three-point line, 3x3 grid, W(2)) used by tests and oracles.
 *
 * H(2,1) is the point-line dual of the Fano incidence graph, built from the
 * difference-set model of the Fano plane. The two generalized hexagons of
 * order (2,2) come from the valency-6 orbital graph of a 63-point action:
 * its triangles are the lines of one hexagon, the dual is the other, and the
 * one admitting a full isometric H(2,1) is labeled h2d. HJ and G24 are built
 * from involution classes: points are the class members, lines the commuting
 * triples {x, y, xy} (for G24 filtered to the two retained conjugation
 * orbits).
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "embed.hpp"
#include "geometry.hpp"
#include "perm.hpp"

namespace suz {

struct NamedGeometry {
    GeometryPtr geometry;
    std::string name;
};

NamedGeometry build_h21();
NamedGeometry build_l3_cubed();

// small fixtures
Geometry make_three_point_line();
Geometry make_grid3x3();
// W(2): duads of {0..5} as points, syntheme partitions as lines
Geometry make_w2();

struct HexagonPair {
    NamedGeometry h2;   // no H(2,1) subgeometry
    NamedGeometry h2d;  // admits a full isometric H(2,1)
    EmbeddingMap h21_embedding;       // H(2,1) inside h2d
    bool triangles_geometry_is_h2d;   // which of the two came first
};
HexagonPair build_hexagons_2_2(const GeneratorSet& u33_gens, uint64_t embed_budget);

struct HjBuild {
    NamedGeometry named;
    std::shared_ptr<InvolutionClass> cls;
    Perm class_representative;
    size_t rejected_pairs = 0;  // commuting pairs whose product left the class
    bool lines_conjugation_invariant = false;
};
HjBuild build_hj(const GeneratorSet& j2_gens, uint64_t seed, size_t budget);

struct G24Build {
    NamedGeometry named;
    std::shared_ptr<InvolutionClass> cls;
    Perm class_representative;
    size_t rejected_pairs = 0;
    std::vector<size_t> all_orbit_sizes;   // ascending
    std::vector<size_t> kept_orbit_sizes;  // ascending, must be {1365, 13650}
    bool orbits_conjugation_closed = false;
};
G24Build build_g24(const GeneratorSet& g24_gens, uint64_t seed, size_t budget);

// Commuting triples {x, y, xy} inside an involution class, as sorted index
// triples; pairs whose product leaves the class are counted, not kept.
std::vector<Triple> commuting_class_triples(const InvolutionClass& cls,
                                            size_t* rejected_pairs,
                                            int threads = 1);

}  // namespace suz

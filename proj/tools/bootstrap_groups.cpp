/*
 * bootstrap_groups.cpp
 *
 * Regenerates the permutation-representation files under data/ from first
 * principles, with no external inputs:
 *
 *   stage 1: SU(3,3) as 3x3 matrices over GF(9) preserving the standard
 *            Hermitian form, acting on the 63 non-isotropic projective
 *            points -> data/u33_63.txt (two generators for U3(3)), plus
 *            data/u33_2_63.txt including the field automorphism (G2(2)).
 *
 *   stage 2: builds the order-(2,2) hexagons from the 63-point action,
 *            enumerates the valuations of H(2)^D, forms the 315-point
 *            model on the type-A/B valuations (the Hall-Janko near
 *            octagon), extends the induced G2(2) symmetry by one searched
 *            geometry automorphism, and converts the resulting group to
 *            its action on the 100 embedded hexagons
 *            -> data/j2_100.txt (commutator generators, J2) and
 *               data/j2_2_100.txt (J2:2).
 *
 *   stage 3: builds HJ from data/j2_100.txt, enumerates its 7119
 *            valuations, forms the 4095-point model on the type-A/B/C
 *            valuations, extends the induced J2:2 symmetry by one searched
 *            automorphism, and converts the group to its action on the 416
 *            embedded Hall-Janko suboctagons -> data/g24_2_416.txt
 *            (G2(4):2).
 *
 * Every choice is deterministic (fixed seeds, lexicographic candidate
 * order), so the emitted files are reproducible byte-for-byte.
 */
#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "embed.hpp"
#include "geometry.hpp"
#include "perm.hpp"
#include "search.hpp"
#include "valuations.hpp"

using namespace suz;

// ---------------------------------------------------------------------------
// GF(9) = GF(3)[t]/(t^2+1), element a+bt encoded as a+3b

namespace gf9 {

uint8_t add_t[9][9], mul_t[9][9], conj_t[9], neg_t[9];

void init() {
    for (int x = 0; x < 9; ++x) {
        int a = x % 3, b = x / 3;
        conj_t[x] = static_cast<uint8_t>(a + 3 * ((3 - b) % 3));
        neg_t[x] = static_cast<uint8_t>((3 - a) % 3 + 3 * ((3 - b) % 3));
        for (int y = 0; y < 9; ++y) {
            int c = y % 3, d = y / 3;
            add_t[x][y] = static_cast<uint8_t>((a + c) % 3 + 3 * ((b + d) % 3));
            // (a+bt)(c+dt) = ac - bd + (ad+bc) t
            int re = (a * c + 2 * b * d) % 3;
            int im = (a * d + b * c) % 3;
            mul_t[x][y] = static_cast<uint8_t>(re + 3 * im);
        }
    }
}

inline uint8_t add(uint8_t x, uint8_t y) { return add_t[x][y]; }
inline uint8_t mul(uint8_t x, uint8_t y) { return mul_t[x][y]; }
inline uint8_t conj(uint8_t x) { return conj_t[x]; }

using Vec = std::array<uint8_t, 3>;
using Mat = std::array<uint8_t, 9>;  // row-major

inline uint8_t herm(const Vec& u, const Vec& v) {
    uint8_t s = 0;
    for (int i = 0; i < 3; ++i) s = add(s, mul(u[i], conj(v[i])));
    return s;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i] = add(r[i], mul(m[3 * i + j], v[j]));
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint8_t s = 0;
            for (int k = 0; k < 3; ++k) s = add(s, mul(a[3 * i + k], b[3 * k + j]));
            r[3 * i + j] = s;
        }
    return r;
}

uint8_t det(const Mat& m) {
    auto mm = [&](int i, int j) { return m[3 * i + j]; };
    uint8_t s = 0;
    s = add(s, mul(mm(0, 0), add(mul(mm(1, 1), mm(2, 2)), neg_t[mul(mm(1, 2), mm(2, 1))])));
    s = add(s, neg_t[mul(mm(0, 1), add(mul(mm(1, 0), mm(2, 2)), neg_t[mul(mm(1, 2), mm(2, 0))]))]);
    s = add(s, mul(mm(0, 2), add(mul(mm(1, 0), mm(2, 1)), neg_t[mul(mm(1, 1), mm(2, 0))])));
    return s;
}

// columns orthonormal for the Hermitian form, so v -> Mv preserves it
bool is_unitary(const Mat& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint8_t s = 0;
            for (int k = 0; k < 3; ++k)
                s = add(s, mul(m[3 * k + i], conj(m[3 * k + j])));
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

Vec canonical(const Vec& v) {
    // scale so the first nonzero coordinate becomes 1
    int lead = -1;
    for (int i = 0; i < 3 && lead < 0; ++i)
        if (v[i]) lead = i;
    uint8_t inv = 0;
    for (int x = 1; x < 9; ++x)
        if (mul(v[lead], static_cast<uint8_t>(x)) == 1) inv = static_cast<uint8_t>(x);
    Vec r;
    for (int i = 0; i < 3; ++i) r[i] = mul(v[i], inv);
    return r;
}

}  // namespace gf9

// the 63 non-isotropic projective points, in lexicographic canonical order
static std::vector<gf9::Vec> nonisotropic_points() {
    std::set<gf9::Vec> pts;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) {
                gf9::Vec v{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                           static_cast<uint8_t>(c)};
                if (!a && !b && !c) continue;
                if (gf9::herm(v, v) == 0) continue;
                pts.insert(gf9::canonical(v));
            }
    return {pts.begin(), pts.end()};
}

static Perm matrix_to_perm(const gf9::Mat& m, const std::vector<gf9::Vec>& pts) {
    std::map<gf9::Vec, uint16_t> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<uint16_t>(i);
    std::vector<uint16_t> images(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        images[i] = index.at(gf9::canonical(gf9::mat_apply(m, pts[i])));
    return Perm(std::move(images));
}

// all vectors of Hermitian norm 1, lexicographic
static std::vector<gf9::Vec> norm_one_vectors() {
    std::vector<gf9::Vec> out;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) {
                gf9::Vec v{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                           static_cast<uint8_t>(c)};
                if (gf9::herm(v, v) == 1) out.push_back(v);
            }
    return out;
}

// deterministic enumeration of special-unitary matrices via orthonormal columns
static std::vector<gf9::Mat> some_su_matrices(size_t want) {
    std::vector<gf9::Mat> out;
    auto ones = norm_one_vectors();
    for (const auto& c0 : ones) {
        for (const auto& c1 : ones) {
            if (gf9::herm(c1, c0) != 0) continue;
            for (const auto& c2 : ones) {
                if (gf9::herm(c2, c0) != 0 || gf9::herm(c2, c1) != 0) continue;
                gf9::Mat m;
                for (int i = 0; i < 3; ++i) {
                    m[3 * i + 0] = c0[i];
                    m[3 * i + 1] = c1[i];
                    m[3 * i + 2] = c2[i];
                }
                uint8_t d = gf9::det(m);
                // rescale the last column by a norm-1 scalar to reach det 1
                for (uint8_t lambda : {1, 2, 3, 6}) {
                    if (gf9::mul(d, lambda) == 1) {
                        for (int i = 0; i < 3; ++i)
                            m[3 * i + 2] = gf9::mul(m[3 * i + 2], lambda);
                        break;
                    }
                }
                if (gf9::det(m) != 1 || !gf9::is_unitary(m)) continue;
                out.push_back(m);
                if (out.size() >= want) return out;
                break;  // one matrix per (c0, c1) is plenty
            }
            break;  // and one c1 per c0
        }
    }
    return out;
}

static size_t group_closure_size(const std::vector<Perm>& gens, size_t cap) {
    std::unordered_map<Perm, int, PermHash> seen;
    std::vector<Perm> queue{Perm::identity(gens[0].degree())};
    seen.emplace(queue[0], 0);
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const Perm& g : gens) {
            Perm n = compose(queue[head], g);
            if (seen.emplace(n, 0).second) {
                if (seen.size() > cap) return seen.size();
                queue.push_back(n);
            }
        }
    }
    return seen.size();
}

static void stage1(const std::string& data_dir) {
    gf9::init();
    auto pts = nonisotropic_points();
    if (pts.size() != 63) {
        std::fprintf(stderr, "expected 63 non-isotropic points, got %zu\n", pts.size());
        std::exit(1);
    }
    auto mats = some_su_matrices(40);
    std::vector<Perm> perms;
    for (const auto& m : mats) perms.push_back(matrix_to_perm(m, pts));

    // find two permutations generating the full group of order 6048
    const size_t order = 6048;
    std::pair<int, int> chosen{-1, -1};
    for (size_t i = 0; i < perms.size() && chosen.first < 0; ++i)
        for (size_t j = i + 1; j < perms.size(); ++j) {
            if (perms[i].is_identity() || perms[j].is_identity()) continue;
            if (group_closure_size({perms[i], perms[j]}, order + 1) == order) {
                chosen = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }
        }
    if (chosen.first < 0) {
        std::fprintf(stderr, "no generating pair found for U3(3)\n");
        std::exit(1);
    }
    GeneratorSet u33;
    u33.degree = 63;
    u33.label = "U3(3) on the 63 non-isotropic points of the Hermitian geometry";
    u33.generators = {perms[chosen.first], perms[chosen.second]};
    write_generators(u33, data_dir + "/u33_63.txt");

    // field automorphism x -> x^3, applied coordinatewise
    std::map<gf9::Vec, uint16_t> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<uint16_t>(i);
    std::vector<uint16_t> frob(63);
    for (size_t i = 0; i < pts.size(); ++i) {
        gf9::Vec v{gf9::conj(pts[i][0]), gf9::conj(pts[i][1]), gf9::conj(pts[i][2])};
        frob[i] = index.at(gf9::canonical(v));
    }
    GeneratorSet ext = u33;
    ext.label = "U3(3).2 = G2(2): the above plus the field automorphism";
    ext.generators.push_back(Perm(std::move(frob)));
    if (group_closure_size(ext.generators, 2 * order + 1) != 2 * order) {
        std::fprintf(stderr, "extended group does not have order 12096\n");
        std::exit(1);
    }
    write_generators(ext, data_dir + "/u33_2_63.txt");
    std::printf("stage 1 done: u33_63.txt (order %zu), u33_2_63.txt (order %zu)\n",
                order, 2 * order);
}

// ---------------------------------------------------------------------------
// shared helpers for stages 2 and 3

// permutation of line indices induced by a point permutation
static Perm perm_on_lines(const Geometry& g, const Perm& p) {
    std::map<std::vector<uint16_t>, uint16_t> index;
    for (int l = 0; l < g.num_lines(); ++l)
        index[g.line(l)] = static_cast<uint16_t>(l);
    std::vector<uint16_t> images(g.num_lines());
    for (int l = 0; l < g.num_lines(); ++l) {
        std::vector<uint16_t> img;
        for (uint16_t q : g.line(l)) img.push_back(p(q));
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end()) throw std::runtime_error("not a geometry automorphism");
        images[l] = it->second;
    }
    return Perm(std::move(images));
}

// action of a base-geometry automorphism on an indexed valuation set
static Perm perm_on_valuations(const ValuationSet& vs, const Perm& theta) {
    std::vector<uint16_t> images(vs.size());
    const int n = theta.degree();
    for (size_t i = 0; i < vs.size(); ++i) {
        const ValueVector& v = vs.values(static_cast<int32_t>(i));
        ValueVector w(n);
        for (int x = 0; x < n; ++x) w[theta(static_cast<uint16_t>(x))] = v[x];
        int32_t j = vs.index_of(w);
        if (j < 0) throw std::runtime_error("valuation set not closed under action");
        images[i] = static_cast<uint16_t>(j);
    }
    return Perm(std::move(images));
}

// restriction of a valuation-set permutation to the points of a model
static Perm restrict_to_model(const ModelGeometry& model, const Perm& on_vals) {
    std::vector<int32_t> to_model(on_vals.degree(), -1);
    for (size_t i = 0; i < model.point_to_valuation.size(); ++i)
        to_model[model.point_to_valuation[i]] = static_cast<int32_t>(i);
    std::vector<uint16_t> images(model.point_to_valuation.size());
    for (size_t i = 0; i < model.point_to_valuation.size(); ++i) {
        int32_t j = to_model[on_vals(static_cast<uint16_t>(model.point_to_valuation[i]))];
        if (j < 0) throw std::runtime_error("model point set not closed under action");
        images[i] = static_cast<uint16_t>(j);
    }
    return Perm(std::move(images));
}

static void check_geometry_automorphism(const Geometry& g, const Perm& p) {
    perm_on_lines(g, p);  // throws if some line image is not a line
}

// orbit of a sorted point subset under a permutation group; returns the sets
// and the action of each generator on them
struct SubsetOrbit {
    std::vector<std::vector<uint16_t>> sets;
    std::vector<Perm> action;  // one per generator, degree = sets.size()
};
static SubsetOrbit subset_orbit(const std::vector<Perm>& gens,
                                std::vector<uint16_t> start, size_t cap) {
    SubsetOrbit out;
    std::map<std::vector<uint16_t>, uint16_t> index;
    std::sort(start.begin(), start.end());
    index[start] = 0;
    out.sets.push_back(start);
    for (size_t head = 0; head < out.sets.size(); ++head) {
        auto cur = out.sets[head];
        for (const Perm& g : gens) {
            std::vector<uint16_t> img;
            for (uint16_t x : cur) img.push_back(g(x));
            std::sort(img.begin(), img.end());
            if (index.emplace(img, static_cast<uint16_t>(out.sets.size())).second) {
                out.sets.push_back(img);
                if (out.sets.size() > cap)
                    throw std::runtime_error("subset orbit exceeded cap");
            }
        }
    }
    for (const Perm& g : gens) {
        std::vector<uint16_t> images(out.sets.size());
        for (size_t i = 0; i < out.sets.size(); ++i) {
            std::vector<uint16_t> img;
            for (uint16_t x : out.sets[i]) img.push_back(g(x));
            std::sort(img.begin(), img.end());
            images[i] = index.at(img);
        }
        out.action.push_back(Perm(std::move(images)));
    }
    return out;
}

// one automorphism of g mapping point a to point b, found by seeded search
static Perm find_automorphism(const Geometry& g, int a, int b, uint64_t budget) {
    MappingOptions opts;
    opts.bijective = true;
    opts.node_budget = budget;
    opts.seeds = {{a, b}};
    MappingResult r = find_point_mapping(g, g, opts);
    if (r.outcome != SearchOutcome::Found)
        throw std::runtime_error(std::string("automorphism search: ") +
                                 search_outcome_name(r.outcome));
    std::vector<uint16_t> images(r.map.begin(), r.map.end());
    return Perm(std::move(images));
}

static ValuationSetPtr enumerate_typed(GeometryPtr geom,
                                       const std::vector<ExpectedValuationRow>& table,
                                       int threads, const std::string& checkpoint) {
    EnumerateOptions opts;
    opts.threads = threads;
    opts.checkpoint_file = checkpoint;
    opts.progress = [](int root, size_t found) {
        if (root % 16 == 0)
            std::fprintf(stderr, "  root %d: %zu valuations\n", root, found);
    };
    auto vals = enumerate_valuations(*geom, opts);
    auto vs = std::make_shared<ValuationSet>(geom, std::move(vals));
    auto ta = vs->assign_types(table);
    if (!ta.ok) throw std::runtime_error("type assignment failed: " + ta.witness);
    return vs;
}

static void stage2(const std::string& data_dir, int threads) {
    GeneratorSet u33 = load_generators(data_dir + "/u33_63.txt");
    GeneratorSet ext = load_generators(data_dir + "/u33_2_63.txt");
    HexagonPair hexes = build_hexagons_2_2(u33, 200000000ULL);
    std::printf("hexagons built; triangle geometry is %s\n",
                hexes.triangles_geometry_is_h2d ? "h2d" : "h2");

    auto vs = enumerate_typed(hexes.h2d.geometry, h2d_expected_profile(), threads, "");
    std::printf("h2d valuations: %zu\n", vs->size());

    ValuationGeometry vg = build_valuation_geometry(vs, threads);
    ModelGeometry model =
        subgeometry_by_types(vg, "AB", {"AAA", "ABB", "BBB"}, "hj-model");
    std::printf("model: %d points, %d lines\n", model.geom->num_points(),
                model.geom->num_lines());

    // G2(2) acting on the hexagon permutes its valuations, hence the model
    std::vector<Perm> model_gens;
    for (const Perm& base : ext.generators) {
        Perm on_points = hexes.triangles_geometry_is_h2d
                             ? base
                             : perm_on_lines(*hexes.h2.geometry, base);
        // when h2d is the dual, automorphisms act via line indices of the
        // triangle geometry; either way this must be an automorphism of h2d
        check_geometry_automorphism(*hexes.h2d.geometry, on_points);
        model_gens.push_back(restrict_to_model(model, perm_on_valuations(*vs, on_points)));
    }

    int a_point = -1, b_point = -1;
    for (size_t i = 0; i < model.point_to_valuation.size() && (a_point < 0 || b_point < 0); ++i) {
        char t = vs->type_of(model.point_to_valuation[i]);
        if (t == 'A' && a_point < 0) a_point = static_cast<int>(i);
        if (t == 'B' && b_point < 0) b_point = static_cast<int>(i);
    }
    std::printf("searching for an automorphism moving point %d (type A) to %d (type B)\n",
                a_point, b_point);
    Perm extra = find_automorphism(*model.geom, a_point, b_point, 2000000000ULL);
    model_gens.push_back(extra);

    // the 100 embedded hexagons: orbit of the type-A point set
    std::vector<uint16_t> a_set;
    for (size_t i = 0; i < model.point_to_valuation.size(); ++i)
        if (vs->type_of(model.point_to_valuation[i]) == 'A')
            a_set.push_back(static_cast<uint16_t>(i));
    SubsetOrbit orbit = subset_orbit(model_gens, a_set, 100);
    if (orbit.sets.size() != 100)
        throw std::runtime_error("hexagon-copy orbit has size " +
                                 std::to_string(orbit.sets.size()) + ", expected 100");

    GeneratorSet j2_2;
    j2_2.degree = 100;
    j2_2.label = "J2.2 on the 100 embedded hexagons of the Hall-Janko near octagon";
    for (const Perm& p : orbit.action)
        if (!p.is_identity()) j2_2.generators.push_back(p);
    write_generators(j2_2, data_dir + "/j2_2_100.txt");

    // commutators land in the simple group of index 2
    Rng64 rng(8517);
    auto random_word = [&](const std::vector<Perm>& gens) {
        Perm w = gens[rng.below(gens.size())];
        size_t len = 2 + rng.below(12);
        for (size_t i = 0; i < len; ++i) w = compose(w, gens[rng.below(gens.size())]);
        return w;
    };
    GeneratorSet j2;
    j2.degree = 100;
    j2.label = "J2 on 100 points (commutator generators)";
    for (int tries = 0; tries < 200 && j2.generators.size() < 3; ++tries) {
        Perm x = random_word(j2_2.generators), y = random_word(j2_2.generators);
        Perm c = compose(compose(inverse(x), inverse(y)), compose(x, y));
        if (!c.is_identity()) j2.generators.push_back(c);
    }
    // sanity: the subgroup must still reach the 315-involution class
    auto inv = find_class_involution(j2, 315, 4000, 12345);
    if (!inv) throw std::runtime_error("no 315-class found for the commutator group");
    auto orbs = orbital_graphs(j2);
    std::string valencies;
    for (const auto& og : orbs) valencies += std::to_string(og.valency) + " ";
    std::printf("j2 orbital valencies: %s\n", valencies.c_str());
    if (orbs.size() != 2 || orbs[0].valency != 36 || orbs[1].valency != 63)
        throw std::runtime_error("100-point orbital valencies are not {36, 63}");
    write_generators(j2, data_dir + "/j2_100.txt");
    std::printf("stage 2 done: j2_100.txt, j2_2_100.txt\n");
}

static void stage3(const std::string& data_dir, int threads) {
    GeneratorSet j2 = load_generators(data_dir + "/j2_100.txt");
    GeneratorSet j2_2 = load_generators(data_dir + "/j2_2_100.txt");
    HjBuild hj = build_hj(j2, 12345, 4000);
    std::printf("hj built: %d points, %d lines (rejected pairs %zu)\n",
                hj.named.geometry->num_points(), hj.named.geometry->num_lines(),
                hj.rejected_pairs);

    auto vs = enumerate_typed(hj.named.geometry, hj_expected_profile(), threads,
                              data_dir + "/hj_vals.checkpoint");
    std::printf("hj valuations: %zu\n", vs->size());

    auto vg = build_valuation_geometry(vs, threads);
    ModelGeometry model = subgeometry_by_types(
        vg, "ABC", {"AAA", "ABB", "ACC", "BBC", "CCC"}, "g24-model");
    std::printf("model: %d points, %d lines\n", model.geom->num_points(),
                model.geom->num_lines());

    // J2:2 conjugation permutes the 315 involution points of hj
    std::vector<Perm> model_gens;
    for (const Perm& g : j2_2.generators) {
        std::vector<uint16_t> images(hj.cls->size());
        for (size_t i = 0; i < hj.cls->size(); ++i) {
            int32_t j = hj.cls->find(conjugate(hj.cls->elements[i], g));
            if (j < 0) throw std::runtime_error("class not closed under J2:2");
            images[i] = static_cast<uint16_t>(j);
        }
        Perm on_points(std::move(images));
        check_geometry_automorphism(*hj.named.geometry, on_points);
        model_gens.push_back(restrict_to_model(model, perm_on_valuations(*vs, on_points)));
    }

    int a_point = -1, b_point = -1;
    for (size_t i = 0; i < model.point_to_valuation.size() && (a_point < 0 || b_point < 0); ++i) {
        char t = vs->type_of(model.point_to_valuation[i]);
        if (t == 'A' && a_point < 0) a_point = static_cast<int>(i);
        if (t == 'B' && b_point < 0) b_point = static_cast<int>(i);
    }
    std::printf("searching for an automorphism moving point %d (type A) to %d (type B)\n",
                a_point, b_point);
    Perm extra = find_automorphism(*model.geom, a_point, b_point, 4000000000ULL);
    model_gens.push_back(extra);

    std::vector<uint16_t> a_set;
    for (size_t i = 0; i < model.point_to_valuation.size(); ++i)
        if (vs->type_of(model.point_to_valuation[i]) == 'A')
            a_set.push_back(static_cast<uint16_t>(i));
    SubsetOrbit orbit = subset_orbit(model_gens, a_set, 416);
    if (orbit.sets.size() != 416)
        throw std::runtime_error("suboctagon-copy orbit has size " +
                                 std::to_string(orbit.sets.size()) + ", expected 416");

    GeneratorSet g24;
    g24.degree = 416;
    g24.label = "G2(4):2 on the 416 embedded Hall-Janko suboctagons";
    for (const Perm& p : orbit.action)
        if (!p.is_identity()) g24.generators.push_back(p);
    write_generators(g24, data_dir + "/g24_2_416.txt");
    std::printf("stage 3 done: g24_2_416.txt (%zu generators)\n",
                g24.generators.size());

    // full downstream verification
    G24Build check = build_g24(g24, 12345, 4000);
    NearPolygonVerdict np = is_near_polygon(*check.named.geometry);
    OrderResult ord = order_of(*check.named.geometry);
    std::printf("verified: %d points, %d lines, near polygon %d (diameter %d), "
                "order (%d,%d)\n",
                check.named.geometry->num_points(), check.named.geometry->num_lines(),
                np.ok, np.diameter, ord.s, ord.t);
    if (!np.ok || np.diameter != 4 || ord.s != 2 || ord.t != 10)
        throw std::runtime_error("generated g24 group fails verification");
}

int main(int argc, char** argv) {
    std::string data_dir = "data";
    int stage = 0;
    int threads = 1;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--stage" && i + 1 < argc) stage = std::atoi(argv[++i]);
        else if (arg == "--data" && i + 1 < argc) data_dir = argv[++i];
        else if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr,
                         "usage: bootstrap_groups --stage 1|2|3 [--data DIR] "
                         "[--threads N]\n");
            return 2;
        }
    }
    try {
        if (stage == 1) stage1(data_dir);
        else if (stage == 2) stage2(data_dir, threads);
        else if (stage == 3) stage3(data_dir, threads);
        else {
            std::fprintf(stderr, "missing --stage\n");
            return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

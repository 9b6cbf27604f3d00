#include "geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace suz {

DistanceMatrix::DistanceMatrix(int n, std::vector<uint8_t> d)
    : n_(n), d_(std::move(d)) {
    for (size_t idx = 0; idx < d_.size(); ++idx) {
        if (d_[idx] == kUnreachable)
            connected_ = false;
        else if (d_[idx] > diameter_)
            diameter_ = d_[idx];
    }
}

static uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

Geometry::Geometry(int num_points, std::vector<std::vector<uint16_t>> lines,
                   std::string label)
    : num_points_(num_points), lines_(std::move(lines)), label_(std::move(label)) {
    if (num_points_ <= 0 || num_points_ > 65535)
        throw std::invalid_argument("point count out of range");
    std::unordered_set<uint64_t> pairs;
    std::set<std::vector<uint16_t>> seen_lines;
    for (auto& ln : lines_) {
        std::sort(ln.begin(), ln.end());
        if (ln.size() < 2) throw std::invalid_argument("line with fewer than 2 points");
        for (size_t i = 0; i < ln.size(); ++i) {
            if (ln[i] >= num_points_) throw std::invalid_argument("line point out of range");
            if (i > 0 && ln[i] == ln[i - 1])
                throw std::invalid_argument("line with a repeated point");
        }
        if (!seen_lines.insert(ln).second)
            throw std::invalid_argument("duplicate line");
        for (size_t i = 0; i < ln.size(); ++i)
            for (size_t j = i + 1; j < ln.size(); ++j)
                if (!pairs.insert(pair_key(ln[i], ln[j])).second)
                    throw std::invalid_argument(
                        "not a partial linear space: two points on two common lines");
    }
    std::sort(lines_.begin(), lines_.end());
    lines_through_.resize(num_points_);
    neighbors_.resize(num_points_);
    for (size_t l = 0; l < lines_.size(); ++l)
        for (uint16_t p : lines_[l]) lines_through_[p].push_back(static_cast<int32_t>(l));
    for (int p = 0; p < num_points_; ++p) {
        for (int32_t l : lines_through_[p])
            for (uint16_t q : lines_[l])
                if (q != p) neighbors_[p].push_back(q);
        std::sort(neighbors_[p].begin(), neighbors_[p].end());
    }
}

int32_t Geometry::line_between(int p, int q) const {
    for (int32_t l : lines_through_[p])
        if (std::binary_search(lines_[l].begin(), lines_[l].end(),
                               static_cast<uint16_t>(q)))
            return l;
    return -1;
}

bool Geometry::uniform_line_size(int* size_out) const {
    if (lines_.empty()) return false;
    size_t sz = lines_[0].size();
    for (const auto& ln : lines_)
        if (ln.size() != sz) return false;
    if (size_out) *size_out = static_cast<int>(sz);
    return true;
}

const DistanceMatrix& Geometry::distances() const {
    std::lock_guard<std::mutex> lock(dist_mutex_);
    if (!dist_) {
        const int n = num_points_;
        std::vector<uint8_t> d(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
        std::vector<uint16_t> queue(n);
        for (int s = 0; s < n; ++s) {
            uint8_t* row = d.data() + static_cast<size_t>(s) * n;
            int head = 0, tail = 0;
            row[s] = 0;
            queue[tail++] = static_cast<uint16_t>(s);
            while (head < tail) {
                uint16_t u = queue[head++];
                uint8_t du = row[u];
                for (uint16_t v : neighbors_[u]) {
                    if (row[v] == DistanceMatrix::kUnreachable) {
                        row[v] = static_cast<uint8_t>(du + 1);
                        queue[tail++] = v;
                    }
                }
            }
        }
        dist_ = std::make_unique<DistanceMatrix>(n, std::move(d));
    }
    return *dist_;
}

OrderResult order_of(const Geometry& g) {
    OrderResult res;
    if (g.num_lines() == 0) {
        res.witness = "geometry has no lines";
        return res;
    }
    size_t line_size = g.line(0).size();
    for (int l = 0; l < g.num_lines(); ++l)
        if (g.line(l).size() != line_size) {
            res.witness = "line " + std::to_string(l) + " has " +
                          std::to_string(g.line(l).size()) + " points, expected " +
                          std::to_string(line_size);
            return res;
        }
    int degree = g.degree(0);
    for (int p = 0; p < g.num_points(); ++p)
        if (g.degree(p) != degree) {
            res.witness = "point " + std::to_string(p) + " lies on " +
                          std::to_string(g.degree(p)) + " lines, expected " +
                          std::to_string(degree);
            return res;
        }
    res.has_order = true;
    res.s = static_cast<int>(line_size) - 1;
    res.t = degree - 1;
    return res;
}

NearPolygonVerdict is_near_polygon(const Geometry& g) {
    NearPolygonVerdict res;
    const DistanceMatrix& dm = g.distances();
    res.connected = dm.connected();
    if (!res.connected) {
        res.witness = "collinearity graph is disconnected";
        return res;
    }
    res.diameter = dm.diameter();
    for (int x = 0; x < g.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        for (int l = 0; l < g.num_lines(); ++l) {
            uint8_t best = DistanceMatrix::kUnreachable;
            int count = 0;
            for (uint16_t p : g.line(l)) {
                uint8_t d = row[p];
                if (d < best) {
                    best = d;
                    count = 1;
                } else if (d == best) {
                    ++count;
                }
            }
            if (count != 1) {
                res.witness = "point " + std::to_string(x) + " has " +
                              std::to_string(count) + " nearest points on line " +
                              std::to_string(l);
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

GeneralizedPolygonVerdict is_generalized_polygon(const Geometry& g) {
    GeneralizedPolygonVerdict res;
    const DistanceMatrix& dm = g.distances();
    res.diameter = dm.diameter();
    for (int x = 0; x < g.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        for (int y = 0; y < g.num_points(); ++y) {
            uint8_t i = row[y];
            if (i < 1 || i >= res.diameter) continue;
            int count = 0;
            for (uint16_t z : g.neighbors(y))
                if (row[z] == i - 1) ++count;
            if (count != 1) {
                res.witness = "points " + std::to_string(x) + "," + std::to_string(y) +
                              " at distance " + std::to_string(int(i)) + " have " +
                              std::to_string(count) + " back-neighbors";
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::string IntersectionArrayResult::to_string() const {
    if (!distance_regular) return "not distance-regular";
    std::ostringstream ss;
    ss << "{";
    for (size_t i = 0; i < b.size(); ++i) ss << (i ? ", " : "") << b[i];
    ss << "; ";
    for (size_t i = 0; i < c.size(); ++i) ss << (i ? ", " : "") << c[i];
    ss << "}";
    return ss.str();
}

IntersectionArrayResult intersection_array(const Geometry& g) {
    IntersectionArrayResult res;
    const DistanceMatrix& dm = g.distances();
    if (!dm.connected()) {
        res.witness = "graph is disconnected";
        return res;
    }
    int d = dm.diameter();
    res.b.assign(d, -1);
    res.c.assign(d, -1);
    for (int x = 0; x < g.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        for (int y = 0; y < g.num_points(); ++y) {
            int dist = row[y];
            int up = 0, down = 0;
            for (uint16_t z : g.neighbors(y)) {
                if (row[z] == dist + 1) ++up;
                else if (row[z] + 1 == dist) ++down;
            }
            if (dist < d) {
                int& slot = res.b[dist];
                if (slot < 0) slot = up;
                else if (slot != up) {
                    res.witness = "b_" + std::to_string(dist) + " differs at pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")";
                    res.b.clear(); res.c.clear();
                    return res;
                }
            } else if (up != 0) {
                res.witness = "neighbor beyond diameter at pair (" + std::to_string(x) +
                              "," + std::to_string(y) + ")";
                res.b.clear(); res.c.clear();
                return res;
            }
            if (dist >= 1) {
                int& slot = res.c[dist - 1];
                if (slot < 0) slot = down;
                else if (slot != down) {
                    res.witness = "c_" + std::to_string(dist) + " differs at pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")";
                    res.b.clear(); res.c.clear();
                    return res;
                }
            }
        }
    }
    res.distance_regular = true;
    return res;
}

CountIdentityVerdict check_count_identity(const Geometry& g) {
    CountIdentityVerdict res;
    OrderResult ord = order_of(g);
    if (!ord.has_order) {
        res.witness = "geometry has no order: " + ord.witness;
        return res;
    }
    const DistanceMatrix& dm = g.distances();
    int d = dm.diameter();
    // sum over y of (-1)^{d(x,y)} * s^{diam - d(x,y)} must be 0
    std::vector<int64_t> weight(d + 1);
    for (int i = 0; i <= d; ++i) {
        int64_t w = 1;
        for (int k = 0; k < d - i; ++k) w *= ord.s;
        weight[i] = (i % 2 == 0) ? w : -w;
    }
    for (int x = 0; x < g.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        int64_t sum = 0;
        for (int y = 0; y < g.num_points(); ++y) sum += weight[row[y]];
        if (sum != 0) {
            res.witness = "point " + std::to_string(x) + ": scaled sum " +
                          std::to_string(sum) + " != 0";
            return res;
        }
    }
    res.ok = true;
    return res;
}

std::vector<uint16_t> convex_closure(const Geometry& g,
                                     std::vector<uint16_t> seed, int size_cap) {
    const DistanceMatrix& dm = g.distances();
    std::vector<bool> in(g.num_points(), false);
    std::vector<uint16_t> members;
    auto add = [&](uint16_t p) {
        if (!in[p]) {
            in[p] = true;
            members.push_back(p);
        }
    };
    for (uint16_t p : seed) add(p);
    bool changed = true;
    while (changed) {
        changed = false;
        size_t before = members.size();
        // geodesic closure
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                uint16_t a = members[i], b = members[j];
                uint8_t dab = dm.at(a, b);
                if (dab <= 1 || dab == DistanceMatrix::kUnreachable) continue;
                const uint8_t* ra = dm.row(a);
                const uint8_t* rb = dm.row(b);
                for (int z = 0; z < g.num_points(); ++z)
                    if (!in[z] && ra[z] + rb[z] == dab) add(static_cast<uint16_t>(z));
            }
        }
        // line closure
        for (int l = 0; l < g.num_lines(); ++l) {
            int cnt = 0;
            for (uint16_t p : g.line(l)) cnt += in[p];
            if (cnt >= 2 && cnt < static_cast<int>(g.line(l).size()))
                for (uint16_t p : g.line(l)) add(p);
        }
        changed = members.size() != before;
        if (size_cap >= 0 && static_cast<int>(members.size()) > size_cap) break;
    }
    std::sort(members.begin(), members.end());
    return members;
}

const char* quad_kind_name(QuadKind k) {
    switch (k) {
        case QuadKind::Grid: return "grid";
        case QuadKind::W2: return "W2";
        case QuadKind::Q52: return "Q52";
    }
    return "?";
}

Geometry induced_subgeometry(const Geometry& g,
                             const std::vector<uint16_t>& points,
                             std::string label) {
    std::vector<int32_t> newindex(g.num_points(), -1);
    for (size_t i = 0; i < points.size(); ++i) newindex[points[i]] = static_cast<int32_t>(i);
    std::vector<std::vector<uint16_t>> lines;
    for (int l = 0; l < g.num_lines(); ++l) {
        bool inside = true;
        for (uint16_t p : g.line(l))
            if (newindex[p] < 0) { inside = false; break; }
        if (!inside) continue;
        std::vector<uint16_t> ln;
        for (uint16_t p : g.line(l)) ln.push_back(static_cast<uint16_t>(newindex[p]));
        lines.push_back(std::move(ln));
    }
    return Geometry(static_cast<int>(points.size()), std::move(lines), std::move(label));
}

// non-degenerate generalized quadrangle test for an induced candidate quad
static bool is_nondegenerate_gq(const Geometry& q) {
    OrderResult ord = order_of(q);
    if (!ord.has_order || ord.s < 1 || ord.t < 1) return false;
    const DistanceMatrix& dm = q.distances();
    if (!dm.connected() || dm.diameter() != 2) return false;
    // GQ axiom: for every non-incident point-line pair, exactly one point of
    // the line is collinear with the point
    for (int x = 0; x < q.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        for (int l = 0; l < q.num_lines(); ++l) {
            int on_line = 0, collinear = 0;
            for (uint16_t p : q.line(l)) {
                if (p == x) ++on_line;
                else if (row[p] == 1) ++collinear;
            }
            if (!on_line && collinear != 1) return false;
        }
    }
    return true;
}

std::vector<Quad> find_quads(const Geometry& g) {
    const DistanceMatrix& dm = g.distances();
    std::set<std::vector<uint16_t>> seen;
    std::vector<Quad> quads;
    for (int x = 0; x < g.num_points(); ++x) {
        const uint8_t* row = dm.row(x);
        for (int y = x + 1; y < g.num_points(); ++y) {
            if (row[y] != 2) continue;
            int common = 0;
            for (uint16_t z : g.neighbors(y))
                if (row[z] == 1) ++common;
            if (common < 2) continue;
            // quads with 3-point lines have at most 27 points (order (2,4))
            auto closure = convex_closure(g, {static_cast<uint16_t>(x), static_cast<uint16_t>(y)}, 27);
            if (closure.size() > 27) continue;
            if (!seen.insert(closure).second) continue;
            Geometry sub = induced_subgeometry(g, closure, "quad-candidate");
            if (!is_nondegenerate_gq(sub)) continue;
            OrderResult ord = order_of(sub);
            QuadKind kind;
            if (ord.s == 2 && ord.t == 1) kind = QuadKind::Grid;
            else if (ord.s == 2 && ord.t == 2) kind = QuadKind::W2;
            else if (ord.s == 2 && ord.t == 4) kind = QuadKind::Q52;
            else continue;  // not a quad of a 3-points-per-line near polygon
            quads.push_back(Quad{closure, kind});
        }
    }
    return quads;
}

Geometry dual(const Geometry& g) {
    std::vector<std::vector<uint16_t>> lines(g.num_points());
    for (int p = 0; p < g.num_points(); ++p) {
        if (g.degree(p) < 2)
            throw std::invalid_argument("dual undefined: point " + std::to_string(p) +
                                        " lies on fewer than 2 lines");
        for (int32_t l : g.lines_through(p)) lines[p].push_back(static_cast<uint16_t>(l));
    }
    return Geometry(g.num_lines(), std::move(lines), g.label() + "^D");
}

Geometry direct_product(const Geometry& a, const Geometry& b, std::string label) {
    const int nb = b.num_points();
    std::vector<std::vector<uint16_t>> lines;
    for (int p = 0; p < a.num_points(); ++p)
        for (const auto& lb : b.lines()) {
            std::vector<uint16_t> ln;
            for (uint16_t q : lb) ln.push_back(static_cast<uint16_t>(p * nb + q));
            lines.push_back(std::move(ln));
        }
    for (const auto& la : a.lines())
        for (int q = 0; q < nb; ++q) {
            std::vector<uint16_t> ln;
            for (uint16_t p : la) ln.push_back(static_cast<uint16_t>(p * nb + q));
            lines.push_back(std::move(ln));
        }
    return Geometry(a.num_points() * nb, std::move(lines), std::move(label));
}

Geometry triangles_as_lines(int num_vertices,
                            const std::vector<std::pair<uint16_t, uint16_t>>& edges,
                            std::string label) {
    std::vector<std::vector<uint16_t>> adj(num_vertices);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::set<std::vector<uint16_t>> tris;
    for (auto [u, v] : edges) {
        std::vector<uint16_t> common;
        std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(),
                              adj[v].end(), std::back_inserter(common));
        if (common.size() != 1)
            throw std::runtime_error("edge (" + std::to_string(u) + "," +
                                     std::to_string(v) + ") lies in " +
                                     std::to_string(common.size()) +
                                     " triangles, expected exactly 1");
        std::vector<uint16_t> tri{u, v, common[0]};
        std::sort(tri.begin(), tri.end());
        tris.insert(tri);
    }
    std::vector<std::vector<uint16_t>> lines(tris.begin(), tris.end());
    return Geometry(num_vertices, std::move(lines), std::move(label));
}

std::vector<OrbitalGraph> orbital_graphs(const GeneratorSet& gens) {
    const int n = gens.degree;
    // transitivity via point-orbit closure from 0
    {
        std::vector<bool> seen(n, false);
        std::deque<int> queue{0};
        seen[0] = true;
        int count = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const Perm& g : gens.generators) {
                int v = g(static_cast<uint16_t>(u));
                if (!seen[v]) {
                    seen[v] = true;
                    ++count;
                    queue.push_back(v);
                }
            }
        }
        if (count != n) throw std::runtime_error("action is not transitive");
    }
    std::vector<bool> visited(static_cast<size_t>(n) * n, false);
    auto vis = [&](int a, int b) -> std::vector<bool>::reference {
        return visited[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
    };
    std::vector<OrbitalGraph> out;
    for (int q = 1; q < n; ++q) {
        if (vis(0, q)) continue;
        OrbitalGraph og;
        std::deque<std::pair<uint16_t, uint16_t>> queue;
        vis(0, q) = true;
        queue.emplace_back(0, static_cast<uint16_t>(q));
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            og.edges.emplace_back(std::min(a, b), std::max(a, b));
            for (const Perm& g : gens.generators) {
                uint16_t ga = g(a), gb = g(b);
                if (!vis(ga, gb)) {
                    vis(ga, gb) = true;
                    queue.emplace_back(ga, gb);
                }
            }
        }
        int deg0 = 0;
        for (auto [a, b] : og.edges) deg0 += (a == 0) + (b == 0);
        og.valency = deg0;
        std::sort(og.edges.begin(), og.edges.end());
        out.push_back(std::move(og));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitalGraph& a, const OrbitalGraph& b) {
                  return a.valency < b.valency;
              });
    return out;
}

}  // namespace suz

#include "valuations.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace suz {

ValuationVerdict is_valuation(const Geometry& g, const ValueVector& values) {
    ValuationVerdict res;
    if (static_cast<int>(values.size()) != g.num_points()) {
        res.witness = "value vector has wrong length";
        return res;
    }
    uint8_t mn = 255;
    for (uint8_t v : values) mn = std::min(mn, v);
    if (mn != 0) {
        res.witness = "minimum value is " + std::to_string(int(mn)) + ", not 0";
        return res;
    }
    for (int l = 0; l < g.num_lines(); ++l) {
        const auto& ln = g.line(l);
        if (ln.size() != 3) {
            res.witness = "line " + std::to_string(l) + " does not have 3 points";
            return res;
        }
        std::array<uint8_t, 3> v{values[ln[0]], values[ln[1]], values[ln[2]]};
        std::sort(v.begin(), v.end());
        if (!(v[1] == v[0] + 1 && v[2] == v[0] + 1)) {
            res.witness = "line " + std::to_string(l) + " carries values {" +
                          std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                          std::to_string(v[2]) + "}";
            return res;
        }
    }
    res.ok = true;
    return res;
}

ValueVector classical_valuation(const Geometry& g, int center) {
    const DistanceMatrix& dm = g.distances();
    ValueVector v(g.num_points());
    const uint8_t* row = dm.row(center);
    for (int i = 0; i < g.num_points(); ++i) v[i] = row[i];
    return v;
}

ValuationSignature signature_of(const ValueVector& values, int diameter) {
    ValuationSignature s;
    s.distribution.assign(diameter + 1, 0);
    for (uint8_t v : values) {
        s.max_value = std::max<int>(s.max_value, v);
        ++s.distribution[v];
    }
    s.zero_count = s.distribution[0];
    return s;
}

static std::vector<uint16_t> zero_set(const ValueVector& values) {
    std::vector<uint16_t> z;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] == 0) z.push_back(static_cast<uint16_t>(i));
    return z;
}

std::vector<uint16_t> hyperplane_of(const Geometry& g, const ValueVector& values) {
    uint8_t mx = 0;
    for (uint8_t v : values) mx = std::max(mx, v);
    std::vector<uint16_t> h;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] < mx) h.push_back(static_cast<uint16_t>(i));
    for (int l = 0; l < g.num_lines(); ++l) {
        size_t cnt = 0;
        for (uint16_t p : g.line(l)) cnt += values[p] < mx;
        if (cnt != 1 && cnt != g.line(l).size())
            throw std::logic_error("hyperplane violates one-or-all on line " +
                                   std::to_string(l));
    }
    return h;
}

NeighborResult are_neighboring(const ValueVector& f1, const ValueVector& f2) {
    if (f1.size() != f2.size())
        throw std::invalid_argument("valuations on different geometries");
    if (f1 == f2) return {true, 0};
    int mind = INT_MAX, maxd = INT_MIN;
    for (size_t i = 0; i < f1.size(); ++i) {
        int d = int(f2[i]) - int(f1[i]);
        mind = std::min(mind, d);
        maxd = std::max(maxd, d);
        if (maxd - mind > 2) return {false, 0};
    }
    if (maxd - mind < 2)
        throw std::logic_error("ambiguous epsilon for distinct valuations");
    return {true, maxd - 1};
}

ValueVector star(const ValueVector& f1, const ValueVector& f2) {
    if (f1 == f2) return f1;
    NeighborResult nb = are_neighboring(f1, f2);
    if (!nb.neighboring)
        throw std::invalid_argument("star product of non-neighboring valuations");
    const int eps = nb.eps;
    std::vector<int> f3p(f1.size());
    int m = INT_MAX;
    for (size_t i = 0; i < f1.size(); ++i) {
        int a = f1[i], b = int(f2[i]) - eps;
        f3p[i] = (a == b) ? a - 1 : std::max(a, b);
        m = std::min(m, f3p[i]);
    }
    ValueVector f3(f1.size());
    for (size_t i = 0; i < f1.size(); ++i)
        f3[i] = static_cast<uint8_t>(f3p[i] - m);
    return f3;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// Backtracking state for one geometry; reusable across root points.
class RootEnumerator {
public:
    RootEnumerator(const Geometry& g) : g_(g), dm_(g.distances()) {
        n_ = g.num_points();
        d_ = dm_.diameter();
        for (int l = 0; l < g.num_lines(); ++l) {
            const auto& ln = g.line(l);
            tri_.push_back({ln[0], ln[1], ln[2]});
        }
        OrderResult ord = order_of(g);
        use_identity_ = ord.has_order;
        if (use_identity_) {
            for (int v = 0; v <= d_; ++v) {
                int64_t w = 1;
                for (int k = 0; k < d_ - v; ++k) w *= ord.s;
                weight_[v] = (v % 2 == 0) ? w : -w;
            }
            for (int a = 0; a <= d_; ++a)
                for (int b = a; b <= d_; ++b) {
                    int64_t lo = weight_[a], hi = weight_[a];
                    for (int v = a + 1; v <= b; ++v) {
                        lo = std::min(lo, weight_[v]);
                        hi = std::max(hi, weight_[v]);
                    }
                    wlo_[a][b] = lo;
                    whi_[a][b] = hi;
                }
        }
        val_.assign(n_, -1);
        lo_.assign(n_, 0);
        hi_.assign(n_, 0);
        lcount_.assign(tri_.size(), 0);
    }

    void run_root(int root, std::vector<ValueVector>& out) {
        sink_ = &out;
        std::fill(val_.begin(), val_.end(), -1);
        std::fill(lcount_.begin(), lcount_.end(), 0);
        trail_.clear();
        unassigned_ = n_;
        sum_ = 0;
        rmin_ = rmax_ = 0;
        const uint8_t* row = dm_.row(root);
        for (int q = 0; q < n_; ++q) {
            // the root is the lowest-index zero point of everything emitted here
            lo_[q] = (q < root) ? 1 : 0;
            hi_[q] = std::min<uint8_t>(row[q], static_cast<uint8_t>(d_));
            if (lo_[q] > hi_[q]) return;  // no valuation rooted here
            if (use_identity_) {
                rmin_ += wlo_[lo_[q]][hi_[q]];
                rmax_ += whi_[lo_[q]][hi_[q]];
            }
        }
        size_t mark = trail_.size();
        if (assign(root, 0)) dfs();
        undo(mark);
    }

private:
    const Geometry& g_;
    const DistanceMatrix& dm_;
    int n_, d_;
    std::vector<std::array<uint16_t, 3>> tri_;
    bool use_identity_ = false;
    int64_t weight_[8] = {};
    int64_t wlo_[8][8] = {}, whi_[8][8] = {};

    std::vector<int8_t> val_;
    std::vector<uint8_t> lo_, hi_;
    std::vector<uint8_t> lcount_;
    int unassigned_ = 0;
    int64_t sum_ = 0, rmin_ = 0, rmax_ = 0;

    struct TrailEntry {
        uint8_t kind;  // 0 = assignment, 1 = interval narrowing
        uint16_t idx;
        uint8_t old_lo, old_hi;
    };
    std::vector<TrailEntry> trail_;
    std::vector<ValueVector>* sink_ = nullptr;

    bool narrow(int y, int nlo, int nhi) {
        int l = std::max<int>(lo_[y], nlo), h = std::min<int>(hi_[y], nhi);
        if (l > h) return false;
        if (l == lo_[y] && h == hi_[y]) return true;
        trail_.push_back({1, static_cast<uint16_t>(y), lo_[y], hi_[y]});
        if (use_identity_) {
            rmin_ += wlo_[l][h] - wlo_[lo_[y]][hi_[y]];
            rmax_ += whi_[l][h] - whi_[lo_[y]][hi_[y]];
        }
        lo_[y] = static_cast<uint8_t>(l);
        hi_[y] = static_cast<uint8_t>(h);
        return true;
    }

    // assign with propagation; caller must undo to its own mark on failure
    bool assign(int x0, int v0) {
        std::vector<std::pair<uint16_t, uint8_t>> pending{
            {static_cast<uint16_t>(x0), static_cast<uint8_t>(v0)}};
        while (!pending.empty()) {
            auto [x, v] = pending.back();
            pending.pop_back();
            if (val_[x] >= 0) {
                if (val_[x] == v) continue;
                return false;
            }
            if (v < lo_[x] || v > hi_[x]) return false;
            trail_.push_back({0, x, lo_[x], hi_[x]});
            // all line counters move with the trail entry, so undo stays exact
            // no matter where a later check fails
            for (int32_t l : g_.lines_through(x)) ++lcount_[l];
            if (use_identity_) {
                rmin_ -= wlo_[lo_[x]][hi_[x]];
                rmax_ -= whi_[lo_[x]][hi_[x]];
                sum_ += weight_[v];
            }
            val_[x] = static_cast<int8_t>(v);
            lo_[x] = hi_[x] = v;
            --unassigned_;
            if (use_identity_ && (sum_ + rmin_ > 0 || sum_ + rmax_ < 0)) return false;
            // distance windows against the new assignment
            const uint8_t* row = dm_.row(x);
            for (int y = 0; y < n_; ++y) {
                if (val_[y] >= 0 || row[y] >= d_) continue;
                if (!narrow(y, v - row[y], v + row[y])) return false;
            }
            // line constraints
            for (int32_t l : g_.lines_through(x)) {
                const auto& t = tri_[l];
                int cnt = lcount_[l];
                if (cnt == 1) {
                    for (uint16_t p : t) {
                        if (p == x) continue;
                        if (v == 0) {
                            if (!narrow(p, 1, 1)) return false;
                        } else if (!narrow(p, v - 1, v + 1)) {
                            return false;
                        }
                    }
                } else if (cnt == 2) {
                    int a = -1, b = -1, z = -1;
                    for (uint16_t p : t) {
                        if (val_[p] >= 0) (a < 0 ? a : b) = val_[p];
                        else z = p;
                    }
                    int forced;
                    if (a == b) {
                        if (a == 0) return false;
                        forced = a - 1;
                    } else if (std::abs(a - b) == 1) {
                        forced = std::max(a, b);
                    } else {
                        return false;
                    }
                    pending.emplace_back(static_cast<uint16_t>(z),
                                         static_cast<uint8_t>(forced));
                } else {
                    std::array<uint8_t, 3> vv{static_cast<uint8_t>(val_[t[0]]),
                                              static_cast<uint8_t>(val_[t[1]]),
                                              static_cast<uint8_t>(val_[t[2]])};
                    std::sort(vv.begin(), vv.end());
                    if (!(vv[1] == vv[0] + 1 && vv[2] == vv[0] + 1)) return false;
                }
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry e = trail_.back();
            trail_.pop_back();
            if (e.kind == 0) {
                if (use_identity_) {
                    sum_ -= weight_[val_[e.idx]];
                    rmin_ += wlo_[e.old_lo][e.old_hi];
                    rmax_ += whi_[e.old_lo][e.old_hi];
                }
                for (int32_t l : g_.lines_through(e.idx)) --lcount_[l];
                val_[e.idx] = -1;
                ++unassigned_;
            } else if (use_identity_) {
                rmin_ += wlo_[e.old_lo][e.old_hi] - wlo_[lo_[e.idx]][hi_[e.idx]];
                rmax_ += whi_[e.old_lo][e.old_hi] - whi_[lo_[e.idx]][hi_[e.idx]];
            }
            lo_[e.idx] = e.old_lo;
            hi_[e.idx] = e.old_hi;
        }
    }

    void dfs() {
        if (unassigned_ == 0) {
            sink_->emplace_back(val_.begin(), val_.end());
            return;
        }
        int x = -1, width = INT_MAX;
        for (int y = 0; y < n_; ++y) {
            if (val_[y] >= 0) continue;
            int w = hi_[y] - lo_[y];
            if (w < width) {
                width = w;
                x = y;
                if (w == 0) break;
            }
        }
        for (int v = lo_[x]; v <= hi_[x]; ++v) {
            size_t mark = trail_.size();
            if (assign(x, v)) dfs();
            undo(mark);
        }
    }
};

struct Checkpoint {
    std::map<int, std::vector<ValueVector>> done;
};

Checkpoint load_checkpoint(const std::string& path, int n) {
    Checkpoint cp;
    std::ifstream in(path);
    if (!in) return cp;
    std::string tok;
    while (in >> tok) {
        if (tok != "ROOT") break;
        int root = -1;
        size_t count = 0;
        if (!(in >> root >> count)) break;
        if (root < 0 || root >= n) break;
        std::vector<ValueVector> vecs;
        bool good = true;
        for (size_t i = 0; i < count && good; ++i) {
            ValueVector v(n);
            for (int j = 0; j < n; ++j) {
                int x;
                if (!(in >> x)) { good = false; break; }
                v[j] = static_cast<uint8_t>(x);
            }
            if (good) vecs.push_back(std::move(v));
        }
        if (!good) break;
        cp.done[root] = std::move(vecs);
    }
    return cp;
}

void append_checkpoint(std::ofstream& out, int root,
                       const std::vector<ValueVector>& vecs) {
    out << "ROOT " << root << ' ' << vecs.size() << '\n';
    for (const auto& v : vecs) {
        for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << int(v[j]);
        out << '\n';
    }
    out.flush();
}

}  // namespace

std::vector<ValueVector> enumerate_valuations(const Geometry& g,
                                              const EnumerateOptions& opts) {
    int sz;
    if (!g.uniform_line_size(&sz) || sz != 3)
        throw std::invalid_argument("valuation enumeration requires 3-point lines");
    if (!g.distances().connected())
        throw std::invalid_argument("valuation enumeration requires a connected geometry");
    const int n = g.num_points();

    Checkpoint cp;
    std::ofstream cp_out;
    std::mutex mtx;
    if (!opts.checkpoint_file.empty()) {
        cp = load_checkpoint(opts.checkpoint_file, n);
        cp_out.open(opts.checkpoint_file, std::ios::app);
    }

    std::vector<std::vector<ValueVector>> per_root(n);
    for (auto& [root, vecs] : cp.done) per_root[root] = vecs;

    std::atomic<int> next{0};
    auto worker = [&] {
        RootEnumerator en(g);
        for (;;) {
            int root = next.fetch_add(1);
            if (root >= n) break;
            if (cp.done.count(root)) continue;
            std::vector<ValueVector> found;
            en.run_root(root, found);
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (cp_out.is_open()) append_checkpoint(cp_out, root, found);
                if (opts.progress) opts.progress(root, found.size());
            }
            per_root[root] = std::move(found);
        }
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<ValueVector> all;
    for (auto& bucket : per_root)
        for (auto& v : bucket) all.push_back(std::move(v));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

// ---------------------------------------------------------------------------
// typed sets and tables

const std::vector<ExpectedValuationRow>& h2d_expected_profile() {
    static const std::vector<ExpectedValuationRow> rows{
        {'A', 63, 3, 1, 31, {1, 6, 24, 32}},
        {'B', 252, 3, 1, 47, {1, 14, 32, 16}},
        {'C', 252, 2, 1, 23, {1, 22, 40, 0}},
        {'D', 1008, 2, 5, 31, {5, 26, 32, 0}},
    };
    return rows;
}

const std::vector<ExpectedValuationRow>& hj_expected_profile() {
    static const std::vector<ExpectedValuationRow> rows{
        {'A', 315, 4, 1, -1, {1, 10, 80, 160, 64}},
        {'B', 630, 3, 1, -1, {1, 10, 112, 192, 0}},
        {'C', 3150, 3, 1, -1, {1, 26, 128, 160, 0}},
        {'D', 1008, 2, 5, -1, {5, 110, 200, 0, 0}},
        {'E', 2016, 2, 25, -1, {25, 130, 160, 0, 0}},
    };
    return rows;
}

size_t ValuationSet::VecHash::operator()(const ValueVector& v) const {
    uint64_t h = 1469598103934665603ULL;
    for (uint8_t b : v) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

ValuationSet::ValuationSet(GeometryPtr geom, std::vector<ValueVector> vals)
    : geom_(std::move(geom)), vals_(std::move(vals)) {
    diameter_ = geom_->distances().diameter();
    std::sort(vals_.begin(), vals_.end());
    vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
    index_.reserve(vals_.size() * 2);
    for (size_t i = 0; i < vals_.size(); ++i)
        index_.emplace(vals_[i], static_cast<int32_t>(i));
}

int32_t ValuationSet::index_of(const ValueVector& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

ValuationSet::TypeAssignment ValuationSet::assign_types(
    const std::vector<ExpectedValuationRow>& expected) {
    TypeAssignment res;
    types_.assign(vals_.size(), 0);
    by_type_.clear();
    std::map<char, int64_t> counts;
    for (size_t i = 0; i < vals_.size(); ++i) {
        ValuationSignature sig = signature_of(vals_[i], diameter_);
        char type = 0;
        for (const auto& row : expected) {
            if (sig.max_value == row.max_value && sig.zero_count == row.zero_count &&
                std::equal(sig.distribution.begin(), sig.distribution.end(),
                           row.distribution.begin(), row.distribution.end())) {
                type = row.type;
                break;
            }
        }
        if (!type) {
            std::ostringstream ss;
            ss << "valuation " << i << " with signature (M=" << sig.max_value
               << ", zeros=" << sig.zero_count << ", distribution [";
            for (size_t k = 0; k < sig.distribution.size(); ++k)
                ss << (k ? "," : "") << sig.distribution[k];
            ss << "]) matches no expected row";
            res.witness = ss.str();
            types_.clear();
            return res;
        }
        types_[i] = type;
        ++counts[type];
        by_type_[type].push_back(static_cast<int32_t>(i));
    }
    for (const auto& row : expected) {
        if (counts[row.type] != row.count) {
            res.witness = std::string("type ") + row.type + ": expected " +
                          std::to_string(row.count) + " valuations, found " +
                          std::to_string(counts[row.type]);
            types_.clear();
            return res;
        }
    }
    res.ok = true;
    return res;
}

const std::vector<int32_t>& ValuationSet::of_type(char t) const {
    static const std::vector<int32_t> empty;
    auto it = by_type_.find(t);
    return it == by_type_.end() ? empty : it->second;
}

std::vector<ProfileRow> profile_stats(const ValuationSet& vs) {
    if (!vs.typed()) throw std::logic_error("profile_stats requires assigned types");
    std::map<char, ProfileRow> rows;
    for (size_t i = 0; i < vs.size(); ++i) {
        char t = vs.type_of(static_cast<int32_t>(i));
        auto h = hyperplane_of(vs.geometry(), vs.values(static_cast<int32_t>(i)));
        auto it = rows.find(t);
        if (it == rows.end()) {
            ValuationSignature sig = signature_of(vs.values(static_cast<int32_t>(i)),
                                                  vs.diameter());
            rows[t] = ProfileRow{t, 1, sig.max_value, sig.zero_count, h.size(),
                                 sig.distribution};
        } else {
            ++it->second.count;
            if (it->second.hyperplane_size != h.size())
                throw std::logic_error("hyperplane size not constant within a type");
        }
    }
    std::vector<ProfileRow> out;
    for (auto& [t, row] : rows) out.push_back(std::move(row));
    return out;
}

// ---------------------------------------------------------------------------
// valuation geometry

static uint64_t pair_key(int32_t a, int32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

ValuationGeometry::ValuationGeometry(ValuationSetPtr set, std::vector<VLine> vlines)
    : set_(std::move(set)), vlines_(std::move(vlines)) {
    through_.resize(set_->size());
    for (size_t i = 0; i < vlines_.size(); ++i)
        for (int32_t f : vlines_[i].f) {
            through_[f].push_back(static_cast<int32_t>(i));
            for (int32_t h : vlines_[i].f)
                if (f < h) pair_set_.insert(pair_key(f, h));
        }
}

bool ValuationGeometry::collinear(int32_t f, int32_t g) const {
    return pair_set_.count(pair_key(f, g)) > 0;
}

ValuationGeometry build_valuation_geometry(ValuationSetPtr set, int threads) {
    if (!set->typed())
        throw std::logic_error("valuation geometry requires assigned types");
    const auto& vals = set->all();
    const int32_t n = static_cast<int32_t>(vals.size());
    const size_t len = vals.empty() ? 0 : vals[0].size();

    auto scan_rows = [&](int32_t lo, int32_t hi,
                         std::vector<std::array<int32_t, 3>>& out) {
        for (int32_t i = lo; i < hi; ++i) {
            const uint8_t* x = vals[i].data();
            for (int32_t j = i + 1; j < n; ++j) {
                const uint8_t* y = vals[j].data();
                int mind = INT_MAX, maxd = INT_MIN;
                bool ok = true;
                for (size_t k = 0; k < len; ++k) {
                    int dd = int(y[k]) - int(x[k]);
                    if (dd < mind) mind = dd;
                    if (dd > maxd) maxd = dd;
                    if (maxd - mind > 2) { ok = false; break; }
                }
                if (!ok) continue;
                if (maxd - mind < 2)
                    throw std::logic_error("ambiguous epsilon in pair scan");
                const int eps = maxd - 1;
                int m = INT_MAX;
                std::vector<int> f3p(len);
                for (size_t k = 0; k < len; ++k) {
                    int a = x[k], b = int(y[k]) - eps;
                    f3p[k] = (a == b) ? a - 1 : std::max(a, b);
                    m = std::min(m, f3p[k]);
                }
                ValueVector f3(len);
                for (size_t k = 0; k < len; ++k)
                    f3[k] = static_cast<uint8_t>(f3p[k] - m);
                int32_t idx = set->index_of(f3);
                if (idx < 0)
                    throw std::runtime_error(
                        "star product missing from valuation set; enumeration "
                        "was incomplete");
                if (idx == i || idx == j) continue;
                std::array<int32_t, 3> t{i, j, idx};
                std::sort(t.begin(), t.end());
                out.push_back(t);
            }
        }
    };

    std::vector<std::array<int32_t, 3>> triples;
    threads = std::max(1, threads);
    if (threads == 1 || n < 256) {
        scan_rows(0, n, triples);
    } else {
        std::vector<std::vector<std::array<int32_t, 3>>> buckets(threads);
        std::vector<std::thread> pool;
        std::atomic<int32_t> next{0};
        constexpr int32_t kChunk = 64;
        std::exception_ptr error;
        std::mutex emtx;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (;;) {
                        int32_t lo = next.fetch_add(kChunk);
                        if (lo >= n) break;
                        scan_rows(lo, std::min(n, lo + kChunk), buckets[t]);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(emtx);
                    if (!error) error = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
        for (auto& b : buckets)
            triples.insert(triples.end(), b.begin(), b.end());
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    std::vector<VLine> vlines;
    vlines.reserve(triples.size());
    for (const auto& t : triples) {
        std::string type{set->type_of(t[0]), set->type_of(t[1]), set->type_of(t[2])};
        std::sort(type.begin(), type.end());
        vlines.push_back(VLine{t, std::move(type), false});
    }
    return ValuationGeometry(std::move(set), std::move(vlines));
}

const std::vector<ExpectedIncidenceRow>& h2d_expected_incidence() {
    static const std::vector<ExpectedIncidenceRow> rows{
        {"AAA", {{'A', 3}}},
        {"ABB", {{'A', 2}, {'B', 1}}},
        {"ACC", {{'A', 2}, {'C', 1}}},
        {"ADD", {{'A', 24}, {'D', 3}}},
        {"BBB", {{'B', 4}}},
        {"BCC", {{'B', 1}, {'C', 2}}},
        {"BDD", {{'B', 4}, {'D', 2}}},
        {"CCC", {{'C', 8}}},
        {"CCD", {{'C', 40}, {'D', 5}}},
        {"CDD", {{'C', 4}, {'D', 2}}},
        {"DDD", {{'D', 10}}},
    };
    return rows;
}

const std::vector<ExpectedIncidenceRow>& hj_expected_incidence() {
    static const std::vector<ExpectedIncidenceRow> rows{
        {"AAA", {{'A', 5}}},
        {"ABB", {{'A', 1}, {'B', 1}}},
        {"ACC", {{'A', 5}, {'C', 1}}},
        {"BBB", {{'B', 5}}},
        {"BBC", {{'B', 10}, {'C', 1}}},
        {"CCC", {{'C', 9}}},
        {"CDD", {{'C', 4}, {'D', 25}}},
        {"DDD", {{'D', 6}}},
        {"DEE", {{'D', 1}, {'E', 1}}},
        {"EEE", {{'E', 6}}},
    };
    return rows;
}

IncidenceStats incidence_stats(const ValuationGeometry& vg) {
    const ValuationSet& vs = vg.vals();
    IncidenceStats stats;
    std::set<std::string> line_types;
    for (const auto& vl : vg.vlines()) line_types.insert(vl.type);
    stats.line_types.assign(line_types.begin(), line_types.end());

    std::map<char, std::map<std::string, int64_t>> reference;
    for (size_t i = 0; i < vs.size(); ++i) {
        char t = vs.type_of(static_cast<int32_t>(i));
        std::map<std::string, int64_t> counts;
        for (int32_t l : vg.vlines_through(static_cast<int32_t>(i)))
            ++counts[vg.vlines()[l].type];
        auto it = reference.find(t);
        if (it == reference.end()) {
            reference[t] = counts;
        } else if (it->second != counts) {
            stats.constant_ok = false;
            stats.witness = std::string("line-type incidence differs within type ") +
                            t + " at valuation " + std::to_string(i);
        }
    }
    for (auto& [t, counts] : reference)
        for (auto& lt : stats.line_types) {
            auto it = counts.find(lt);
            stats.per[{t, lt}] = it == counts.end() ? 0 : it->second;
        }
    return stats;
}

void classify_ccc_lines(ValuationGeometry& vg) {
    const ValuationSet& vs = vg.vals();
    const Geometry& g = vs.geometry();
    for (size_t i = 0; i < vg.vlines().size(); ++i) {
        const VLine& vl = vg.vlines()[i];
        if (vl.type != "CCC") continue;
        std::vector<uint16_t> zeros;
        for (int32_t f : vl.f) {
            auto z = zero_set(vs.values(f));
            zeros.insert(zeros.end(), z.begin(), z.end());
        }
        bool special = false;
        if (zeros.size() == 3) {
            std::sort(zeros.begin(), zeros.end());
            if (zeros[0] != zeros[1] && zeros[1] != zeros[2]) {
                int32_t l = g.line_between(zeros[0], zeros[1]);
                special = l >= 0 && g.line(l) == zeros;
            }
        }
        vg.set_special(static_cast<int32_t>(i), special);
    }
}

// ---------------------------------------------------------------------------
// lemma checks

namespace {

struct Dsu {
    std::vector<int32_t> parent;
    explicit Dsu(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int32_t>(i);
    }
    int32_t find(int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int32_t a, int32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

LemmaVerdict lemma_b_graph_connected(const ValuationGeometry& vg) {
    LemmaVerdict res{"b-graph-connected", false, ""};
    const ValuationSet& vs = vg.vals();
    const auto& bs = vs.of_type('B');
    std::unordered_map<int32_t, int32_t> pos;
    for (size_t i = 0; i < bs.size(); ++i) pos[bs[i]] = static_cast<int32_t>(i);
    Dsu dsu(bs.size());
    for (const auto& vl : vg.vlines()) {
        if (vl.type != "ABB" && vl.type != "BBB") continue;
        int32_t prev = -1;
        for (int32_t f : vl.f) {
            auto it = pos.find(f);
            if (it == pos.end()) continue;
            if (prev >= 0) dsu.unite(prev, it->second);
            prev = it->second;
        }
    }
    int32_t root = dsu.find(0);
    size_t comp = 0;
    for (size_t i = 0; i < bs.size(); ++i)
        comp += dsu.find(static_cast<int32_t>(i)) == root;
    res.ok = comp == bs.size();
    res.detail = std::to_string(bs.size()) + " vertices, largest component " +
                 std::to_string(comp);
    return res;
}

// partner valuations of type B or C on each line through a type-C valuation
static std::vector<std::pair<int32_t, int32_t>> bc_partners(
    const ValuationGeometry& vg, int32_t f) {
    std::vector<std::pair<int32_t, int32_t>> out;  // (vline id, partner)
    const ValuationSet& vs = vg.vals();
    for (int32_t l : vg.vlines_through(f))
        for (int32_t g : vg.vlines()[l].f) {
            if (g == f) continue;
            char t = vs.type_of(g);
            if (t == 'B' || t == 'C') out.emplace_back(l, g);
        }
    return out;
}

LemmaVerdict lemma_valbc(const ValuationGeometry& vg) {
    LemmaVerdict res{"valbc", false, ""};
    const ValuationSet& vs = vg.vals();
    for (int32_t f : vs.of_type('C')) {
        auto partners = bc_partners(vg, f);
        for (size_t i = 0; i < partners.size(); ++i)
            for (size_t j = i + 1; j < partners.size(); ++j) {
                if (partners[i].first == partners[j].first) continue;
                if (vg.collinear(partners[i].second, partners[j].second)) {
                    res.detail = "valuations " + std::to_string(partners[i].second) +
                                 " and " + std::to_string(partners[j].second) +
                                 " through " + std::to_string(f) +
                                 " are collinear in the valuation geometry";
                    return res;
                }
            }
    }
    res.ok = true;
    res.detail = "no collinear pair across distinct lines through any type-C valuation";
    return res;
}

LemmaVerdict lemma_valbc_alt(const ValuationGeometry& vg) {
    LemmaVerdict res{"valbc-alt", false, ""};
    const ValuationSet& vs = vg.vals();
    const Geometry& g = vs.geometry();
    size_t failures = 0;
    std::string first;
    for (int32_t f : vs.of_type('C')) {
        auto partners = bc_partners(vg, f);
        for (size_t i = 0; i < partners.size(); ++i)
            for (size_t j = i + 1; j < partners.size(); ++j) {
                if (partners[i].first == partners[j].first) continue;
                auto zi = zero_set(vs.values(partners[i].second));
                auto zj = zero_set(vs.values(partners[j].second));
                if (zi.size() != 1 || zj.size() != 1) continue;
                if (zi[0] != zj[0] && g.line_between(zi[0], zj[0]) >= 0) {
                    ++failures;
                    if (first.empty())
                        first = "zero points of valuations " +
                                std::to_string(partners[i].second) + " and " +
                                std::to_string(partners[j].second) +
                                " are collinear in the base geometry";
                }
            }
    }
    res.ok = failures == 0;
    res.detail = res.ok ? "zero points non-collinear for all such pairs"
                        : std::to_string(failures) + " collinear pairs (first: " +
                              first + ")";
    return res;
}

LemmaVerdict lemma_valb_bijection(const ValuationGeometry& vg) {
    LemmaVerdict res{"valb-bijection", false, ""};
    const ValuationSet& vs = vg.vals();
    const Geometry& g = vs.geometry();
    for (int32_t f : vs.of_type('B')) {
        auto zf = zero_set(vs.values(f));
        if (zf.size() != 1) {
            res.detail = "type-B valuation " + std::to_string(f) +
                         " has zero set of size " + std::to_string(zf.size());
            return res;
        }
        uint16_t x = zf[0];
        std::vector<int32_t> images;
        for (int32_t l : vg.vlines_through(f)) {
            if (vg.vlines()[l].type != "BBB") continue;
            std::vector<uint16_t> pts{x};
            for (int32_t h : vg.vlines()[l].f) {
                if (h == f) continue;
                auto z = zero_set(vs.values(h));
                pts.insert(pts.end(), z.begin(), z.end());
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            if (pts.size() != 3) {
                res.detail = "zero-set union on a BBB line through " +
                             std::to_string(f) + " has size " +
                             std::to_string(pts.size());
                return res;
            }
            int32_t bl = g.line_between(pts[0], pts[1]);
            if (bl < 0 || g.line(bl) != pts) {
                res.detail = "zero-set union on a BBB line through " +
                             std::to_string(f) + " is not a base line";
                return res;
            }
            images.push_back(bl);
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        auto through_x = g.lines_through(x);
        std::sort(through_x.begin(), through_x.end());
        if (images != through_x) {
            res.detail = "BBB lines through valuation " + std::to_string(f) +
                         " do not biject onto the base lines through its zero point";
            return res;
        }
    }
    res.ok = true;
    res.detail = "bijection holds for all type-B valuations";
    return res;
}

LemmaVerdict lemma_valc_special(const ValuationGeometry& vg) {
    LemmaVerdict res{"valc-special", false, ""};
    const ValuationSet& vs = vg.vals();
    const Geometry& g = vs.geometry();
    for (int32_t f : vs.of_type('C')) {
        int special = 0;
        for (int32_t l : vg.vlines_through(f)) {
            const VLine& vl = vg.vlines()[l];
            if (vl.type != "CCC") continue;
            if (vl.special) {
                ++special;
                continue;
            }
            std::vector<uint16_t> zeros;
            for (int32_t h : vl.f) {
                auto z = zero_set(vs.values(h));
                zeros.insert(zeros.end(), z.begin(), z.end());
            }
            std::sort(zeros.begin(), zeros.end());
            for (size_t i = 0; i < zeros.size(); ++i)
                for (size_t j = i + 1; j < zeros.size(); ++j)
                    if (zeros[i] == zeros[j] ||
                        g.line_between(zeros[i], zeros[j]) >= 0) {
                        res.detail = "ordinary CCC line through " + std::to_string(f) +
                                     " has collinear zero points";
                        return res;
                    }
        }
        if (special != 1) {
            res.detail = "type-C valuation " + std::to_string(f) + " lies on " +
                         std::to_string(special) + " special CCC lines";
            return res;
        }
    }
    res.ok = true;
    res.detail =
        "one special CCC line per type-C valuation; ordinary zero triples "
        "pairwise non-collinear";
    return res;
}

LemmaVerdict lemma_c_graph_connected(const ValuationGeometry& vg) {
    LemmaVerdict res{"c-graph-connected", false, ""};
    const ValuationSet& vs = vg.vals();
    const auto& cs = vs.of_type('C');
    std::unordered_map<int32_t, int32_t> pos;
    for (size_t i = 0; i < cs.size(); ++i) pos[cs[i]] = static_cast<int32_t>(i);
    Dsu dsu(cs.size());
    for (const auto& vl : vg.vlines()) {
        bool use = vl.type == "ACC" || (vl.type == "CCC" && !vl.special);
        if (!use) continue;
        int32_t prev = -1;
        for (int32_t f : vl.f) {
            auto it = pos.find(f);
            if (it == pos.end()) continue;
            if (prev >= 0) dsu.unite(prev, it->second);
            prev = it->second;
        }
    }
    int32_t root = dsu.find(0);
    size_t comp = 0;
    for (size_t i = 0; i < cs.size(); ++i)
        comp += dsu.find(static_cast<int32_t>(i)) == root;
    res.ok = comp == cs.size();
    res.detail = std::to_string(cs.size()) + " vertices, largest component " +
                 std::to_string(comp);
    return res;
}

// ---------------------------------------------------------------------------
// models and induced valuations

ModelGeometry subgeometry_by_types(const ValuationGeometry& vg,
                                   const std::string& point_types,
                                   const std::vector<std::string>& line_types,
                                   const std::string& label) {
    for (const auto& lt : line_types)
        for (char c : lt)
            if (point_types.find(c) == std::string::npos)
                throw std::invalid_argument("line type " + lt +
                                            " uses a point type outside " + point_types);
    const ValuationSet& vs = vg.vals();
    ModelGeometry model;
    std::vector<int32_t> to_model(vs.size(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        char t = vs.type_of(static_cast<int32_t>(i));
        if (t && point_types.find(t) != std::string::npos) {
            to_model[i] = static_cast<int32_t>(model.point_to_valuation.size());
            model.point_to_valuation.push_back(static_cast<int32_t>(i));
        }
    }
    std::vector<std::vector<uint16_t>> lines;
    for (const auto& vl : vg.vlines()) {
        if (std::find(line_types.begin(), line_types.end(), vl.type) ==
            line_types.end())
            continue;
        std::vector<uint16_t> ln;
        for (int32_t f : vl.f) ln.push_back(static_cast<uint16_t>(to_model[f]));
        lines.push_back(std::move(ln));
    }
    model.geom = std::make_shared<Geometry>(
        static_cast<int>(model.point_to_valuation.size()), std::move(lines), label);
    return model;
}

InducedValuationsResult induced_valuations(const EmbeddingMap& emb) {
    InducedValuationsResult res;
    EmbedVerdict ev = verify_embedding(emb);
    if (!ev.ok) {
        res.witness = "embedding failed verification: " + ev.witness;
        return res;
    }
    const Geometry& big = *emb.target;
    const Geometry& small = *emb.source;
    const DistanceMatrix& db = big.distances();
    const int bigd = db.diameter();

    res.per_point.resize(big.num_points());
    for (int x = 0; x < big.num_points(); ++x) {
        const uint8_t* row = db.row(x);
        uint8_t dmin = 255;
        for (int32_t img : emb.point_map) dmin = std::min(dmin, row[img]);
        ValueVector f(small.num_points());
        int maxv = 0;
        for (int y = 0; y < small.num_points(); ++y) {
            f[y] = static_cast<uint8_t>(row[emb.point_map[y]] - dmin);
            maxv = std::max<int>(maxv, f[y]);
        }
        ValuationVerdict vv = is_valuation(small, f);
        if (!vv.ok) {
            res.witness = "point " + std::to_string(x) +
                          " induces a non-valuation: " + vv.witness;
            return res;
        }
        if (maxv > bigd - dmin) {
            res.witness = "point " + std::to_string(x) + " at distance " +
                          std::to_string(int(dmin)) + " induces max value " +
                          std::to_string(maxv);
            return res;
        }
        res.per_point[x] = std::move(f);
    }
    for (int l = 0; l < big.num_lines(); ++l) {
        const auto& ln = big.line(l);
        const ValueVector& f1 = res.per_point[ln[0]];
        const ValueVector& f2 = res.per_point[ln[1]];
        const ValueVector& f3 = res.per_point[ln[2]];
        for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            NeighborResult nb =
                are_neighboring(res.per_point[ln[a]], res.per_point[ln[b]]);
            if (!nb.neighboring) {
                res.witness = "collinear points " + std::to_string(ln[a]) + "," +
                              std::to_string(ln[b]) +
                              " induce non-neighboring valuations";
                return res;
            }
        }
        bool ok;
        if (f1 == f2)
            ok = f3 == f1;
        else
            ok = star(f1, f2) == f3;
        if (!ok) {
            res.witness = "line " + std::to_string(l) +
                          " does not induce a *-closed triple";
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace suz

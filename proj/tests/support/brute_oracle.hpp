/*
 * brute_oracle.hpp
 *
 * Independent oracle for valuation enumeration: filter value vectors by the
 * definition alone. For small geometries every vector over {0..max_value}^n
 * is generated and tested with is_valuation. For larger ones the same filter
 * is evaluated lazily: points are assigned in a fixed static order and a line
 * is tested as soon as its three points are assigned; nothing else prunes.
 * The bound max_value = diameter follows from the line rule alone (values of
 * collinear points differ by at most 1, so every value is at most the
 * distance to a zero point).
 *
 * This deliberately shares no search machinery with enumerate_valuations.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "valuations.hpp"

namespace suz::testing {

inline std::vector<ValueVector> brute_force_valuations(const Geometry& g) {
    const int n = g.num_points();
    const int maxv = g.distances().diameter();
    std::vector<ValueVector> out;

    if (n <= 15) {
        // literally all vectors
        ValueVector v(n, 0);
        for (;;) {
            if (is_valuation(g, v).ok) out.push_back(v);
            int i = 0;
            while (i < n && v[i] == maxv) v[i++] = 0;
            if (i == n) break;
            ++v[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // static order that closes lines early; chosen once, independent of values
    std::vector<int> order;
    std::vector<bool> chosen(n, false);
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_closing = -1, best_touching = -1;
        for (int p = 0; p < n; ++p) {
            if (chosen[p]) continue;
            int closing = 0, touching = 0;
            for (int32_t l : g.lines_through(p)) {
                int cnt = 0;
                for (uint16_t q : g.line(l)) cnt += chosen[q];
                if (cnt == 2) ++closing;
                if (cnt >= 1) ++touching;
            }
            if (closing > best_closing ||
                (closing == best_closing && touching > best_touching)) {
                best = p;
                best_closing = closing;
                best_touching = touching;
            }
        }
        chosen[best] = true;
        order.push_back(best);
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    // lines checked at the depth where their last point is assigned
    std::vector<std::vector<int32_t>> lines_at(n);
    for (int l = 0; l < g.num_lines(); ++l) {
        int last = 0;
        for (uint16_t p : g.line(l)) last = std::max(last, position[p]);
        lines_at[last].push_back(l);
    }

    ValueVector v(n, 0);
    std::vector<int> depth_value(n, 0);
    auto line_ok = [&](int l) {
        const auto& ln = g.line(l);
        std::array<uint8_t, 3> w{v[ln[0]], v[ln[1]], v[ln[2]]};
        std::sort(w.begin(), w.end());
        return w[1] == w[0] + 1 && w[2] == w[0] + 1;
    };
    // iterative DFS over assignments in the static order
    int depth = 0;
    depth_value[0] = -1;
    while (depth >= 0) {
        if (++depth_value[depth] > maxv) {
            --depth;
            continue;
        }
        v[order[depth]] = static_cast<uint8_t>(depth_value[depth]);
        bool ok = true;
        for (int32_t l : lines_at[depth])
            if (!line_ok(l)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (depth == n - 1) {
            if (is_valuation(g, v).ok) out.push_back(v);
            continue;
        }
        ++depth;
        depth_value[depth] = -1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace suz::testing

#include "cache.hpp"

#include <fstream>
#include <sstream>

namespace suz {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string geometry_to_text(const Geometry& g) {
    std::ostringstream out;
    out << "GEOM v1 " << g.num_points() << ' ' << g.num_lines() << ' '
        << g.label() << '\n';
    for (const auto& ln : g.lines()) {
        for (size_t i = 0; i < ln.size(); ++i) out << (i ? " " : "") << ln[i];
        out << '\n';
    }
    return out.str();
}

Geometry geometry_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version;
    int np = 0, nl = 0;
    if (!(in >> magic >> version >> np >> nl) || magic != "GEOM" || version != "v1")
        throw CacheError("bad GEOM v1 header");
    std::string label;
    std::getline(in, label);
    if (!label.empty() && label[0] == ' ') label.erase(0, 1);
    std::vector<std::vector<uint16_t>> lines;
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty()) continue;
        std::istringstream rs(row);
        std::vector<uint16_t> ln;
        long v;
        while (rs >> v) {
            if (v < 0 || v >= np) throw CacheError("point index out of range");
            ln.push_back(static_cast<uint16_t>(v));
        }
        lines.push_back(std::move(ln));
    }
    if (static_cast<int>(lines.size()) != nl)
        throw CacheError("line count mismatch in GEOM file");
    return Geometry(np, std::move(lines), label);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CacheError("cannot write " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_geometry(const Geometry& g, const std::string& path) {
    write_text_file(path, geometry_to_text(g));
}

GeometryPtr load_geometry(const std::string& path) {
    return std::make_shared<Geometry>(geometry_from_text(read_text_file(path)));
}

std::string geometry_digest(const Geometry& g) {
    return digest_hex(geometry_to_text(g));
}

std::string valuations_to_text(const std::vector<ValueVector>& vals,
                               const std::string& geom_digest) {
    std::ostringstream out;
    out << "VALS v1 " << geom_digest << ' ' << vals.size() << '\n';
    for (const auto& v : vals) {
        for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << int(v[i]);
        out << '\n';
    }
    return out.str();
}

std::vector<ValueVector> valuations_from_text(const std::string& text,
                                              const std::string& expect_geom_digest) {
    std::istringstream in(text);
    std::string magic, version, digest;
    size_t count = 0;
    if (!(in >> magic >> version >> digest >> count) || magic != "VALS" ||
        version != "v1")
        throw CacheError("bad VALS v1 header");
    if (digest != expect_geom_digest)
        throw CacheError("VALS digest mismatch: cache built for a different geometry");
    std::vector<ValueVector> vals;
    std::string row;
    std::getline(in, row);
    while (std::getline(in, row)) {
        if (row.empty()) continue;
        std::istringstream rs(row);
        ValueVector v;
        int x;
        while (rs >> x) v.push_back(static_cast<uint8_t>(x));
        vals.push_back(std::move(v));
    }
    if (vals.size() != count) throw CacheError("VALS count mismatch");
    return vals;
}

std::string vgeom_to_text(const ValuationGeometry& vg, const std::string& vals_digest) {
    std::ostringstream out;
    out << "VGEOM v1 " << vals_digest << ' ' << vg.vlines().size() << '\n';
    for (const auto& vl : vg.vlines())
        out << vl.f[0] << ' ' << vl.f[1] << ' ' << vl.f[2] << ' ' << vl.type << ' '
            << (vl.special ? 1 : 0) << '\n';
    return out.str();
}

std::vector<VLine> vgeom_from_text(const std::string& text,
                                   const std::string& expect_vals_digest) {
    std::istringstream in(text);
    std::string magic, version, digest;
    size_t count = 0;
    if (!(in >> magic >> version >> digest >> count) || magic != "VGEOM" ||
        version != "v1")
        throw CacheError("bad VGEOM v1 header");
    if (digest != expect_vals_digest)
        throw CacheError("VGEOM digest mismatch: cache built for different valuations");
    std::vector<VLine> vlines;
    for (size_t i = 0; i < count; ++i) {
        VLine vl;
        int special = 0;
        if (!(in >> vl.f[0] >> vl.f[1] >> vl.f[2] >> vl.type >> special))
            throw CacheError("truncated VGEOM file");
        vl.special = special != 0;
        vlines.push_back(std::move(vl));
    }
    return vlines;
}

std::string embedding_to_text(const std::vector<int32_t>& map,
                              const std::string& src_digest,
                              const std::string& tgt_digest) {
    std::ostringstream out;
    out << "EMB v1 " << src_digest << ' ' << tgt_digest << '\n';
    for (int32_t v : map) out << v << '\n';
    return out.str();
}

std::vector<int32_t> embedding_from_text(const std::string& text,
                                         const std::string& expect_src,
                                         const std::string& expect_tgt) {
    std::istringstream in(text);
    std::string magic, version, src, tgt;
    if (!(in >> magic >> version >> src >> tgt) || magic != "EMB" || version != "v1")
        throw CacheError("bad EMB v1 header");
    if (src != expect_src || tgt != expect_tgt)
        throw CacheError("EMB digest mismatch");
    std::vector<int32_t> map;
    int32_t v;
    while (in >> v) map.push_back(v);
    return map;
}

}  // namespace suz

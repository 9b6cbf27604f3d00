#include "perm.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace suz {

Perm::Perm(std::vector<uint16_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint16_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("image array is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<uint16_t> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

static void require_same_degree(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("permutation degree mismatch");
}

Perm compose(const Perm& p, const Perm& q) {
    require_same_degree(p, q);
    std::vector<uint16_t> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[i] = q(p(i));
    return Perm(std::move(r));
}

Perm inverse(const Perm& p) {
    std::vector<uint16_t> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[p(i)] = static_cast<uint16_t>(i);
    return Perm(std::move(r));
}

Perm conjugate(const Perm& x, const Perm& g) {
    require_same_degree(x, g);
    // r = g^-1 * x * g, i.e. r(g(j)) = g(x(j))
    std::vector<uint16_t> r(x.degree());
    for (int j = 0; j < x.degree(); ++j) r[g(j)] = g(x(j));
    return Perm(std::move(r));
}

uint64_t element_order(const Perm& p) {
    std::vector<bool> seen(p.degree(), false);
    uint64_t order = 1;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

bool commutes(const Perm& p, const Perm& q) {
    require_same_degree(p, q);
    for (int i = 0; i < p.degree(); ++i)
        if (q(p(i)) != p(q(i))) return false;
    return true;
}

Perm power(const Perm& p, uint64_t e) {
    Perm acc = Perm::identity(p.degree());
    Perm base = p;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

size_t PermHash::operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (uint16_t v : p.images()) {
        h ^= static_cast<uint64_t>(v);
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

GeneratorSet parse_generators(std::istream& in, const std::string& label) {
    GeneratorSet out;
    out.label = label;
    std::string line;
    int line_no = 0;
    bool have_degree = false;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        if (!have_degree) {
            long deg = 0;
            if (!(ss >> deg) || deg <= 0 || deg > 65535)
                throw ParseError(line_no, "expected a positive degree");
            std::string extra;
            if (ss >> extra)
                throw ParseError(line_no, "trailing tokens after degree");
            out.degree = static_cast<int>(deg);
            have_degree = true;
            continue;
        }
        std::vector<uint16_t> images(out.degree);
        std::vector<bool> seen(out.degree, false);
        for (int i = 0; i < out.degree; ++i) {
            long v = 0;
            if (!(ss >> v))
                throw ParseError(line_no, "expected " + std::to_string(out.degree) +
                                              " images, found " + std::to_string(i));
            if (v < 1 || v > out.degree)
                throw ParseError(line_no, "image " + std::to_string(v) +
                                              " out of range 1.." +
                                              std::to_string(out.degree));
            if (seen[v - 1])
                throw ParseError(line_no, "image " + std::to_string(v) + " repeated");
            seen[v - 1] = true;
            images[i] = static_cast<uint16_t>(v - 1);
        }
        std::string extra;
        if (ss >> extra) throw ParseError(line_no, "too many images on line");
        Perm p(std::move(images));
        if (p.is_identity())
            throw ParseError(line_no, "identity permutation is not a valid generator");
        out.generators.push_back(std::move(p));
    }
    if (!have_degree) throw ParseError(line_no, "empty generator file");
    if (out.generators.empty()) throw ParseError(line_no, "no generators found");
    return out;
}

GeneratorSet load_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open generator file: " + path);
    std::string label = path;
    if (auto pos = label.find_last_of('/'); pos != std::string::npos)
        label = label.substr(pos + 1);
    return parse_generators(in, label);
}

void write_generators(const GeneratorSet& gens, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write generator file: " + path);
    out << "# " << gens.label << "\n";
    out << gens.degree << "\n";
    for (const Perm& g : gens.generators) {
        for (int i = 0; i < gens.degree; ++i) {
            if (i) out << ' ';
            out << g(static_cast<uint16_t>(i)) + 1;
        }
        out << "\n";
    }
}

uint64_t Rng64::next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::optional<Perm> find_class_involution(const GeneratorSet& gens,
                                          size_t target_size, size_t budget,
                                          uint64_t seed) {
    Rng64 rng(seed);
    const size_t ngens = gens.generators.size();
    for (size_t tries = 0; tries < budget; ++tries) {
        size_t len = 1 + rng.below(60);
        Perm w = gens.generators[rng.below(ngens)];
        for (size_t i = 1; i < len; ++i)
            w = compose(w, gens.generators[rng.below(ngens)]);
        uint64_t order = element_order(w);
        if (order % 2 != 0) continue;
        Perm inv = power(w, order / 2);
        if (inv.is_identity()) continue;
        InvolutionClass cls = conjugation_class(gens, inv, target_size);
        if (cls.size() == target_size) return inv;
    }
    return std::nullopt;
}

InvolutionClass conjugation_class(const GeneratorSet& gens, const Perm& seed,
                                  size_t size_cap) {
    if (seed.degree() != gens.degree)
        throw std::invalid_argument("seed degree does not match generators");
    if (seed.is_identity() || !compose(seed, seed).is_identity())
        throw std::invalid_argument("seed is not an involution");
    InvolutionClass cls;
    cls.degree = gens.degree;
    std::unordered_map<Perm, int32_t, PermHash> seen;
    std::deque<Perm> queue;
    seen.emplace(seed, 0);
    queue.push_back(seed);
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const Perm& g : gens.generators) {
            Perm img = conjugate(cur, g);
            if (seen.emplace(img, 0).second) {
                if (size_cap > 0 && seen.size() > size_cap) return InvolutionClass{};
                queue.push_back(std::move(img));
            }
        }
    }
    cls.elements.reserve(seen.size());
    for (auto& [p, _] : seen) cls.elements.push_back(p);
    std::sort(cls.elements.begin(), cls.elements.end());
    cls.index_of.reserve(cls.elements.size() * 2);
    for (size_t i = 0; i < cls.elements.size(); ++i)
        cls.index_of.emplace(cls.elements[i], static_cast<int32_t>(i));
    return cls;
}

std::vector<std::vector<int32_t>> class_generator_action(
    const GeneratorSet& gens, const InvolutionClass& cls) {
    std::vector<std::vector<int32_t>> action(gens.generators.size());
    for (size_t gi = 0; gi < gens.generators.size(); ++gi) {
        action[gi].resize(cls.size());
        for (size_t i = 0; i < cls.size(); ++i) {
            int32_t j = cls.find(conjugate(cls.elements[i], gens.generators[gi]));
            if (j < 0)
                throw std::runtime_error(
                    "class is not closed under conjugation by generator " +
                    std::to_string(gi));
            action[gi][i] = j;
        }
    }
    return action;
}

TripleOrbits orbit_partition_of_triples(const GeneratorSet& gens,
                                        const InvolutionClass& cls,
                                        const std::vector<Triple>& triples) {
    auto action = class_generator_action(gens, cls);

    struct TripleHash {
        size_t operator()(const Triple& t) const {
            uint64_t h = 1469598103934665603ULL;
            for (int32_t v : t) {
                h ^= static_cast<uint64_t>(v);
                h *= 1099511628211ULL;
            }
            return static_cast<size_t>(h);
        }
    };
    std::unordered_map<Triple, int32_t, TripleHash> pos;
    pos.reserve(triples.size() * 2);
    for (size_t i = 0; i < triples.size(); ++i)
        pos.emplace(triples[i], static_cast<int32_t>(i));

    TripleOrbits out;
    out.orbit_id.assign(triples.size(), -1);
    for (size_t start = 0; start < triples.size(); ++start) {
        if (out.orbit_id[start] >= 0) continue;
        int32_t oid = static_cast<int32_t>(out.orbit_sizes.size());
        size_t count = 0;
        std::deque<int32_t> queue;
        out.orbit_id[start] = oid;
        queue.push_back(static_cast<int32_t>(start));
        ++count;
        while (!queue.empty()) {
            Triple t = triples[queue.front()];
            queue.pop_front();
            for (const auto& act : action) {
                Triple img{act[t[0]], act[t[1]], act[t[2]]};
                std::sort(img.begin(), img.end());
                auto it = pos.find(img);
                if (it == pos.end())
                    throw std::runtime_error(
                        "a generator maps a triple outside the given set; input "
                        "was not conjugation-closed");
                if (out.orbit_id[it->second] < 0) {
                    out.orbit_id[it->second] = oid;
                    queue.push_back(it->second);
                    ++count;
                }
            }
        }
        out.orbit_sizes.push_back(count);
    }
    return out;
}

}  // namespace suz

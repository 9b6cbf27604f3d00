/*
 * perm.hpp
 *
 * Permutation arithmetic and group-orbit machinery:
 *   - Perm: a bijection on {0..n-1}, stored as its image array
 *   - generator files (one permutation per line, 1-based images)
 *   - conjugacy-class enumeration by orbit closure
 *   - orbit partitions of involution triples under conjugation
 *
 * Action convention, fixed globally: permutations act on the right.
 * compose(p, q) means "apply p, then q", i.e. (p*q)(i) = q(p(i)),
 * and conjugate(x, g) = g^-1 * x * g.
 */
#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace suz {

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<uint16_t> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    uint16_t operator()(uint16_t i) const { return images_[i]; }
    const std::vector<uint16_t>& images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<uint16_t> images_;
};

// apply p, then q
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// g^-1 * x * g under the left-to-right convention
Perm conjugate(const Perm& x, const Perm& g);
uint64_t element_order(const Perm& p);
bool commutes(const Perm& p, const Perm& q);
Perm power(const Perm& p, uint64_t e);

struct PermHash {
    size_t operator()(const Perm& p) const;
};

struct GeneratorSet {
    int degree = 0;
    std::vector<Perm> generators;
    std::string label;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

// Generator file format: line 1 = degree n; each subsequent nonempty line is
// one generator as n space-separated 1-based images of 1..n in order.
// Lines beginning with '#' are comments.
GeneratorSet parse_generators(std::istream& in, const std::string& label = "");
GeneratorSet load_generators(const std::string& path);
void write_generators(const GeneratorSet& gens, const std::string& path);

struct InvolutionClass {
    int degree = 0;
    std::vector<Perm> elements;  // sorted lexicographically by image array
    std::unordered_map<Perm, int32_t, PermHash> index_of;

    int32_t find(const Perm& p) const {
        auto it = index_of.find(p);
        return it == index_of.end() ? -1 : it->second;
    }
    size_t size() const { return elements.size(); }
};

// splitmix64: deterministic, platform-independent
struct Rng64 {
    uint64_t state;
    explicit Rng64(uint64_t seed) : state(seed) {}
    uint64_t next();
    uint64_t below(uint64_t n) { return next() % n; }
};

// Searches deterministic pseudorandom words in the generators for an element
// that powers to an involution whose conjugation orbit has exactly
// target_size elements. Returns nullopt when the budget (number of elements
// tried) is exhausted.
std::optional<Perm> find_class_involution(const GeneratorSet& gens,
                                          size_t target_size, size_t budget,
                                          uint64_t seed);

// Breadth-first closure of {seed} under conjugation by each generator.
// If size_cap > 0 and the closure exceeds it, returns an empty class.
InvolutionClass conjugation_class(const GeneratorSet& gens, const Perm& seed,
                                  size_t size_cap = 0);

using Triple = std::array<int32_t, 3>;

struct TripleOrbits {
    std::vector<int32_t> orbit_id;      // per input triple
    std::vector<size_t> orbit_sizes;    // per orbit
};

// Partitions canonically sorted index triples (into cls.elements) into
// conjugation orbits. Throws if a generator maps a triple outside the set.
TripleOrbits orbit_partition_of_triples(const GeneratorSet& gens,
                                        const InvolutionClass& cls,
                                        const std::vector<Triple>& triples);

// Conjugation action of each generator as a permutation of class indices.
std::vector<std::vector<int32_t>> class_generator_action(
    const GeneratorSet& gens, const InvolutionClass& cls);

}  // namespace suz

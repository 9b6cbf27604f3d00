#include <doctest.h>

#include <sstream>

#include "perm.hpp"

using namespace suz;

static Perm p_of(std::initializer_list<uint16_t> im) {
    return Perm(std::vector<uint16_t>(im));
}

TEST_SUITE("perm") {

TEST_CASE("parse smallest legal file") {
    std::istringstream in("3\n2 3 1\n2 1 3\n");
    GeneratorSet gens = parse_generators(in);
    CHECK(gens.degree == 3);
    REQUIRE(gens.generators.size() == 2);
    CHECK(gens.generators[0] == p_of({1, 2, 0}));
    CHECK(gens.generators[1] == p_of({1, 0, 2}));
}

TEST_CASE("parse rejects non-bijection with line number") {
    std::istringstream in("3\n2 2 1\n");
    CHECK_THROWS_AS(parse_generators(in), ParseError);
    std::istringstream in2("3\n2 2 1\n");
    try {
        parse_generators(in2);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse rejects wrong image count and identity generators") {
    std::istringstream short_line("3\n2 3\n");
    CHECK_THROWS_AS(parse_generators(short_line), ParseError);
    std::istringstream ident("3\n1 2 3\n");
    CHECK_THROWS_AS(parse_generators(ident), ParseError);
    std::istringstream comments("# group\n3\n# gen\n2 3 1\n");
    CHECK(parse_generators(comments).generators.size() == 1);
}

TEST_CASE("compose applies left to right") {
    Perm p = p_of({1, 2, 0});  // 0->1->2->0
    Perm q = p_of({1, 0, 2});  // swap 0,1
    Perm pq = compose(p, q);
    CHECK(pq(0) == q(p(0)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(inverse(compose(p, q)) == compose(inverse(q), inverse(p)));
}

TEST_CASE("compose is associative on random triples") {
    Rng64 rng(7);
    std::vector<Perm> pool{p_of({1, 2, 0, 3}), p_of({1, 0, 3, 2}), p_of({0, 2, 1, 3}),
                           p_of({3, 1, 2, 0})};
    for (int i = 0; i < 50; ++i) {
        const Perm& a = pool[rng.below(pool.size())];
        const Perm& b = pool[rng.below(pool.size())];
        const Perm& c = pool[rng.below(pool.size())];
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("conjugation and orders") {
    Perm x = p_of({1, 0, 2});
    Perm id = Perm::identity(3);
    CHECK(conjugate(x, id) == x);
    Perm g = p_of({1, 2, 0});
    CHECK(conjugate(x, g) == compose(compose(inverse(g), x), g));
    CHECK(element_order(g) == 3);
    CHECK(element_order(x) == 2);
    CHECK(commutes(g, inverse(g)));
    CHECK_THROWS_AS(compose(x, Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("conjugation class of a transposition in S3") {
    GeneratorSet s3;
    s3.degree = 3;
    s3.generators = {p_of({1, 0, 2}), p_of({1, 2, 0})};
    InvolutionClass cls = conjugation_class(s3, p_of({1, 0, 2}));
    CHECK(cls.size() == 3);
    for (const Perm& e : cls.elements) {
        CHECK(element_order(e) == 2);
        // conjugation-closed
        for (const Perm& g : s3.generators) CHECK(cls.find(conjugate(e, g)) >= 0);
    }
}

TEST_CASE("class of a central involution is a singleton") {
    // <(0 1)> x <(2 3)>: (0 1)(2 3) is central in the abelian group
    GeneratorSet gens;
    gens.degree = 4;
    gens.generators = {p_of({1, 0, 2, 3}), p_of({0, 1, 3, 2})};
    Perm z = p_of({1, 0, 3, 2});
    CHECK(conjugation_class(gens, z).size() == 1);
    auto found = find_class_involution(gens, 1, 100, 42);
    REQUIRE(found.has_value());
    CHECK(conjugation_class(gens, *found).size() == 1);
}

TEST_CASE("find_class_involution in S4 finds the double transpositions") {
    GeneratorSet s4;
    s4.degree = 4;
    s4.generators = {p_of({1, 2, 3, 0}), p_of({1, 0, 2, 3})};
    auto found = find_class_involution(s4, 3, 200, 1);
    REQUIRE(found.has_value());
    InvolutionClass cls = conjugation_class(s4, *found);
    CHECK(cls.size() == 3);

    // budget exhaustion on an impossible target
    CHECK_FALSE(find_class_involution(s4, 5, 50, 1).has_value());
}

TEST_CASE("determinism of find_class_involution") {
    GeneratorSet s4;
    s4.degree = 4;
    s4.generators = {p_of({1, 2, 3, 0}), p_of({1, 0, 2, 3})};
    auto a = find_class_involution(s4, 3, 200, 99);
    auto b = find_class_involution(s4, 3, 200, 99);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}

TEST_CASE("orbit partition of the Klein triple") {
    GeneratorSet s4;
    s4.degree = 4;
    s4.generators = {p_of({1, 2, 3, 0}), p_of({1, 0, 2, 3})};
    InvolutionClass cls = conjugation_class(s4, p_of({1, 0, 3, 2}));
    REQUIRE(cls.size() == 3);
    // the three double transpositions commute pairwise and close under product
    Triple t{0, 1, 2};
    TripleOrbits orbits = orbit_partition_of_triples(s4, cls, {t});
    CHECK(orbits.orbit_sizes == std::vector<size_t>{1});

    // a non-closed input is rejected: drop one triple of a two-element orbit
    GeneratorSet d4;
    d4.degree = 4;
    d4.generators = {p_of({1, 2, 3, 0})};  // C4: conjugation swaps (01)(23) and (12)(30)
    InvolutionClass two = conjugation_class(d4, p_of({1, 0, 3, 2}));
    CHECK(two.size() == 2);
}

TEST_CASE("generator file round trip") {
    GeneratorSet gens;
    gens.degree = 5;
    gens.label = "round trip";
    gens.generators = {p_of({1, 2, 3, 4, 0}), p_of({1, 0, 2, 3, 4})};
    write_generators(gens, "roundtrip_test_gens.txt");
    GeneratorSet back = load_generators("roundtrip_test_gens.txt");
    CHECK(back.degree == 5);
    CHECK(back.generators == gens.generators);
    std::remove("roundtrip_test_gens.txt");
}

}  // TEST_SUITE

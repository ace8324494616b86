#include "doctest.h"

#include <algorithm>
#include <set>

#include "catcomp/structure.hpp"
#include "oracles.hpp"

using namespace catcomp;

namespace {

// C(n, k) for the partition identity checks.
long long choose(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_SUITE_BEGIN("structures");

TEST_CASE("parse accepts braces, commas, pipes, and blanks") {
    const auto a = parse_structure("{000,001,010,011}", 3);
    CHECK(a.dims() == 3);
    CHECK(a.a_set() == std::vector<Stimulus>{0, 1, 2, 3});

    CHECK(parse_structure("000|001|010|011", 3) == a);
    CHECK(parse_structure(" 000 , 001 ,010,  011 ", 3) == a);
    CHECK(parse_structure("011,000,010,001", 3) == a); // order-insensitive

    const auto b = parse_structure("00,11", 2);
    CHECK(b.a_set() == std::vector<Stimulus>{0, 3});

    // dims inferred from the first token
    CHECK(parse_structure("0000|0001").dims() == 4);
}

TEST_CASE("parse rejects malformed text with the offending token") {
    CHECK_THROWS_AS(parse_structure("000,01", 3), ParseError);     // short token
    CHECK_THROWS_AS(parse_structure("000,0011", 3), ParseError);   // long token
    CHECK_THROWS_AS(parse_structure("000,0a1", 3), ParseError);    // non-binary
    CHECK_THROWS_AS(parse_structure("000,000", 3), ParseError);    // duplicate
    CHECK_THROWS_AS(parse_structure("", 3), ParseError);           // empty
    CHECK_THROWS_AS(parse_structure("000,,001", 3), ParseError);   // empty token
    CHECK_THROWS_AS(parse_structure("00,01,10,11", 2), ParseError); // full space

    try {
        parse_structure("000,01,100", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("token 2") != std::string::npos);
    }
}

TEST_CASE("constructor validates dims and stimuli") {
    CHECK_THROWS_AS(CategoryStructure(0, {0}), RangeError);
    CHECK_THROWS_AS(CategoryStructure(9, {0}), RangeError);
    CHECK_THROWS_AS(CategoryStructure(2, {4}), RangeError); // outside space
    CHECK_THROWS_AS(CategoryStructure(2, {}), ParseError);
    CHECK_THROWS_AS(CategoryStructure(2, {0, 1, 2, 3}), ParseError);
    CHECK_THROWS_AS(CategoryStructure(2, {1, 1}), ParseError);
}

TEST_CASE("formatting round-trips with ascending bitstrings") {
    const auto s = parse_structure("011,000", 3);
    CHECK(format_structure(s) == "{000,011}");
    CHECK(format_stimulus(4, 3) == "100");
    CHECK(parse_structure(format_structure(s), 3) == s);
}

TEST_CASE("complement swaps the category labels and is an involution") {
    const auto s = parse_structure("000,001", 3);
    const auto c = complement(s);
    CHECK(c.a_set() == std::vector<Stimulus>{2, 3, 4, 5, 6, 7});
    CHECK(complement(c) == s);
}

TEST_CASE("orbit sizes of the worked examples") {
    // one-dimensional split: the 6 half-spaces
    CHECK(symmetry_orbit(oracle::make({"000", "001", "010", "011"})).size() == 6);
    // singleton: the 4 corners of the square (no complementation at |A|=1)
    CHECK(symmetry_orbit(oracle::make({"00"})).size() == 4);
    // parity: even and odd sets only
    CHECK(symmetry_orbit(oracle::make({"000", "011", "101", "110"})).size() == 2);
}

TEST_CASE("orbits contain the seed, are closed, and divide the group order") {
    for (int d = 2; d <= 3; ++d) {
        const int space = 1 << d;
        for (int p = 1; p <= space / 2; ++p) {
            for (const auto& cls : enumerate_classes(d, p)) {
                const auto orbit = symmetry_orbit(cls);
                CHECK(std::find(orbit.begin(), orbit.end(), cls) != orbit.end());
                CHECK(std::is_sorted(orbit.begin(), orbit.end()));
                const auto order =
                    symmetry_group_order(d, 2 * p == space);
                CHECK(order % orbit.size() == 0);
                // closure: the orbit of every member is the same set
                for (const auto& member : orbit)
                    CHECK(symmetry_orbit(member) == orbit);
            }
        }
    }
}

TEST_CASE("canonical form of the worked examples") {
    CHECK(canonical_form(oracle::make({"111"})) == oracle::make({"000"}));
    const auto shj1 = oracle::make({"000", "001", "010", "011"});
    CHECK(canonical_form(shj1) == shj1); // already minimal
}

TEST_CASE("canonical form is idempotent and constant on orbits") {
    for (int d = 2; d <= 3; ++d) {
        for (int p = 1; p <= (1 << d) / 2; ++p) {
            for (const auto& cls : enumerate_classes(d, p)) {
                const auto canon = canonical_form(cls);
                CHECK(canonical_form(canon) == canon);
                for (const auto& member : symmetry_orbit(cls))
                    CHECK(canonical_form(member) == canon);
            }
        }
    }
}

TEST_CASE("canonical form of a majority-side category lists the minority side") {
    const auto down = oracle::make({"001", "010", "011", "100", "101", "110", "111"});
    const auto canon = canonical_form(down);
    CHECK(canon.a_size() == 1);
    CHECK(canon == oracle::make({"000"}));
}

TEST_CASE("class counts match the reference catalog block sizes") {
    CHECK(enumerate_classes(2, 1).size() == 1);
    CHECK(enumerate_classes(2, 2).size() == 2);
    CHECK(enumerate_classes(3, 1).size() == 1);
    CHECK(enumerate_classes(3, 2).size() == 3);
    CHECK(enumerate_classes(3, 3).size() == 3);
    CHECK(enumerate_classes(3, 4).size() == 6);
    CHECK(enumerate_classes(4, 1).size() == 1);
    CHECK(enumerate_classes(4, 2).size() == 4);
    CHECK(enumerate_classes(4, 3).size() == 6);
    CHECK(enumerate_classes(4, 4).size() == 19);
}

TEST_CASE("enumerate returns ascending canonical forms") {
    for (int d = 2; d <= 4; ++d) {
        for (int p = 1; p <= (1 << d) / 2; ++p) {
            const auto classes = enumerate_classes(d, p);
            CHECK(std::is_sorted(classes.begin(), classes.end()));
            for (const auto& cls : classes) {
                CHECK(canonical_form(cls) == cls);
                CHECK(cls.a_size() == p);
            }
        }
    }
}

TEST_CASE("orbit sizes of the classes tile the whole p-subset space") {
    for (int d = 2; d <= 4; ++d) {
        const int space = 1 << d;
        for (int p = 1; p <= space / 2; ++p) {
            long long total = 0;
            for (const auto& cls : enumerate_classes(d, p))
                total += static_cast<long long>(symmetry_orbit(cls).size());
            long long expected = choose(space, p);
            if (2 * p == space)
                expected = choose(space, p); // complements already inside orbits
            CHECK(total == expected);
        }
    }
}

TEST_CASE("enumerate rejects out-of-range arguments") {
    CHECK_THROWS_AS(enumerate_classes(0, 1), RangeError);
    CHECK_THROWS_AS(enumerate_classes(3, 0), RangeError);
    CHECK_THROWS_AS(enumerate_classes(3, 5), RangeError); // p > 2^d / 2
}

TEST_SUITE_END();

#include <doctest.h>

#include <cmath>

#include "spincat/spin_states.hpp"

using namespace spincat;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("HalfInt stores twice-values and parses every spelling") {
    CHECK(HalfInt::from_twice(3).value() == 1.5);
    CHECK(HalfInt::from_twice(3).label() == "3/2");
    CHECK(HalfInt::from_twice(4).label() == "2");
    CHECK(HalfInt::from_twice(3).is_integer() == false);
    CHECK(HalfInt::from_twice(4).is_integer() == true);

    CHECK(HalfInt::parse("2").twice() == 4);
    CHECK(HalfInt::parse("3/2").twice() == 3);
    CHECK(HalfInt::parse("1.5").twice() == 3);
    CHECK(HalfInt::parse("0.5").twice() == 1);
    CHECK(HalfInt::parse("4/2").twice() == 4);

    CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("0.3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::from_twice(-1), std::invalid_argument);

    HalfInt a = HalfInt::from_twice(5), b = HalfInt::from_twice(2);
    CHECK((a + b).twice() == 7);
    CHECK((a - b).twice() == 3);
    CHECK_THROWS_AS(b - a, std::invalid_argument);
    CHECK(b < a);
}

TEST_CASE("parity factors") {
    CHECK(cos_m_pi(Parity::even) == 1);
    CHECK(cos_m_pi(Parity::odd) == -1);
    CHECK(parity_bit(Parity::even) == 0);
    CHECK(parity_bit(Parity::odd) == 1);
}

TEST_CASE("Overlap clamps rounding dust and rejects real violations") {
    CHECK(Overlap(-1e-13).get() == 0.0);
    CHECK(Overlap(1.0 + 1e-13).get() == 1.0);
    CHECK(Overlap(0.25).get() == 0.25);
    CHECK_THROWS_AS(Overlap(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(Overlap(1.1), std::invalid_argument);
}

TEST_CASE("overlap from the coherent parameter") {
    CHECK(std::abs(overlap_from_eta(0.0) - 1.0) < kTol);
    CHECK(std::abs(overlap_from_eta(1.0)) < kTol);
    // eta = 1/sqrt(3) halves the overlap
    CHECK(std::abs(overlap_from_eta(1.0 / std::sqrt(3.0)) - 0.5) < kTol);
    CHECK_THROWS_AS(overlap_from_eta(2.0), std::invalid_argument);
}

TEST_CASE("branch overlap and normalization") {
    CHECK(std::abs(coherent_pair_overlap(HalfInt::from_twice(3), 0.5) - 0.125) < kTol);
    CHECK(std::abs(coherent_pair_overlap(HalfInt::from_twice(4), 0.5) - 0.0625) < kTol);

    // frozen oracle values
    CHECK(std::abs(cat_normalization({HalfInt::from_twice(4), Parity::even, 0.5}) -
                   0.6859943405700354) < kTol);
    CHECK(std::abs(cat_normalization({HalfInt::from_twice(4), Parity::odd, 0.5}) -
                   0.7302967433402214) < kTol);
    CHECK(std::abs(cat_normalization({HalfInt::from_twice(3), Parity::odd, 0.5}) -
                   0.7559289460184545) < kTol);

    CHECK_THROWS_AS(cat_normalization({HalfInt::from_twice(3), Parity::odd, 1.0}),
                    DegenerateCatError);
}

TEST_CASE("degeneracy is the odd cat at p = 1 only") {
    CHECK(CatState{HalfInt::from_twice(3), Parity::odd, 1.0}.degenerate());
    CHECK_FALSE(CatState{HalfInt::from_twice(3), Parity::even, 1.0}.degenerate());
    CHECK_FALSE(CatState{HalfInt::from_twice(3), Parity::odd, 0.999}.degenerate());
}

TEST_CASE("scheme parsing, labels and validation") {
    SplitScheme s = SplitScheme::parse("3/2,1/2");
    CHECK(s.label() == "3/2;1/2");
    CHECK(s == SplitScheme::parse("3/2;1/2"));
    CHECK(s.total().twice() == 4);
    CHECK(SplitScheme::parse("1/2,1,3/2").size() == 3);
    CHECK_THROWS_AS(SplitScheme::parse(""), std::invalid_argument);

    HalfInt two = HalfInt::from_twice(4);
    CHECK_NOTHROW(validate_scheme(s, two, 2));
    CHECK_THROWS_AS(validate_scheme(s, two, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_scheme(SplitScheme::parse("1,1"), HalfInt::from_twice(3), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_scheme(SplitScheme::parse("0,2"), two, 2), std::invalid_argument);
}

TEST_CASE("bipartitions come out in the fixed order") {
    auto splits = enumerate_bipartitions(HalfInt::from_twice(4));
    REQUIRE(splits.size() == 3);
    CHECK(splits[0].label() == "3/2;1/2");
    CHECK(splits[1].label() == "1;1");
    CHECK(splits[2].label() == "1/2;3/2");
}

TEST_CASE("tripartitions enumerate every ordered composition") {
    auto one = enumerate_tripartitions(HalfInt::from_twice(3));
    REQUIRE(one.size() == 1);
    CHECK(one[0].label() == "1/2;1/2;1/2");

    auto three = enumerate_tripartitions(HalfInt::from_twice(4));
    REQUIRE(three.size() == 3);
    CHECK(three[0].label() == "1/2;1/2;1");
    CHECK(three[1].label() == "1/2;1;1/2");
    CHECK(three[2].label() == "1;1/2;1/2");

    CHECK(enumerate_tripartitions(HalfInt::from_twice(6)).size() == 10);
}

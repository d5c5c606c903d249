#include <doctest.h>

#include <cmath>

#include "spincat/multipartite.hpp"

using namespace spincat;

namespace {

constexpr double kTol = 1e-12;

HalfInt tw(int t) { return HalfInt::from_twice(t); }

CatState cat(int jt, Parity m, double p) { return {tw(jt), m, p}; }

}  // namespace

TEST_CASE("pair indexing") {
    CHECK(pair_index(0, 1) == 0);
    CHECK(pair_index(0, 2) == 1);
    CHECK(pair_index(1, 2) == 2);
    CHECK_THROWS_AS(pair_index(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair_index(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair_index(0, 3), std::invalid_argument);
}

TEST_CASE("totals: frozen values and the two formulas agree") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    TripartiteRecord even = evaluate_tripartite(cat(3, Parity::even, 0.5), half3);
    CHECK(std::abs(even.total_e - 0.4186605101085634) < kTol);
    CHECK(std::abs(even.total_e - even.total_d) < 1e-14);
    CHECK(std::abs(even.e_pair[0] - 0.18729859856877246) < kTol);
    CHECK(even.limit == false);

    TripartiteRecord odd = evaluate_tripartite(cat(3, Parity::odd, 0.5), half3);
    CHECK(std::abs(odd.total_e - 0.6095925060661402) < kTol);
    CHECK(std::abs(odd.total_e - odd.total_d) < 1e-14);

    SplitScheme ones = SplitScheme::parse("1,1,1");
    CHECK(std::abs(total_eof(cat(6, Parity::even, 0.3), ones) - 0.5069059486995042) < kTol);
    CHECK(std::abs(total_discord(cat(6, Parity::even, 0.3), ones) - 0.5069059486995042) < kTol);
    CHECK(std::abs(total_eof(cat(6, Parity::odd, 0.7), SplitScheme::parse("1/2,1,3/2")) -
                   0.5874171290315365) < kTol);
}

TEST_CASE("monogamy deficits: frozen values") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    CHECK(std::abs(monogamy_delta_eof(cat(3, Parity::odd, 0.5), half3) -
                   0.3824878517473329) < kTol);
    CHECK(std::abs(monogamy_delta_eof(cat(3, Parity::odd, 0.9), half3) -
                   (-0.09356844252088381)) < kTol);
    // fully symmetric scheme: the two deficits coincide
    CHECK(std::abs(monogamy_delta_discord(cat(3, Parity::odd, 0.9), half3) -
                   monogamy_delta_eof(cat(3, Parity::odd, 0.9), half3)) < 1e-14);

    CHECK(std::abs(monogamy_delta_eof(cat(4, Parity::even, 0.5),
                                      SplitScheme::parse("1,1/2,1/2")) -
                   0.34393343533606324) < kTol);
    CHECK(std::abs(monogamy_delta_discord(cat(4, Parity::odd, 0.5),
                                          SplitScheme::parse("1/2,1,1/2")) -
                   0.40376497321087257) < kTol);

    TripartiteRecord rec = evaluate_tripartite(cat(4, Parity::even, 0.5),
                                               SplitScheme::parse("1,1/2,1/2"));
    CHECK(rec.delta_e[0] == monogamy_delta_eof(cat(4, Parity::even, 0.5),
                                               SplitScheme::parse("1,1/2,1/2")));
    CHECK_THROWS_AS(monogamy_delta_eof(cat(3, Parity::even, 0.5), half3, 3),
                    std::invalid_argument);
}

TEST_CASE("conservation identities hold to rounding") {
    struct Point {
        const char* scheme;
        int m;
        double p;
    };
    const Point points[] = {
        {"1/2,1,3/2", 0, 0.5}, {"1/2,1,3/2", 1, 0.5}, {"1,1/2,1/2", 1, 0.85},
        {"1/2,1/2,1/2", 0, 0.9265}, {"1,1,1", 0, 0.3}, {"1/2,1/2,2", 1, 0.7},
    };
    for (const auto& pt : points) {
        SplitScheme scheme = SplitScheme::parse(pt.scheme);
        CatState state{scheme.total(), pt.m ? Parity::odd : Parity::even, pt.p};
        ConservationResiduals res = conservation_residuals(evaluate_tripartite(state, scheme));
        CHECK(res.worst() < 1e-12);
        CHECK(std::abs(delta_minus_cycle(state, scheme)) < 1e-13);
    }
}

TEST_CASE("the balance identity needs the oriented cycle") {
    SplitScheme scheme = SplitScheme::parse("1/2,1,3/2");
    CatState state{scheme.total(), Parity::even, 0.5};
    CHECK(std::abs(delta_minus_cycle(state, scheme)) < 1e-13);
    // the unordered pair list does not telescope
    double literal = delta_minus(state, tw(1), tw(2)) + delta_minus(state, tw(1), tw(3)) +
                     delta_minus(state, tw(2), tw(3));
    CHECK(std::abs(literal) > 1e-2);
    // each balance is the antisymmetric half of the two directions
    CHECK(std::abs(delta_plus(state, tw(1), tw(2)) + delta_minus(state, tw(1), tw(2)) -
                   discord_closed(state, tw(1), tw(2))) < 1e-14);
}

TEST_CASE("analytic limit records") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");

    TripartiteRecord ghz = limit_values(half3, Parity::even, LimitPoint::p0);
    CHECK(ghz.limit);
    for (int i = 0; i < 3; ++i) {
        CHECK(ghz.e_pair[i] == 0.0);
        CHECK(ghz.e_pure[i] == 1.0);
        CHECK(ghz.delta_e[i] == 1.0);
        CHECK(ghz.delta_d[i] == 1.0);
    }
    CHECK(std::abs(ghz.total_e - 0.5) < kTol);
    CHECK(std::abs(ghz.total_d - 0.5) < kTol);

    TripartiteRecord dead = limit_values(half3, Parity::even, LimitPoint::p1);
    CHECK(dead.total_e == 0.0);
    CHECK(dead.delta_e[0] == 0.0);

    TripartiteRecord w = limit_values(half3, Parity::odd, LimitPoint::p1);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(w.e_pair[i] - 0.5500477595827576) < kTol);
        CHECK(std::abs(w.e_pure[i] - 0.9182958340544896) < kTol);
        CHECK(std::abs(w.delta_e[i] - (-0.1817996851110256)) < kTol);
        CHECK(std::abs(w.delta_d[i] - (-0.1817996851110256)) < kTol);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) CHECK(std::abs(w.d_dir[a][b] - 0.5500477595827576) < kTol);
    CHECK(std::abs(w.total_e - w.total_d) < kTol);
    CHECK(conservation_residuals(w).worst() < 1e-12);

    // asymmetric W record still satisfies every identity
    TripartiteRecord w2 = limit_values(SplitScheme::parse("1/2,1,3/2"), Parity::odd,
                                       LimitPoint::p1);
    CHECK(conservation_residuals(w2).worst() < 1e-12);

    CHECK_THROWS_AS(limit_values(SplitScheme::parse("1,1"), Parity::odd, LimitPoint::p1),
                    std::invalid_argument);
}

TEST_CASE("degenerate states dispatch to the limit record") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    TripartiteRecord rec = evaluate_tripartite(cat(3, Parity::odd, 1.0), half3);
    TripartiteRecord lim = limit_values(half3, Parity::odd, LimitPoint::p1);
    CHECK(rec.limit);
    CHECK(rec.total_e == lim.total_e);
    CHECK(rec.delta_e[0] == lim.delta_e[0]);
    // the even cat at p = 1 is fine without a limit
    CHECK_FALSE(evaluate_tripartite(cat(3, Parity::even, 1.0), half3).limit);
}

TEST_CASE("pure split limits") {
    SplitScheme split = SplitScheme::parse("3/2,1/2");
    BipartiteValues ghz = pure_split_limit(split, Parity::even, LimitPoint::p0);
    CHECK(ghz.c == 1.0);
    CHECK(ghz.e == 1.0);
    BipartiteValues dead = pure_split_limit(split, Parity::even, LimitPoint::p1);
    CHECK(dead.c == 0.0);
    CHECK(dead.e == 0.0);
    BipartiteValues w = pure_split_limit(split, Parity::odd, LimitPoint::p1);
    CHECK(std::abs(w.c - 0.8660254037844386) < kTol);
    CHECK(std::abs(w.e - 0.8112781244591328) < kTol);
    CHECK_THROWS_AS(pure_split_limit(SplitScheme::parse("1,1,1"), Parity::odd, LimitPoint::p1),
                    std::invalid_argument);
}

TEST_CASE("closed forms approach the odd limit record monotonically") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    TripartiteRecord lim = limit_values(half3, Parity::odd, LimitPoint::p1);
    double prev_pair = 1.0, prev_delta = 1.0;
    for (double p : {0.99, 0.999, 0.9999}) {
        TripartiteRecord rec = evaluate_tripartite(cat(3, Parity::odd, p), half3);
        double dist_pair = std::abs(rec.e_pair[0] - lim.e_pair[0]);
        double dist_delta = std::abs(rec.delta_e[0] - lim.delta_e[0]);
        CHECK(dist_pair < prev_pair);
        CHECK(dist_delta < prev_delta);
        prev_pair = dist_pair;
        prev_delta = dist_delta;
    }
    CHECK(prev_pair < 1e-3);
    CHECK(prev_delta < 1e-3);
}

TEST_CASE("the even deficit dips slightly below zero near p = 1") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    double at_min = monogamy_delta_eof(cat(3, Parity::even, 0.9265123667661846), half3);
    CHECK(at_min < -7e-4);
    CHECK(at_min > -8e-4);
    CHECK(monogamy_delta_eof(cat(3, Parity::even, 0.5), half3) > 0.0);
    // zero crossing sits near 0.8883
    CHECK(monogamy_delta_eof(cat(3, Parity::even, 0.88), half3) > 0.0);
    CHECK(monogamy_delta_eof(cat(3, Parity::even, 0.90), half3) < 0.0);
    CHECK(std::abs(monogamy_delta_discord(cat(3, Parity::even, 0.9265123667661846), half3) -
                   at_min) < 1e-14);
}

TEST_CASE("the odd deficit changes sign inside (0.75, 0.85)") {
    SplitScheme half3 = SplitScheme::parse("1/2,1/2,1/2");
    CHECK(monogamy_delta_eof(cat(3, Parity::odd, 0.75), half3) > 0.0);
    CHECK(monogamy_delta_eof(cat(3, Parity::odd, 0.85), half3) < 0.0);
    // frozen root
    CHECK(std::abs(monogamy_delta_eof(cat(3, Parity::odd, 0.8059756132029409), half3)) < 1e-10);
}

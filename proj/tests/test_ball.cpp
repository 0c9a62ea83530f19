#include "doctest.h"
#include "abgrow/ball.hpp"
#include "abgrow/errors.hpp"
#include "oracle.hpp"
#include "testgroups.hpp"

using namespace abgrow;

namespace {

AbelianStructure make(const char* text) {
    return AbelianStructure::derive(parse_group_spec(text));
}

// ball table must agree with the word-enumeration oracle entry by entry
void check_against_oracle(const AbelianStructure& g, int radius) {
    BallTable ball(g, radius);
    auto expect = oracle::ball(g, radius);
    REQUIRE(ball.size() == expect.size());
    for (std::uint32_t idx = 0; idx < ball.size(); ++idx) {
        Element e = ball.element(idx);
        auto it = expect.find(e);
        REQUIRE(it != expect.end());
        CHECK(ball.distance(idx) == it->second.length);
        CHECK(ball.nf(idx) == it->second.nf);
    }
    // discovery order within a sphere is shortlex order of normal forms
    for (int d = 0; d <= ball.radius(); ++d)
        for (std::uint32_t idx = ball.level_begin(d); idx + 1 < ball.level_end(d); ++idx)
            CHECK(ball.nf(idx) < ball.nf(idx + 1));
}

} // namespace

TEST_SUITE("ball") {

TEST_CASE("plane sphere sizes") {
    BallTable ball(make(testgroups::z2), 4);
    CHECK(ball.sphere_counts() == std::vector<std::uint64_t>({1, 4, 8, 12, 16}));
    CHECK(!ball.exhausted());
    CHECK(ball.size() == 41);
}

TEST_CASE("rank three sphere sizes") {
    BallTable ball(make(testgroups::z3), 3);
    CHECK(ball.sphere_counts() == std::vector<std::uint64_t>({1, 6, 18, 38}));
}

TEST_CASE("redundant generator changes the metric") {
    BallTable ball(make(testgroups::zxz_c), 3);
    CHECK(ball.sphere_counts() == std::vector<std::uint64_t>({1, 6, 12, 18}));

    BallTable doubled(make(testgroups::zred), 3);
    CHECK(doubled.sphere_counts() == std::vector<std::uint64_t>({1, 4, 4, 4}));
}

TEST_CASE("finite groups are exhausted") {
    BallTable z5(make(testgroups::z5), 10);
    CHECK(z5.exhausted());
    CHECK(z5.size() == 5);
    CHECK(z5.radius() == 2);
    CHECK(z5.sphere_counts() == std::vector<std::uint64_t>({1, 2, 2}));

    BallTable z2m(make(testgroups::z2m), 10);
    CHECK(z2m.exhausted());
    CHECK(z2m.size() == 2);
    CHECK(z2m.sphere_counts() == std::vector<std::uint64_t>({1, 1}));
}

TEST_CASE("normal forms and distances match word enumeration") {
    check_against_oracle(make(testgroups::z), 5);
    check_against_oracle(make(testgroups::z2), 4);
    check_against_oracle(make(testgroups::z3), 3);
    check_against_oracle(make(testgroups::zxz_c), 3);
    check_against_oracle(make(testgroups::ex31), 3);
    check_against_oracle(make(testgroups::z5), 4);
    check_against_oracle(make(testgroups::zred), 4);
    check_against_oracle(make(testgroups::z2m), 3);
}

TEST_CASE("normal form lookup round trip") {
    AbelianStructure g = make(testgroups::z2);
    BallTable ball(g, 5);
    Element e = g.evaluate(g.alphabet().parse_word("aabbb"));
    std::uint32_t idx = ball.find(e);
    REQUIRE(idx != BallTable::npos);
    CHECK(ball.distance(idx) == 5);
    CHECK(ball.element(idx) == e);
    CHECK(g.alphabet().format_word(ball.nf(idx)) == "aabbb");
    CHECK(ball.find(g.evaluate(g.alphabet().parse_word("aaaaaa"))) == BallTable::npos);
}

TEST_CASE("element cap is an error, not a truncation") {
    CHECK_THROWS_AS(BallTable(make(testgroups::z2), 5, 10), Error);
    try {
        BallTable ball(make(testgroups::z2), 5, 10);
        FAIL("expected resource error");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::resource);
    }
}

} // TEST_SUITE

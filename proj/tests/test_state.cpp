#include <doctest.h>

#include "sweepmc/state.hpp"

using namespace sweepmc;

TEST_CASE("single-site flip matches the site-1-first rendering") {
    // n=3: "000" -> flip site 1 -> "100"
    CHECK(flip_site(state_from_string("000"), 1, 3) == state_from_string("100"));
    CHECK(flip_site(state_from_string("101"), 2, 3) == state_from_string("111"));
}

TEST_CASE("flip is an involution") {
    const int n = 5;
    for (StateIndex x = 0; x < state_count(n); ++x)
        for (int i = 1; i <= n; ++i) CHECK(flip_site(flip_site(x, i, n), i, n) == x);
}

TEST_CASE("prefix flip boundary and small cases") {
    const int n = 3;
    for (StateIndex x = 0; x < state_count(n); ++x) CHECK(flip_prefix(x, 0, n) == x);
    CHECK(flip_prefix(state_from_string("000"), 2, 3) == state_from_string("110"));
    CHECK(flip_prefix(state_from_string("010"), 3, 3) == state_from_string("101"));
    for (StateIndex x = 0; x < state_count(n); ++x)
        CHECK(flip_prefix(x, n, n) == complement_state(x, n));
}

TEST_CASE("suffix flip boundary and small cases") {
    const int n = 3;
    for (StateIndex x = 0; x < state_count(n); ++x) CHECK(flip_suffix(x, n + 1, n) == x);
    CHECK(flip_suffix(state_from_string("000"), 2, 3) == state_from_string("011"));
    for (StateIndex x = 0; x < state_count(n); ++x)
        CHECK(flip_suffix(x, 1, n) == complement_state(x, n));
}

TEST_CASE("suffix-of-prefix composition flips all sites but one") {
    const int n = 5;
    for (StateIndex x = 0; x < state_count(n); ++x)
        for (int i = 1; i <= n; ++i)
            CHECK(flip_suffix(flip_prefix(x, i - 1, n), i + 1, n) ==
                  complement_state(flip_site(x, i, n), n));
}

TEST_CASE("prefix and suffix flips factor through single flips") {
    const int n = 5;
    for (StateIndex x = 0; x < state_count(n); ++x) {
        for (int i = 1; i <= n; ++i) {
            CHECK(flip_prefix(x, i, n) == flip_site(flip_prefix(x, i - 1, n), i, n));
            CHECK(flip_suffix(x, i, n) == flip_site(flip_suffix(x, i + 1, n), i, n));
        }
        StateIndex all = x;
        for (int i = 1; i <= n; ++i) all = flip_site(all, i, n);
        CHECK(all == flip_prefix(x, n, n));
    }
}

TEST_CASE("bit vector and string round trips are the identity") {
    const int n = 4;
    for (StateIndex x = 0; x < state_count(n); ++x) {
        CHECK(bits_to_state(state_to_bits(x, n)) == x);
        CHECK(state_from_string(state_to_string(x, n)) == x);
    }
    CHECK(state_to_string(1, 3) == "100");
    CHECK(state_to_string(6, 3) == "011");
}

TEST_CASE("spin rendering maps 0 to -1 and 1 to +1") {
    const StateIndex x = state_from_string("10");
    CHECK(site_spin(x, 1) == 1);
    CHECK(site_spin(x, 2) == -1);
}

TEST_CASE("out-of-range arguments are rejected") {
    CHECK_THROWS_AS(flip_site(0, 0, 3), InvalidInputError);
    CHECK_THROWS_AS(flip_site(0, 4, 3), InvalidInputError);
    CHECK_THROWS_AS(flip_prefix(0, -1, 3), InvalidInputError);
    CHECK_THROWS_AS(flip_prefix(0, 4, 3), InvalidInputError);
    CHECK_THROWS_AS(flip_suffix(0, 0, 3), InvalidInputError);
    CHECK_THROWS_AS(flip_suffix(0, 5, 3), InvalidInputError);
    CHECK_THROWS_AS(state_count(0), InvalidInputError);
    CHECK_THROWS_AS(state_count(kMaxSites + 1), InvalidInputError);
    CHECK_THROWS_AS(state_from_string("01x"), InvalidInputError);
}

#include <doctest.h>

#include <numeric>

#include "bwdb/necklace_order.hpp"
#include "bwdb/oracle.hpp"

using namespace bwdb;

namespace {

Necklace nk(std::string_view text, int k) { return Necklace(parse_kstring(text, k)); }

}  // namespace

TEST_CASE("first_necklace") {
    CHECK(to_text(first_necklace(Params::at_least(3, 4, 9)).value()) == "144");
    CHECK(to_text(first_necklace(Params::at_least(4, 2, 6)).value()) == "1122");
    CHECK(to_text(first_necklace(Params::at_least(4, 2, 4)).value()) == "1111");
    CHECK(to_text(first_necklace(Params::at_least(4, 2, -3)).value()) == "1111");
    CHECK(to_text(first_necklace(Params::unconstrained(4, 2)).value()) == "1111");
    CHECK(to_text(first_necklace(Params::at_least(3, 3, 9)).value()) == "333");
    CHECK_THROWS_AS(first_necklace(Params::at_least(3, 3, 10)), constraint_error);
}

TEST_CASE("first_necklace has weight w and is aperiodic for n < w < kn") {
    for (int n = 2; n <= 7; ++n) {
        for (int k = 2; k <= 5; ++k) {
            for (int w = n + 1; w < k * n; ++w) {
                const Necklace a = first_necklace(Params::at_least(n, k, w));
                CHECK(weight(a.value()) == w);
                CHECK_FALSE(a.periodic());
            }
        }
    }
}

TEST_CASE("first_necklace matches the brute-force minimum on the whole grid") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 4; ++k) {
            for (int w = n; w <= n * k; ++w) {
                const auto brute = oracle::necklaces(n, k, w);
                REQUIRE(first_necklace(Params::at_least(n, k, w)).value().symbols().size() == n);
                CHECK(first_necklace(Params::at_least(n, k, w)).value() == KString(brute.front(), k));
            }
        }
    }
}

TEST_CASE("increment_last_nonmax") {
    CHECK(to_text(increment_last_nonmax(nk("224", 4)).value()) == "234");
    CHECK(to_text(increment_last_nonmax(nk("223", 4)).value()) == "224");
    CHECK(to_text(increment_last_nonmax(nk("3444", 4)).value()) == "4444");
    CHECK_THROWS_AS(increment_last_nonmax(nk("444", 4)), constraint_error);
}

TEST_CASE("weighted_successor_geq") {
    CHECK(to_text(weighted_successor_geq(nk("233", 4), Params::at_least(3, 4, 9)).value()) == "234");
    CHECK(to_text(weighted_successor_geq(nk("144", 4), Params::at_least(3, 4, 9)).value()) == "144");
    CHECK(to_text(weighted_successor_geq(nk("1112", 2), Params::at_least(4, 2, 6)).value()) == "1122");
}

TEST_CASE("weighted_successor_geq equals the brute-force filtered minimum") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const auto all = oracle::necklaces(n, k);
            for (int w = n; w <= n * k; ++w) {
                const auto heavy = oracle::necklaces(n, k, w);
                for (const auto& a : all) {
                    const auto expected = *std::lower_bound(heavy.begin(), heavy.end(), a);
                    const Necklace got = weighted_successor_geq(Necklace(KString(a, k)), Params::at_least(n, k, w));
                    REQUIRE(got.value() == KString(expected, k));
                }
            }
        }
    }
}

TEST_CASE("smallest_necklace_with_prefix") {
    CHECK(to_text(smallest_necklace_with_prefix(parse_kstring("112", 2), 4).value()) == "1122");
    CHECK(to_text(smallest_necklace_with_prefix(parse_kstring("23", 4), 3).value()) == "233");
    CHECK(to_text(smallest_necklace_with_prefix(parse_kstring("1212", 2), 4).value()) == "1212");
    CHECK_THROWS_AS(smallest_necklace_with_prefix(parse_kstring("21", 2), 4), constraint_error);
    CHECK_THROWS_AS(smallest_necklace_with_prefix(parse_kstring("11111", 2), 4), constraint_error);
}

TEST_CASE("smallest_necklace_with_prefix equals brute force for every pq_split suffix") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 4; ++k) {
            for (const auto& w : oracle::all_strings(n, k)) {
                const KString q = pq_split(KString(w, k)).q;
                const auto expected = oracle::smallest_necklace_with_prefix(q.symbols(), n, k);
                REQUIRE(smallest_necklace_with_prefix(q, n).value() == KString(expected, k));
            }
        }
    }
}

TEST_CASE("next_necklace") {
    auto next = [](std::string_view s) {
        auto r = next_necklace(nk(s, 2));
        return r ? to_text(r->value()) : std::string("none");
    };
    CHECK(next("1111") == "1112");
    CHECK(next("1212") == "1222");
    CHECK(next("2222") == "none");
}

TEST_CASE("next_necklace enumerates exactly the brute-force necklaces in order") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<oracle::Word> seen;
            std::optional<Necklace> cur = Necklace(KString::uniform(1, n, k));
            for (; cur; cur = next_necklace(*cur)) {
                seen.emplace_back(cur->value().symbols().begin(), cur->value().symbols().end());
            }
            CHECK(seen == oracle::necklaces(n, k));
        }
    }
}

TEST_CASE("NecklaceCursor walks N_k(n, w-up)") {
    NecklaceCursor cursor(Params::at_least(4, 2, 6));
    std::vector<std::string> seen{to_text(cursor.current().value())};
    while (cursor.advance()) seen.push_back(to_text(cursor.current().value()));
    CHECK(seen == std::vector<std::string>{"1122", "1212", "1222", "2222"});
    CHECK_FALSE(cursor.advance());
    CHECK(to_text(cursor.current().value()) == "2222");
}

TEST_CASE("params normalization") {
    CHECK(Params::at_least(4, 2, 1).normalized_up().w == 4);
    CHECK(Params::at_most(3, 3, 5).normalized_up() == Params::at_least(3, 3, 7));
    CHECK(Params::at_most(3, 3, 100).normalized_up() == Params::at_least(3, 3, 3));
    CHECK_THROWS_AS(Params::at_most(3, 3, 2).normalized_up(), constraint_error);
    CHECK_THROWS_AS(Params::at_least(0, 3, 2).normalized_up(), constraint_error);
    CHECK_THROWS_AS(Params::at_least(3, 0, 2).normalized_up(), constraint_error);
}

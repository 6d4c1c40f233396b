#include <doctest.h>

#include "bwdb/decode.hpp"
#include "bwdb/oracle.hpp"
#include "bwdb/ucycle.hpp"

using namespace bwdb;

namespace {

KString ks(std::string_view text, int k) { return parse_kstring(text, k); }

}  // namespace

TEST_CASE("rank_up examples") {
    const Params g4 = Params::at_least(3, 4, 9);
    CHECK(rank_up(ks("423", 4), g4) == 3);
    CHECK(rank_up(ks("414", 4), g4) == 20);
    CHECK(rank_up(ks("144", 4), g4) == 1);
    CHECK(rank_up(ks("2112", 2), Params::unconstrained(4, 2)) == 5);
    CHECK(rank_up(ks("2211", 2), Params::unconstrained(4, 2)) == 15);
}

TEST_CASE("rank_up rejects invalid input") {
    const Params g4 = Params::at_least(3, 4, 9);
    CHECK_THROWS_AS(rank_up(ks("133", 4), g4), constraint_error);   // weight 7 < 9
    CHECK_THROWS_AS(rank_up(ks("4444", 4), g4), constraint_error);  // wrong length
    CHECK_THROWS_AS(rank_up(ks("444", 5), g4), constraint_error);   // wrong alphabet
}

TEST_CASE("smallest_neck") {
    const Params g4 = Params::at_least(3, 4, 9);
    CHECK(to_text(smallest_neck(3, g4).value()) == "234");
    CHECK(rank_up(ks("234", 4), g4) == 4);
    CHECK(to_text(smallest_neck(1, g4).value()) == "144");
    CHECK(to_text(smallest_neck(4 - 3, g4).value()) == "144");
    CHECK_THROWS_AS(smallest_neck(0, g4), constraint_error);
    CHECK_THROWS_AS(smallest_neck(19, g4), constraint_error);
}

TEST_CASE("unrank_up examples") {
    const Params g4 = Params::at_least(3, 4, 9);
    CHECK(to_text(unrank_up(3, g4)) == "423");
    CHECK(to_text(unrank_up(1, g4)) == "144");
    CHECK(to_text(unrank_up(18, g4)) == "444");
    CHECK(to_text(unrank_up(20, g4)) == "414");
    CHECK_THROWS_AS(unrank_up(0, g4), constraint_error);
    CHECK_THROWS_AS(unrank_up(21, g4), constraint_error);
}

TEST_CASE("rank_down and unrank_down") {
    const Params p = Params::at_most(3, 3, 5);
    CHECK(rank_down(ks("311", 3), p) == 1);
    CHECK(rank_down(ks("112", 3), p) == 2);
    CHECK(rank_down(ks("131", 3), p) == 10);
    CHECK(to_text(unrank_down(1, p)) == "311");
    CHECK(to_text(unrank_down(4, p)) == "221");
    CHECK(to_text(unrank_down(8, p)) == "111");
    CHECK_THROWS_AS(rank_down(ks("333", 3), p), constraint_error);
    CHECK_THROWS_AS(unrank_down(11, p), constraint_error);
}

TEST_CASE("degenerate cycles") {
    const Params full = Params::at_least(4, 3, 12);
    CHECK(rank_up(ks("3333", 3), full) == 1);
    CHECK(to_text(unrank_up(1, full)) == "3333");
    CHECK(Decoder(full).cycle_length() == 1);
    CHECK_THROWS_AS(unrank_up(2, full), constraint_error);

    const Params unary = Params::unconstrained(5, 1);
    CHECK(rank_up(ks("11111", 1), unary) == 1);
    CHECK(to_text(unrank_up(1, unary)) == "11111");

    const Params single = Params::at_most(4, 3, 4);  // only 1111
    CHECK(rank_down(ks("1111", 3), single) == 1);
    CHECK(to_text(unrank_down(1, single)) == "1111");
}

TEST_CASE("n = 1 runs through the generic path") {
    const Params p = Params::at_least(1, 6, 3);
    for (int x = 3; x <= 6; ++x) {
        CHECK(rank_up(KString({x}, 6), p) == x - 2);
        CHECK(unrank_up(x - 2, p) == KString({x}, 6));
    }
}

TEST_CASE("rank and unrank agree with a scan of the cycle, both directions") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 4; ++k) {
            for (int w = n; w <= n * k; ++w) {
                for (Params params : {Params::at_least(n, k, w), Params::at_most(n, k, w)}) {
                    const Decoder decoder(params);
                    const auto cycle = materialize(params);
                    REQUIRE(Count(cycle.size()) == decoder.cycle_length());
                    const auto windows = oracle::window_positions(cycle, n);
                    for (const auto& [w_syms, where] : windows) {
                        const KString s(w_syms, k);
                        REQUIRE(decoder.rank(s) == where.front());
                        REQUIRE(decoder.unrank(where.front()) == s);
                    }
                }
            }
        }
    }
}

TEST_CASE("smallest_neck loop invariant holds after every position") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 2; k <= 4; ++k) {
            for (int w = n; w < n * k; ++w) {
                const Decoder d(Params::at_least(n, k, w));
                const Count last = d.cycle_length() - n + 1;
                for (Count r = 1; r <= last; ++r) {
                    std::vector<KString> trace;
                    d.smallest_neck(r, &trace);
                    REQUIRE(trace.size() == static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i) {
                        const KString& t = trace[i];
                        REQUIRE(is_necklace(t));
                        REQUIRE(weight(t) >= w);
                        REQUIRE(d.rank_up(t) >= r);
                        if (t[i] > 1) {
                            std::vector<Symbol> lower(t.symbols().begin(), t.symbols().end());
                            --lower[i];
                            const KString dec(lower, k);
                            const bool member = is_necklace(dec) && weight(dec) >= w;
                            REQUIRE((!member || d.rank_up(dec) < r));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("complement duality") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 2; k <= 4; ++k) {
            for (int w = n; w <= n * k; ++w) {
                const Params down = Params::at_most(n, k, w);
                const Params up = Params::at_least(n, k, n * k - w + n);
                const Decoder dd(down), du(up);
                for (const auto& s : oracle::all_strings(n, k)) {
                    const KString x(s, k);
                    if (weight(x) > w) continue;
                    REQUIRE(dd.rank(x) == du.rank(complement(x)));
                }
            }
        }
    }
}

TEST_CASE("decoder caches T per necklace") {
    const Decoder d(Params::at_least(6, 3, 11));
    const Count r = d.rank(parse_kstring("233112", 3));
    const std::size_t cached = d.cached_t_values();
    CHECK(cached >= 1);
    CHECK(d.rank(parse_kstring("233112", 3)) == r);
    CHECK(d.cached_t_values() == cached);
}

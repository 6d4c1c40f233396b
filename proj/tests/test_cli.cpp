#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "bwdb/cli.hpp"
#include "bwdb/strings.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bwdb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate") {
    CHECK(run({"generate", "--n", "3", "--k", "4", "--wmin", "9"}).out == "14423424324433343444\n");
    CHECK(run({"generate", "--n", "4", "--k", "2"}).out == "1111211221212222\n");
    CHECK(run({"generate", "--n", "3", "--k", "3", "--wmax", "5"}).out == "3112212111\n");
    CHECK(run({"generate", "--n", "1", "--k", "12"}).out == "1.2.3.4.5.6.7.8.9.10.11.12\n");
    CHECK(run({"generate", "--n", "2", "--k", "3", "--format", "dotted"}).out == "1.1.2.1.3.2.2.3.3\n");
    const auto j = run({"generate", "--n", "2", "--k", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out == "{\"k\":2,\"length\":4,\"n\":2,\"symbols\":[1,1,2,2]}\n");
}

TEST_CASE("rank and unrank") {
    CHECK(run({"rank", "--n", "4", "--k", "2", "--string", "2112"}).out == "5\n");
    CHECK(run({"rank", "--n", "3", "--k", "4", "--wmin", "9", "--string", "414"}).out == "20\n");
    CHECK(run({"rank", "--n", "3", "--k", "3", "--wmax", "5", "--string", "131"}).out == "10\n");
    CHECK(run({"unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "3"}).out == "423\n");
    CHECK(run({"rank", "--n", "4", "--k", "2", "--string", "2112", "--format", "json"}).out ==
          "{\"rank\":\"5\"}\n");
    CHECK(run({"unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "3", "--format", "json"}).out ==
          "{\"string\":\"423\",\"symbols\":[4,2,3]}\n");
}

TEST_CASE("large alphabets round-trip through the CLI's own output") {
    for (int r = 1; r <= 30; ++r) {
        const auto u = run({"unrank", "--n", "3", "--k", "11", "--wmin", "20", "--rank", std::to_string(r)});
        REQUIRE(u.code == 0);
        std::string text = u.out.substr(0, u.out.size() - 1);
        REQUIRE(text.find('.') != std::string::npos);
        const auto back = run({"rank", "--n", "3", "--k", "11", "--wmin", "20", "--string", text});
        REQUIRE(back.code == 0);
        CHECK(back.out == std::to_string(r) + "\n");
    }
}

TEST_CASE("big ranks are decimal text") {
    const auto u = run({"unrank", "--n", "24", "--k", "4", "--rank", "281474976710656"});
    REQUIRE(u.code == 0);
    const std::string s = u.out.substr(0, u.out.size() - 1);
    CHECK(run({"rank", "--n", "24", "--k", "4", "--string", s}).out == "281474976710656\n");
}

TEST_CASE("necklaces") {
    CHECK(run({"necklaces", "--n", "4", "--k", "2", "--wmin", "6"}).out == "1122\n1212\n1222\n2222\n");
}

TEST_CASE("subset and multiset") {
    CHECK(run({"subset", "unrank", "--n", "5", "--t", "3", "--rank", "4"}).out == "{2,4,5}\n");
    CHECK(run({"subset", "rank", "--n", "5", "--t", "3", "--set", "3,4,5"}).out == "1\n");
    CHECK(run({"subset", "rank", "--n", "5", "--t", "3", "--set", "{5,1,4}"}).out == "10\n");
    CHECK(run({"subset", "encode", "--n", "5", "--t", "3", "--set", "1,2,4"}).out == "112\n");
    CHECK(run({"subset", "decode", "--n", "5", "--t", "3", "--string", "221"}).out == "{2,4,5}\n");
    CHECK(run({"multiset", "unrank", "--n", "3", "--t", "3", "--rank", "1"}).out == "{2,2,2}\n");
    CHECK(run({"multiset", "rank", "--n", "3", "--t", "3", "--set", "0,2,2"}).out == "10\n");
    CHECK(run({"multiset", "encode", "--n", "3", "--t", "3", "--set", "1,1,2"}).out == "212\n");
    CHECK(run({"subset", "unrank", "--n", "5", "--t", "3", "--rank", "4", "--format", "json"}).out ==
          "{\"set\":[2,4,5]}\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == bwdb::cli::usage_error);
    CHECK(run({"bogus"}).code == bwdb::cli::usage_error);
    CHECK(run({"rank", "--n", "4", "--k", "2"}).code == bwdb::cli::usage_error);
    CHECK(run({"rank", "--n", "4", "--k", "2", "--string", "21x2"}).code == bwdb::cli::usage_error);
    CHECK(run({"generate", "--n", "3", "--k", "3", "--wmin", "5", "--wmax", "6"}).code ==
          bwdb::cli::usage_error);
    CHECK(run({"subset", "rank", "--n", "5", "--t", "3"}).code == bwdb::cli::usage_error);
    CHECK(run({"--help"}).code == bwdb::cli::success);

    const auto weight = run({"rank", "--n", "3", "--k", "4", "--wmin", "9", "--string", "133"});
    CHECK(weight.code == bwdb::cli::constraint_violation);
    CHECK(weight.out.empty());
    CHECK(std::count(weight.err.begin(), weight.err.end(), '\n') == 1);
    CHECK(run({"generate", "--n", "3", "--k", "3", "--wmin", "10"}).code == bwdb::cli::constraint_violation);
    CHECK(run({"generate", "--n", "3", "--k", "3", "--wmax", "2"}).code == bwdb::cli::constraint_violation);
    CHECK(run({"unrank", "--n", "3", "--k", "4", "--wmin", "9", "--rank", "21"}).code ==
          bwdb::cli::constraint_violation);
    CHECK(run({"rank", "--n", "3", "--k", "2", "--string", "123"}).code == bwdb::cli::constraint_violation);
    CHECK(run({"subset", "unrank", "--n", "5", "--t", "3", "--rank", "11"}).code ==
          bwdb::cli::constraint_violation);
    CHECK(run({"subset", "rank", "--n", "5", "--t", "3", "--set", "1,1,2"}).code ==
          bwdb::cli::constraint_violation);
}

TEST_CASE("selftest") {
    const auto r = run({"selftest", "--n", "3", "--k", "3"});
    CHECK(r.code == bwdb::cli::success);
    CHECK(r.out.find("selftest passed") != std::string::npos);
    const auto j = run({"selftest", "--n", "2", "--k", "2", "--format", "json"});
    CHECK(j.code == bwdb::cli::success);
    CHECK(j.out.find("\"ok\":true") != std::string::npos);
}

#include "bwdb/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bwdb/decode.hpp"
#include "bwdb/selftest.hpp"
#include "bwdb/subset_codec.hpp"
#include "bwdb/ucycle.hpp"

namespace bwdb::cli {

namespace {

using nlohmann::json;

enum class Output { automatic, digits, dotted, json };

struct Options {
    int n = 0;
    int k = 0;
    int t = 0;
    std::optional<int> wmin;
    std::optional<int> wmax;
    std::string string;
    std::string rank;
    std::string set;
    std::string verb;
    Output format = Output::automatic;
};

void add_format(CLI::App* cmd, Options& o) {
    const std::map<std::string, Output> names{
        {"digits", Output::digits}, {"dotted", Output::dotted}, {"json", Output::json}};
    cmd->add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void add_params(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "String length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", o.k, "Alphabet size")->required()->check(CLI::PositiveNumber);
    auto* lo = cmd->add_option("--wmin", o.wmin, "Lower weight bound");
    auto* hi = cmd->add_option("--wmax", o.wmax, "Upper weight bound");
    lo->excludes(hi);
    add_format(cmd, o);
}

// The CLI accepts bounds inside [n, kn] only; the library itself clamps.
Params make_params(const Options& o) {
    const long kn = static_cast<long>(o.n) * o.k;
    auto check = [&](int w, const char* flag) {
        if (w < o.n || w > kn) {
            throw constraint_error(std::string(flag) + " " + std::to_string(w) + " outside [n, kn] = [" +
                                   std::to_string(o.n) + ", " + std::to_string(kn) + "]");
        }
    };
    if (o.wmin) {
        check(*o.wmin, "--wmin");
        return Params::at_least(o.n, o.k, *o.wmin);
    }
    if (o.wmax) {
        check(*o.wmax, "--wmax");
        return Params::at_most(o.n, o.k, *o.wmax);
    }
    return Params::unconstrained(o.n, o.k);
}

TextFormat text_format(Output f) {
    switch (f) {
        case Output::digits: return TextFormat::digits;
        case Output::dotted: return TextFormat::dotted;
        default: return TextFormat::automatic;
    }
}

Count parse_rank(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed rank '" + text + "'");
    }
    return Count(text);
}

json symbols_json(std::span<const Symbol> s) { return json(std::vector<Symbol>(s.begin(), s.end())); }

void print_string(std::ostream& out, const KString& s, Output f) {
    if (f == Output::json) {
        out << json{{"string", to_text(s)}, {"symbols", symbols_json(s.symbols())}}.dump() << '\n';
    } else {
        out << to_text(s, text_format(f)) << '\n';
    }
}

void print_rank(std::ostream& out, const Count& r, Output f) {
    if (f == Output::json) {
        out << json{{"rank", r.str()}}.dump() << '\n';
    } else {
        out << r << '\n';
    }
}

void print_set(std::ostream& out, const std::vector<int>& e, Output f) {
    if (f == Output::json) {
        out << json{{"set", e}}.dump() << '\n';
    } else {
        out << format_elements(e) << '\n';
    }
}

void run_generate(const Options& o, std::ostream& out) {
    const Params params = make_params(o);
    CycleStream stream(params);
    if (o.format == Output::json) {
        std::vector<Symbol> symbols;
        while (auto s = stream.next()) symbols.push_back(*s);
        out << json{{"n", o.n}, {"k", o.k}, {"length", symbols.size()}, {"symbols", symbols}}.dump()
            << '\n';
        return;
    }
    TextFormat f = text_format(o.format);
    if (f == TextFormat::automatic) f = o.k <= 9 ? TextFormat::digits : TextFormat::dotted;
    bool first = true;
    while (auto s = stream.next()) {
        if (f == TextFormat::digits) {
            if (*s > 9) throw constraint_error("symbol " + std::to_string(*s) + " needs --format dotted");
            out << static_cast<char>('0' + *s);
        } else {
            if (!first) out << '.';
            out << *s;
        }
        first = false;
    }
    out << '\n';
}

void run_necklaces(const Options& o, std::ostream& out) {
    const Params params = make_params(o);
    const auto list = list_necklaces(params);
    if (o.format == Output::json) {
        json arr = json::array();
        for (const auto& a : list) arr.push_back(symbols_json(a.value().symbols()));
        out << json{{"necklaces", arr}}.dump() << '\n';
        return;
    }
    for (const auto& a : list) out << to_text(a.value(), text_format(o.format)) << '\n';
}

template <class Cycle, class Item, class ToDiff, class FromDiff>
void run_family(const Options& o, std::ostream& out, ToDiff to_diff, FromDiff from_diff) {
    const Cycle cycle(o.n, o.t);
    const int k = cycle.decoder().params().k;
    if (o.verb == "rank") {
        print_rank(out, cycle.rank(Item(parse_elements(o.set), o.n)), o.format);
    } else if (o.verb == "unrank") {
        print_set(out, cycle.unrank(parse_rank(o.rank)).elements(), o.format);
    } else if (o.verb == "encode") {
        print_string(out, to_diff(Item(parse_elements(o.set), o.n)), o.format);
    } else {
        print_set(out, from_diff(parse_kstring(o.string, k), o.n, o.t).elements(), o.format);
    }
}

int run_selftest(const Options& o, std::ostream& out) {
    oracle::GridOptions grid;
    if (o.n > 0) grid.max_n = o.n;
    if (o.k > 0) grid.max_k = o.k;
    const auto report = oracle::run_oracle_grid(grid);
    const std::pair<const char*, const oracle::Tally*> rows[] = {
        {"cycle_windows", &report.cycle_windows},
        {"rank_oracle", &report.rank_oracle},
        {"round_trip", &report.round_trip},
        {"counts", &report.counts},
        {"partition", &report.partition},
    };
    if (o.format == Output::json) {
        json j;
        for (const auto& [name, tally] : rows) j[name] = {{"passed", tally->passed}, {"failed", tally->failed}};
        j["ok"] = report.ok();
        out << j.dump() << '\n';
    } else {
        for (const auto& [name, tally] : rows) {
            out << name << ": " << tally->passed << " passed, " << tally->failed << " failed\n";
            for (const auto& f : tally->first_failures) out << "  FAIL " << f << '\n';
        }
        out << (report.ok() ? "selftest passed" : "selftest FAILED") << '\n';
    }
    return report.ok() ? success : selftest_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounded-weight de Bruijn sequences: generation and decoding", "bwdb"};
    app.require_subcommand(1);
    Options o;

    auto* generate = app.add_subcommand("generate", "Print the cycle");
    add_params(generate, o);

    auto* rank = app.add_subcommand("rank", "Rank of a string in the cycle");
    add_params(rank, o);
    rank->add_option("--string", o.string, "Window to rank")->required();

    auto* unrank = app.add_subcommand("unrank", "Window of the cycle at a rank");
    add_params(unrank, o);
    unrank->add_option("--rank", o.rank, "1-based rank")->required();

    auto* necklaces = app.add_subcommand("necklaces", "List the necklaces behind the cycle");
    add_params(necklaces, o);

    CLI::App* families[2];
    const char* family_names[2] = {"subset", "multiset"};
    for (int i = 0; i < 2; ++i) {
        auto* cmd = app.add_subcommand(family_names[i], std::string("Decode the ") + family_names[i] +
                                                            " universal cycle");
        cmd->add_option("verb", o.verb, "rank | unrank | encode | decode")
            ->required()
            ->check(CLI::IsMember({"rank", "unrank", "encode", "decode"}));
        cmd->add_option("--n", o.n, "Universe size")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--t", o.t, "Number of elements")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--set", o.set, "Elements, e.g. 3,4,5");
        cmd->add_option("--rank", o.rank, "1-based rank");
        cmd->add_option("--string", o.string, "Difference representative");
        add_format(cmd, o);
        families[i] = cmd;
    }

    auto* selftest = app.add_subcommand("selftest", "Run the exhaustive oracle grid");
    selftest->add_option("--n", o.n, "Largest n in the grid (default 6)")->check(CLI::PositiveNumber);
    selftest->add_option("--k", o.k, "Largest k in the grid (default 4)")->check(CLI::Range(2, 16));
    add_format(selftest, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return success;
        }
        err << "bwdb: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (generate->parsed()) {
            run_generate(o, out);
        } else if (rank->parsed()) {
            const Params params = make_params(o);
            print_rank(out, Decoder(params).rank(parse_kstring(o.string, o.k)), o.format);
        } else if (unrank->parsed()) {
            const Params params = make_params(o);
            print_string(out, Decoder(params).unrank(parse_rank(o.rank)), o.format);
        } else if (necklaces->parsed()) {
            run_necklaces(o, out);
        } else if (families[0]->parsed() || families[1]->parsed()) {
            const bool needs_set = o.verb == "rank" || o.verb == "encode";
            if (needs_set && o.set.empty()) throw CLI::RequiredError("--set");
            if (o.verb == "unrank" && o.rank.empty()) throw CLI::RequiredError("--rank");
            if (o.verb == "decode" && o.string.empty()) throw CLI::RequiredError("--string");
            if (families[0]->parsed()) {
                run_family<SubsetCycle, Subset>(o, out, subset_to_diff, diff_to_subset);
            } else {
                run_family<MultisetCycle, Multiset>(o, out, multiset_to_diff, diff_to_multiset);
            }
        } else if (selftest->parsed()) {
            return run_selftest(o, out);
        }
    } catch (const constraint_error& e) {
        err << "bwdb: " << e.what() << '\n';
        return constraint_violation;
    } catch (const CLI::Error& e) {
        err << "bwdb: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "bwdb: " << e.what() << '\n';
        return usage_error;
    }
    return success;
}

}  // namespace bwdb::cli

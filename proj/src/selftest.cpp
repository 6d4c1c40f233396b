#include "bwdb/selftest.hpp"

#include <numeric>
#include <ostream>

#include "bwdb/decode.hpp"
#include "bwdb/oracle.hpp"
#include "bwdb/ucycle.hpp"

namespace bwdb::oracle {

void Tally::record(bool ok, const std::string& what) {
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (first_failures.size() < 10) first_failures.push_back(what);
}

namespace {

std::string cell(int n, int k, int w) {
    return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",w=" + std::to_string(w) + ")";
}

std::string text(const Word& s, int k) { return to_text(s, k); }

void check_cycle(int n, int k, int w, GridReport& report) {
    const Params params = Params::at_least(n, k, w);
    const Word cycle = materialize(generate_up(params));
    const auto positions = window_positions(cycle, n);

    bool windows_ok = cycle.size() == count_at_least(n, k, w) &&
                      Count(cycle.size()) == s_up(n, w, k);
    std::size_t expected = 0;
    for (const Word& s : all_strings(n, k)) {
        if (std::accumulate(s.begin(), s.end(), 0) < w) continue;
        ++expected;
        auto it = positions.find(s);
        windows_ok = windows_ok && it != positions.end() && it->second.size() == 1;
    }
    windows_ok = windows_ok && positions.size() == expected;
    report.cycle_windows.record(windows_ok, "cycle windows " + cell(n, k, w));
    if (!windows_ok) return;

    const Decoder decoder(params);
    for (const auto& [window, where] : positions) {
        const KString s(window, k);
        const Count r = decoder.rank_up(s);
        const Count expected_rank = where.front();
        report.rank_oracle.record(r == expected_rank, "rank " + text(window, k) + " " + cell(n, k, w) +
                                                          " got " + r.str() + " want " +
                                                          expected_rank.str());
        const KString back = decoder.unrank_up(r);
        const KString at = decoder.unrank_up(expected_rank);
        report.round_trip.record(back == s && at == s && decoder.rank_up(at) == expected_rank,
                                 "round trip " + text(window, k) + " " + cell(n, k, w));
    }
}

void check_counts(int n, int k, GridReport& report) {
    auto s_table = std::make_shared<WeightCountTable>(n, k);
    for (const Word& a : necklaces(n, k)) {
        const DecodeContext ctx(Necklace(KString(a, k)), s_table);
        const SuffixCounts suffix(a, k);
        bool bp_ok = true;
        for (int t = 0; t <= n; ++t) {
            for (int j = 0; j <= t; ++j) {
                for (int w = -1; w <= n * k + 1; ++w) {
                    bp_ok = bp_ok && ctx.b_count(t, j, w) == suffix.b(t, j, w) &&
                            ctx.p_count(t, j, w) == suffix.p(t, j, w);
                }
            }
        }
        report.counts.record(bp_ok, "B/P tables alpha=" + text(a, k));

        const RotationCells cells(a, k);
        for (int w = n; w <= n * k; ++w) {
            const std::uint64_t brute_t = t_count(a, k, w);
            report.partition.record(cells.total(w) == brute_t,
                                    "A partition alpha=" + text(a, k) + " " + cell(n, k, w));
            bool a_ok = true;
            Count sum = 0;
            for (int t = 1; t <= n; ++t) {
                for (int j = 0; j <= n; ++j) {
                    const Count value = ctx.a_count(t, j, w);
                    a_ok = a_ok && value == cells.a(t, j, w);
                    sum += value;
                }
            }
            const Count t_value = ctx.t_count(w);
            report.counts.record(a_ok && t_value == brute_t && sum == t_value,
                                 "A/T counts alpha=" + text(a, k) + " " + cell(n, k, w) + " T=" +
                                     t_value.str() + " want " + std::to_string(brute_t));
        }
    }
}

}  // namespace

GridReport run_oracle_grid(const GridOptions& options, std::ostream* log) {
    GridReport report;
    for (int n = options.min_n; n <= options.max_n; ++n) {
        for (int k = options.min_k; k <= options.max_k; ++k) {
            for (int w = n; w <= n * k; ++w) check_cycle(n, k, w, report);
            check_counts(n, k, report);
            if (log) {
                *log << "grid n=" << n << " k=" << k << " done\n";
                log->flush();
            }
        }
    }
    return report;
}

}  // namespace bwdb::oracle

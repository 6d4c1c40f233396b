#ifndef BWDB_SELFTEST_HPP
#define BWDB_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bwdb::oracle {

struct GridOptions {
    int min_n = 1;
    int max_n = 6;
    int min_k = 2;
    int max_k = 4;
};

struct Tally {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> first_failures;

    void record(bool ok, const std::string& what);
    bool ok() const noexcept { return failed == 0 && passed > 0; }
};

// One tally per check family of the exhaustive grid over
// n in [min_n,max_n], k in [min_k,max_k], w in [n,kn].
struct GridReport {
    Tally cycle_windows;  // length S_k(n,w) and every weight->=w string once
    Tally rank_oracle;    // rank_up agrees with the window's scanned position
    Tally round_trip;     // unrank(rank(s)) = s and rank(unrank(r)) = r
    Tally counts;         // t, b, p and a counts against enumeration
    Tally partition;      // the enumerated A(t,j) cells sum to T

    bool ok() const noexcept {
        return cycle_windows.ok() && rank_oracle.ok() && round_trip.ok() && counts.ok() &&
               partition.ok();
    }
};

// Progress lines go to log when it is non-null.
GridReport run_oracle_grid(const GridOptions& options, std::ostream* log = nullptr);

}  // namespace bwdb::oracle

#endif  // BWDB_SELFTEST_HPP

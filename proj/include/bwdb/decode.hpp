#ifndef BWDB_DECODE_HPP
#define BWDB_DECODE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bwdb/counting.hpp"
#include "bwdb/params.hpp"
#include "bwdb/strings.hpp"

namespace bwdb {

// Ranks are 1-based positions in the cyclic sequence G_k(n, w-up) or its
// complement G_k(n, w-down): rank 1 is the window that is a prefix of the
// cycle.
//
// A Decoder owns the S table for its (n, k) and caches T_k(n,w,alpha) per
// necklace; the cache is mutex-guarded, so one Decoder may serve several
// threads.
class Decoder {
public:
    explicit Decoder(const Params& params);

    const Params& params() const noexcept { return params_; }
    // Lower-bound parameters that the decoding actually runs on.
    const Params& lower() const noexcept { return up_; }
    const Count& cycle_length() const noexcept { return length_; }
    const Necklace& first() const noexcept { return first_; }

    // Direction-aware: an at_most decoder ranks complement(s) in the
    // complementary lower-bound cycle.
    Count rank(const KString& s) const;
    KString unrank(const Count& r) const;

    Count rank_up(const KString& s) const;
    KString unrank_up(const Count& r) const;

    // Smallest necklace of N_k(n, w-up) whose rank is >= r, one symbol at a
    // time by binary search. When trace is given, the partial necklace
    // t_1..t_i k^{n-i} is appended after each position is fixed.
    Necklace smallest_neck(const Count& r, std::vector<KString>* trace = nullptr) const;

    // T_k(n, w, alpha) for this decoder's lower bound w.
    Count t_count(const Necklace& alpha) const;
    DecodeContext context_for(const Necklace& alpha) const;

    std::size_t cached_t_values() const;

private:
    bool degenerate() const noexcept { return up_.w == up_.max_weight(); }
    void check_string(const KString& s) const;

    Params params_;
    Params up_;
    std::shared_ptr<const WeightCountTable> s_table_;
    Count length_;
    Necklace first_;
    mutable std::mutex mutex_;
    mutable std::map<KString, Count> t_cache_;
};

Count rank_up(const KString& s, const Params& params);
KString unrank_up(const Count& r, const Params& params);
Necklace smallest_neck(const Count& r, const Params& params);
Count rank_down(const KString& s, const Params& params);
KString unrank_down(const Count& r, const Params& params);

}  // namespace bwdb

#endif  // BWDB_DECODE_HPP

#ifndef BWDB_ORACLE_HPP
#define BWDB_ORACLE_HPP

// Exhaustive reference implementations. Everything here works by direct
// enumeration of {1..k}^n and rotation comparison, and shares no code path
// with the decoding library.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bwdb/strings.hpp"

namespace bwdb::oracle {

using Word = std::vector<Symbol>;

// Every string of length n over {1..k}, in lexicographic order.
std::vector<Word> all_strings(int n, int k);

Word least_rotation(std::span<const Symbol> s);
bool is_necklace(std::span<const Symbol> s);
Word aperiodic_prefix(std::span<const Symbol> s);

// Sorted necklaces of length n with weight >= w.
std::vector<Word> necklaces(int n, int k, int w = 0);

// (|p|) for the longest suffix q with q·p a necklace, by rotation checks.
std::size_t pq_cut(std::span<const Symbol> s);

// Minimum over all length-n necklaces with prefix q; empty if none.
Word smallest_necklace_with_prefix(std::span<const Symbol> q, int n, int k);

// Concatenated aperiodic prefixes of the weight->=w necklaces.
Word bounded_weight_cycle(int n, int k, int w);

std::uint64_t count_at_least(int n, int k, int w);

// |{s : weight(s) >= w, least_rotation(s) < alpha}|
std::uint64_t t_count(std::span<const Symbol> alpha, int k, int w);

// Enumerated B(t,j,w) and P(t,j,w) for one alpha.
class SuffixCounts {
public:
    SuffixCounts(std::span<const Symbol> alpha, int k);

    std::uint64_t b(int t, int j, int w) const;
    std::uint64_t p(int t, int j, int w) const;

private:
    int n_;
    int k_;
    // hist_[t][m][weight]: strings of length t whose suffixes all exceed alpha
    // and whose longest common prefix with alpha is m.
    std::vector<std::vector<std::vector<std::uint64_t>>> hist_;
};

// Classification of T's strings into cells A(t,j) by the first rotation
// below alpha (1-based start t) and its common-prefix length j with alpha.
class RotationCells {
public:
    RotationCells(std::span<const Symbol> alpha, int k);

    std::uint64_t a(int t, int j, int w) const;
    std::uint64_t total(int w) const;

private:
    int n_;
    int k_;
    std::vector<std::vector<std::vector<std::uint64_t>>> hist_;  // [t][j][weight]
};

// 1-based start positions of every cyclic length-n window of cycle.
std::map<Word, std::vector<std::uint64_t>> window_positions(std::span<const Symbol> cycle, int n);

}  // namespace bwdb::oracle

#endif  // BWDB_ORACLE_HPP

#ifndef BWDB_COUNTING_HPP
#define BWDB_COUNTING_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bwdb/strings.hpp"

namespace bwdb {

using Count = boost::multiprecision::cpp_int;

// S_k(m, w-up) = |{s in {1..k}^m : weight(s) >= w}| for every m <= n, filled
// from S_k(m,w) = sum_{x=1..k} S_k(m-1, max(0,w-x)). Any w <= 0 reads the
// unconstrained bucket k^m.
class WeightCountTable {
public:
    WeightCountTable(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const Count& at_least(int m, int w) const;
    std::size_t entries() const noexcept { return table_.size(); }

private:
    int n_;
    int k_;
    int width_;
    std::vector<Count> table_;
};

Count s_up(int n, int w, int k);

// Counting tables for a fixed necklace alpha = a_1..a_n:
//   B(t,j,w)  strings of length t, prefix a_1..a_j, every non-empty suffix
//             strictly greater than alpha, weight >= w;
//   P(t,j,w)  the same with weight exactly w;
//   A(t,j,w)  strings of weight >= w whose first rotation below alpha starts
//             at position t and shares exactly a_1..a_j with alpha;
//   T(w)      strings of weight >= w whose necklace precedes alpha.
// B and P are filled eagerly for 0 <= j <= t <= n and 0 <= w <= kn, so a
// built context is immutable and safe to read concurrently.
class DecodeContext {
public:
    explicit DecodeContext(Necklace alpha, std::shared_ptr<const WeightCountTable> s_table = nullptr);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const Necklace& alpha() const noexcept { return alpha_; }

    const Count& b_count(int t, int j, int w) const;
    const Count& p_count(int t, int j, int w) const;
    int z_border(int t, int j) const;
    Count a_count(int t, int j, int w) const;
    Count t_count(int w) const;

    // Entries held by the B and P tables.
    std::size_t table_entries() const noexcept { return b_.size() + p_.size(); }
    const WeightCountTable& s_table() const noexcept { return *s_; }

private:
    std::size_t index(int t, int j, int w) const;
    void check_tj(int t, int j) const;

    Necklace alpha_;
    int n_;
    int k_;
    int width_;
    std::shared_ptr<const WeightCountTable> s_;
    std::vector<int> prefix_weight_;  // prefix_weight_[j] = wt(a_1..a_j)
    std::vector<int> border_;         // border_[j] = longest proper border of a_1..a_j
    std::vector<Count> b_;
    std::vector<Count> p_;
};

}  // namespace bwdb

#endif  // BWDB_COUNTING_HPP

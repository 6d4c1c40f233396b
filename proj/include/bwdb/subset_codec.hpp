#ifndef BWDB_SUBSET_CODEC_HPP
#define BWDB_SUBSET_CODEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bwdb/decode.hpp"

namespace bwdb {

// A t-subset of {1..n}. Input order is irrelevant; elements are kept sorted.
class Subset {
public:
    Subset(std::vector<int> elements, int n);

    const std::vector<int>& elements() const noexcept { return elements_; }
    int universe() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    std::vector<int> elements_;
    int n_;
};

// A t-multiset over {0..n-1}, kept in non-decreasing order.
class Multiset {
public:
    Multiset(std::vector<int> elements, int n);

    const std::vector<int>& elements() const noexcept { return elements_; }
    int universe() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    std::vector<int> elements_;
    int n_;
};

// Difference representative s_1, s_2-s_1, ..., s_t-s_{t-1}: a length-t string
// over {1..n-t+1} with weight at most n.
KString subset_to_diff(const Subset& s);
Subset diff_to_subset(const KString& d, int n, int t);

// Difference representative of the multiset with every symbol raised by one:
// a length-t string over {1..n} with weight at most n+t-1.
KString multiset_to_diff(const Multiset& m);
Multiset diff_to_multiset(const KString& d, int n, int t);

// Decoding parameters: length t, alphabet n-t+1, weight at most n for
// subsets; length t, alphabet n, weight at most n+t-1 for multisets.
Params subset_params(int n, int t);
Params multiset_params(int n, int t);

// The universal cycle G_{n-t+1}(t, n-down) read through difference
// representatives; it has C(n,t) windows.
class SubsetCycle {
public:
    SubsetCycle(int n, int t);

    int n() const noexcept { return n_; }
    int t() const noexcept { return t_; }
    const Decoder& decoder() const noexcept { return decoder_; }
    const Count& size() const noexcept { return decoder_.cycle_length(); }

    Count rank(const Subset& s) const;
    Subset unrank(const Count& r) const;

private:
    int n_;
    int t_;
    Decoder decoder_;
};

// The universal cycle G_n(t, (n+t-1)-down) for t-multisets of {0..n-1}; it
// has C(n+t-1,t) windows.
class MultisetCycle {
public:
    MultisetCycle(int n, int t);

    int n() const noexcept { return n_; }
    int t() const noexcept { return t_; }
    const Decoder& decoder() const noexcept { return decoder_; }
    const Count& size() const noexcept { return decoder_.cycle_length(); }

    Count rank(const Multiset& m) const;
    Multiset unrank(const Count& r) const;

private:
    int n_;
    int t_;
    Decoder decoder_;
};

Count subset_rank(const Subset& s, int n, int t);
Subset subset_unrank(const Count& r, int n, int t);
Count multiset_rank(const Multiset& m, int n, int t);
Multiset multiset_unrank(const Count& r, int n, int t);

// "3,4,5" or "{3,4,5}".
std::vector<int> parse_elements(std::string_view text);
std::string format_elements(const std::vector<int>& elements);

}  // namespace bwdb

#endif  // BWDB_SUBSET_CODEC_HPP

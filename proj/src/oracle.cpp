#include "bwdb/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace bwdb::oracle {

std::vector<Word> all_strings(int n, int k) {
    std::vector<Word> out;
    Word s(n, 1);
    for (;;) {
        out.push_back(s);
        int i = n - 1;
        while (i >= 0 && s[i] == k) s[i--] = 1;
        if (i < 0) return out;
        ++s[i];
    }
}

Word least_rotation(std::span<const Symbol> s) {
    Word best(s.begin(), s.end());
    Word rot = best;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        best = std::min(best, rot);
    }
    return best;
}

bool is_necklace(std::span<const Symbol> s) { return least_rotation(s) == Word(s.begin(), s.end()); }

Word aperiodic_prefix(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = s[i] == s[i - d];
        if (repeats) return Word(s.begin(), s.begin() + d);
    }
    return Word(s.begin(), s.end());
}

std::vector<Word> necklaces(int n, int k, int w) {
    std::vector<Word> out;
    for (const Word& s : all_strings(n, k)) {
        if (std::accumulate(s.begin(), s.end(), 0) >= w && is_necklace(s)) out.push_back(s);
    }
    return out;
}

std::size_t pq_cut(std::span<const Symbol> s) {
    for (std::size_t cut = 0; cut < s.size(); ++cut) {
        Word qp(s.begin() + cut, s.end());
        qp.insert(qp.end(), s.begin(), s.begin() + cut);
        if (is_necklace(qp)) return cut;
    }
    return s.size();
}

Word smallest_necklace_with_prefix(std::span<const Symbol> q, int n, int k) {
    for (const Word& a : necklaces(n, k)) {
        if (std::equal(q.begin(), q.end(), a.begin())) return a;
    }
    return {};
}

Word bounded_weight_cycle(int n, int k, int w) {
    Word out;
    for (const Word& a : necklaces(n, k, w)) {
        const Word ap = aperiodic_prefix(a);
        out.insert(out.end(), ap.begin(), ap.end());
    }
    return out;
}

std::uint64_t count_at_least(int n, int k, int w) {
    std::uint64_t c = 0;
    for (const Word& s : all_strings(n, k)) c += std::accumulate(s.begin(), s.end(), 0) >= w;
    return c;
}

std::uint64_t t_count(std::span<const Symbol> alpha, int k, int w) {
    const Word a(alpha.begin(), alpha.end());
    std::uint64_t c = 0;
    for (const Word& s : all_strings(static_cast<int>(a.size()), k)) {
        c += std::accumulate(s.begin(), s.end(), 0) >= w && least_rotation(s) < a;
    }
    return c;
}

namespace {

std::size_t common_prefix(std::span<const Symbol> s, std::span<const Symbol> a) {
    std::size_t m = 0;
    while (m < s.size() && m < a.size() && s[m] == a[m]) ++m;
    return m;
}

}  // namespace

SuffixCounts::SuffixCounts(std::span<const Symbol> alpha, int k)
    : n_(static_cast<int>(alpha.size())), k_(k) {
    const Word a(alpha.begin(), alpha.end());
    hist_.assign(n_ + 1, std::vector<std::vector<std::uint64_t>>(
                             n_ + 1, std::vector<std::uint64_t>(n_ * k_ + 1, 0)));
    hist_[0][0][0] = 1;  // the empty string has no non-empty suffix
    for (int t = 1; t <= n_; ++t) {
        for (const Word& s : all_strings(t, k)) {
            bool above = true;
            for (int i = 0; i < t && above; ++i) {
                above = std::lexicographical_compare(a.begin(), a.end(), s.begin() + i, s.end());
            }
            if (!above) continue;
            const int wt = std::accumulate(s.begin(), s.end(), 0);
            ++hist_[t][common_prefix(s, a)][wt];
        }
    }
}

std::uint64_t SuffixCounts::b(int t, int j, int w) const {
    std::uint64_t c = 0;
    for (int m = j; m <= t; ++m) {
        for (int wt = std::max(0, w); wt <= n_ * k_; ++wt) c += hist_[t][m][wt];
    }
    return c;
}

std::uint64_t SuffixCounts::p(int t, int j, int w) const {
    if (w < 0 || w > n_ * k_) return 0;
    std::uint64_t c = 0;
    for (int m = j; m <= t; ++m) c += hist_[t][m][w];
    return c;
}

RotationCells::RotationCells(std::span<const Symbol> alpha, int k)
    : n_(static_cast<int>(alpha.size())), k_(k) {
    const Word a(alpha.begin(), alpha.end());
    hist_.assign(n_ + 1, std::vector<std::vector<std::uint64_t>>(
                             n_ + 1, std::vector<std::uint64_t>(n_ * k_ + 1, 0)));
    for (Word s : all_strings(n_, k)) {
        const int wt = std::accumulate(s.begin(), s.end(), 0);
        for (int t = 1; t <= n_; ++t) {
            if (s < a) {
                ++hist_[t][common_prefix(s, a)][wt];
                break;
            }
            std::rotate(s.begin(), s.begin() + 1, s.end());
        }
    }
}

std::uint64_t RotationCells::a(int t, int j, int w) const {
    std::uint64_t c = 0;
    for (int wt = std::max(0, w); wt <= n_ * k_; ++wt) c += hist_[t][j][wt];
    return c;
}

std::uint64_t RotationCells::total(int w) const {
    std::uint64_t c = 0;
    for (int t = 1; t <= n_; ++t) {
        for (int j = 0; j <= n_; ++j) c += a(t, j, w);
    }
    return c;
}

std::map<Word, std::vector<std::uint64_t>> window_positions(std::span<const Symbol> cycle, int n) {
    std::map<Word, std::vector<std::uint64_t>> out;
    const std::size_t len = cycle.size();
    for (std::size_t r = 0; r < len; ++r) {
        Word win(n);
        for (int i = 0; i < n; ++i) win[i] = cycle[(r + i) % len];
        out[win].push_back(r + 1);
    }
    return out;
}

}  // namespace bwdb::oracle

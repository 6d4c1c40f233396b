#include "bwdb/subset_codec.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace bwdb {

namespace {

void check_nt(int n, int t) {
    if (n < 1 || t < 1 || t > n) {
        throw constraint_error("need 1 <= t <= n, got n = " + std::to_string(n) + ", t = " +
                               std::to_string(t));
    }
}

void check_diff(const KString& d, int t) {
    if (static_cast<int>(d.size()) != t) {
        throw constraint_error("difference string has length " + std::to_string(d.size()) +
                               ", expected " + std::to_string(t));
    }
}

}  // namespace

Subset::Subset(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
    std::sort(elements_.begin(), elements_.end());
    if (elements_.empty()) throw constraint_error("subset must be non-empty");
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw constraint_error("subset has a repeated element");
    }
    if (elements_.front() < 1 || elements_.back() > n) {
        throw constraint_error("subset element outside [1," + std::to_string(n) + "]");
    }
}

Multiset::Multiset(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
    std::sort(elements_.begin(), elements_.end());
    if (elements_.empty()) throw constraint_error("multiset must be non-empty");
    if (elements_.front() < 0 || elements_.back() > n - 1) {
        throw constraint_error("multiset element outside [0," + std::to_string(n - 1) + "]");
    }
}

KString subset_to_diff(const Subset& s) {
    const auto& e = s.elements();
    std::vector<Symbol> d(e.size());
    std::adjacent_difference(e.begin(), e.end(), d.begin());
    return KString(std::move(d), s.universe() - s.size() + 1);
}

Subset diff_to_subset(const KString& d, int n, int t) {
    check_nt(n, t);
    check_diff(d, t);
    if (weight(d) > n) {
        throw constraint_error("difference string weight " + std::to_string(weight(d)) +
                               " exceeds n = " + std::to_string(n));
    }
    std::vector<int> e(d.symbols().begin(), d.symbols().end());
    std::partial_sum(e.begin(), e.end(), e.begin());
    return Subset(std::move(e), n);
}

KString multiset_to_diff(const Multiset& m) {
    const auto& e = m.elements();
    std::vector<Symbol> d(e.size());
    std::adjacent_difference(e.begin(), e.end(), d.begin());
    for (Symbol& x : d) ++x;
    return KString(std::move(d), m.universe());
}

Multiset diff_to_multiset(const KString& d, int n, int t) {
    if (n < 1 || t < 1) throw constraint_error("need n >= 1 and t >= 1");
    check_diff(d, t);
    if (weight(d) > n + t - 1) {
        throw constraint_error("difference string weight " + std::to_string(weight(d)) +
                               " exceeds n+t-1 = " + std::to_string(n + t - 1));
    }
    std::vector<int> e(d.symbols().begin(), d.symbols().end());
    for (int& x : e) --x;
    std::partial_sum(e.begin(), e.end(), e.begin());
    return Multiset(std::move(e), n);
}

Params subset_params(int n, int t) {
    check_nt(n, t);
    return Params::at_most(t, n - t + 1, n);
}

Params multiset_params(int n, int t) {
    if (n < 1 || t < 1) throw constraint_error("need n >= 1 and t >= 1");
    return Params::at_most(t, n, n + t - 1);
}

SubsetCycle::SubsetCycle(int n, int t) : n_(n), t_(t), decoder_(subset_params(n, t)) {}

Count SubsetCycle::rank(const Subset& s) const {
    if (s.universe() != n_ || s.size() != t_) throw constraint_error("subset does not match (n, t)");
    return decoder_.rank(subset_to_diff(s));
}

Subset SubsetCycle::unrank(const Count& r) const { return diff_to_subset(decoder_.unrank(r), n_, t_); }

MultisetCycle::MultisetCycle(int n, int t) : n_(n), t_(t), decoder_(multiset_params(n, t)) {}

Count MultisetCycle::rank(const Multiset& m) const {
    if (m.universe() != n_ || m.size() != t_) {
        throw constraint_error("multiset does not match (n, t)");
    }
    return decoder_.rank(multiset_to_diff(m));
}

Multiset MultisetCycle::unrank(const Count& r) const {
    return diff_to_multiset(decoder_.unrank(r), n_, t_);
}

Count subset_rank(const Subset& s, int n, int t) { return SubsetCycle(n, t).rank(s); }
Subset subset_unrank(const Count& r, int n, int t) { return SubsetCycle(n, t).unrank(r); }
Count multiset_rank(const Multiset& m, int n, int t) { return MultisetCycle(n, t).rank(m); }
Multiset multiset_unrank(const Count& r, int n, int t) { return MultisetCycle(n, t).unrank(r); }

std::vector<int> parse_elements(std::string_view text) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw std::invalid_argument("unbalanced braces in set");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        auto field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw std::invalid_argument("malformed set '" + std::string(text) + "'");
        }
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

std::string format_elements(const std::vector<int>& elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elements[i]);
    }
    return out + "}";
}

}  // namespace bwdb

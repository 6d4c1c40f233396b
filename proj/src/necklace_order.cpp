#include "bwdb/necklace_order.hpp"

#include <string>
#include <vector>

namespace bwdb {

Necklace first_necklace(const Params& params) {
    const Params up = params.normalized_up();
    const int n = up.n, k = up.k, w = up.w;
    if (w == n) return Necklace(KString::uniform(1, n, k));
    if (w == n * k) return Necklace(KString::uniform(k, n, k));
    // Here k > 1 since n < w < kn.
    const int j = (w - n) / (k - 1);
    const int x = w - (n - j - 1) - k * j;
    std::vector<Symbol> s(n, 1);
    s[n - j - 1] = x;
    for (int i = n - j; i < n; ++i) s[i] = k;
    return Necklace(KString(std::move(s), k));
}

Necklace increment_last_nonmax(const Necklace& alpha) {
    const int k = alpha.alphabet();
    std::vector<Symbol> s(alpha.value().symbols().begin(), alpha.value().symbols().end());
    std::size_t j = s.size();
    while (j > 0 && s[j - 1] == k) --j;
    if (j == 0) throw constraint_error("k^n has no symbol below k to increment");
    ++s[j - 1];
    return Necklace(KString(std::move(s), k));
}

Necklace weighted_successor_geq(const Necklace& alpha, const Params& params) {
    const Params up = params.normalized_up();
    if (static_cast<int>(alpha.size()) != up.n || alpha.alphabet() != up.k) {
        throw constraint_error("necklace does not match (n, k)");
    }
    Necklace current = alpha;
    while (weight(current.value()) < up.w) current = increment_last_nonmax(current);
    return current;
}

namespace {

// u is a prefix of some length-n necklace iff u k^{n-|u|} is a necklace.
bool extends_to_necklace(std::vector<Symbol>& scratch, std::size_t used, int k) {
    std::fill(scratch.begin() + used, scratch.end(), k);
    return is_necklace(scratch);
}

}  // namespace

Necklace smallest_necklace_with_prefix(const KString& q, std::size_t n) {
    const int k = q.alphabet();
    if (q.size() > n) throw constraint_error("prefix longer than n");
    std::vector<Symbol> s(n, k);
    std::copy(q.symbols().begin(), q.symbols().end(), s.begin());
    if (!extends_to_necklace(s, q.size(), k)) {
        throw constraint_error(to_text(q) + " is not a prefix of any length-" + std::to_string(n) +
                               " necklace");
    }
    for (std::size_t i = q.size(); i < n; ++i) {
        // Feasibility is monotone in the symbol, and k is always feasible.
        for (Symbol c = 1; c <= k; ++c) {
            s[i] = c;
            if (c == k || extends_to_necklace(s, i + 1, k)) break;
        }
    }
    return Necklace(KString(std::move(s), k));
}

std::optional<Necklace> next_necklace(const Necklace& alpha) {
    const int k = alpha.alphabet();
    const std::size_t n = alpha.size();
    std::vector<Symbol> s(alpha.value().symbols().begin(), alpha.value().symbols().end());
    for (;;) {
        std::size_t j = n;
        while (j > 0 && s[j - 1] == k) --j;
        if (j == 0) return std::nullopt;
        ++s[j - 1];
        for (std::size_t i = j; i < n; ++i) s[i] = s[i - j];
        if (n % j == 0) return Necklace(KString(std::move(s), k));
    }
}

NecklaceCursor::NecklaceCursor(const Params& params)
    : params_(params.normalized_up()), current_(first_necklace(params_)) {}

bool NecklaceCursor::advance() {
    auto next = next_necklace(current_);
    if (!next) return false;
    current_ = weighted_successor_geq(*next, params_);
    return true;
}

}  // namespace bwdb

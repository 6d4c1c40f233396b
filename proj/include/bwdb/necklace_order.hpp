#ifndef BWDB_NECKLACE_ORDER_HPP
#define BWDB_NECKLACE_ORDER_HPP

#include <optional>

#include "bwdb/params.hpp"
#include "bwdb/strings.hpp"

namespace bwdb {

// Navigation of N_k(n, w-up): the necklaces of length n with weight >= w, in
// lexicographic order. Functions taking Params normalize them first, so an
// at_most bound addresses the complemented (lower-bound) order.

// 1^{n-j-1} x k^j with j = (w-n)/(k-1) and x = w-(n-j-1)-kj for n < w < kn;
// 1^n for w <= n and k^n for w = kn.
Necklace first_necklace(const Params& params);

// a_1..a_{j-1}(x+1)k^{n-j}, where x != k is the last symbol below k.
// Throws constraint_error for k^n.
Necklace increment_last_nonmax(const Necklace& alpha);

// Smallest member of N_k(n, w-up) that is >= alpha.
Necklace weighted_successor_geq(const Necklace& alpha, const Params& params);

// Lexicographically smallest necklace of length n with prefix q. Throws
// constraint_error when q is not a prefix of any such necklace.
Necklace smallest_necklace_with_prefix(const KString& q, std::size_t n);

// Successor in N_k(n), or nullopt after k^n.
std::optional<Necklace> next_necklace(const Necklace& alpha);

// Forward iterator over N_k(n, w-up).
class NecklaceCursor {
public:
    explicit NecklaceCursor(const Params& params);

    const Necklace& current() const noexcept { return current_; }
    const Params& params() const noexcept { return params_; }

    // Steps to the next member; returns false (leaving current() as k^n)
    // once the order is exhausted.
    bool advance();

private:
    Params params_;
    Necklace current_;
};

}  // namespace bwdb

#endif  // BWDB_NECKLACE_ORDER_HPP

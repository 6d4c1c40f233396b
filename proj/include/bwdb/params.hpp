#ifndef BWDB_PARAMS_HPP
#define BWDB_PARAMS_HPP

#include "bwdb/strings.hpp"

namespace bwdb {

enum class Bound { at_least, at_most };

// Length n, alphabet {1..k}, and a weight bound w in one direction.
struct Params {
    int n = 1;
    int k = 1;
    int w = 0;
    Bound bound = Bound::at_least;

    static Params unconstrained(int n, int k) { return {n, k, 0, Bound::at_least}; }
    static Params at_least(int n, int k, int w) { return {n, k, w, Bound::at_least}; }
    static Params at_most(int n, int k, int w) { return {n, k, w, Bound::at_most}; }

    int max_weight() const noexcept { return n * k; }

    // The equivalent lower-bound parameters with w clamped into [n, kn].
    // An upper bound w maps to kn - w + n through complementation. Throws
    // constraint_error when n or k is out of range or the bound admits no
    // string (a lower bound above kn or an upper bound below n).
    Params normalized_up() const;

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace bwdb

#endif  // BWDB_PARAMS_HPP

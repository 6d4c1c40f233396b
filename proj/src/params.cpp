#include "bwdb/params.hpp"

#include <climits>
#include <string>

namespace bwdb {

Params Params::normalized_up() const {
    if (n < 1) throw constraint_error("length n must be at least 1");
    if (k < 1) throw constraint_error("alphabet size k must be at least 1");
    if (k > INT_MAX / n) throw constraint_error("n*k overflows");
    const int kn = n * k;
    if (bound == Bound::at_least) {
        if (w > kn) {
            throw constraint_error("lower weight bound " + std::to_string(w) + " exceeds kn = " +
                                   std::to_string(kn));
        }
        return at_least(n, k, w < n ? n : w);
    }
    if (w < n) {
        throw constraint_error("upper weight bound " + std::to_string(w) + " is below n = " +
                               std::to_string(n));
    }
    const int clamped = w > kn ? kn : w;
    return at_least(n, k, kn - clamped + n);
}

}  // namespace bwdb

#ifndef BWDB_UCYCLE_HPP
#define BWDB_UCYCLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bwdb/counting.hpp"
#include "bwdb/necklace_order.hpp"
#include "bwdb/params.hpp"

namespace bwdb {

// Streams G_k(n, w-up) = ap(alpha_1) ap(alpha_2) ... ap(alpha_m) over the
// necklaces of N_k(n, w-up) in lexicographic order. With an at_most bound the
// stream is the symbol-wise complement of the cycle for kn - w + n.
// Memory is one necklace plus its aperiodic prefix.
class CycleStream {
public:
    explicit CycleStream(const Params& params);

    std::optional<Symbol> next();
    std::uint64_t emitted() const noexcept { return emitted_; }
    const Params& params() const noexcept { return params_; }

private:
    void load_block();

    Params params_;
    NecklaceCursor cursor_;
    KString block_;
    std::size_t pos_ = 0;
    bool done_ = false;
    std::uint64_t emitted_ = 0;
};

CycleStream generate_up(const Params& params);
CycleStream generate_down(const Params& params);

// Drains a stream into memory; intended for small parameters.
std::vector<Symbol> materialize(CycleStream stream);
std::vector<Symbol> materialize(const Params& params);

// Linear scan of the materialized cycle. Throws constraint_error when s is
// not one of its windows.
Count brute_rank(const KString& s, const Params& params);

// N_k(n, w-up) in lexicographic order.
std::vector<Necklace> list_necklaces(const Params& params);

}  // namespace bwdb

#endif  // BWDB_UCYCLE_HPP

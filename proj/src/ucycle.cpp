#include "bwdb/ucycle.hpp"

namespace bwdb {

CycleStream::CycleStream(const Params& params) : params_(params), cursor_(params) { load_block(); }

void CycleStream::load_block() {
    block_ = aperiodic_prefix(cursor_.current().value());
    if (params_.bound == Bound::at_most) block_ = complement(block_);
    pos_ = 0;
}

std::optional<Symbol> CycleStream::next() {
    if (done_) return std::nullopt;
    if (pos_ == block_.size()) {
        if (!cursor_.advance()) {
            done_ = true;
            return std::nullopt;
        }
        load_block();
    }
    ++emitted_;
    return block_[pos_++];
}

CycleStream generate_up(const Params& params) {
    return CycleStream(Params::at_least(params.n, params.k, params.w));
}

CycleStream generate_down(const Params& params) {
    return CycleStream(Params::at_most(params.n, params.k, params.w));
}

std::vector<Symbol> materialize(CycleStream stream) {
    std::vector<Symbol> out;
    while (auto s = stream.next()) out.push_back(*s);
    return out;
}

std::vector<Symbol> materialize(const Params& params) { return materialize(CycleStream(params)); }

Count brute_rank(const KString& s, const Params& params) {
    const std::vector<Symbol> cycle = materialize(params);
    const std::size_t len = cycle.size();
    for (std::size_t start = 0; start < len; ++start) {
        bool match = s.size() > 0;
        for (std::size_t i = 0; i < s.size() && match; ++i) match = cycle[(start + i) % len] == s[i];
        if (match) return Count(start + 1);
    }
    throw constraint_error(to_text(s) + " is not a window of the cycle");
}

std::vector<Necklace> list_necklaces(const Params& params) {
    NecklaceCursor cursor(params);
    std::vector<Necklace> out{cursor.current()};
    while (cursor.advance()) out.push_back(cursor.current());
    return out;
}

}  // namespace bwdb

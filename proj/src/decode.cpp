#include "bwdb/decode.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bwdb/necklace_order.hpp"

namespace bwdb {

namespace {

std::string describe(const Count& r) { return r.str(); }

// The necklace of N_k(n) that s = pq straddles: its prefix is q. When p is
// not k^|p| that necklace is the successor of qp, otherwise the smallest
// necklace with prefix q.
Necklace straddled_necklace(const PQSplit& split, std::size_t n) {
    const KString qp = split.q + split.p;
    const int k = qp.alphabet();
    const auto ps = split.p.symbols();
    if (std::all_of(ps.begin(), ps.end(), [k](Symbol x) { return x == k; })) {
        return smallest_necklace_with_prefix(split.q, n);
    }
    std::vector<Symbol> u(qp.symbols().begin(), qp.symbols().end());
    for (std::size_t i = n; i > split.q.size(); --i) {
        if (u[i - 1] == k) continue;
        std::vector<Symbol> head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
        ++head.back();
        std::vector<Symbol> padded = head;
        padded.resize(n, k);
        if (is_necklace(std::span<const Symbol>(padded))) {
            return smallest_necklace_with_prefix(KString(std::move(head), k), n);
        }
    }
    throw std::logic_error("no necklace follows " + to_text(qp) + " with prefix " + to_text(split.q));
}

}  // namespace

Decoder::Decoder(const Params& params)
    : params_(params),
      up_(params.normalized_up()),
      s_table_(std::make_shared<WeightCountTable>(up_.n, up_.k)),
      first_(first_necklace(up_)) {
    length_ = degenerate() ? Count(1) : s_table_->at_least(up_.n, up_.w);
}

void Decoder::check_string(const KString& s) const {
    if (static_cast<int>(s.size()) != up_.n) {
        throw constraint_error("string length " + std::to_string(s.size()) + " differs from n = " +
                               std::to_string(up_.n));
    }
    if (s.alphabet() != up_.k) throw constraint_error("string alphabet differs from k");
}

Count Decoder::rank(const KString& s) const {
    if (params_.bound == Bound::at_least) return rank_up(s);
    check_string(s);
    if (weight(s) > params_.w) {
        throw constraint_error("weight " + std::to_string(weight(s)) + " exceeds upper bound " +
                               std::to_string(params_.w));
    }
    return rank_up(complement(s));
}

KString Decoder::unrank(const Count& r) const {
    KString s = unrank_up(r);
    return params_.bound == Bound::at_least ? s : complement(s);
}

Count Decoder::rank_up(const KString& s) const {
    check_string(s);
    const int n = up_.n, k = up_.k;
    if (weight(s) < up_.w) {
        throw constraint_error("weight " + std::to_string(weight(s)) + " is below lower bound " +
                               std::to_string(up_.w));
    }
    if (degenerate()) return 1;  // the cycle is the single symbol k

    // Wraparound windows k^{n-j} a_1..a_j.
    for (int j = 0; j < n; ++j) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) {
            match = s[i] == (i < n - j ? k : first_[i - (n - j)]);
        }
        if (match) return length_ - (n - j) + 1;
    }

    const PQSplit split = pq_split(s);
    const Necklace beta2 = straddled_necklace(split, n);
    return t_count(beta2) - static_cast<long>(split.p.size()) + 1;
}

Necklace Decoder::smallest_neck(const Count& r, std::vector<KString>* trace) const {
    const int n = up_.n, k = up_.k;
    if (degenerate()) {
        if (r != 1) throw constraint_error("rank " + describe(r) + " out of range [1,1]");
        return first_;
    }
    const Count last = length_ - n + 1;
    if (r < 1 || r > last) {
        throw constraint_error("rank " + describe(r) + " out of range [1," + describe(last) + "]");
    }
    std::vector<Symbol> t(n, k);
    for (int i = 0; i < n; ++i) {
        int lo = 1, hi = k;
        t[i] = k;
        while (lo < hi) {
            const Symbol prev = t[i];
            const int v = (lo + hi) / 2;
            t[i] = v;
            const KString candidate(t, k);
            if (is_necklace(candidate) && weight(candidate) >= up_.w && rank_up(candidate) >= r) {
                hi = v;
            } else {
                t[i] = prev;
                lo = v + 1;
            }
        }
        if (trace) trace->emplace_back(t, k);
    }
    return Necklace(KString(std::move(t), k));
}

KString Decoder::unrank_up(const Count& r) const {
    const int n = up_.n, k = up_.k;
    if (r < 1 || r > length_) {
        throw constraint_error("rank " + describe(r) + " out of range [1," + describe(length_) + "]");
    }
    if (degenerate()) return first_.value();

    if (r > length_ - n + 1) {
        // The window starts inside the trailing k^n and wraps to the first necklace.
        const int ks = static_cast<int>(length_ - r + 1);
        return KString::uniform(k, ks, k) + first_.value().slice(0, n - ks);
    }

    const Necklace gamma1 = smallest_neck(r);
    const Count r1 = rank_up(gamma1.value());
    if (r1 == r) return gamma1.value();
    const Necklace gamma2 = smallest_neck(r1 - n < 1 ? Count(1) : Count(r1 - n));
    if (gamma1.periodic() && gamma2.periodic()) {
        throw std::logic_error("consecutive necklaces " + to_text(gamma2.value()) + " and " +
                               to_text(gamma1.value()) + " are both periodic");
    }
    const int d = static_cast<int>(r1 - r);
    return gamma2.value().slice(n - d) + gamma1.value().slice(0, n - d);
}

DecodeContext Decoder::context_for(const Necklace& alpha) const {
    return DecodeContext(alpha, s_table_);
}

Count Decoder::t_count(const Necklace& alpha) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = t_cache_.find(alpha.value()); it != t_cache_.end()) return it->second;
    }
    Count value = context_for(alpha).t_count(up_.w);
    std::lock_guard lock(mutex_);
    t_cache_.emplace(alpha.value(), value);
    return value;
}

std::size_t Decoder::cached_t_values() const {
    std::lock_guard lock(mutex_);
    return t_cache_.size();
}

Count rank_up(const KString& s, const Params& params) {
    return Decoder(Params::at_least(params.n, params.k, params.w)).rank(s);
}

KString unrank_up(const Count& r, const Params& params) {
    return Decoder(Params::at_least(params.n, params.k, params.w)).unrank(r);
}

Necklace smallest_neck(const Count& r, const Params& params) {
    return Decoder(Params::at_least(params.n, params.k, params.w)).smallest_neck(r);
}

Count rank_down(const KString& s, const Params& params) {
    return Decoder(Params::at_most(params.n, params.k, params.w)).rank(s);
}

KString unrank_down(const Count& r, const Params& params) {
    return Decoder(Params::at_most(params.n, params.k, params.w)).unrank(r);
}

}  // namespace bwdb

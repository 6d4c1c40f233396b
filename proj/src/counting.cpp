#include "bwdb/counting.hpp"

#include <algorithm>
#include <string>

namespace bwdb {

namespace {

const Count& zero() {
    static const Count value = 0;
    return value;
}

}  // namespace

WeightCountTable::WeightCountTable(int n, int k) : n_(n), k_(k), width_(n * k + 1) {
    if (n < 0 || k < 1) throw constraint_error("invalid (n, k) for weight counts");
    table_.assign(static_cast<std::size_t>(n + 1) * width_, Count(0));
    table_[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int w = 0; w <= m * k; ++w) {
            Count sum = 0;
            for (int x = 1; x <= k; ++x) sum += at_least(m - 1, std::max(0, w - x));
            table_[static_cast<std::size_t>(m) * width_ + w] = std::move(sum);
        }
    }
}

const Count& WeightCountTable::at_least(int m, int w) const {
    if (m < 0 || m > n_) throw constraint_error("length out of range for weight counts");
    if (w > m * k_) return zero();
    return table_[static_cast<std::size_t>(m) * width_ + std::max(0, w)];
}

Count s_up(int n, int w, int k) { return WeightCountTable(n, k).at_least(n, w); }

DecodeContext::DecodeContext(Necklace alpha, std::shared_ptr<const WeightCountTable> s_table)
    : alpha_(std::move(alpha)),
      n_(static_cast<int>(alpha_.size())),
      k_(alpha_.alphabet()),
      width_(n_ * k_ + 1),
      s_(std::move(s_table)) {
    if (n_ < 1) throw constraint_error("alpha must be non-empty");
    if (!s_ || s_->n() < n_ || s_->k() != k_) s_ = std::make_shared<WeightCountTable>(n_, k_);

    prefix_weight_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) prefix_weight_[j + 1] = prefix_weight_[j] + alpha_[j];

    border_.assign(n_ + 1, 0);
    for (int i = 1, b = 0; i < n_; ++i) {
        while (b > 0 && alpha_[i] != alpha_[b]) b = border_[b];
        if (alpha_[i] == alpha_[b]) ++b;
        border_[i + 1] = b;
    }

    const std::size_t size = static_cast<std::size_t>(n_ + 1) * (n_ + 1) * width_;
    b_.assign(size, Count(0));
    p_.assign(size, Count(0));
    b_[index(0, 0, 0)] = 1;
    p_[index(0, 0, 0)] = 1;
    const int kn = n_ * k_;
    for (int t = 1; t <= n_; ++t) {
        // B(t,t,.) = P(t,t,.) = 0: the string a_1..a_t is not above alpha.
        for (int j = t - 1; j >= 0; --j) {
            const int rest = t - j - 1;
            for (int w = 0; w <= kn; ++w) {
                Count b = b_[index(t, j + 1, w)];
                Count p = w > 0 ? p_[index(t, j + 1, w)] : Count(0);
                for (int x = alpha_[j] + 1; x <= k_; ++x) {
                    const int need = w - prefix_weight_[j] - x;
                    b += b_[index(rest, 0, std::max(0, need))];
                    if (w > 0 && need >= 0) p += p_[index(rest, 0, need)];
                }
                b_[index(t, j, w)] = std::move(b);
                p_[index(t, j, w)] = std::move(p);
            }
        }
    }
}

std::size_t DecodeContext::index(int t, int j, int w) const {
    return (static_cast<std::size_t>(t) * (n_ + 1) + j) * width_ + w;
}

void DecodeContext::check_tj(int t, int j) const {
    if (t < 0 || t > n_ || j < 0 || j > t) {
        throw constraint_error("(t, j) = (" + std::to_string(t) + ", " + std::to_string(j) +
                               ") outside 0 <= j <= t <= n");
    }
}

const Count& DecodeContext::b_count(int t, int j, int w) const {
    check_tj(t, j);
    if (w > n_ * k_) return zero();
    return b_[index(t, j, std::max(0, w))];
}

const Count& DecodeContext::p_count(int t, int j, int w) const {
    check_tj(t, j);
    if (w < 0 || w > n_ * k_) return zero();
    return p_[index(t, j, w)];
}

int DecodeContext::z_border(int t, int j) const {
    if (t < 1 || t > n_ || j < 0 || j > n_) throw constraint_error("(t, j) out of range");
    // q' = a_{n-t+2}..a_j; its longest suffix that is also a prefix of alpha
    // is the longest border of a_1..a_j not exceeding |q'|.
    const int q_len = j - (n_ - t + 1);
    if (q_len <= 0) return 0;
    int z = border_[j];
    while (z > q_len) z = border_[z];
    return z;
}

Count DecodeContext::a_count(int t, int j, int w) const {
    if (t < 1 || t > n_ || j < 0 || j > n_) {
        throw constraint_error("(t, j) = (" + std::to_string(t) + ", " + std::to_string(j) +
                               ") out of range");
    }
    if (j == n_) return 0;
    const Symbol next = alpha_[j];  // a_{j+1}
    Count total = 0;
    if (t + j <= n_) {
        // s = r a_1..a_j x q: r has every suffix above alpha, x < a_{j+1}.
        const int tail = n_ - t - j;
        for (int x = 1; x < next; ++x) {
            const int fixed = prefix_weight_[j] + x;
            for (int wr = t - 1; wr <= k_ * (t - 1); ++wr) {
                const Count& r = p_count(t - 1, 0, wr);
                if (r.is_zero()) continue;
                total += r * s_->at_least(tail, w - wr - fixed);
            }
        }
        return total;
    }
    // s = a_{n-t+2}..a_j x r a_1..a_{n-t+1}.
    const int z = z_border(t, j);
    const Symbol border_next = alpha_[z];  // a_{z+1}
    if (next <= border_next) return 0;
    total = b_count(n_ - j + z, z + 1, w - prefix_weight_[j - z]);
    for (int x = border_next + 1; x < next; ++x) {
        total += b_count(n_ - j - 1, 0, w - prefix_weight_[j] - x);
    }
    return total;
}

Count DecodeContext::t_count(int w) const {
    Count total = 0;
    for (int t = 1; t <= n_; ++t) {
        for (int j = 0; j < n_; ++j) total += a_count(t, j, w);
    }
    return total;
}

}  // namespace bwdb

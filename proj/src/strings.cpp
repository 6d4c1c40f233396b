#include "bwdb/strings.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace bwdb {

KString::KString(std::vector<Symbol> symbols, int k) : symbols_(std::move(symbols)), k_(k) {
    if (k < 1) throw constraint_error("alphabet size must be at least 1");
    for (Symbol s : symbols_) {
        if (s < 1 || s > k) {
            throw constraint_error("symbol " + std::to_string(s) + " outside [1," +
                                   std::to_string(k) + "]");
        }
    }
}

KString KString::uniform(Symbol s, std::size_t n, int k) {
    return KString(std::vector<Symbol>(n, s), k);
}

KString KString::slice(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, symbols_.size());
    len = std::min(len, symbols_.size() - pos);
    KString out;
    out.k_ = k_;
    out.symbols_.assign(symbols_.begin() + pos, symbols_.begin() + pos + len);
    return out;
}

KString KString::rotated(std::size_t by) const {
    KString out = *this;
    if (!out.symbols_.empty()) {
        std::rotate(out.symbols_.begin(), out.symbols_.begin() + by % out.symbols_.size(),
                    out.symbols_.end());
    }
    return out;
}

KString KString::operator+(const KString& rhs) const {
    if (!rhs.empty() && !empty() && rhs.k_ != k_) {
        throw constraint_error("cannot concatenate strings over different alphabets");
    }
    KString out = empty() ? rhs : *this;
    if (!empty()) out.symbols_.insert(out.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return out;
}

Necklace::Necklace(KString value) : value_(std::move(value)) {
    if (!is_necklace(value_)) throw constraint_error(to_text(value_) + " is not a necklace");
}

bool Necklace::periodic() const { return period(value_.symbols()) < value_.size(); }

int weight(std::span<const Symbol> s) noexcept { return std::accumulate(s.begin(), s.end(), 0); }

KString complement(const KString& s) {
    std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
    for (Symbol& x : out) x = s.alphabet() - x + 1;
    return KString(std::move(out), s.alphabet());
}

bool is_necklace(std::span<const Symbol> s) noexcept {
    const std::size_t n = s.size();
    std::size_t p = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (s[i] < s[i - p]) return false;
        if (s[i] > s[i - p]) p = i + 1;
    }
    return n == 0 || n % p == 0;
}

std::size_t period(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    // KMP failure function: border[i] is the longest proper border of s[0..i).
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1, b = 0; i < n; ++i) {
        while (b > 0 && s[i] != s[b]) b = border[b];
        if (s[i] == s[b]) ++b;
        border[i + 1] = b;
    }
    const std::size_t p = n - border[n];
    return n % p == 0 ? p : n;
}

KString aperiodic_prefix(const KString& s) { return s.slice(0, period(s.symbols())); }

PQSplit pq_split(const KString& s) {
    const std::size_t n = s.size();
    std::vector<Symbol> rotation(n);
    for (std::size_t len = n; len >= 1; --len) {
        const std::size_t cut = n - len;
        auto it = std::copy(s.symbols().begin() + cut, s.symbols().end(), rotation.begin());
        std::copy(s.symbols().begin(), s.symbols().begin() + cut, it);
        if (is_necklace(rotation)) return {s.slice(0, cut), s.slice(cut)};
    }
    // Only reachable for the empty string.
    return {s, s};
}

std::string to_text(std::span<const Symbol> s, int k, TextFormat format) {
    if (format == TextFormat::automatic) format = k <= 9 ? TextFormat::digits : TextFormat::dotted;
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (format == TextFormat::digits) {
            if (s[i] < 0 || s[i] > 9) {
                throw constraint_error("symbol " + std::to_string(s[i]) +
                                       " cannot be rendered as a single digit");
            }
            out.push_back(static_cast<char>('0' + s[i]));
        } else {
            if (i) out.push_back('.');
            out += std::to_string(s[i]);
        }
    }
    return out;
}

KString parse_kstring(std::string_view text, int k) {
    std::vector<Symbol> symbols;
    const bool dotted = k > 9 || text.find('.') != std::string_view::npos;
    if (!dotted) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed string '" + std::string(text) + "'");
            }
            symbols.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t end = std::min(text.find('.', pos), text.size());
            const auto field = text.substr(pos, end - pos);
            Symbol value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
                throw std::invalid_argument("malformed string '" + std::string(text) + "'");
            }
            symbols.push_back(value);
            pos = end + 1;
        }
    }
    if (symbols.empty()) throw std::invalid_argument("empty string");
    return KString(std::move(symbols), k);
}

}  // namespace bwdb

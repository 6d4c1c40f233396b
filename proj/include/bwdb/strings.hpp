#ifndef BWDB_STRINGS_HPP
#define BWDB_STRINGS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwdb {

using Symbol = int;

// Raised when an input violates a domain constraint: a symbol outside
// [1,k], a weight bound that admits no strings, a rank out of range, ...
class constraint_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A string over the integer alphabet {1,...,k}. Symbols are 1-based so that
// weights and complements need no offset.
class KString {
public:
    KString() = default;
    KString(std::vector<Symbol> symbols, int k);

    static KString uniform(Symbol s, std::size_t n, int k);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    int alphabet() const noexcept { return k_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    KString slice(std::size_t pos, std::size_t len = std::string::npos) const;
    KString rotated(std::size_t by) const;
    KString operator+(const KString& rhs) const;

    friend bool operator==(const KString& a, const KString& b) noexcept {
        return a.k_ == b.k_ && a.symbols_ == b.symbols_;
    }
    // Lexicographic; a proper prefix orders before its extensions.
    friend std::strong_ordering operator<=>(const KString& a, const KString& b) noexcept {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.k_ <=> b.k_;
    }

private:
    std::vector<Symbol> symbols_;
    int k_ = 1;
};

// A KString that is lexicographically least among its rotations.
class Necklace {
public:
    explicit Necklace(KString value);

    const KString& value() const noexcept { return value_; }
    std::size_t size() const noexcept { return value_.size(); }
    int alphabet() const noexcept { return value_.alphabet(); }
    Symbol operator[](std::size_t i) const { return value_[i]; }
    bool periodic() const;

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend std::strong_ordering operator<=>(const Necklace& a, const Necklace& b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    KString value_;
};

// s = p·q where q is the longest suffix of s such that q·p is a necklace.
struct PQSplit {
    KString p;
    KString q;
};

int weight(std::span<const Symbol> s) noexcept;
inline int weight(const KString& s) noexcept { return weight(s.symbols()); }

// x -> k - x + 1 on every symbol.
KString complement(const KString& s);

// Linear-time prenecklace scan; a prenecklace is a necklace iff its
// longest Lyndon prefix length divides n.
bool is_necklace(std::span<const Symbol> s) noexcept;
inline bool is_necklace(const KString& s) noexcept { return is_necklace(s.symbols()); }

// Length of the shortest t with s = t^j.
std::size_t period(std::span<const Symbol> s);
KString aperiodic_prefix(const KString& s);

PQSplit pq_split(const KString& s);

enum class TextFormat { automatic, digits, dotted };

// Digits when every symbol fits in one decimal digit (k <= 9), otherwise
// dot-separated decimal integers.
std::string to_text(std::span<const Symbol> s, int k, TextFormat format = TextFormat::automatic);
inline std::string to_text(const KString& s, TextFormat format = TextFormat::automatic) {
    return to_text(s.symbols(), s.alphabet(), format);
}

// Accepts either form produced by to_text. Throws std::invalid_argument on
// malformed text and constraint_error on symbols outside [1,k].
KString parse_kstring(std::string_view text, int k);

}  // namespace bwdb

#endif  // BWDB_STRINGS_HPP

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hitomezashi {

struct BinaryAlphabet {
    static constexpr char kSymbols[2] = {'0', '1'};
    static constexpr std::string_view kName = "binary";
};

/// Letter 0 is R (clockwise turn), letter 1 is L (counterclockwise turn).
struct TurnAlphabet {
    static constexpr char kSymbols[2] = {'R', 'L'};
    static constexpr std::string_view kName = "turn";
};

/// An immutable finite word over a two-letter alphabet. Letters are kept in
/// reading order, left to right as printed, and indexed 0 or 1.
template <typename Alphabet>
class Word {
public:
    Word() = default;

    /// Throws Error(kParse) if any value is not 0 or 1.
    explicit Word(std::vector<std::uint8_t> letters);

    /// Parses the textual form; the empty string is the empty word.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// Letter index (0 or 1) at position i.
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
    char symbol(std::size_t i) const { return Alphabet::kSymbols[letters_[i]]; }

    const std::vector<std::uint8_t> &letters() const noexcept { return letters_; }
    std::string str() const;

    friend bool operator==(const Word &, const Word &) = default;
    friend auto operator<=>(const Word &, const Word &) = default;

private:
    std::vector<std::uint8_t> letters_;
};

using BinaryWord = Word<BinaryAlphabet>;
using TurnWord = Word<TurnAlphabet>;

extern template class Word<BinaryAlphabet>;
extern template class Word<TurnAlphabet>;

enum class Turn : std::uint8_t { kRight = 0, kLeft = 1 };

inline Turn turn_at(const TurnWord &w, std::size_t i) { return static_cast<Turn>(w[i]); }

// 0 <-> 1 (or L <-> R).
template <typename A>
Word<A> complement(const Word<A> &w);

template <typename A>
Word<A> reverse(const Word<A> &w);

template <typename A>
Word<A> concat(const Word<A> &a, const Word<A> &b);

template <typename A>
Word<A> operator+(const Word<A> &a, const Word<A> &b) {
    return concat(a, b);
}

/// k-fold concatenation; k must be positive.
template <typename A>
Word<A> repeat(const Word<A> &w, std::size_t k);

template <typename A>
bool is_palindrome(const Word<A> &w);

template <typename A>
bool is_antipalindrome(const Word<A> &w);

/// F_n seeded with F_0 = F_1 = 1. Throws Error(kOverflow) past 64 bits.
std::uint64_t fibonacci(unsigned n);

/// P_n = 2 P_{n-1} + P_{n-2}, P_0 = 0, P_1 = 1. Throws Error(kOverflow) past 64 bits.
std::uint64_t pell(unsigned n);

/// u_0 = empty, u_1 = 1, u_n = ~u_{n-1} ~rev(u_{n-2}) u_{n-1}. |u_n| = P_n.
BinaryWord pell_word(unsigned n);

/// q_0 = empty, q_1 = R; q_n = q_{n-1} q_{n-2} when n = 2 (mod 3), otherwise
/// q_n = q_{n-1} ~q_{n-2}.
TurnWord fib_turtle_word(unsigned n);

} // namespace hitomezashi

#include "hitomezashi/words.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

template <typename A>
Word<A>::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] > 1) {
            throw Error(ErrorKind::kParse,
                        fmt::format("{} word letter {} has value {}", A::kName, i, letters_[i]));
        }
    }
}

template <typename A>
Word<A> Word<A>::parse(std::string_view text) {
    std::vector<std::uint8_t> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == A::kSymbols[0]) {
            letters.push_back(0);
        } else if (c == A::kSymbols[1]) {
            letters.push_back(1);
        } else {
            throw Error(ErrorKind::kParse,
                        fmt::format("'{}' is not a {} word (expected only '{}' and '{}')", text,
                                    A::kName, A::kSymbols[0], A::kSymbols[1]));
        }
    }
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

template <typename A>
std::string Word<A>::str() const {
    std::string s(letters_.size(), ' ');
    std::transform(letters_.begin(), letters_.end(), s.begin(),
                   [](std::uint8_t l) { return A::kSymbols[l]; });
    return s;
}

template class Word<BinaryAlphabet>;
template class Word<TurnAlphabet>;

template <typename A>
Word<A> complement(const Word<A> &w) {
    std::vector<std::uint8_t> out(w.letters());
    for (auto &l : out) l ^= 1u;
    return Word<A>(std::move(out));
}

template <typename A>
Word<A> reverse(const Word<A> &w) {
    return Word<A>(std::vector<std::uint8_t>(w.letters().rbegin(), w.letters().rend()));
}

template <typename A>
Word<A> concat(const Word<A> &a, const Word<A> &b) {
    std::vector<std::uint8_t> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters().begin(), a.letters().end());
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return Word<A>(std::move(out));
}

template <typename A>
Word<A> repeat(const Word<A> &w, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::kInvalidProgram, "repeat count must be positive");
    std::vector<std::uint8_t> out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
    return Word<A>(std::move(out));
}

template <typename A>
bool is_palindrome(const Word<A> &w) {
    const auto &l = w.letters();
    return std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin());
}

template <typename A>
bool is_antipalindrome(const Word<A> &w) {
    const auto &l = w.letters();
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (l[i] == l[n - 1 - i]) return false;
    }
    return true;
}

#define HITOMEZASHI_INSTANTIATE(A)                                        \
    template Word<A> complement(const Word<A> &);                         \
    template Word<A> reverse(const Word<A> &);                            \
    template Word<A> concat(const Word<A> &, const Word<A> &);            \
    template Word<A> repeat(const Word<A> &, std::size_t);                \
    template bool is_palindrome(const Word<A> &);                         \
    template bool is_antipalindrome(const Word<A> &);

HITOMEZASHI_INSTANTIATE(BinaryAlphabet)
HITOMEZASHI_INSTANTIATE(TurnAlphabet)
#undef HITOMEZASHI_INSTANTIATE

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, std::string_view what, unsigned n) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw Error(ErrorKind::kOverflow, fmt::format("{}({}) does not fit in 64 bits", what, n));
    }
    return a + b;
}

} // namespace

std::uint64_t fibonacci(unsigned n) {
    std::uint64_t prev = 1, cur = 1;
    for (unsigned k = 2; k <= n; ++k) {
        const auto next = checked_add(cur, prev, "fibonacci", n);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::uint64_t pell(unsigned n) {
    if (n == 0) return 0;
    std::uint64_t prev = 0, cur = 1;
    for (unsigned k = 2; k <= n; ++k) {
        const auto next = checked_add(checked_add(cur, cur, "pell", n), prev, "pell", n);
        prev = cur;
        cur = next;
    }
    return cur;
}

BinaryWord pell_word(unsigned n) {
    if (n == 0) return {};
    BinaryWord older;                         // u_{k-2}
    BinaryWord newer = BinaryWord::parse("1"); // u_{k-1}
    for (unsigned k = 2; k <= n; ++k) {
        BinaryWord next = complement(newer) + complement(reverse(older)) + newer;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

TurnWord fib_turtle_word(unsigned n) {
    if (n == 0) return {};
    TurnWord older;
    TurnWord newer = TurnWord::parse("R");
    for (unsigned k = 2; k <= n; ++k) {
        TurnWord next = (k % 3 == 2) ? newer + older : newer + complement(older);
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

} // namespace hitomezashi

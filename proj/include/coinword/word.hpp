#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coinword/bigint.hpp"

namespace coinword {

/// One toss of a fair coin. H is encoded as bit 1, T as bit 0.
enum class Letter : std::uint8_t { T = 0, H = 1 };

constexpr char to_char(Letter l) { return l == Letter::H ? 'H' : 'T'; }
constexpr Letter flip(Letter l) { return l == Letter::H ? Letter::T : Letter::H; }

/// Raised by the text parsers. `position()` is 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A nonempty word over {H, T}, stored in canonical uppercase form.
class Word {
public:
    /// Accepts upper- or lower-case H/T; throws ParseError otherwise.
    static Word parse(std::string_view text);

    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const {
        return letters_[i] == 'H' ? Letter::H : Letter::T;
    }

    /// Letters packed into an integer, first letter most significant.
    /// Only meaningful for words of at most 64 letters.
    std::uint64_t bits() const noexcept;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    std::string letters_;
};

inline Word parse_word(std::string_view text) { return Word::parse(text); }

/// Swaps H and T letterwise.
Word complement(const Word& w);

/// A full toss record of n >= 1 letters, packed with the last toss in bit 0.
struct OutcomeString {
    std::uint64_t bits = 0;
    unsigned length = 0;

    static OutcomeString parse(std::string_view text);
    std::string str() const;
};

/// True iff `w` ends exactly at the last toss of `s` and has no earlier
/// (possibly overlapping) occurrence.
bool first_occurrence_ends_at(const OutcomeString& s, const Word& w);

/// Default and hard ceiling for the exhaustive enumeration oracle.
inline constexpr unsigned kDefaultEnumerationCap = 24;
inline constexpr unsigned kMaxEnumerationCap = 40;

/// Cap from COINWORD_ENUM_CAP when set and valid, else the default.
unsigned enumeration_cap();

/// Counts the 2^n outcome strings whose first occurrence of `w` ends at toss n.
/// Parallelised with OpenMP; the result does not depend on the thread count.
BigInt brute_force_count(const Word& w, unsigned n, unsigned cap = enumeration_cap());

/// Single-threaded reference kernel for brute_force_count.
BigInt brute_force_count_serial(const Word& w, unsigned n, unsigned cap = enumeration_cap());

}  // namespace coinword

#include "coinword/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace coinword {

namespace {

// Bit b of the result is set when an occurrence of the pattern ends at the
// toss stored in bit b of `s` (bit 0 is the final toss).
inline std::uint64_t occurrence_ends(std::uint64_t s, std::uint64_t pattern, unsigned len) {
    std::uint64_t occ = ~std::uint64_t{0};
    for (unsigned k = 0; k < len; ++k) {
        const std::uint64_t shifted = s >> k;
        occ &= ((pattern >> k) & 1u) ? shifted : ~shifted;
    }
    return occ;
}

inline bool first_at_end(std::uint64_t s, unsigned n, std::uint64_t pattern, unsigned len) {
    const unsigned windows = n - len + 1;
    const std::uint64_t valid = windows >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << windows) - 1);
    return (occurrence_ends(s, pattern, len) & valid) == 1u;
}

void check_enumeration_args(const Word& w, unsigned n, unsigned cap) {
    if (w.size() > 64) {
        throw std::invalid_argument("brute_force_count: word longer than 64 letters");
    }
    if (n < 1) {
        throw std::invalid_argument("brute_force_count: n must be at least 1");
    }
    if (cap > kMaxEnumerationCap) {
        throw std::invalid_argument("brute_force_count: cap exceeds hard ceiling " +
                                    std::to_string(kMaxEnumerationCap));
    }
    if (n > cap) {
        throw std::out_of_range("brute_force_count: n=" + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(cap));
    }
}

}  // namespace

Word Word::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty word", 0);
    }
    std::string letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'H':
            case 'h': letters.push_back('H'); break;
            case 'T':
            case 't': letters.push_back('T'); break;
            default:
                throw ParseError("invalid character '" + std::string(1, text[i]) +
                                     "' at position " + std::to_string(i + 1) +
                                     " (expected H or T)",
                                 i + 1);
        }
    }
    return Word(std::move(letters));
}

std::uint64_t Word::bits() const noexcept {
    std::uint64_t b = 0;
    for (char c : letters_) {
        b = (b << 1) | (c == 'H' ? 1u : 0u);
    }
    return b;
}

Word complement(const Word& w) {
    std::string out = w.str();
    for (char& c : out) {
        c = (c == 'H') ? 'T' : 'H';
    }
    return Word::parse(out);
}

OutcomeString OutcomeString::parse(std::string_view text) {
    if (text.size() > 64) {
        throw ParseError("outcome string longer than 64 tosses", 65);
    }
    const Word w = Word::parse(text);
    return OutcomeString{w.bits(), static_cast<unsigned>(w.size())};
}

std::string OutcomeString::str() const {
    std::string out(length, 'T');
    for (unsigned i = 0; i < length; ++i) {
        if ((bits >> (length - 1 - i)) & 1u) out[i] = 'H';
    }
    return out;
}

bool first_occurrence_ends_at(const OutcomeString& s, const Word& w) {
    if (w.size() > s.length || w.size() > 64) return false;
    return first_at_end(s.bits, s.length, w.bits(), static_cast<unsigned>(w.size()));
}

unsigned enumeration_cap() {
    if (const char* env = std::getenv("COINWORD_ENUM_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= kMaxEnumerationCap) {
            return static_cast<unsigned>(v);
        }
    }
    return kDefaultEnumerationCap;
}

BigInt brute_force_count_serial(const Word& w, unsigned n, unsigned cap) {
    check_enumeration_args(w, n, cap);
    const auto len = static_cast<unsigned>(w.size());
    if (len > n) return 0;
    const std::uint64_t pattern = w.bits();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < total; ++s) {
        count += first_at_end(s, n, pattern, len) ? 1u : 0u;
    }
    return BigInt(static_cast<unsigned long>(count));
}

BigInt brute_force_count(const Word& w, unsigned n, unsigned cap) {
    check_enumeration_args(w, n, cap);
    const auto len = static_cast<unsigned>(w.size());
    if (len > n) return 0;
    const std::uint64_t pattern = w.bits();
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
    // Only strings whose low `len` bits spell the word can qualify, so the
    // loop runs over the free high part.
    const auto free_bits = n - len;
    const auto prefixes = static_cast<std::int64_t>(std::uint64_t{1} << free_bits);
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (total > (1 << 14))
    for (std::int64_t hi = 0; hi < prefixes; ++hi) {
        const std::uint64_t s = (static_cast<std::uint64_t>(hi) << len) | pattern;
        count += first_at_end(s, n, pattern, len) ? 1u : 0u;
    }
    return BigInt(static_cast<unsigned long>(count));
}

}  // namespace coinword

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coinword/bigint.hpp"
#include "coinword/word.hpp"

namespace coinword {

/// Homogeneous linear recurrence a(n) = sum_i coefficients[i] * a(n-1-i),
/// seeded with a(1..order) = initial_values.
struct RecurrenceSpec {
    std::size_t order = 0;
    std::vector<long> coefficients;
    std::vector<BigInt> initial_values;

    /// Throws std::invalid_argument when the lengths disagree with `order`.
    void validate() const;

    bool operator==(const RecurrenceSpec&) const = default;
};

/// a_W(1), a_W(2), ... for one word.
struct CountSequence {
    Word word;
    std::vector<BigInt> values;  // values[0] holds a_W(1)

    std::size_t n_max() const noexcept { return values.size(); }
    /// 1-based access, a_W(n).
    const BigInt& at(std::size_t n) const;

    /// CSV with header "n,a_<word>(n)".
    void write_csv(std::ostream& os) const;
    static CountSequence read_csv(std::istream& is);
};

/// Recurrences for two- and three-letter words (complements share a spec).
/// Throws std::invalid_argument for any other length.
RecurrenceSpec builtin_spec(const Word& w);

/// Expands `spec` to n_max terms with exact arithmetic.
CountSequence extend_counts(const Word& w, const RecurrenceSpec& spec, std::size_t n_max);

/// extend_counts(w, builtin_spec(w), n_max).
CountSequence extend_counts(const Word& w, std::size_t n_max);

/// Finite-state matcher over the prefixes of a word. State k means the
/// longest suffix of the tosses so far that is a proper prefix of the word
/// has length k; state size() means the word has just completed.
class PrefixAutomaton {
public:
    explicit PrefixAutomaton(const Word& w);

    std::uint32_t match_state() const noexcept { return static_cast<std::uint32_t>(len_); }
    std::uint32_t next(std::uint32_t state, Letter l) const noexcept {
        return table_[2 * state + static_cast<std::size_t>(l)];
    }

private:
    std::size_t len_;
    std::vector<std::uint32_t> table_;  // 2 entries per non-final state
};

/// Counts by dynamic programming over PrefixAutomaton states; works for any
/// word length.
CountSequence automaton_counts(const Word& w, std::size_t n_max);

/// Recurrence engine when a built-in spec exists, automaton otherwise.
CountSequence count_sequence(const Word& w, std::size_t n_max);

/// a_W(0) obtained by running a built-in order-3 recurrence one step
/// backwards. Used by the closed tail formulas at N = 1.
BigInt backward_term(const RecurrenceSpec& spec);

}  // namespace coinword

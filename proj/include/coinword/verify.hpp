#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "coinword/counting.hpp"
#include "coinword/genfun.hpp"

namespace coinword {

struct VerifyOptions {
    /// Largest n for the exhaustive oracle (quick: 14, full: 20).
    unsigned brute_max = 14;
    /// Longest word used in the complement-invariance sweep.
    std::size_t complement_max_len = 4;
    std::size_t horizon_probe = 70;
    /// Where the recurrence side of the oracle triangle comes from. Tests
    /// substitute a corrupted source to check that failures are reported.
    std::function<RecurrenceSpec(const Word&)> spec_source = builtin_spec;

    static VerifyOptions quick() { return {}; }
    static VerifyOptions full() {
        VerifyOptions o;
        o.brute_max = 20;
        o.complement_max_len = 5;
        return o;
    }
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    void print(std::ostream& os) const;
};

/// The six words whose recurrences are built in: HT, HH, HHH, HHT, HTT, HTH.
std::vector<Word> essential_words();
/// essential_words() followed by their complements.
std::vector<Word> builtin_words();

/// -x^3 + x^3 R_m(x), i.e. the right side of f_m(x) D(x) = -x^3 (1 - R_m(x))
/// for a three-letter word with recurrence A, B, C.
Polynomial truncated_gf_times_denominator(const Word& w, std::size_t m);

VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace coinword

#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "coinword/counting.hpp"
#include "coinword/word.hpp"

namespace coinword {

/// Anything that hands out fair coin flips; true means H.
template <typename S>
concept BitSource = requires(S& s) {
    { s.next_bit() } -> std::convertible_to<bool>;
};

inline constexpr std::uint32_t kDefaultTossCap = 512;

struct TrialConfig {
    Word word;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint32_t max_tosses_per_trial = kDefaultTossCap;

    /// trials >= 1 and cap >= word length, std::invalid_argument otherwise.
    void validate() const;
};

struct EmpiricalSummary {
    std::uint64_t trials = 0;
    std::uint64_t count = 0;      // trials that completed before the cap
    double mean = 0.0;            // over completed trials
    double variance = 0.0;        // population variance over completed trials
    std::map<std::uint64_t, std::uint64_t> histogram;  // waiting time -> trials
    std::uint64_t truncated = 0;

    bool operator==(const EmpiricalSummary&) const = default;
};

/// Toss index at which the word completes, or nullopt once `cap` tosses
/// have passed without it.
template <BitSource S>
std::optional<std::uint32_t> sample_waiting_time(const PrefixAutomaton& automaton, S& source,
                                                 std::uint32_t cap) {
    const std::uint32_t full = automaton.match_state();
    std::uint32_t state = 0;
    for (std::uint32_t toss = 1; toss <= cap; ++toss) {
        state = automaton.next(state, source.next_bit() ? Letter::H : Letter::T);
        if (state == full) return toss;
    }
    return std::nullopt;
}

template <BitSource S>
std::optional<std::uint32_t> sample_waiting_time(const Word& w, S& source, std::uint32_t cap) {
    return sample_waiting_time(PrefixAutomaton(w), source, cap);
}

/// Runs cfg.trials independent trials; trial i draws from the Philox stream
/// (cfg.seed, i). `threads` = 0 uses the OpenMP default. The summary is
/// identical for every thread count.
EmpiricalSummary run_trials(const TrialConfig& cfg, int threads = 0);

/// Single-threaded reference for run_trials.
EmpiricalSummary run_trials_serial(const TrialConfig& cfg);

/// "n,empirical_count,empirical_p,exact_p" for n = 1..largest observed time.
void write_empirical_csv(std::ostream& os, const EmpiricalSummary& s, const Word& w);

/// "word,trials,seed,mean,variance,truncated" header and row.
void write_summary_line(std::ostream& os, const EmpiricalSummary& s, const TrialConfig& cfg,
                        bool header = true);

}  // namespace coinword

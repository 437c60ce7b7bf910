#include "coinword/montecarlo.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "coinword/philox.hpp"
#include "coinword/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coinword {

namespace {

// Dense per-worker tallies; index cap+1 counts truncated trials.
using Tally = std::vector<std::uint64_t>;

void run_range(const TrialConfig& cfg, const PrefixAutomaton& automaton, std::uint64_t begin,
               std::uint64_t end, Tally& tally) {
    for (std::uint64_t i = begin; i < end; ++i) {
        PhiloxBitStream stream(cfg.seed, i);
        const auto t = sample_waiting_time(automaton, stream, cfg.max_tosses_per_trial);
        ++tally[t ? *t : cfg.max_tosses_per_trial + 1];
    }
}

// Moments come from exact integer sums over the histogram, so the result
// depends only on the histogram.
EmpiricalSummary summarize(const TrialConfig& cfg, const Tally& tally) {
    EmpiricalSummary s;
    s.trials = cfg.trials;
    s.truncated = tally[cfg.max_tosses_per_trial + 1];
    BigInt sum = 0, sum_sq = 0;
    for (std::uint32_t n = 1; n <= cfg.max_tosses_per_trial; ++n) {
        if (tally[n] == 0) continue;
        s.histogram.emplace(n, tally[n]);
        s.count += tally[n];
        const BigInt h(static_cast<unsigned long>(tally[n]));
        sum += h * n;
        sum_sq += h * n * n;
    }
    if (s.count > 0) {
        const BigInt c(static_cast<unsigned long>(s.count));
        s.mean = Rational(sum, c).get_d();
        s.variance = Rational(c * sum_sq - sum * sum, c * c).get_d();
    }
    return s;
}

}  // namespace

void TrialConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_tosses_per_trial < word.size()) {
        throw std::invalid_argument("toss cap must be at least the word length");
    }
}

EmpiricalSummary run_trials_serial(const TrialConfig& cfg) {
    cfg.validate();
    const PrefixAutomaton automaton(cfg.word);
    Tally tally(cfg.max_tosses_per_trial + 2, 0);
    run_range(cfg, automaton, 0, cfg.trials, tally);
    return summarize(cfg, tally);
}

EmpiricalSummary run_trials(const TrialConfig& cfg, int threads) {
    cfg.validate();
    const PrefixAutomaton automaton(cfg.word);
    Tally total(cfg.max_tosses_per_trial + 2, 0);
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
    {
        Tally local(total.size(), 0);
        const auto nthreads = static_cast<std::uint64_t>(omp_get_num_threads());
        const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
        const std::uint64_t begin = cfg.trials * tid / nthreads;
        const std::uint64_t end = cfg.trials * (tid + 1) / nthreads;
        run_range(cfg, automaton, begin, end, local);
#pragma omp critical(coinword_tally_merge)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
    }
#else
    (void)threads;
    run_range(cfg, automaton, 0, cfg.trials, total);
#endif
    return summarize(cfg, total);
}

void write_empirical_csv(std::ostream& os, const EmpiricalSummary& s, const Word& w) {
    os << "n,empirical_count,empirical_p,exact_p\n";
    if (s.histogram.empty()) return;
    const std::size_t last = s.histogram.rbegin()->first;
    const CountSequence exact = count_sequence(w, last);
    for (std::size_t n = 1; n <= last; ++n) {
        const auto it = s.histogram.find(n);
        const std::uint64_t c = it == s.histogram.end() ? 0 : it->second;
        os << n << ',' << c << ','
           << format_double(static_cast<double>(c) / static_cast<double>(s.trials)) << ','
           << format_double(pmf(exact, n).to_double()) << '\n';
    }
}

void write_summary_line(std::ostream& os, const EmpiricalSummary& s, const TrialConfig& cfg,
                        bool header) {
    if (header) os << "word,trials,seed,mean,variance,truncated\n";
    os << cfg.word.str() << ',' << s.trials << ',' << cfg.seed << ',' << format_double(s.mean) << ','
       << format_double(s.variance) << ',' << s.truncated << '\n';
}

}  // namespace coinword

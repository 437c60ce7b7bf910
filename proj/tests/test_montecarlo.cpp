#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "coinword/montecarlo.hpp"
#include "coinword/philox.hpp"
#include "coinword/stats.hpp"

using namespace coinword;

namespace {

// Replays a fixed H/T script, then repeats the last letter.
struct ScriptedBits {
    std::string script;
    std::size_t pos = 0;
    bool next_bit() {
        const char c = script[pos < script.size() ? pos : script.size() - 1];
        ++pos;
        return c == 'H';
    }
};

static_assert(BitSource<ScriptedBits>);
static_assert(BitSource<PhiloxBitStream>);

TrialConfig config(const char* word, std::uint64_t trials, std::uint64_t seed,
                   std::uint32_t cap = kDefaultTossCap) {
    return TrialConfig{Word::parse(word), trials, seed, cap};
}

}  // namespace

TEST_CASE("Philox4x32-10 known answers") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("bit streams are reproducible and stream-separated") {
    PhiloxBitStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    std::string sa, sb, sc, sd;
    for (int i = 0; i < 400; ++i) {
        sa += a.next_bit() ? 'H' : 'T';
        sb += b.next_bit() ? 'H' : 'T';
        sc += c.next_bit() ? 'H' : 'T';
        sd += d.next_bit() ? 'H' : 'T';
    }
    CHECK(sa == sb);
    CHECK(sa != sc);
    CHECK(sa != sd);

    PhiloxBitStream e(1, 0);
    long heads = 0;
    for (int i = 0; i < 100000; ++i) heads += e.next_bit();
    CHECK(std::abs(heads - 50000) < 5 * 158);
}

TEST_CASE("sample_waiting_time on scripted streams") {
    ScriptedBits s1{"THH"};
    CHECK(sample_waiting_time(Word::parse("HH"), s1, 100) == 3u);
    ScriptedBits s2{"HT"};
    CHECK(sample_waiting_time(Word::parse("HT"), s2, 100) == 2u);
    ScriptedBits s3{"T"};
    CHECK_FALSE(sample_waiting_time(Word::parse("HH"), s3, 100).has_value());
    CHECK(s3.pos == 100);
    ScriptedBits s4{"HTHTHH"};
    CHECK(sample_waiting_time(Word::parse("HTHH"), s4, 100) == 6u);
    ScriptedBits s5{"HHT"};
    CHECK(sample_waiting_time(Word::parse("HHT"), s5, 2) == std::nullopt);
}

TEST_CASE("results do not depend on the worker count") {
    for (const char* w : {"HH", "HTH", "HHH"}) {
        const TrialConfig cfg = config(w, 20011, 42);
        const EmpiricalSummary ref = run_trials_serial(cfg);
        for (int threads : {1, 2, 3, 4, 7}) {
            INFO(w << " threads=" << threads);
            CHECK(run_trials(cfg, threads) == ref);
        }
        CHECK(run_trials(cfg) == ref);
    }
    CHECK(run_trials(config("HH", 5000, 1)) != run_trials(config("HH", 5000, 2)));
}

TEST_CASE("summary bookkeeping") {
    const TrialConfig cfg = config("HHH", 30000, 9, 20);
    const EmpiricalSummary s = run_trials(cfg);
    std::uint64_t completed = 0;
    double sum = 0, sum_sq = 0;
    for (const auto& [n, c] : s.histogram) {
        CHECK(n >= 3);
        CHECK(n <= 20);
        completed += c;
        sum += static_cast<double>(n * c);
        sum_sq += static_cast<double>(n * n * c);
    }
    CHECK(completed == s.count);
    CHECK(s.count + s.truncated == s.trials);
    CHECK(s.truncated > 0);
    const double mean = sum / static_cast<double>(completed);
    CHECK(s.mean == doctest::Approx(mean));
    CHECK(s.variance == doctest::Approx(sum_sq / static_cast<double>(completed) - mean * mean));
}

TEST_CASE("empirical mean sits in the 3 sigma band") {
    struct Row {
        const char* word;
        std::uint64_t seed;
    };
    for (const Row& r : {Row{"HT", 1}, Row{"HH", 1}, Row{"HHH", 1}, Row{"HHT", 1}, Row{"HTH", 1}}) {
        const Word w = Word::parse(r.word);
        const WordStats exact = moments(w);
        const auto s = run_trials(config(r.word, 100000, r.seed));
        const double band = 3.0 * exact.stddev / std::sqrt(100000.0);
        INFO(r.word);
        CHECK(s.truncated == 0);
        CHECK(std::abs(s.mean - exact.mean.get_d()) <= band);
    }
}

TEST_CASE("empirical tail of HHH at 30") {
    const auto s = run_trials(config("HHH", 100000, 5));
    std::uint64_t at_least = s.truncated;
    for (const auto& [n, c] : s.histogram) {
        if (n >= 30) at_least += c;
    }
    const double p = tail(Word::parse("HHH"), 30).to_double();
    CHECK(std::abs(static_cast<double>(at_least) / 1e5 - p) <= 0.01);
}

TEST_CASE("empirical pmf of HH within 5 sigma for a million trials") {
    const std::uint64_t trials = 1000000;
    const auto s = run_trials(config("HH", trials, 11));
    CHECK(s.truncated == 0);
    for (std::size_t n = 2; n <= 30; ++n) {
        const double p = pmf(Word::parse("HH"), n).to_double();
        const auto it = s.histogram.find(n);
        const double observed = it == s.histogram.end() ? 0.0 : static_cast<double>(it->second);
        const double sd = std::sqrt(static_cast<double>(trials) * p * (1 - p));
        INFO("n=" << n);
        CHECK(std::abs(observed - static_cast<double>(trials) * p) <= 5 * sd + 1);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(run_trials(config("HH", 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_trials(config("HHH", 10, 1, 2)), std::invalid_argument);
    CHECK_NOTHROW(run_trials(config("HHH", 10, 1, 3)));
}

TEST_CASE("CSV output") {
    const TrialConfig cfg = config("HT", 1000, 3);
    const auto s = run_trials(cfg);
    std::ostringstream os;
    write_summary_line(os, s, cfg);
    CHECK(os.str().rfind("word,trials,seed,mean,variance,truncated\nHT,1000,3,", 0) == 0);

    std::ostringstream hist;
    write_empirical_csv(hist, s, cfg.word);
    std::istringstream in(hist.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,empirical_count,empirical_p,exact_p");
    std::uint64_t total = 0;
    std::size_t expected_n = 1;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        CHECK(std::stoul(field) == expected_n++);
        std::getline(row, field, ',');
        total += std::stoull(field);
    }
    CHECK(total == s.count);
}

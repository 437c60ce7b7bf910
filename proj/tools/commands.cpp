#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "coinword/closed_form.hpp"
#include "coinword/counting.hpp"
#include "coinword/genfun.hpp"
#include "coinword/montecarlo.hpp"
#include "coinword/stats.hpp"
#include "coinword/verify.hpp"

namespace coinword::cli {

namespace {

struct Options {
    std::string word;
    std::size_t n = 0;
    std::string engine;
    std::string format = "text";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint32_t cap = kDefaultTossCap;
    int threads = 0;
    std::string q;
    bool histogram = false;
    bool full = false;
};

bool csv(const Options& o) { return o.format == "csv"; }

std::string exact_and_float(const DyadicRational& v) {
    return v.str() + " (" + format_double(v.to_double()) + ")";
}

std::vector<Word> words_or_essential(const Options& o) {
    if (o.word.empty()) return essential_words();
    return {Word::parse(o.word)};
}

Word require_word(const Options& o) {
    if (o.word.empty()) throw CLI::ValidationError("--word", "a word is required");
    return Word::parse(o.word);
}

void cmd_counts(const Options& o, std::ostream& out) {
    const Word w = require_word(o);
    const std::size_t n_max = o.n ? o.n : 15;
    std::string engine = o.engine;
    if (engine.empty()) engine = (w.size() == 2 || w.size() == 3) ? "recurrence" : "automaton";

    CountSequence seq{w, {}};
    if (engine == "recurrence") {
        seq = extend_counts(w, n_max);
    } else if (engine == "automaton") {
        seq = automaton_counts(w, n_max);
    } else {
        const unsigned cap = enumeration_cap();
        if (n_max > cap) {
            throw std::out_of_range("brute engine: n-max " + std::to_string(n_max) +
                                    " exceeds enumeration cap " + std::to_string(cap) +
                                    " (set COINWORD_ENUM_CAP to raise it)");
        }
        for (unsigned n = 1; n <= n_max; ++n) seq.values.push_back(brute_force_count(w, n, cap));
    }

    if (csv(o)) {
        seq.write_csv(out);
        return;
    }
    out << w.str() << ':';
    for (std::size_t n = 1; n <= seq.n_max(); ++n) out << (n == 1 ? " " : ", ") << seq.at(n).get_str();
    out << '\n';
}

void cmd_table(const Options& o, std::ostream& out) {
    constexpr std::size_t kTerms = 15;
    const std::vector<std::string> rows = {"HHH", "HTT", "HHT", "HTH"};
    if (csv(o)) {
        out << "word,A,B,C";
        for (std::size_t n = 1; n <= kTerms; ++n) out << ",a(" << n << ')';
        out << '\n';
        for (const auto& text : rows) {
            const Word w = Word::parse(text);
            const RecurrenceSpec spec = builtin_spec(w);
            const CountSequence seq = extend_counts(w, spec, kTerms);
            out << text;
            for (long c : spec.coefficients) out << ',' << c;
            for (const auto& v : seq.values) out << ',' << v.get_str();
            out << '\n';
        }
        return;
    }
    out << std::left << std::setw(5) << "W" << std::setw(12) << "A, B, C"
        << "Sequence a_W(n) for 1 <= n <= 15\n";
    for (const auto& text : rows) {
        const Word w = Word::parse(text);
        const RecurrenceSpec spec = builtin_spec(w);
        const CountSequence seq = extend_counts(w, spec, kTerms);
        std::ostringstream abc;
        abc << spec.coefficients[0] << ", " << spec.coefficients[1] << ", " << spec.coefficients[2];
        out << std::setw(5) << text << std::setw(12) << abc.str();
        for (std::size_t n = 1; n <= kTerms; ++n) {
            out << (n == 1 ? "" : ", ") << seq.at(n).get_str();
        }
        out << '\n';
    }
}

void cmd_gf(const Options& o, std::ostream& out) {
    const Word w = require_word(o);
    const std::size_t m = o.n ? o.n : 10;
    const bool has_closed = w.size() == 2 || w.size() == 3;
    const std::string finite = finite_gf(w, m).str();
    if (csv(o)) {
        out << "form,expression\n";
        out << "finite_m" << m << ",\"" << finite << "\"\n";
        if (has_closed) out << "closed,\"" << closed_gf(w).str() << "\"\n";
        return;
    }
    out << "f_" << w.str() << ',' << m << "(x) = " << finite << '\n';
    if (has_closed) out << "f_" << w.str() << "(x) = " << closed_gf(w).str() << '\n';
}

void cmd_stats(const Options& o, std::ostream& out) {
    const auto words = words_or_essential(o);
    if (csv(o)) write_stats_csv_header(out);
    for (const Word& w : words) {
        const WordStats s = moments(w);
        if (csv(o)) {
            write_stats_csv_row(out, s);
        } else {
            out << w.str() << " mean=" << s.mean.get_str() << " variance=" << s.variance.get_str()
                << " stddev=" << format_double(s.stddev) << '\n';
        }
    }
}

void cmd_tail(const Options& o, std::ostream& out) {
    const Word w = require_word(o);
    if (o.n < 1) throw CLI::ValidationError("N", "tail needs N >= 1");
    const DyadicRational t = tail(w, o.n);
    if (csv(o)) {
        write_tail_csv_header(out);
        write_tail_csv_row(out, w, o.n, t);
        return;
    }
    out << w.str() << " p(>=" << o.n << ") = " << exact_and_float(t) << '\n';
}

void cmd_threshold(const Options& o, std::ostream& out) {
    const Word w = require_word(o);
    if (o.q.empty()) throw CLI::ValidationError("--q", "threshold needs --q");
    Rational q;
    try {
        q = parse_rational(o.q);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--q", e.what());
    }
    if (q <= 0 || q > 1) throw CLI::ValidationError("--q", "q must satisfy 0 < q <= 1");
    const std::size_t N = threshold(w, q);
    const DyadicRational t = tail(w, N);
    if (csv(o)) {
        out << "word,q,N,tail_exact,tail_float\n"
            << w.str() << ',' << q.get_str() << ',' << N << ',' << t.str() << ','
            << format_double(t.to_double()) << '\n';
        return;
    }
    out << w.str() << " q=" << q.get_str() << " N=" << N << " p(>=" << N
        << ") = " << exact_and_float(t) << '\n';
}

void cmd_simulate(const Options& o, std::ostream& out) {
    TrialConfig cfg{require_word(o), o.trials, o.seed, o.cap};
    const EmpiricalSummary s = run_trials(cfg, o.threads);
    if (o.histogram) {
        write_empirical_csv(out, s, cfg.word);
        return;
    }
    if (csv(o)) {
        write_summary_line(out, s, cfg);
        return;
    }
    write_summary_line(out, s, cfg, false);
    if (cfg.word.size() == 2 || cfg.word.size() == 3) {
        const WordStats exact = moments(cfg.word);
        out << "exact mean=" << exact.mean.get_str() << " variance=" << exact.variance.get_str() << '\n';
    }
}

void cmd_roots(const Options& o, std::ostream& out) {
    const auto words = words_or_essential(o);
    if (csv(o)) out << "word,root_re,root_im\n";
    for (const Word& w : words) {
        const ClosedFormModel model = solve_denominator(w);
        if (csv(o)) {
            write_roots_csv(out, model, false);
            continue;
        }
        out << w.str() << " roots:";
        for (const auto& r : model.roots) {
            out << ' ' << format_double(r.real());
            if (r.imag() != 0.0) out << (r.imag() < 0 ? "-" : "+") << format_double(std::abs(r.imag())) << 'i';
        }
        out << "  horizon=" << model.reliability_horizon << '\n';
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    const VerifyReport report = run_verification(o.full ? VerifyOptions::full() : VerifyOptions::quick());
    report.print(out);
    return report.passed() ? kOk : kDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact first-occurrence statistics for words in fair coin tosses", "coinword"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_word = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("word,--word", o.word, "Word over {H,T}");
        if (required) opt->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "text"}));
    };

    auto* counts = app.add_subcommand("counts", "Number of ways a_W(n) the word first appears at toss n");
    add_word(counts, true);
    counts->add_option("n_max,--n-max", o.n, "Last n to print (default 15)")->check(CLI::PositiveNumber);
    counts->add_option("--engine", o.engine, "recurrence | automaton | brute")
        ->check(CLI::IsMember({"recurrence", "automaton", "brute"}));
    add_format(counts);

    auto* table = app.add_subcommand("table", "Recurrence coefficients and first 15 terms, three-letter words");
    add_format(table);

    auto* gf = app.add_subcommand("gf", "Finite and closed generating functions");
    add_word(gf, true);
    gf->add_option("m,--n-max", o.n, "Truncation order m (default 10)")->check(CLI::PositiveNumber);
    add_format(gf);

    auto* stats = app.add_subcommand("stats", "Exact mean and variance of the waiting time");
    add_word(stats, false);
    add_format(stats);

    auto* tl = app.add_subcommand("tail", "Probability that at least N tosses are needed");
    add_word(tl, true);
    tl->add_option("N,--n-max", o.n, "N")->required()->check(CLI::PositiveNumber);
    add_format(tl);

    auto* thr = app.add_subcommand("threshold", "Smallest N with p(>=N) <= q");
    add_word(thr, true);
    thr->add_option("q,--q", o.q, "Probability bound, e.g. 0.1 or 1/10")->required();
    add_format(thr);

    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo waiting times");
    add_word(sim, true);
    sim->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    sim->add_option("--seed", o.seed, "64-bit seed");
    sim->add_option("--cap", o.cap, "Toss cap per trial")->check(CLI::PositiveNumber);
    sim->add_option("--threads", o.threads, "OpenMP workers (0 = default)")->check(CLI::NonNegativeNumber);
    sim->add_flag("--histogram", o.histogram, "Print the empirical pmf next to the exact one");
    add_format(sim);

    auto* roots = app.add_subcommand("roots", "Denominator roots and certified horizon of the rounding formula");
    add_word(roots, false);
    add_format(roots);

    auto* verify = app.add_subcommand("verify", "Run every cross-check");
    auto* quick_flag = verify->add_flag("--quick", "Brute force up to n = 14 (default)");
    verify->add_flag("--full", o.full, "Brute force up to n = 20")->excludes(quick_flag);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (counts->parsed()) cmd_counts(o, out);
        else if (table->parsed()) cmd_table(o, out);
        else if (gf->parsed()) cmd_gf(o, out);
        else if (stats->parsed()) cmd_stats(o, out);
        else if (tl->parsed()) cmd_tail(o, out);
        else if (thr->parsed()) cmd_threshold(o, out);
        else if (sim->parsed()) cmd_simulate(o, out);
        else if (roots->parsed()) cmd_roots(o, out);
        else if (verify->parsed()) return cmd_verify(o, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}

}  // namespace coinword::cli

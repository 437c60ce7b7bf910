#include "coinword/verify.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "coinword/closed_form.hpp"
#include "coinword/stats.hpp"

namespace coinword {

namespace {

std::vector<Word> all_words(std::size_t len) {
    std::vector<Word> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
        std::string s(len, 'T');
        for (std::size_t i = 0; i < len; ++i) {
            if ((b >> (len - 1 - i)) & 1u) s[i] = 'H';
        }
        out.push_back(Word::parse(s));
    }
    return out;
}

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }
    // Records the first failure only.
    void fail(const std::string& why) {
        if (ok_) result_.detail = why;
        ok_ = false;
    }
    void note(const std::string& info) { notes_ << (notes_.tellp() > 0 ? "; " : "") << info; }
    CheckResult done() {
        result_.passed = ok_;
        if (ok_) result_.detail = notes_.str();
        return result_;
    }

private:
    CheckResult result_;
    bool ok_ = true;
    std::ostringstream notes_;
};

CheckResult oracle_triangle(const VerifyOptions& opts) {
    Check c("oracle_triangle");
    for (const Word& w : builtin_words()) {
        const CountSequence rec = extend_counts(w, opts.spec_source(w), opts.brute_max);
        const CountSequence aut = automaton_counts(w, opts.brute_max);
        for (unsigned n = 1; n <= opts.brute_max; ++n) {
            const BigInt brute = brute_force_count(w, n, std::max(opts.brute_max, 1u));
            if (rec.at(n) != aut.at(n) || aut.at(n) != brute) {
                c.fail(w.str() + " n=" + std::to_string(n) + ": recurrence=" + rec.at(n).get_str() +
                       " automaton=" + aut.at(n).get_str() + " brute=" + brute.get_str());
            }
        }
    }
    c.note("12 words, n <= " + std::to_string(opts.brute_max));
    return c.done();
}

CheckResult golden_table(const VerifyOptions& opts) {
    Check c("golden_table");
    const std::vector<std::pair<std::string, std::vector<long>>> rows = {
        {"HHH", {0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927}},
        {"HTT", {0, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609}},
        {"HHT", {0, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609}},
        {"HTH", {0, 0, 1, 2, 3, 5, 9, 16, 28, 49, 86, 151, 265, 465, 816}},
        {"HT", {0, 1, 2, 3, 4, 5}},
        {"HH", {0, 1, 1, 2, 3, 5}},
    };
    for (const auto& [text, expected] : rows) {
        const Word w = Word::parse(text);
        const CountSequence seq = extend_counts(w, opts.spec_source(w), expected.size());
        for (std::size_t n = 1; n <= expected.size(); ++n) {
            if (seq.at(n) != expected[n - 1]) {
                c.fail(text + " n=" + std::to_string(n) + ": got " + seq.at(n).get_str() +
                       ", table has " + std::to_string(expected[n - 1]));
            }
        }
    }
    return c.done();
}

CheckResult complement_invariance(const VerifyOptions& opts) {
    Check c("complement_invariance");
    for (std::size_t len = 1; len <= opts.complement_max_len; ++len) {
        for (const Word& w : all_words(len)) {
            if (automaton_counts(w, 20).values != automaton_counts(complement(w), 20).values) {
                c.fail(w.str() + " differs from its complement");
            }
        }
    }
    return c.done();
}

CheckResult dual_route_tails() {
    Check c("dual_route_tails");
    for (const Word& w : builtin_words()) {
        const CountSequence seq = extend_counts(w, 64);
        for (std::size_t N = 1; N <= 64; ++N) {
            if (tail(seq, N) != closed_tail(w, N)) {
                c.fail(w.str() + " N=" + std::to_string(N) + ": 1-cdf=" + tail(seq, N).str() +
                       " closed=" + closed_tail(w, N).str());
            }
        }
    }
    return c.done();
}

CheckResult cdf_matches_finite_gf() {
    Check c("cdf_equals_finite_gf_at_half");
    for (const Word& w : essential_words()) {
        const CountSequence seq = extend_counts(w, 64);
        for (std::size_t m = 1; m <= 64; ++m) {
            if (cdf(seq, m).to_rational() != finite_gf(w, m)(Rational(1, 2))) {
                c.fail(w.str() + " m=" + std::to_string(m));
            }
        }
    }
    return c.done();
}

CheckResult truncation_identity() {
    Check c("finite_gf_truncation_identity");
    for (const char* text : {"HHH", "HHT", "HTT", "HTH"}) {
        const Word w = Word::parse(text);
        const Polynomial den = closed_gf(w).denominator();
        for (std::size_t m = 4; m <= 12; ++m) {
            if (finite_gf(w, m) * den != truncated_gf_times_denominator(w, m)) {
                c.fail(std::string(text) + " m=" + std::to_string(m));
            }
        }
    }
    return c.done();
}

CheckResult series_consistency() {
    Check c("series_coefficients_match_recurrence");
    for (const Word& w : builtin_words()) {
        const auto series = series_coefficients(closed_gf(w), 60);
        const CountSequence seq = extend_counts(w, 60);
        for (std::size_t n = 1; n <= 60; ++n) {
            if (series[n] != Rational(seq.at(n))) c.fail(w.str() + " n=" + std::to_string(n));
        }
    }
    return c.done();
}

CheckResult exact_moments() {
    Check c("exact_moments");
    const std::vector<std::tuple<std::string, long, long>> expected = {
        {"HT", 4, 4}, {"HH", 6, 22}, {"HHH", 14, 142}, {"HHT", 8, 24}, {"HTT", 8, 24}, {"HTH", 10, 58}};
    for (const auto& [text, mean, var] : expected) {
        const WordStats s = moments(Word::parse(text));
        if (s.mean != mean || s.variance != var) {
            c.fail(text + ": mean=" + s.mean.get_str() + " variance=" + s.variance.get_str());
        }
    }
    return c.done();
}

CheckResult moment_oracle() {
    Check c("moment_oracle_400");
    for (const Word& w : essential_words()) {
        const WordStats s = moments(w);
        const CountSequence seq = extend_counts(w, 400);
        Rational m1 = 0, m2 = 0;
        for (std::size_t n = 1; n <= 400; ++n) {
            const Rational p = pmf(seq, n).to_rational();
            m1 += p * static_cast<unsigned long>(n);
            m2 += p * static_cast<unsigned long>(n * n);
        }
        const double e1 = std::abs(Rational(m1 - s.mean).get_d());
        const double e2 = std::abs(Rational(m2 - s.variance - s.mean * s.mean).get_d());
        if (e1 > 1e-6 || e2 > 1e-6) c.fail(w.str() + ": |dmean|=" + format_double(e1) + " |dm2|=" + format_double(e2));
    }
    return c.done();
}

CheckResult closed_form_horizons(const VerifyOptions& opts) {
    Check c("closed_form_horizon");
    for (const Word& w : builtin_words()) {
        const ClosedFormModel model = solve_denominator(w, opts.horizon_probe);
        for (double r : model.normalized_residuals()) {
            if (r > 1e-10) c.fail(w.str() + ": root residual " + format_double(r));
        }
        if (model.reliability_horizon < 50) {
            c.fail(w.str() + ": horizon " + std::to_string(model.reliability_horizon) + " < 50");
        }
        for (std::size_t n = model.first_rounded; n <= model.reliability_horizon; ++n) {
            if (std::abs(model.secondary_term(n)) >= 0.5) {
                c.fail(w.str() + ": secondary term >= 1/2 at n=" + std::to_string(n));
            }
        }
        c.note(w.str() + "=" + std::to_string(model.reliability_horizon));
    }
    return c.done();
}

CheckResult normalization() {
    Check c("normalization_200");
    const Rational floor = 1 - Rational(1, 1000000);
    for (const Word& w : builtin_words()) {
        const CountSequence seq = extend_counts(w, 200);
        DyadicRational acc, prev;
        for (std::size_t m = 1; m <= 200; ++m) {
            acc += pmf(seq, m);
            if (acc < prev || acc > DyadicRational::one()) c.fail(w.str() + " m=" + std::to_string(m));
            prev = acc;
        }
        if (acc.to_rational() < floor) c.fail(w.str() + ": cdf(200)=" + format_double(acc.to_double()));
    }
    return c.done();
}

}  // namespace

std::vector<Word> essential_words() {
    std::vector<Word> out;
    for (const char* t : {"HT", "HH", "HHH", "HHT", "HTT", "HTH"}) out.push_back(Word::parse(t));
    return out;
}

std::vector<Word> builtin_words() {
    std::vector<Word> out = essential_words();
    for (const Word& w : essential_words()) out.push_back(complement(w));
    return out;
}

Polynomial truncated_gf_times_denominator(const Word& w, std::size_t m) {
    const RecurrenceSpec spec = builtin_spec(w);
    if (spec.order != 3 || m < 2) {
        throw std::invalid_argument("truncation identity needs a three-letter word and m >= 2");
    }
    const long B = spec.coefficients[1], C = spec.coefficients[2];
    const CountSequence seq = extend_counts(w, spec, m + 1);
    // x^3 R_m(x) = a_{m+1} x^{m+1} + (B a_m + C a_{m-1}) x^{m+2} + C a_m x^{m+3}
    Polynomial rhs = Polynomial::monomial(Rational(-1), 3);
    rhs += Polynomial::monomial(Rational(seq.at(m + 1)), m + 1);
    rhs += Polynomial::monomial(Rational(B * seq.at(m) + C * seq.at(m - 1)), m + 2);
    rhs += Polynomial::monomial(Rational(C * seq.at(m)), m + 3);
    return rhs;
}

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

void VerifyReport::print(std::ostream& os) const {
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ')';
        os << '\n';
    }
    os << (passed() ? "all checks passed" : "verification FAILED") << '\n';
}

VerifyReport run_verification(const VerifyOptions& opts) {
    VerifyReport r;
    r.checks.push_back(golden_table(opts));
    r.checks.push_back(oracle_triangle(opts));
    r.checks.push_back(complement_invariance(opts));
    r.checks.push_back(series_consistency());
    r.checks.push_back(truncation_identity());
    r.checks.push_back(cdf_matches_finite_gf());
    r.checks.push_back(dual_route_tails());
    r.checks.push_back(exact_moments());
    r.checks.push_back(moment_oracle());
    r.checks.push_back(normalization());
    r.checks.push_back(closed_form_horizons(opts));
    return r;
}

}  // namespace coinword

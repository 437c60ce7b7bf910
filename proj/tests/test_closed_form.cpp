#include <doctest.h>

#include <cmath>
#include <sstream>

#include "coinword/closed_form.hpp"
#include "coinword/counting.hpp"
#include "oracles.hpp"

using namespace coinword;

namespace {

const char* const kThreeLetter[] = {"HHH", "HHT", "HTT", "HTH"};

// Coefficient of x^n in -x^k / (C prod(x - r_i)), by partial fractions.
Complex residue_oracle(const std::vector<Complex>& roots, double lead, std::size_t n) {
    const double k = static_cast<double>(roots.size());
    Complex sum = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Complex prod = lead;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i) prod *= roots[i] - roots[j];
        }
        sum += std::pow(roots[i], k - 1.0 - static_cast<double>(n)) / prod;
    }
    return sum;
}

Complex eval(const std::vector<double>& p, Complex z) {
    Complex acc = 0.0, zk = 1.0;
    for (double c : p) {
        acc += c * zk;
        zk *= z;
    }
    return acc;
}

}  // namespace

TEST_CASE("dominant roots") {
    CHECK(solve_denominator(Word::parse("HHH")).roots[0].real() == doctest::Approx(0.5437).epsilon(1e-4));
    CHECK(solve_denominator(Word::parse("HTH")).roots[0].real() == doctest::Approx(0.5698).epsilon(1e-4));
    CHECK(solve_denominator(Word::parse("HH")).roots[0].real() == doctest::Approx((std::sqrt(5.0) - 1) / 2));

    const auto hht = solve_denominator(Word::parse("HHT"));
    REQUIRE(hht.roots.size() == 3);
    CHECK(hht.roots[0].real() == doctest::Approx((std::sqrt(5.0) - 1) / 2));
    bool saw_one = false, saw_neg = false;
    for (const Complex& r : hht.roots) {
        CHECK(r.imag() == 0.0);
        saw_one = saw_one || std::abs(r - 1.0) < 1e-12;
        saw_neg = saw_neg || std::abs(r.real() + (1 + std::sqrt(5.0)) / 2) < 1e-12;
    }
    CHECK(saw_one);
    CHECK(saw_neg);
    CHECK(hht.kind == ClosedFormKind::RoundDominantPlusUnit);
    CHECK(hht.unit_offset == -1);
    CHECK(solve_denominator(Word::parse("HT")).kind == ClosedFormKind::Linear);
}

TEST_CASE("roots satisfy the denominator and come in conjugate pairs") {
    for (const char* text : {"HT", "HH", "HHH", "HHT", "HTT", "HTH", "TTT", "THT"}) {
        const auto model = solve_denominator(Word::parse(text));
        INFO(text);
        for (double r : model.normalized_residuals()) CHECK(r <= 1e-12);
        for (const Complex& r : model.roots) {
            CHECK(std::abs(eval(model.denominator, r)) <= 1e-11);
            if (r.imag() != 0.0) {
                bool paired = false;
                for (const Complex& s : model.roots) paired = paired || std::abs(s - std::conj(r)) < 1e-12;
                CHECK(paired);
            }
        }
        CHECK(model.roots[0].imag() == 0.0);
        for (std::size_t i = 1; i < model.roots.size(); ++i) {
            CHECK(std::abs(model.roots[0]) <= std::abs(model.roots[i]) + 1e-12);
        }
    }
}

TEST_CASE("closed_form_count examples") {
    CHECK(closed_form_count(solve_denominator(Word::parse("HH")), 6) == 5);
    CHECK(closed_form_count(solve_denominator(Word::parse("HHT")), 10) == 54);
    CHECK(closed_form_count(solve_denominator(Word::parse("HHH")), 15) == 927);
    CHECK(closed_form_count(solve_denominator(Word::parse("HT")), 40) == 39);
    const auto hth = solve_denominator(Word::parse("HTH"));
    CHECK(hth.first_rounded == 3);
    CHECK(closed_form_count(hth, 1) == 0);
    CHECK(closed_form_count(hth, 2) == 0);
    CHECK(closed_form_count(hth, 3) == 1);
    CHECK(closed_form_count(hth, 15) == 816);
}

TEST_CASE("reliability horizon") {
    CHECK(solve_denominator(Word::parse("HH")).reliability_horizon >= 60);
    CHECK(solve_denominator(Word::parse("HHH")).reliability_horizon >= 50);
    for (const char* text : kThreeLetter) {
        CHECK(solve_denominator(Word::parse(text)).reliability_horizon >= 50);
    }
    CHECK(solve_denominator(Word::parse("HT"), 1000).reliability_horizon == 1000);

    auto model = solve_denominator(Word::parse("HHH"), 200);
    const std::size_t h = model.reliability_horizon;
    CHECK(h < 200);
    CHECK_THROWS_AS(closed_form_count(model, h + 1), std::out_of_range);
    CHECK_NOTHROW(closed_form_count(model, h));
    // Past the horizon the double-precision value no longer matches.
    CHECK(closed_form_count_unchecked(model, h + 1) != extend_counts(model.word, h + 1).at(h + 1));
    CHECK(certify_horizon(model, 10) == 10);
}

TEST_CASE("secondary terms stay below one half") {
    for (const char* text : {"HH", "HHH", "HHT", "HTT", "HTH"}) {
        const auto model = solve_denominator(Word::parse(text));
        for (std::size_t n = model.first_rounded; n <= model.reliability_horizon; ++n) {
            INFO(text << " n=" << n);
            REQUIRE(std::abs(model.secondary_term(n)) < 0.5);
        }
    }
    const auto hh = solve_denominator(Word::parse("HH"));
    const double psi = (1 - std::sqrt(5.0)) / 2;
    for (std::size_t n = 1; n <= 40; ++n) {
        CHECK(std::abs(hh.secondary_term(n)) ==
              doctest::Approx(std::pow(std::abs(psi), static_cast<double>(n) - 1) / std::sqrt(5.0)));
    }
}

TEST_CASE("three-root formula is real and exact for n <= 30") {
    for (const char* text : kThreeLetter) {
        const auto model = solve_denominator(Word::parse(text));
        const auto exact = extend_counts(model.word, 30);
        for (std::size_t n = 1; n <= 30; ++n) {
            INFO(text << " n=" << n);
            const Complex v = model.root_formula(n);
            CHECK(std::abs(v.imag()) < 1e-6);
            CHECK(BigInt(std::round(v.real())) == exact.at(n));
            const Complex o = residue_oracle(model.roots, model.denominator.back(), n);
            CHECK(std::abs(v - o) < 1e-6 * std::max(1.0, std::abs(o)));
        }
    }
    const auto hh = solve_denominator(Word::parse("HH"));
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(BigInt(std::round(hh.root_formula(n).real())) ==
              static_cast<unsigned long>(testing::fibonacci(static_cast<unsigned>(n) - 1)));
    }
}

TEST_CASE("complements share the model") {
    const auto a = solve_denominator(Word::parse("HTH"));
    const auto b = solve_denominator(Word::parse("THT"));
    CHECK(a.denominator == b.denominator);
    CHECK(a.reliability_horizon == b.reliability_horizon);
    CHECK_THROWS_AS(solve_denominator(Word::parse("HTHT")), std::invalid_argument);
}

TEST_CASE("roots CSV") {
    std::ostringstream os;
    write_roots_csv(os, solve_denominator(Word::parse("HHT")));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "word,root_re,root_im");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.rfind("HHT,", 0) == 0);
        ++rows;
    }
    CHECK(rows == 3);
}

#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "coinword/bigint.hpp"
#include "coinword/counting.hpp"
#include "coinword/word.hpp"

namespace coinword {

/// numerator / 2^exponent, kept with an odd numerator (or 0/2^0).
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(BigInt numerator, unsigned long exponent);

    static DyadicRational one() { return {1, 0}; }

    const BigInt& numerator() const noexcept { return num_; }
    unsigned long exponent() const noexcept { return exp_; }
    BigInt denominator() const;

    Rational to_rational() const;
    double to_double() const;

    DyadicRational& operator+=(const DyadicRational& o);
    DyadicRational& operator-=(const DyadicRational& o);
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
    friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }

    bool operator==(const DyadicRational& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    std::strong_ordering operator<=>(const DyadicRational& o) const;

    /// "p/q", or "p" when the exponent is 0.
    std::string str() const;

private:
    void normalize();
    BigInt num_ = 0;
    unsigned long exp_ = 0;
};

/// Mean and variance of the waiting time until a word first appears.
struct WordStats {
    Word word;
    Rational mean;
    Rational variance;
    double stddev = 0.0;
};

/// a_W(n) / 2^n
DyadicRational pmf(const Word& w, std::size_t n);
/// Probability that w has appeared within the first m tosses (m = 0 allowed).
DyadicRational cdf(const Word& w, std::size_t m);
/// Probability that at least N tosses are needed, 1 - cdf(w, N-1).
DyadicRational tail(const Word& w, std::size_t N);

/// Variants reusing a precomputed sequence (must reach the needed index).
DyadicRational pmf(const CountSequence& seq, std::size_t n);
DyadicRational cdf(const CountSequence& seq, std::size_t m);
DyadicRational tail(const CountSequence& seq, std::size_t N);

/// Closed tail formula for a two- or three-letter word, written with count
/// terms only:
///   HT      N / 2^(N-1)
///   HH      a(N+2) / 2^(N-1)
///   HHH     (2a(N+2) - a(N-1)) / 2^(N-1)
///   HHT,HTT (2a(N+1) - a(N-1)) / 2^(N-1)
///   HTH     (2a(N+1) + a(N-1)) / 2^(N-1)
/// a(0) is the recurrence run one step backwards. Complements share formulas.
DyadicRational closed_tail(const Word& w, std::size_t N);

/// Exact mean and variance from derivatives of the closed generating function
/// at 1/2. Two- and three-letter words only.
WordStats moments(const Word& w);

/// Smallest N with tail(w, N) <= q; requires 0 < q <= 1.
std::size_t threshold(const Word& w, const Rational& q);

/// "word,N,tail_exact_num,tail_exact_den,tail_float"
void write_tail_csv_header(std::ostream& os);
void write_tail_csv_row(std::ostream& os, const Word& w, std::size_t N, const DyadicRational& t);

/// "word,mean,variance,stddev"
void write_stats_csv_header(std::ostream& os);
void write_stats_csv_row(std::ostream& os, const WordStats& s);

/// Decimal text with `digits` significant digits, independent of stream state.
std::string format_double(double v, int digits = 12);

}  // namespace coinword

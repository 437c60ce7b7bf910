#include "coinword/stats.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coinword/genfun.hpp"

namespace coinword {

DyadicRational::DyadicRational(BigInt numerator, unsigned long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    normalize();
}

void DyadicRational::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    const unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
    const unsigned long shift = std::min(twos, exp_);
    num_ >>= shift;
    exp_ -= shift;
}

BigInt DyadicRational::denominator() const {
    BigInt d = 1;
    d <<= exp_;
    return d;
}

Rational DyadicRational::to_rational() const { return Rational(num_, denominator()); }

double DyadicRational::to_double() const { return to_rational().get_d(); }

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
    const unsigned long e = std::max(exp_, o.exp_);
    BigInt lhs = num_;
    lhs <<= (e - exp_);
    BigInt rhs = o.num_;
    rhs <<= (e - o.exp_);
    num_ = lhs + rhs;
    exp_ = e;
    normalize();
    return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) {
    return *this += DyadicRational(-o.num_, o.exp_);
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
    const unsigned long e = std::max(exp_, o.exp_);
    BigInt lhs = num_;
    lhs <<= (e - exp_);
    BigInt rhs = o.num_;
    rhs <<= (e - o.exp_);
    const int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string DyadicRational::str() const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/" + denominator().get_str();
}

DyadicRational pmf(const CountSequence& seq, std::size_t n) { return {seq.at(n), n}; }

DyadicRational cdf(const CountSequence& seq, std::size_t m) {
    if (m > seq.n_max()) throw std::out_of_range("cdf: sequence too short");
    // sum a(n) 2^(m-n) / 2^m
    BigInt acc = 0;
    for (std::size_t n = 1; n <= m; ++n) {
        acc <<= 1;
        acc += seq.at(n);
    }
    return {acc, m};
}

DyadicRational tail(const CountSequence& seq, std::size_t N) {
    if (N < 1) throw std::invalid_argument("tail: N must be at least 1");
    return DyadicRational::one() - cdf(seq, N - 1);
}

DyadicRational pmf(const Word& w, std::size_t n) {
    if (n < 1) throw std::invalid_argument("pmf: n must be at least 1");
    return pmf(count_sequence(w, n), n);
}

DyadicRational cdf(const Word& w, std::size_t m) {
    if (m == 0) return {};
    return cdf(count_sequence(w, m), m);
}

DyadicRational tail(const Word& w, std::size_t N) {
    if (N < 1) throw std::invalid_argument("tail: N must be at least 1");
    return DyadicRational::one() - cdf(w, N - 1);
}

DyadicRational closed_tail(const Word& w, std::size_t N) {
    if (N < 1) throw std::invalid_argument("closed_tail: N must be at least 1");
    const RecurrenceSpec spec = builtin_spec(w);
    const CountSequence seq = extend_counts(w, spec, N + 2);
    const BigInt a0 = spec.order == 3 ? backward_term(spec) : BigInt(0);
    auto a = [&](std::size_t k) -> BigInt { return k == 0 ? a0 : seq.at(k); };

    const std::string key = w[0] == Letter::H ? w.str() : complement(w).str();
    BigInt num;
    if (key == "HT") {
        num = static_cast<unsigned long>(N);
    } else if (key == "HH") {
        num = a(N + 2);
    } else if (key == "HHH") {
        num = 2 * a(N + 2) - a(N - 1);
    } else if (key == "HHT" || key == "HTT") {
        num = 2 * a(N + 1) - a(N - 1);
    } else {
        num = 2 * a(N + 1) + a(N - 1);  // HTH
    }
    return {num, N - 1};
}

WordStats moments(const Word& w) {
    const RationalFunction f = closed_gf(w);
    const RationalFunction f1 = f.derivative();
    const RationalFunction f2 = f1.derivative();
    const Rational half(1, 2);
    const Rational mean = f1(half) / 2;
    const Rational variance = f2(half) / 4 + mean - mean * mean;
    return {w, mean, variance, std::sqrt(variance.get_d())};
}

std::size_t threshold(const Word& w, const Rational& q) {
    if (q <= 0 || q > 1) throw std::invalid_argument("threshold: q must satisfy 0 < q <= 1");
    constexpr std::size_t kLimit = std::size_t{1} << 20;
    std::size_t chunk = 64;
    CountSequence seq = count_sequence(w, chunk);
    DyadicRational below;  // cdf(w, N-1)
    for (std::size_t N = 1; N <= kLimit; ++N) {
        if ((DyadicRational::one() - below).to_rational() <= q) return N;
        if (N > seq.n_max()) {
            chunk *= 2;
            seq = count_sequence(w, chunk);
        }
        below += pmf(seq, N);
    }
    throw std::runtime_error("threshold: no N found below search limit");
}

std::string format_double(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

void write_tail_csv_header(std::ostream& os) {
    os << "word,N,tail_exact_num,tail_exact_den,tail_float\n";
}

void write_tail_csv_row(std::ostream& os, const Word& w, std::size_t N, const DyadicRational& t) {
    os << w.str() << ',' << N << ',' << t.numerator().get_str() << ',' << t.denominator().get_str()
       << ',' << format_double(t.to_double()) << '\n';
}

void write_stats_csv_header(std::ostream& os) { os << "word,mean,variance,stddev\n"; }

void write_stats_csv_row(std::ostream& os, const WordStats& s) {
    os << s.word.str() << ',' << s.mean.get_str() << ',' << s.variance.get_str() << ','
       << format_double(s.stddev) << '\n';
}

}  // namespace coinword

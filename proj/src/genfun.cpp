#include "coinword/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "coinword/counting.hpp"

namespace coinword {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::size_t Polynomial::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    throw std::domain_error("valuation of the zero polynomial");
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = a;
    std::vector<Rational> quot;
    const long db = b.degree();
    if (rem.degree() >= db) quot.assign(static_cast<std::size_t>(rem.degree() - db + 1), Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        const auto shift = static_cast<std::size_t>(rem.degree() - db);
        const Rational factor = rem.leading() / b.leading();
        quot[shift] = factor;
        rem -= Polynomial::monomial(factor, shift) * b;
    }
    return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * Rational(1 / a.leading());
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFunction RationalFunction::canonical() const {
    Polynomial num = num_;
    Polynomial den = den_;
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).quotient;
        den = divmod(den, g).quotient;
    }
    const Rational scale = 1 / abs(den.coeff(den.valuation()));
    return RationalFunction(num * scale, den * scale);
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw PoleError("pole at x = " + x.get_str());
    return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
    const RationalFunction c = canonical();
    return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
}

Polynomial finite_gf(const Word& w, std::size_t m) {
    const CountSequence seq = count_sequence(w, m);
    std::vector<Rational> coeffs(m + 1, Rational(0));
    for (std::size_t n = 1; n <= m; ++n) coeffs[n] = Rational(seq.at(n));
    return Polynomial(std::move(coeffs));
}

RationalFunction closed_gf(const Word& w) {
    const RecurrenceSpec spec = builtin_spec(w);
    // f(x) (1 - sum A_i x^i) = x^k because a(1..k-1) = 0 and a(k) = 1.
    std::vector<Rational> den(spec.order + 1, Rational(0));
    den[0] = -1;
    for (std::size_t i = 0; i < spec.order; ++i) den[i + 1] = spec.coefficients[i];
    return RationalFunction(Polynomial::monomial(Rational(-1), spec.order),
                            Polynomial(std::move(den)));
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n_max) {
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    const Rational d0 = den.coeff(0);
    if (d0 == 0) throw std::domain_error("series_coefficients: denominator vanishes at 0");
    const auto deg = static_cast<std::size_t>(den.degree());
    std::vector<Rational> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Rational acc = num.coeff(n);
        for (std::size_t i = 1; i <= std::min(n, deg); ++i) {
            acc -= den.coefficients()[i] * c[n - i];
        }
        c[n] = acc / d0;
    }
    return c;
}

}  // namespace coinword

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinword/bigint.hpp"
#include "coinword/word.hpp"

namespace coinword {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    /// c * x^power
    static Polynomial monomial(const Rational& c, std::size_t power);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    /// Index of the lowest nonzero coefficient; the polynomial must be nonzero.
    std::size_t valuation() const;

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const { return *this * Rational(-1); }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Ascending text form, e.g. "-1 + x + 1/2*x^2"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// numerator / denominator with a nonzero denominator.
class RationalFunction {
public:
    /// Stores the quotient as given, without reduction.
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial{1}) {}

    /// Common factors removed, then scaled so the lowest nonzero coefficient
    /// of the denominator is +1 or -1 (its sign is kept).
    RationalFunction canonical() const;

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    /// Throws PoleError if the denominator vanishes at x.
    Rational operator()(const Rational& x) const;

    /// Quotient rule; the result is not reduced.
    RationalFunction derivative() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    /// Equality as functions (cross multiplication).
    bool operator==(const RationalFunction& o) const;

    /// "(num)/(den)" of the canonical form.
    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// sum_{n=1}^{m} a_W(n) x^n
Polynomial finite_gf(const Word& w, std::size_t m);

/// Closed generating function of a two- or three-letter word:
/// -x^k / (A_k x^k + ... + A_1 x - 1) for the word's recurrence A_1..A_k.
RationalFunction closed_gf(const Word& w);

/// Taylor coefficients c_0..c_{n_max} at 0, driven by the recurrence the
/// denominator imposes on the coefficient stream. Throws std::domain_error
/// when the denominator vanishes at 0.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n_max);

}  // namespace coinword

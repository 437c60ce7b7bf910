#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "coinword/bigint.hpp"
#include "coinword/word.hpp"

namespace coinword {

using Complex = std::complex<double>;

/// Which rounding formula reproduces the counts.
enum class ClosedFormKind {
    Linear,                 // a(n) = n - 1 (double root at 1)
    RoundDominant,          // a(n) = Round[dominant term]
    RoundDominantPlusUnit,  // a(n) = Round[dominant term] + (constant from the root at 1)
};

/// Floating-point view of a closed generating function -x^k / D(x).
///
/// `roots[0]` is the real root of D with smallest magnitude; it produces the
/// dominant term roots[0]^(k-1-n) * leading_term_scale of the coefficient
/// a(n). Remaining roots follow by increasing magnitude, with the member of a
/// conjugate pair having positive imaginary part first.
struct ClosedFormModel {
    Word word;
    ClosedFormKind kind = ClosedFormKind::RoundDominant;
    std::vector<double> denominator;  // ascending coefficients of D
    std::vector<Complex> roots;
    Complex leading_term_scale{1.0, 0.0};
    long unit_offset = 0;            // contribution of a root at 1, RoundDominantPlusUnit only
    std::size_t first_rounded = 1;   // smallest n the rounding formula is stated for
    std::size_t reliability_horizon = 0;

    std::size_t order() const noexcept { return denominator.size() - 1; }

    /// roots[0]^(k-1-n) * leading_term_scale
    Complex dominant_term(std::size_t n) const;
    /// Partial-fraction contribution of every root except the dominant one
    /// and a root at 1.
    Complex secondary_term(std::size_t n) const;
    /// Sum of all partial-fraction contributions; equals a(n) in exact
    /// arithmetic for n >= 1.
    Complex root_formula(std::size_t n) const;
    /// |D(r)| / max|D_i| for each root.
    std::vector<double> normalized_residuals() const;
};

/// Default probe length used when a model is built.
inline constexpr std::size_t kDefaultHorizonProbe = 70;

/// Roots of the closed_gf denominator of a two- or three-letter word,
/// polished until the normalized residual is at most 1e-12, then certified
/// against the exact recurrence up to `probe`.
ClosedFormModel solve_denominator(const Word& w, std::size_t probe = kDefaultHorizonProbe);

/// The rounding formula evaluated in double precision; n must not exceed the
/// reliability horizon (std::out_of_range otherwise).
BigInt closed_form_count(const ClosedFormModel& model, std::size_t n);

/// Same formula with no horizon check.
BigInt closed_form_count_unchecked(const ClosedFormModel& model, std::size_t n);

/// Largest n <= n_probe with closed_form_count = exact count for every k <= n.
/// Stores the result in model.reliability_horizon.
std::size_t certify_horizon(ClosedFormModel& model, std::size_t n_probe);

/// "word,root_re,root_im" rows with 12 significant digits.
void write_roots_csv(std::ostream& os, const ClosedFormModel& model, bool header = true);

}  // namespace coinword

#include "coinword/closed_form.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "coinword/counting.hpp"

namespace coinword {

namespace {

Complex horner(const std::vector<double>& p, Complex z) {
    Complex acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex horner_derivative(const std::vector<double>& p, Complex z) {
    Complex acc = 0.0;
    for (std::size_t i = p.size() - 1; i >= 1; --i) acc = acc * z + static_cast<double>(i) * p[i];
    return acc;
}

double coefficient_scale(const std::vector<double>& p) {
    double m = 0.0;
    for (double c : p) m = std::max(m, std::abs(c));
    return m;
}

constexpr double kPolishTarget = 1e-12;

Complex polish(const std::vector<double>& p, Complex z, bool real) {
    const double scale = coefficient_scale(p);
    for (int iter = 0; iter < 50; ++iter) {
        const Complex v = horner(p, z);
        if (std::abs(v) / scale <= kPolishTarget * 1e-3) break;
        const Complex d = horner_derivative(p, z);
        if (d == Complex(0.0)) break;
        Complex step = v / d;
        if (real) step.imag(0.0);
        z -= step;
    }
    if (std::abs(horner(p, z)) / scale > kPolishTarget) {
        throw std::runtime_error("root polishing did not converge");
    }
    return z;
}

std::vector<Complex> quadratic_roots(const std::vector<double>& p) {
    const double c = p[0], b = p[1], a = p[2];
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
        // Avoids cancellation between -b and the square root.
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        return {Complex(q / a, 0.0), Complex(c / q, 0.0)};
    }
    const double re = -b / (2.0 * a);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(a));
    return {Complex(re, im), Complex(re, -im)};
}

std::vector<Complex> numeric_roots(const std::vector<double>& p) {
    if (p.size() == 3) return quadratic_roots(p);
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = p[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    const auto& r = solver.roots();
    std::vector<Complex> out;
    for (Eigen::Index i = 0; i < r.size(); ++i) out.push_back(r[i]);
    return out;
}

// Real roots get a zero imaginary part; complex pairs are polished once and
// reconstructed as exact conjugates.
std::vector<Complex> polished_roots(const std::vector<double>& p) {
    std::vector<Complex> raw = numeric_roots(p);
    std::vector<Complex> out;
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const Complex z = raw[i];
        if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z))) {
            out.push_back(polish(p, Complex(z.real(), 0.0), true));
            continue;
        }
        std::size_t partner = raw.size();
        double best = INFINITY;
        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(raw[j] - std::conj(z));
            if (d < best) {
                best = d;
                partner = j;
            }
        }
        if (partner == raw.size()) throw std::runtime_error("unpaired complex root");
        used[partner] = true;
        Complex upper = polish(p, z.imag() > 0 ? z : std::conj(z), false);
        out.push_back(upper);
        out.push_back(std::conj(upper));
    }
    return out;
}

Complex residue_term(const std::vector<Complex>& roots, double lead, std::size_t i, std::size_t k,
                     std::size_t n) {
    Complex den = lead;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) den *= roots[i] - roots[j];
    }
    return std::pow(roots[i], static_cast<double>(k) - 1.0 - static_cast<double>(n)) / den;
}

bool is_unit_root(Complex r) { return std::abs(r - Complex(1.0, 0.0)) < 1e-12; }

}  // namespace

Complex ClosedFormModel::dominant_term(std::size_t n) const {
    if (kind == ClosedFormKind::Linear) return {static_cast<double>(n) - 1.0, 0.0};
    return std::pow(roots[0], static_cast<double>(order()) - 1.0 - static_cast<double>(n)) *
           leading_term_scale;
}

Complex ClosedFormModel::secondary_term(std::size_t n) const {
    if (kind == ClosedFormKind::Linear) return {0.0, 0.0};
    Complex sum = 0.0;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (is_unit_root(roots[i])) continue;
        sum += residue_term(roots, denominator.back(), i, order(), n);
    }
    return sum;
}

Complex ClosedFormModel::root_formula(std::size_t n) const {
    if (kind == ClosedFormKind::Linear) return {static_cast<double>(n) - 1.0, 0.0};
    if (order() == 3) {
        // (a^{2-n}(b-c) - b^{2-n}(a-c) + c^{2-n}(a-b)) / (C(a-b)(a-c)(b-c))
        const Complex a = roots[0], b = roots[1], c = roots[2];
        const double e = 2.0 - static_cast<double>(n);
        const Complex num = std::pow(a, e) * (b - c) - std::pow(b, e) * (a - c) + std::pow(c, e) * (a - b);
        return num / (denominator.back() * (a - b) * (a - c) * (b - c));
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        sum += residue_term(roots, denominator.back(), i, order(), n);
    }
    return sum;
}

std::vector<double> ClosedFormModel::normalized_residuals() const {
    std::vector<double> out;
    const double scale = coefficient_scale(denominator);
    for (const Complex& r : roots) out.push_back(std::abs(horner(denominator, r)) / scale);
    return out;
}

ClosedFormModel solve_denominator(const Word& w, std::size_t probe) {
    const RecurrenceSpec spec = builtin_spec(w);
    ClosedFormModel model{w, ClosedFormKind::RoundDominant, {}, {}};
    model.denominator.assign(spec.order + 1, 0.0);
    model.denominator[0] = -1.0;
    for (std::size_t i = 0; i < spec.order; ++i) {
        model.denominator[i + 1] = static_cast<double>(spec.coefficients[i]);
    }

    model.roots = polished_roots(model.denominator);
    std::stable_sort(model.roots.begin(), model.roots.end(), [](Complex x, Complex y) {
        if (std::abs(std::abs(x) - std::abs(y)) > 1e-12) return std::abs(x) < std::abs(y);
        return x.imag() > y.imag();
    });
    const auto smallest_real =
        std::find_if(model.roots.begin(), model.roots.end(), [](Complex r) { return r.imag() == 0.0; });
    if (smallest_real == model.roots.end()) throw std::runtime_error("denominator has no real root");
    std::rotate(model.roots.begin(), smallest_real, smallest_real + 1);

    const bool double_unit = std::count_if(model.roots.begin(), model.roots.end(), is_unit_root) >= 2;
    if (double_unit) {
        model.kind = ClosedFormKind::Linear;
        model.leading_term_scale = 1.0;
    } else {
        model.leading_term_scale =
            residue_term(model.roots, model.denominator.back(), 0, model.order(), model.order() - 1);
        const auto unit = std::find_if(model.roots.begin() + 1, model.roots.end(), is_unit_root);
        if (unit != model.roots.end()) {
            model.kind = ClosedFormKind::RoundDominantPlusUnit;
            const auto idx = static_cast<std::size_t>(unit - model.roots.begin());
            model.unit_offset = std::lround(
                residue_term(model.roots, model.denominator.back(), idx, model.order(), 1).real());
        }
    }
    // HTH: the rounding formula is stated from n = 3 onward.
    const std::string key = w[0] == Letter::H ? w.str() : complement(w).str();
    if (key == "HTH") model.first_rounded = 3;

    certify_horizon(model, probe);
    return model;
}

BigInt closed_form_count_unchecked(const ClosedFormModel& model, std::size_t n) {
    if (n < 1) throw std::invalid_argument("closed_form_count: n must be at least 1");
    if (n < model.first_rounded) {
        return builtin_spec(model.word).initial_values.at(n - 1);
    }
    double v = std::round(model.dominant_term(n).real());
    v += static_cast<double>(model.unit_offset);
    return BigInt(v);
}

BigInt closed_form_count(const ClosedFormModel& model, std::size_t n) {
    if (n > model.reliability_horizon) {
        throw std::out_of_range("closed_form_count: n=" + std::to_string(n) +
                                " beyond reliability horizon " +
                                std::to_string(model.reliability_horizon));
    }
    return closed_form_count_unchecked(model, n);
}

std::size_t certify_horizon(ClosedFormModel& model, std::size_t n_probe) {
    std::size_t horizon = 0;
    if (n_probe > 0) {
        const CountSequence exact = extend_counts(model.word, n_probe);
        while (horizon < n_probe && closed_form_count_unchecked(model, horizon + 1) == exact.at(horizon + 1)) {
            ++horizon;
        }
    }
    model.reliability_horizon = horizon;
    return horizon;
}

void write_roots_csv(std::ostream& os, const ClosedFormModel& model, bool header) {
    if (header) os << "word,root_re,root_im\n";
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(12);
    for (const Complex& r : model.roots) {
        os << model.word.str() << ',' << r.real() << ',' << r.imag() << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

}  // namespace coinword

#include "coinword/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace coinword {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    Rational out;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash);
        const std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
        BigInt d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        out = Rational(BigInt(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        // Exact decimal: "0.125" -> 1/8.
        const std::string whole = body.substr(0, dot);
        const std::string frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw std::invalid_argument("malformed decimal '" + text + "'");
        }
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        out = Rational(BigInt((whole.empty() ? "0" : whole) + frac), scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed rational '" + text + "'");
        out = Rational(BigInt(body));
    }
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

}  // namespace coinword

#include "coinword/counting.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace coinword {

void RecurrenceSpec::validate() const {
    if (order == 0) throw std::invalid_argument("recurrence order must be positive");
    if (coefficients.size() != order || initial_values.size() != order) {
        throw std::invalid_argument("recurrence: coefficients and initial values must have length " +
                                    std::to_string(order));
    }
}

const BigInt& CountSequence::at(std::size_t n) const {
    if (n < 1 || n > values.size()) {
        throw std::out_of_range("CountSequence: n=" + std::to_string(n) + " outside 1.." +
                                std::to_string(values.size()));
    }
    return values[n - 1];
}

void CountSequence::write_csv(std::ostream& os) const {
    os << "n,a_" << word.str() << "(n)\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i + 1) << ',' << values[i].get_str() << '\n';
    }
}

CountSequence CountSequence::read_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("n,a_", 0) != 0 || header.size() < 8 ||
        header.substr(header.size() - 3) != "(n)") {
        throw std::invalid_argument("count CSV: bad header '" + header + "'");
    }
    CountSequence seq{Word::parse(header.substr(4, header.size() - 7)), {}};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("count CSV: bad row '" + line + "'");
        if (std::stoul(line.substr(0, comma)) != seq.values.size() + 1) {
            throw std::invalid_argument("count CSV: rows out of order");
        }
        seq.values.emplace_back(line.substr(comma + 1));
    }
    return seq;
}

RecurrenceSpec builtin_spec(const Word& w) {
    if (w.size() < 2 || w.size() > 3) {
        throw std::invalid_argument(
            "no built-in recurrence for '" + w.str() +
            "': only two- and three-letter words are covered; use automaton_counts");
    }
    // Complements share the recurrence; look up the form starting with H.
    const std::string key = (w[0] == Letter::H) ? w.str() : complement(w).str();
    if (key == "HT") return {2, {2, -1}, {0, 1}};
    if (key == "HH") return {2, {1, 1}, {0, 1}};
    if (key == "HHH") return {3, {1, 1, 1}, {0, 0, 1}};
    if (key == "HHT" || key == "HTT") return {3, {2, 0, -1}, {0, 0, 1}};
    return {3, {2, -1, 1}, {0, 0, 1}};  // HTH
}

CountSequence extend_counts(const Word& w, const RecurrenceSpec& spec, std::size_t n_max) {
    spec.validate();
    if (n_max < 1) throw std::invalid_argument("extend_counts: n_max must be at least 1");
    CountSequence seq{w, {}};
    seq.values.reserve(n_max);
    for (std::size_t n = 0; n < n_max; ++n) {
        if (n < spec.order) {
            seq.values.push_back(spec.initial_values[n]);
            continue;
        }
        BigInt next = 0;
        for (std::size_t i = 0; i < spec.order; ++i) {
            next += spec.coefficients[i] * seq.values[n - 1 - i];
        }
        seq.values.push_back(std::move(next));
    }
    return seq;
}

CountSequence extend_counts(const Word& w, std::size_t n_max) {
    return extend_counts(w, builtin_spec(w), n_max);
}

PrefixAutomaton::PrefixAutomaton(const Word& w) : len_(w.size()), table_(2 * w.size()) {
    // Classical prefix function; pi[k] is the length of the longest proper
    // border of w[0..k].
    std::vector<std::size_t> pi(len_, 0);
    for (std::size_t i = 1, k = 0; i < len_; ++i) {
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    for (std::size_t state = 0; state < len_; ++state) {
        for (Letter l : {Letter::T, Letter::H}) {
            std::uint32_t target;
            if (w[state] == l) {
                target = static_cast<std::uint32_t>(state + 1);
            } else if (state == 0) {
                target = 0;
            } else {
                target = next(static_cast<std::uint32_t>(pi[state - 1]), l);
            }
            table_[2 * state + static_cast<std::size_t>(l)] = target;
        }
    }
}

CountSequence automaton_counts(const Word& w, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("automaton_counts: n_max must be at least 1");
    const PrefixAutomaton automaton(w);
    const std::uint32_t full = automaton.match_state();

    // paths[k]: number of toss strings so far that avoid w and sit in state k.
    std::vector<BigInt> paths(full, 0);
    std::vector<BigInt> next_paths(full);
    paths[0] = 1;

    CountSequence seq{w, {}};
    seq.values.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto& p : next_paths) p = 0;
        BigInt completed = 0;
        for (std::uint32_t state = 0; state < full; ++state) {
            if (paths[state] == 0) continue;
            for (Letter l : {Letter::T, Letter::H}) {
                const std::uint32_t target = automaton.next(state, l);
                if (target == full) {
                    completed += paths[state];
                } else {
                    next_paths[target] += paths[state];
                }
            }
        }
        paths.swap(next_paths);
        seq.values.push_back(std::move(completed));
    }
    return seq;
}

CountSequence count_sequence(const Word& w, std::size_t n_max) {
    if (w.size() == 2 || w.size() == 3) return extend_counts(w, n_max);
    return automaton_counts(w, n_max);
}

BigInt backward_term(const RecurrenceSpec& spec) {
    spec.validate();
    const long last = spec.coefficients.back();
    if (last == 0) throw std::invalid_argument("backward_term: recurrence is not invertible");
    // a(order) = sum_{i<order} c_i a(order-1-i) + c_order * a(0)
    BigInt rest = spec.initial_values.back();
    for (std::size_t i = 0; i + 1 < spec.order; ++i) {
        rest -= spec.coefficients[i] * spec.initial_values[spec.order - 2 - i];
    }
    if (rest % last != 0) throw std::invalid_argument("backward_term: non-integral a(0)");
    return rest / last;
}

}  // namespace coinword

#include <doctest.h>

#include <sstream>

#include "../tools/commands.hpp"
#include "coinword/counting.hpp"

using coinword::cli::run_cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, sep)) out.push_back(field);
    return out;
}

std::vector<std::string> lines(const std::string& text) { return split(text, '\n'); }

}  // namespace

TEST_CASE("counts") {
    auto r = run({"counts", "HTH", "15"});
    CHECK(r.code == 0);
    CHECK(r.out == "HTH: 0, 0, 1, 2, 3, 5, 9, 16, 28, 49, 86, 151, 265, 465, 816\n");

    r = run({"counts", "--word", "HH", "--n-max", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,a_HH(n)\n1,0\n2,1\n3,1\n4,2\n5,3\n6,5\n");

    const auto automaton = run({"counts", "HTHT", "16", "--engine", "automaton"});
    const auto brute = run({"counts", "HTHT", "16", "--engine", "brute"});
    CHECK(automaton.code == 0);
    CHECK(automaton.out == brute.out);
    CHECK(run({"counts", "HTHT", "16"}).out == automaton.out);
}

TEST_CASE("counts CSV parses back") {
    const auto r = run({"counts", "HHH", "80", "--format", "csv"});
    std::istringstream in(r.out);
    const auto seq = coinword::CountSequence::read_csv(in);
    CHECK(seq.values == coinword::extend_counts(coinword::Word::parse("HHH"), 80).values);
}

TEST_CASE("table") {
    const auto r = run({"table", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(split(rows[0], ',').size() == 19);
    CHECK(rows[1] == "HHH,1,1,1,0,0,1,1,2,4,7,13,24,44,81,149,274,504,927");
    CHECK(rows[4] == "HTH,2,-1,1,0,0,1,2,3,5,9,16,28,49,86,151,265,465,816");
    // HTT and HHT share every field after the word.
    CHECK(rows[2].substr(3) == rows[3].substr(3));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split(rows[i], ',');
        const auto seq = coinword::extend_counts(coinword::Word::parse(f[0]), 15);
        for (std::size_t n = 1; n <= 15; ++n) CHECK(f[3 + n] == seq.at(n).get_str());
    }
    CHECK(run({"table"}).out.find("927") != std::string::npos);
}

TEST_CASE("gf, stats, tail, threshold, roots") {
    auto r = run({"gf", "HH", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x^2 + x^3 + 2*x^4") != std::string::npos);
    CHECK(r.out.find("(-x^2)/(-1 + x + x^2)") != std::string::npos);

    r = run({"stats", "HHT"});
    CHECK(r.out.find("mean=8 variance=24") != std::string::npos);
    r = run({"stats"});
    CHECK(lines(r.out).size() == 6);

    r = run({"tail", "HT", "7"});
    CHECK(r.out.find("7/64") != std::string::npos);

    r = run({"threshold", "HHT", "--q", "0.1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("N=15") != std::string::npos);

    r = run({"roots", "HHT", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("HHT,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"counts", "HXT"}).code == 1);
    CHECK(run({"counts", "HXT"}).err.find("position 2") != std::string::npos);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"threshold", "HT", "--q", "abc"}).code == 1);
    CHECK(run({"threshold", "HT", "--q", "2"}).code == 1);
    CHECK(run({"counts", "HT", "30", "--engine", "brute"}).code == 2);
    CHECK(run({"stats", "HTHT"}).code == 2);
    CHECK(run({"verify", "--quick"}).code == 0);
}

TEST_CASE("simulate is reproducible") {
    const std::vector<std::string> args{"simulate", "HH", "--trials", "20000", "--seed", "17", "--histogram"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"simulate", "HH", "--trials", "20000", "--seed", "17", "--histogram", "--threads", "3"}).out ==
          a.out);
    CHECK(run({"simulate", "HH", "--trials", "20000", "--seed", "18", "--histogram"}).out != a.out);
    CHECK(a.out.find("n,empirical_count,empirical_p,exact_p") != std::string::npos);
}

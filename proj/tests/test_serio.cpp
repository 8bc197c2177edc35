#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "bqsolve/errors.hpp"
#include "bqsolve/serio.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bqsolve;

namespace {

BinaryQuadraticModel parse(const std::string& text,
                           Vartype vartype = Vartype::SPIN) {
  std::istringstream in(text);
  return read_coo(in, vartype);
}

std::string csv_of(const SampleSet& ss) {
  std::ostringstream out;
  write_csv(ss, out);
  return out.str();
}

Assignment spins(std::vector<int> values) {
  std::vector<Label> labels(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    labels[i] = static_cast<Label>(i);
  }
  return Assignment(std::move(labels), std::move(values));
}

}  // namespace

TEST_SUITE("serio") {

TEST_CASE("read_coo parses the triangle instance") {
  const auto bqm = parse("1 2 1.5\n0 1 -1\n0 2 -3\n");
  CHECK(bqm.vartype() == Vartype::SPIN);
  CHECK(bqm.linear().empty());
  CHECK(bqm.offset() == 0.0);
  REQUIRE(bqm.quadratic().size() == 3);
  CHECK(bqm.quadratic().at({1, 2}) == 1.5);
  CHECK(bqm.quadratic().at({0, 1}) == -1.0);
  CHECK(bqm.quadratic().at({0, 2}) == -3.0);
}

TEST_CASE("read_coo edge cases") {
  SUBCASE("empty stream yields an empty model") {
    const auto bqm = parse("");
    CHECK(bqm.num_variables() == 0);
  }
  SUBCASE("diagonal entries fold into linear biases") {
    const auto bqm = parse("0 0 2.0\n0 1 1.0\n");
    CHECK(bqm.linear().at(0) == 2.0);
    CHECK(bqm.quadratic().at({0, 1}) == 1.0);
  }
  SUBCASE("duplicate entries accumulate") {
    const auto bqm = parse("1 2 1.0\n2 1 0.5\n");
    CHECK(bqm.quadratic().at({1, 2}) == 1.5);
  }
  SUBCASE("comments and blank lines are skipped") {
    const auto bqm = parse("# a comment\n\n   \n0 1 1.0\n  # indented\n");
    CHECK(bqm.quadratic().at({0, 1}) == 1.0);
  }
  SUBCASE("missing final newline is fine") {
    const auto bqm = parse("0 1 1.0");
    CHECK(bqm.quadratic().at({0, 1}) == 1.0);
  }
}

TEST_CASE("read_coo reports the offending line") {
  SUBCASE("wrong field count") {
    CHECK_THROWS_WITH_AS(parse("0 1 1.0\n1 2\n"),
                         doctest::Contains("line 2"), ParseError);
  }
  SUBCASE("non-integer label") {
    CHECK_THROWS_WITH_AS(parse("a 1 1.0\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_AS(parse("1.5 2 1.0\n"), ParseError);
  }
  SUBCASE("negative label") {
    CHECK_THROWS_AS(parse("-1 2 1.0\n"), ParseError);
  }
  SUBCASE("non-finite value") {
    CHECK_THROWS_AS(parse("0 1 inf\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1 nan\n"), ParseError);
  }
  SUBCASE("line numbers count every physical line") {
    try {
      parse("0 1 1.0\n# comment\n\n0 2 oops\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
  }
}

TEST_CASE("write_csv reproduces the golden two-line output") {
  SampleSet ss({0, 1, 2});
  ss.push_back({spins({1, -1, 1}), -3.5, 1});
  CHECK(csv_of(ss) == "0,1,2,energy,num_occurrences\n1,-1,1,-3.5,1\n");
}

TEST_CASE("write_csv formatting rules") {
  SUBCASE("empty set prints the header only") {
    CHECK(csv_of(SampleSet({0, 1})) == "0,1,energy,num_occurrences\n");
  }
  SUBCASE("integral energies print in shortest form") {
    SampleSet ss({0});
    ss.push_back({spins({1}), -3.0, 1});
    CHECK(csv_of(ss) == "0,energy,num_occurrences\n1,-3,1\n");
  }
  SUBCASE("header uses the original labels") {
    SampleSet ss({0, 2, 5});
    CHECK(csv_of(ss) == "0,2,5,energy,num_occurrences\n");
  }
  SUBCASE("line count is one plus the record count") {
    const auto bqm = oracle::three_spin_triangle();
    SampleSet ss({0, 1, 2});
    ss.push_back({spins({1, -1, 1}), -3.5, 1});
    ss.push_back({spins({1, 1, 1}), -2.5, 2});
    const auto text = csv_of(ss);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  }
}

TEST_CASE("format_real is the shortest round-tripping decimal") {
  CHECK(format_real(-3.5) == "-3.5");
  CHECK(format_real(-3.0) == "-3");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(0.0) == "0");

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-12, 12);
  for (int i = 0; i < 2000; ++i) {
    const double value = std::ldexp(mantissa(rng), exponent(rng));
    const std::string text = format_real(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
}

TEST_CASE("csv numeric fields reparse exactly") {
  const auto bqm = oracle::three_spin_triangle();
  std::mt19937_64 rng(43);
  SampleSet ss({0, 1, 2});
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 25; ++i) {
    std::vector<int> values(3);
    for (auto& v : values) v = rng() & 1 ? 1 : -1;
    ss.push_back({spins(values), dist(rng), 1});
  }
  std::istringstream lines(csv_of(ss));
  std::string line;
  std::getline(lines, line);  // header
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    const auto last_comma = line.rfind(',');
    const auto prev_comma = line.rfind(',', last_comma - 1);
    const std::string energy_field =
        line.substr(prev_comma + 1, last_comma - prev_comma - 1);
    CHECK(std::strtod(energy_field.c_str(), nullptr) ==
          ss.records()[row].energy);
    ++row;
  }
  CHECK(row == ss.size());
}

TEST_CASE("term-level round trip reproduces the model exactly") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto bqm = oracle::random_model(rng, 6, Vartype::SPIN);
    std::ostringstream text;
    for (const auto& [label, bias] : bqm.linear()) {
      text << label << ' ' << label << ' ' << format_real(bias) << '\n';
    }
    for (const auto& [pair, coupling] : bqm.quadratic()) {
      text << pair.first << ' ' << pair.second << ' '
           << format_real(coupling) << '\n';
    }
    const auto reread = parse(text.str());
    CHECK(reread.linear() == bqm.linear());
    CHECK(reread.quadratic() == bqm.quadratic());
    CHECK(reread.labels() == bqm.labels());

    // Energies are bit-for-bit identical after the round trip.
    for (int draw = 0; draw < 10; ++draw) {
      std::vector<int> values(6);
      for (auto& v : values) v = rng() & 1 ? 1 : -1;
      const Assignment a = spins(values);
      CHECK(energy(bqm, a) == energy(reread, a));
    }
  }
}

}  // TEST_SUITE

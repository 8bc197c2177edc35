#include "bqsolve/serio.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bqsolve/errors.hpp"

namespace bqsolve {

namespace {

bool parse_label(const std::string& token, Label& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && out >= 0;
}

bool parse_value(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

BinaryQuadraticModel read_coo(std::istream& in, Vartype vartype) {
  BinaryQuadraticModel bqm(vartype);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    std::string token;
    while (tokens >> token) {
      fields.push_back(token);
    }
    if (fields.empty() || fields.front().front() == '#') {
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError(line_number,
                       "expected 'i j value', got '" + line + "'");
    }
    Label i = 0, j = 0;
    double value = 0.0;
    if (!parse_label(fields[0], i) || !parse_label(fields[1], j)) {
      throw ParseError(line_number,
                       "labels must be non-negative integers in '" + line +
                           "'");
    }
    if (!parse_value(fields[2], value)) {
      throw ParseError(line_number,
                       "value must be a finite real in '" + line + "'");
    }
    bqm.add_term(i, j, value);
  }
  return bqm;
}

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

void write_csv(const SampleSet& ss, std::ostream& out) {
  for (const Label label : ss.label_order()) {
    out << label << ',';
  }
  out << "energy,num_occurrences\n";
  for (const auto& record : ss.records()) {
    for (const int value : record.assignment.values()) {
      out << value << ',';
    }
    out << format_real(record.energy) << ',' << record.num_occurrences << '\n';
  }
}

}  // namespace bqsolve

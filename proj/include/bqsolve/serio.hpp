#pragma once

#include <iosfwd>
#include <string>

#include "bqsolve/model.hpp"
#include "bqsolve/sampleset.hpp"

namespace bqsolve {

/// Reads a problem in coordinate format: one "i j value" triplet per line
/// (two non-negative integers and a real, whitespace separated). Duplicate
/// entries accumulate and diagonal entries fold into linear biases, per
/// BinaryQuadraticModel::add_term. Blank lines and lines starting with '#'
/// are skipped. Throws ParseError with the 1-based line number otherwise.
BinaryQuadraticModel read_coo(std::istream& in, Vartype vartype);

/// Shortest decimal string that parses back to exactly the same double, so
/// -3.5 prints as "-3.5" and -3.0 as "-3".
std::string format_real(double value);

/// Writes the set as CSV: a header of the ascending variable labels followed
/// by "energy,num_occurrences", then one line per record. All lines are
/// '\n'-terminated; fields are never quoted.
void write_csv(const SampleSet& ss, std::ostream& out);

}  // namespace bqsolve

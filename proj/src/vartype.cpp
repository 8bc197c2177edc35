#include "bqsolve/vartype.hpp"

#include <stdexcept>

namespace bqsolve {

std::string to_string(Vartype vt) {
  return vt == Vartype::SPIN ? "SPIN" : "BINARY";
}

Vartype parse_vartype(const std::string& text) {
  if (text == "SPIN") return Vartype::SPIN;
  if (text == "BINARY") return Vartype::BINARY;
  throw std::invalid_argument("invalid vartype '" + text +
                              "' (choose from SPIN, BINARY)");
}

}  // namespace bqsolve

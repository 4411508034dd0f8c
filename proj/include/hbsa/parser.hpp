#pragma once

#include <stdexcept>
#include <string>

#include "hbsa/circuit.hpp"

namespace hbsa {

// Positioned parse failure. Lines and columns are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

// Circuit-description grammar (UTF-8, line oriented, '#' comments):
//
//   circuit <name>
//   hwp <angle-deg> on <A|B|both>
//   fbs on <A|B|both>
//   fs on <A|B|both> [arm x1|x2]
//   stage2 on <A|B|both>
//   bs on <A|B|both>
//   ui m=<arm> n=<arm> [sign -] [variant printed] on <A|B|both>
//   delay <t0|t1> on <A|B|both>
//
// Arms are a1|a2|b1|b2. The optional ui tokens default to sign + and the
// orthogonalized column variant. A second fbs reaching a photon slot that
// already passed one is rejected at parse time.
Circuit parse_circuit(const std::string& text);

// Emits exactly the grammar above, one step per line, deterministic ordering.
// parse_circuit(serialize_circuit(c)) reproduces c step for step.
std::string serialize_circuit(const Circuit& circuit);

}  // namespace hbsa

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "laqe/circuit.hpp"

namespace laqe::qasm {

/// Syntax or semantic error in a QASM stream, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Parses the supported OpenQASM 2.0 subset: header, optional qelib1
/// include, exactly one qreg, gate statements over
/// h/x/z/s/sdg/t/tdg/rz(expr)/cx, and // comments. Gates are packed
/// greedily into layers, so the parsed circuit is already compact.
Circuit parse(std::istream& in);
Circuit parse_string(const std::string& text);
Circuit parse_file(const std::string& path);

/// Emits layers left to right, gates within a layer in ascending
/// lowest-qubit order; empty layers are skipped. Round-trips through
/// parse with the per-qubit gate sequence preserved exactly.
void print(const Circuit& c, std::ostream& out);
std::string to_string(const Circuit& c);

}  // namespace laqe::qasm

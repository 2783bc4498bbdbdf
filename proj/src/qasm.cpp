#include "laqe/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace laqe::qasm {

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + what),
      line_(line),
      col_(col) {}

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Character-level scanner with line/column tracking. The grammar is
// small enough that a hand-rolled recursive descent stays readable.
class Scanner {
public:
    explicit Scanner(std::istream& in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text_ = ss.str();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool try_consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "' " + what);
        advance();
    }

    /// Keyword or identifier: [A-Za-z_][A-Za-z0-9_]*
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                advance();
        }
        if (start == pos_) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (1ull << 32)) fail("integer literal too large");
            advance();
        }
        return v;
    }

    double number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                peek() == 'e' || peek() == 'E' ||
                ((peek() == '+' || peek() == '-') && pos_ > start &&
                 (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
            advance();
        if (start == pos_) fail("expected number");
        try {
            return std::stod(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("malformed number literal");
        }
    }

    void expect_string_literal(const std::string& want) {
        skip_ws();
        if (peek() != '"') fail("expected string literal");
        advance();
        std::size_t start = pos_;
        while (pos_ < text_.size() && peek() != '"') advance();
        if (pos_ >= text_.size()) fail("unterminated string literal");
        std::string got = text_.substr(start, pos_ - start);
        advance();
        if (got != want) fail("unsupported include \"" + got + "\"");
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// rz argument grammar: expr := term (('+'|'-') term)*
//                      term := factor (('*'|'/') factor)*
//                      factor := ('-'|'+')* (number | 'pi' | '(' expr ')')
class ExprParser {
public:
    explicit ExprParser(Scanner& s) : s_(s) {}

    double expr() {
        double v = term();
        for (;;) {
            if (s_.try_consume('+')) v += term();
            else if (s_.try_consume('-')) v -= term();
            else return v;
        }
    }

private:
    double term() {
        double v = factor();
        for (;;) {
            if (s_.try_consume('*')) v *= factor();
            else if (s_.try_consume('/')) v /= factor();
            else return v;
        }
    }

    double factor() {
        if (s_.try_consume('-')) return -factor();
        if (s_.try_consume('+')) return factor();
        if (s_.try_consume('(')) {
            double v = expr();
            s_.expect(')', "to close parenthesized expression");
            return v;
        }
        s_.skip_ws();
        char c = s_.peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = s_.ident();
            if (id == "pi") return kPi;
            s_.fail("unknown symbol '" + id + "' in angle expression");
        }
        return s_.number();
    }

    Scanner& s_;
};

struct GateSpec {
    GateKind kind;
    int arity;
    bool angled;
};

bool lookup_gate(const std::string& name, GateSpec& out) {
    static const std::pair<const char*, GateSpec> table[] = {
        {"h", {GateKind::H, 1, false}},    {"x", {GateKind::X, 1, false}},
        {"z", {GateKind::Z, 1, false}},    {"s", {GateKind::S, 1, false}},
        {"sdg", {GateKind::Sdg, 1, false}}, {"t", {GateKind::T, 1, false}},
        {"tdg", {GateKind::Tdg, 1, false}}, {"rz", {GateKind::Rz, 1, true}},
        {"cx", {GateKind::CNOT, 2, false}},
    };
    for (const auto& [n, spec] : table) {
        if (name == n) {
            out = spec;
            return true;
        }
    }
    return false;
}

}  // namespace

Circuit parse(std::istream& in) {
    Scanner s(in);

    std::string kw = s.ident();
    if (kw != "OPENQASM") s.fail("expected OPENQASM 2.0 header");
    double version = s.number();
    if (version != 2.0) s.fail("only OPENQASM 2.0 is supported");
    s.expect(';', "after version");

    bool have_qreg = false;
    std::string reg_name;
    std::uint32_t num_qubits = 0;
    std::vector<Gate> gates;

    auto parse_operand = [&](int line, int col) -> QubitId {
        std::string name = s.ident();
        if (name != reg_name) s.fail("unknown register '" + name + "'");
        s.expect('[', "before qubit index");
        std::uint64_t idx = s.integer();
        s.expect(']', "after qubit index");
        if (idx >= num_qubits)
            throw ParseError(line, col, "qubit index " + std::to_string(idx) +
                                            " out of range for qreg of size " +
                                            std::to_string(num_qubits));
        return static_cast<QubitId>(idx);
    };

    while (!s.eof()) {
        int line = s.line(), col = s.col();
        std::string id = s.ident();

        if (id == "include") {
            s.expect_string_literal("qelib1.inc");
            s.expect(';', "after include");
            continue;
        }
        if (id == "qreg") {
            if (have_qreg) throw ParseError(line, col, "multiple qreg declarations");
            reg_name = s.ident();
            s.expect('[', "before register size");
            std::uint64_t n = s.integer();
            s.expect(']', "after register size");
            s.expect(';', "after qreg");
            if (n == 0) throw ParseError(line, col, "qreg must have at least one qubit");
            num_qubits = static_cast<std::uint32_t>(n);
            have_qreg = true;
            continue;
        }
        if (id == "creg" || id == "measure" || id == "barrier" || id == "gate" ||
            id == "reset" || id == "if" || id == "opaque") {
            throw ParseError(line, col,
                             "'" + id + "' is not supported (subset: h x z s sdg t tdg rz cx)");
        }

        GateSpec spec;
        if (!lookup_gate(id, spec))
            throw ParseError(line, col,
                             "unsupported gate '" + id +
                                 "' (subset: h x z s sdg t tdg rz cx)");
        if (!have_qreg) throw ParseError(line, col, "gate statement before qreg declaration");

        double angle = 0.0;
        if (spec.angled) {
            s.expect('(', "before rz angle");
            angle = ExprParser(s).expr();
            s.expect(')', "after rz angle");
            if (!std::isfinite(angle)) throw ParseError(line, col, "rz angle is not finite");
        }

        QubitId q0 = parse_operand(line, col);
        if (spec.arity == 2) {
            s.expect(',', "between cx operands");
            QubitId q1 = parse_operand(line, col);
            if (q0 == q1) throw ParseError(line, col, "cx operands must be distinct");
            gates.push_back(Gate::cnot(q0, q1));
        } else if (spec.angled) {
            gates.push_back(Gate::rz(angle, q0));
        } else {
            gates.push_back(Gate::make(spec.kind, {q0, 0}, 1));
        }
        s.expect(';', "after gate statement");
    }

    if (!have_qreg) throw ParseError(s.line(), s.col(), "missing qreg declaration");
    return pack_layers(num_qubits, gates);
}

Circuit parse_string(const std::string& text) {
    std::istringstream ss(text);
    return parse(ss);
}

Circuit parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse(f);
}

void print(const Circuit& c, std::ostream& out) {
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    char buf[64];
    for (const Layer& l : c.layers()) {
        for (const Gate& g : l) {
            switch (g.kind()) {
                case GateKind::Rz:
                    // %.17g round-trips doubles exactly
                    std::snprintf(buf, sizeof buf, "rz(%.17g) q[%u];\n", g.angle(), g.qubit(0));
                    out << buf;
                    break;
                case GateKind::CNOT:
                    out << "cx q[" << g.control() << "],q[" << g.target() << "];\n";
                    break;
                default:
                    out << gate_name(g.kind()) << " q[" << g.qubit(0) << "];\n";
            }
        }
    }
}

std::string to_string(const Circuit& c) {
    std::ostringstream ss;
    print(c, ss);
    return ss.str();
}

}  // namespace laqe::qasm

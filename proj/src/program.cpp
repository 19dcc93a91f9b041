// Copyright 2025 The cvdvsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvdv/program.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cvdv {

ProgramError::ProgramError(int line, int col, std::string message,
                           std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         message),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

namespace {

struct Token {
    std::string text;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

struct Cursor {
    const std::vector<Token>& toks;
    int line;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const Token& peek() const {
        if (done()) throw ProgramError(line, toks.empty() ? 1 : toks.back().col, "unexpected end of line");
        return toks[pos];
    }
    Token next(const std::string& what) {
        if (done())
            throw ProgramError(line, toks.empty() ? 1 : (toks.back().col + static_cast<int>(toks.back().text.size())),
                               "missing " + what, {what});
        return toks[pos++];
    }
    void finish() {
        if (!done())
            throw ProgramError(line, peek().col, "unexpected trailing token '" + peek().text + "'");
    }
};

long parse_int(const Token& t, int line, const char* what) {
    long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ProgramError(line, t.col, std::string("expected ") + what + ", got '" + t.text + "'",
                           {what});
    return v;
}

double parse_real(const Token& t, int line, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(t.text, &used);
        if (used != t.text.size() || !std::isfinite(v)) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ProgramError(line, t.col, std::string("expected ") + what + ", got '" + t.text + "'",
                           {what});
    }
}

// a+bi / a-bi / a / bi, no spaces
cplx parse_complex(const Token& t, int line) {
    const std::string& s = t.text;
    auto bad = [&]() -> ProgramError {
        return ProgramError(line, t.col, "expected complex literal (a+bi), got '" + s + "'",
                            {"complex"});
    };
    if (s.empty()) throw bad();
    if (s.back() == 'i') {
        // find the split between real and imaginary parts
        std::size_t split = std::string::npos;
        for (std::size_t i = s.size() - 1; i > 0; --i) {
            const char c = s[i];
            if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        std::string re = "0", im;
        if (split == std::string::npos) {
            im = s.substr(0, s.size() - 1);
            if (im.empty() || im == "+" || im == "-") im += "1";
        } else {
            re = s.substr(0, split);
            im = s.substr(split, s.size() - 1 - split);
            if (im == "+" || im == "-") im += "1";
        }
        try {
            std::size_t u1 = 0, u2 = 0;
            const double r = std::stod(re, &u1);
            const double i = std::stod(im, &u2);
            if (u1 != re.size() || u2 != im.size() || !std::isfinite(r) || !std::isfinite(i))
                throw std::invalid_argument("");
            return cplx(r, i);
        } catch (...) {
            throw bad();
        }
    }
    return cplx(parse_real(t, line, "number"), 0.0);
}

int parse_reg(const Token& t, int line, char prefix, const char* what) {
    if (t.text.size() < 2 || t.text[0] != prefix)
        throw ProgramError(line, t.col, std::string("expected ") + what + ", got '" + t.text + "'",
                           {what});
    Token inner{t.text.substr(1), t.col + 1};
    return static_cast<int>(parse_int(inner, line, what));
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(cplx z) {
    std::string s = fmt_real(z.real());
    s += (z.imag() < 0 || std::signbit(z.imag())) ? "-" : "+";
    s += fmt_real(std::abs(z.imag()));
    s += "i";
    return s;
}

} // namespace

cplx parse_complex_literal(const std::string& text) {
    Token t{text, 1};
    return parse_complex(t, 1);
}

Program parse_program(const std::string& text) {
    Program p;
    bool header_done = false;
    bool gates_started = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto check_mode = [&](int mode, int line_, int col) {
        if (mode < 0 || mode >= p.modes)
            throw ProgramError(line_, col,
                               "mode " + std::to_string(mode) + " not declared (m=" +
                                   std::to_string(p.modes) + ")");
    };
    auto check_qubit = [&](int q, int line_, int col) {
        if (q < 0 || q >= p.dv_qubits)
            throw ProgramError(line_, col,
                               "qubit " + std::to_string(q) + " not declared (a=" +
                                   std::to_string(p.dv_qubits) + ")");
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        Cursor cur{toks, lineno};
        const Token head = cur.next("statement");
        const std::string& kw = head.text;

        if (kw == "mode" || kw == "qubit" || kw == "seed") {
            if (header_done)
                throw ProgramError(lineno, head.col, "header line after statements");
            if (kw == "mode") {
                // mode m=<int> n=<int>
                for (int i = 0; i < 2; ++i) {
                    Token t = cur.next(i == 0 ? "m=<int>" : "n=<int>");
                    const char key = i == 0 ? 'm' : 'n';
                    if (t.text.size() < 3 || t.text[0] != key || t.text[1] != '=')
                        throw ProgramError(lineno, t.col,
                                           std::string("expected ") + key + "=<int>, got '" +
                                               t.text + "'");
                    Token val{t.text.substr(2), t.col + 2};
                    const long v = parse_int(val, lineno, "integer");
                    if (i == 0) {
                        if (v < 1 || v > 16) throw ProgramError(lineno, val.col, "mode count out of range");
                        p.modes = static_cast<int>(v);
                    } else {
                        if (v < 1 || v > 26) throw ProgramError(lineno, val.col, "qubits per mode out of range");
                        p.qubits_per_mode = static_cast<int>(v);
                    }
                }
            } else if (kw == "qubit") {
                Token t = cur.next("a=<int>");
                if (t.text.size() < 3 || t.text.rfind("a=", 0) != 0)
                    throw ProgramError(lineno, t.col, "expected a=<int>, got '" + t.text + "'");
                Token val{t.text.substr(2), t.col + 2};
                const long v = parse_int(val, lineno, "integer");
                if (v < 0 || v > 26) throw ProgramError(lineno, val.col, "qubit count out of range");
                p.dv_qubits = static_cast<int>(v);
            } else {
                Token t = cur.next("seed value");
                unsigned long long v = 0;
                auto [q, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
                if (ec != std::errc() || q != t.text.data() + t.text.size())
                    throw ProgramError(lineno, t.col, "expected seed integer, got '" + t.text + "'");
                p.seed = v;
            }
            cur.finish();
            continue;
        }

        header_done = true;
        Program::Stmt st;

        if (kw == "prep") {
            if (gates_started)
                throw ProgramError(lineno, head.col, "prep must precede gates and measurements");
            st.type = Program::Stmt::Type::prep;
            Token what = cur.next("fock|coherent|vacuum");
            Token m = cur.next("mode index");
            st.prep.mode = static_cast<int>(parse_int(m, lineno, "mode index"));
            check_mode(st.prep.mode, lineno, m.col);
            if (what.text == "fock") {
                st.prep.kind = Program::Prep::Kind::fock;
                Token k = cur.next("fock level");
                const long v = parse_int(k, lineno, "fock level");
                if (v < 0) throw ProgramError(lineno, k.col, "fock level must be >= 0");
                st.prep.fock_level = static_cast<int>(v);
            } else if (what.text == "coherent") {
                st.prep.kind = Program::Prep::Kind::coherent;
                st.prep.alpha = parse_complex(cur.next("complex amplitude"), lineno);
            } else if (what.text == "vacuum") {
                st.prep.kind = Program::Prep::Kind::vacuum;
            } else {
                throw ProgramError(lineno, what.col, "unknown preparation '" + what.text + "'",
                                   {"fock", "coherent", "vacuum"});
            }
        } else if (kw == "MEAS") {
            gates_started = true;
            st.type = Program::Stmt::Type::meas;
            Token what = cur.next("homodyne|heterodyne|photon");
            Token m = cur.next("mode index");
            st.meas.mode = static_cast<int>(parse_int(m, lineno, "mode index"));
            check_mode(st.meas.mode, lineno, m.col);
            if (what.text == "homodyne") {
                st.meas.kind = Program::Meas::Kind::homodyne;
                Token b = cur.next("q|p");
                if (b.text == "q")
                    st.meas.basis = QuadratureBasis::position;
                else if (b.text == "p")
                    st.meas.basis = QuadratureBasis::momentum;
                else
                    throw ProgramError(lineno, b.col, "expected basis q or p", {"q", "p"});
            } else if (what.text == "heterodyne") {
                st.meas.kind = Program::Meas::Kind::heterodyne;
            } else if (what.text == "photon") {
                st.meas.kind = Program::Meas::Kind::photon;
                Token g = cur.next("gamma=<bits>");
                if (g.text.rfind("gamma=", 0) != 0)
                    throw ProgramError(lineno, g.col, "expected gamma=<bits>, got '" + g.text + "'");
                Token val{g.text.substr(6), g.col + 6};
                const long v = parse_int(val, lineno, "gamma bits");
                if (v < 1 || v > 20) throw ProgramError(lineno, val.col, "gamma bits out of range");
                st.meas.gamma_bits = static_cast<int>(v);
            } else {
                throw ProgramError(lineno, what.col, "unknown measurement '" + what.text + "'",
                                   {"homodyne", "heterodyne", "photon"});
            }
        } else {
            gates_started = true;
            st.type = Program::Stmt::Type::gate;
            HybridGate& g = st.gate;
            using K = HybridGate::Kind;
            auto mode_tok = [&]() {
                Token t = cur.next("mode index");
                const int m = static_cast<int>(parse_int(t, lineno, "mode index"));
                check_mode(m, lineno, t.col);
                return m;
            };
            auto qreg_tok = [&]() {
                Token t = cur.next("q<i>");
                const int q = parse_reg(t, lineno, 'q', "q<i>");
                check_qubit(q, lineno, t.col);
                return q;
            };
            auto mreg_tok = [&]() {
                Token t = cur.next("m<j>");
                const int m = parse_reg(t, lineno, 'm', "m<j>");
                check_mode(m, lineno, t.col);
                return m;
            };
            if (kw == "D") {
                g.kind = K::D;
                g.mode = mode_tok();
                g.alpha = parse_complex(cur.next("complex amplitude"), lineno);
            } else if (kw == "R") {
                g.kind = K::R;
                g.mode = mode_tok();
                g.param = parse_real(cur.next("angle"), lineno, "angle");
            } else if (kw == "S") {
                g.kind = K::S;
                g.mode = mode_tok();
                g.param = parse_real(cur.next("squeeze parameter"), lineno, "squeeze parameter");
            } else if (kw == "BS") {
                g.kind = K::BS;
                g.mode = mode_tok();
                Token t = cur.next("mode index");
                g.mode2 = static_cast<int>(parse_int(t, lineno, "mode index"));
                check_mode(g.mode2, lineno, t.col);
                if (g.mode2 == g.mode)
                    throw ProgramError(lineno, t.col, "beam splitter needs distinct modes");
                g.param = parse_real(cur.next("angle"), lineno, "angle");
            } else if (kw == "F") {
                g.kind = K::Fourier;
                g.mode = mode_tok();
                if (!cur.done()) {
                    Token t = cur.next("inv");
                    if (t.text != "inv")
                        throw ProgramError(lineno, t.col, "expected 'inv'", {"inv"});
                    g.inverse = true;
                }
            } else if (kw == "P") {
                g.kind = K::Parity;
                g.mode = mode_tok();
            } else if (kw == "SWAP") {
                g.kind = K::ModeSwap;
                g.mode = mode_tok();
                Token t = cur.next("mode index");
                g.mode2 = static_cast<int>(parse_int(t, lineno, "mode index"));
                check_mode(g.mode2, lineno, t.col);
                if (g.mode2 == g.mode)
                    throw ProgramError(lineno, t.col, "mode swap needs distinct modes");
            } else if (kw == "CD") {
                g.kind = K::CD;
                g.control = qreg_tok();
                g.mode = mreg_tok();
                g.alpha = parse_complex(cur.next("complex amplitude"), lineno);
            } else if (kw == "CR") {
                g.kind = K::CR;
                g.control = qreg_tok();
                g.mode = mreg_tok();
                g.param = parse_real(cur.next("angle"), lineno, "angle");
            } else if (kw == "CS") {
                g.kind = K::CS;
                g.control = qreg_tok();
                g.mode = mreg_tok();
                g.param = parse_real(cur.next("squeeze parameter"), lineno, "squeeze parameter");
            } else if (kw == "CBS") {
                g.kind = K::CBS;
                g.control = qreg_tok();
                g.mode = mreg_tok();
                Token t = cur.next("m<k>");
                g.mode2 = parse_reg(t, lineno, 'm', "m<k>");
                check_mode(g.mode2, lineno, t.col);
                if (g.mode2 == g.mode)
                    throw ProgramError(lineno, t.col, "conditional beam splitter needs distinct modes");
                g.param = parse_real(cur.next("angle"), lineno, "angle");
            } else {
                throw ProgramError(lineno, head.col, "unknown statement '" + kw + "'",
                                   {"mode", "qubit", "seed", "prep", "D", "R", "S", "BS", "F", "P",
                                    "SWAP", "CD", "CR", "CS", "CBS", "MEAS"});
            }
        }
        cur.finish();
        p.statements.push_back(st);
    }
    return p;
}

std::string print_program(const Program& p) {
    std::string out;
    out += "mode m=" + std::to_string(p.modes) + " n=" + std::to_string(p.qubits_per_mode) + "\n";
    if (p.dv_qubits > 0) out += "qubit a=" + std::to_string(p.dv_qubits) + "\n";
    if (p.seed != 0) out += "seed " + std::to_string(p.seed) + "\n";
    using K = HybridGate::Kind;
    for (const auto& st : p.statements) {
        switch (st.type) {
            case Program::Stmt::Type::prep:
                switch (st.prep.kind) {
                    case Program::Prep::Kind::fock:
                        out += "prep fock " + std::to_string(st.prep.mode) + " " +
                               std::to_string(st.prep.fock_level) + "\n";
                        break;
                    case Program::Prep::Kind::coherent:
                        out += "prep coherent " + std::to_string(st.prep.mode) + " " +
                               fmt_complex(st.prep.alpha) + "\n";
                        break;
                    case Program::Prep::Kind::vacuum:
                        out += "prep vacuum " + std::to_string(st.prep.mode) + "\n";
                        break;
                }
                break;
            case Program::Stmt::Type::gate: {
                const HybridGate& g = st.gate;
                switch (g.kind) {
                    case K::D:
                        out += "D " + std::to_string(g.mode) + " " + fmt_complex(g.alpha) + "\n";
                        break;
                    case K::R:
                        out += "R " + std::to_string(g.mode) + " " + fmt_real(g.param) + "\n";
                        break;
                    case K::S:
                        out += "S " + std::to_string(g.mode) + " " + fmt_real(g.param) + "\n";
                        break;
                    case K::BS:
                        out += "BS " + std::to_string(g.mode) + " " + std::to_string(g.mode2) +
                               " " + fmt_real(g.param) + "\n";
                        break;
                    case K::Fourier:
                        out += "F " + std::to_string(g.mode) + (g.inverse ? " inv" : "") + "\n";
                        break;
                    case K::Parity:
                        out += "P " + std::to_string(g.mode) + "\n";
                        break;
                    case K::ModeSwap:
                        out += "SWAP " + std::to_string(g.mode) + " " + std::to_string(g.mode2) +
                               "\n";
                        break;
                    case K::CD:
                        out += "CD q" + std::to_string(g.control) + " m" + std::to_string(g.mode) +
                               " " + fmt_complex(g.alpha) + "\n";
                        break;
                    case K::CR:
                        out += "CR q" + std::to_string(g.control) + " m" + std::to_string(g.mode) +
                               " " + fmt_real(g.param) + "\n";
                        break;
                    case K::CS:
                        out += "CS q" + std::to_string(g.control) + " m" + std::to_string(g.mode) +
                               " " + fmt_real(g.param) + "\n";
                        break;
                    case K::CBS:
                        out += "CBS q" + std::to_string(g.control) + " m" + std::to_string(g.mode) +
                               " m" + std::to_string(g.mode2) + " " + fmt_real(g.param) + "\n";
                        break;
                    default:
                        throw InvalidArgument("print_program: gate kind has no surface syntax");
                }
                break;
            }
            case Program::Stmt::Type::meas:
                switch (st.meas.kind) {
                    case Program::Meas::Kind::homodyne:
                        out += "MEAS homodyne " + std::to_string(st.meas.mode) +
                               (st.meas.basis == QuadratureBasis::position ? " q" : " p") + "\n";
                        break;
                    case Program::Meas::Kind::heterodyne:
                        out += "MEAS heterodyne " + std::to_string(st.meas.mode) + "\n";
                        break;
                    case Program::Meas::Kind::photon:
                        out += "MEAS photon " + std::to_string(st.meas.mode) +
                               " gamma=" + std::to_string(st.meas.gamma_bits) + "\n";
                        break;
                }
                break;
        }
    }
    return out;
}

} // namespace cvdv

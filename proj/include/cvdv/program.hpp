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

#pragma once

#include <cstdint>

#include "cvdv/compiler.hpp"
#include "cvdv/measure.hpp"

namespace cvdv {

/// Parse failure with position and the token set that would have been valid.
class ProgramError : public std::runtime_error {
  public:
    ProgramError(int line, int col, std::string message, std::vector<std::string> expected = {});
    int line() const { return line_; }
    int col() const { return col_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    int line_, col_;
    std::vector<std::string> expected_;
};

struct Program {
    int modes = 1;
    int qubits_per_mode = 4;
    int dv_qubits = 0;
    std::uint64_t seed = 0;

    struct Prep {
        enum class Kind { fock, coherent, vacuum };
        Kind kind = Kind::vacuum;
        int mode = 0;
        int fock_level = 0;
        cplx alpha = 0.0;
    };
    struct Meas {
        enum class Kind { homodyne, heterodyne, photon };
        Kind kind = Meas::Kind::homodyne;
        int mode = 0;
        QuadratureBasis basis = QuadratureBasis::position;
        int gamma_bits = 1; // photon: bit count, cutoff is 2^gamma - 1
    };
    struct Stmt {
        enum class Type { prep, gate, meas };
        Type type = Type::gate;
        Prep prep;
        HybridGate gate{HybridGate::Kind::D};
        Meas meas;
    };
    std::vector<Stmt> statements;
};

/// Line-oriented grammar; '#' starts a comment. Throws ProgramError with
/// line/column on any malformed input.
Program parse_program(const std::string& text);

/// Canonical text form; parse(print(p)) == p and print is idempotent.
std::string print_program(const Program& p);

/// Complex literal in the grammar's a+bi form (also plain reals and "bi").
cplx parse_complex_literal(const std::string& text);

} // namespace cvdv

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

#include <optional>

#include "cvdv/program.hpp"

namespace cvdv {

struct MeasurementRecord {
    std::size_t shot = 0;
    std::string protocol;
    int mode = 0;
    double x = 0.0;   // homodyne
    cplx alpha = 0.0; // heterodyne
    int k = 0;        // photon
    std::string to_json_line() const;
};

struct SimulationResult {
    std::vector<MeasurementRecord> records;
};

/// Runs the program `shots` times with per-shot derived rng streams; identical
/// (program, seed) pairs give byte-identical records.
SimulationResult simulate_program(const Program& p, std::size_t shots,
                                  std::optional<std::uint64_t> seed_override = std::nullopt);

/// Concatenated compiled circuit of the program's gate statements. Measurement
/// statements are rejected (adaptive protocols are not static circuits).
CompiledCircuit compile_program(const Program& p, CdForm cd_form = CdForm::cz_legs);

} // namespace cvdv

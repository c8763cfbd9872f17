// Copyright 2026 The Cohpar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHPAR_CIRCUIT_HPP
#define COHPAR_CIRCUIT_HPP

#include "cohpar/operator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cohpar {

using Bits = std::vector<std::uint8_t>;

/// Gate kinds. X, CNOT and TOFFOLI are the reversible set; AND, NAND and
/// NOT_I form the irreversible Boolean-network set.
enum class GateKind { X, Cnot, Toffoli, And, Nand, NotI };

bool kind_is_reversible(GateKind k);
int kind_control_arity(GateKind k);
std::string kind_name(GateKind k);

/// One gate. `controls` are read-only inputs; `target` is updated in place
/// for reversible kinds and NOT_I, and overwritten with the Boolean result
/// for AND/NAND (their explicit output wire).
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> controls;
    int target = 0;

    bool operator==(const Gate&) const = default;

    /// All wires the gate touches, ordered (controls..., target). The order
    /// fixes the local bit significance when the gate is used as an operator.
    std::vector<int> support() const;
};

struct AncillaInit {
    int wire = 0;
    int init = 0;

    bool operator==(const AncillaInit&) const = default;
};

/// A classical circuit: a wire count, designated input wires, preset ancilla
/// wires, and an ordered gate list evaluated front to back.
struct Circuit {
    int n_wires = 0;
    std::vector<int> input_wires;
    std::vector<AncillaInit> ancillas;
    std::vector<Gate> gates;

    bool operator==(const Circuit&) const = default;

    /// True iff every gate kind is in {X, CNOT, TOFFOLI}.
    bool reversible() const;
};

/// Validation finding. gate_index is -1 for circuit-level problems.
struct Diagnostic {
    int gate_index = -1;
    std::string message;
};

/// Checks all structural invariants; returns an empty list when the circuit
/// is well formed. Never throws.
std::vector<Diagnostic> validate(const Circuit& c);

void require_valid(const Circuit& c);

/// Runs the circuit on an input bitstring (one bit per input wire, in
/// input_wires order). Ancillas start at their init bits, every other wire
/// at 0. Returns the final value of all wires, wire 0 first.
Bits evaluate(const Circuit& c, const Bits& input);

/// Applies the gate list to an explicit full-wire state (reversible circuits
/// only); used by the unitary construction which ranges over every basis
/// state regardless of ancilla presets.
Bits apply_to_wires(const Circuit& c, Bits wires);

/// Partition of a circuit into depth layers of disjoint-support gates.
/// layers[d] holds indices into the circuit's gate list.
struct Layering {
    std::vector<std::vector<int>> layers;
    int total_gates = 0; // S
    int depth() const { return static_cast<int>(layers.size()); } // D
    double delta() const; // S / D, the mean layer width
};

/// As-soon-as-possible greedy layering: each gate lands in the first layer
/// after its latest wire-sharing predecessor.
Layering layerize(const Circuit& c);

/// State of all wires after layers 1..d of the ASAP layering, 1 <= d <= D.
Bits evaluate_truncated(const Circuit& c, int depth, const Bits& input);

/// The permutation matrix U with U|i> = |C(i)> for every basis state i of
/// the full register. Reversible circuits only; n_wires is capped by
/// sim_wire_cap().
Operator circuit_unitary(const Circuit& c);

/// Simulation wire cap: COHPAR_MAX_WIRES when set, else 12.
int sim_wire_cap();

// Bit/index helpers under the wire-0-least-significant convention.
std::uint64_t bits_to_index(const Bits& bits);
Bits index_to_bits(std::uint64_t index, int n_wires);
std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& s);

} // namespace cohpar

#endif

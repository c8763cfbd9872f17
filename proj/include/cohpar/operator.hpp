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

#ifndef COHPAR_OPERATOR_HPP
#define COHPAR_OPERATOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace cohpar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Entrywise construction / Hermiticity tolerance.
inline constexpr double kEntryTol = 1e-12;
// Unitarity / phase-equivalence tolerance after evolution (dims up to 4096).
inline constexpr double kUnitaryTol = 1e-10;

/// Dense operator on a register of qubits. The dimension is always a power
/// of two. Hermitian/unitary flags are derived from the entries on
/// construction, never set by callers.
///
/// Wire convention used throughout: wire 0 is the leftmost tensor factor and
/// the least-significant bit of a basis index, i.e. basis state |i> assigns
/// wire w the bit (i >> w) & 1.
class Operator {
  public:
    explicit Operator(Matrix entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    int wires() const { return wires_; }
    const Matrix& entries() const { return entries_; }
    bool hermitian() const { return hermitian_; }
    bool unitary() const { return unitary_; }

    static Operator identity(int dim);

  private:
    Matrix entries_;
    int wires_ = 0;
    bool hermitian_ = false;
    bool unitary_ = false;
};

/// Extremal eigenvalues of a Hermitian operator and their difference
/// p = h_max - h_min, the budgeted strength of a Hamiltonian. Invariant to
/// shifting H by any real multiple of the identity.
struct SpectralSpread {
    double h_max = 0.0;
    double h_min = 0.0;
    double p_value = 0.0;
};

/// Full symmetric eigendecomposition of a Hermitian operator; returns the
/// spectrum edges. Throws on non-Hermitian input.
SpectralSpread spectral_spread(const Operator& h);

/// Kronecker composition with the wire-0-leftmost convention: the left
/// operand occupies the low-order bits of the composite index.
Operator tensor_product(const Operator& a, const Operator& b);

/// Embeds `h` on the listed target wires (0-based, need not be contiguous)
/// of an n-wire register, acting as identity elsewhere. dim(h) must equal
/// 2^|wires|. Wire i of the operand maps to wires[i] of the register.
Operator embed_at(const Operator& h, const std::vector<int>& wires, int n_wires);

/// Single-wire convenience overload.
Operator embed_at(const Operator& h, int wire, int n_wires);

/// exp(-i*H*t) via Hermitian eigendecomposition H = V diag(w) V^dagger.
Operator evolve(const Operator& h, double t);

/// Independent oracle for generators that are both Hermitian and unitary
/// (spectrum in {-1,+1}): exp(-i*H*t) = cos(t) I - i sin(t) H.
Operator closed_form_evolve(const Operator& h, double t);

struct PhaseComparison {
    bool equal = false;
    double phase = 0.0; // arg(tr(U^dagger V)) when defined
    double fidelity = 0.0; // |tr(U^dagger V)| / dim
};

/// Global-phase equivalence of two unitaries: |tr(U^dagger V)|/dim >= 1 - tol.
PhaseComparison equal_up_to_global_phase(const Operator& u, const Operator& v, double tol);

// Gate library. Matrices are expressed on the gate's own wire tuple, ordered
// (controls..., target), first wire least significant.
Operator pauli_x();
Operator cnot_op();
Operator toffoli_op();

} // namespace cohpar

#endif

// hamiltonian.hpp
// Spin-chain Hamiltonians (transverse-field Ising), decomposition into
// T-local terms, and exact spectral reference data.

#pragma once

#include <vector>

#include "acqsim/statespace.hpp"

namespace acqsim {

// One Hamiltonian piece acting on a contiguous, sorted window of qubits.
struct LocalTerm {
    std::vector<int> support;  // contiguous ascending qubit indices
    DenseOperator block;       // Hermitian, dimension 2^|support|
};

enum class Boundary { open, periodic };

// H = sum_j J Z_j Z_{j+1} + sum_j h X_j on a chain of n_qubits spins.
// The ZZ sum has n-1 terms for open boundaries and n (with wrap) for
// periodic ones.
struct SpinChainModel {
    int n_qubits = 1;
    double coupling_j = 0.0;  // J, energy units
    double field_h = 0.0;     // h, energy units
    Boundary boundary = Boundary::open;

    DenseOperator hamiltonian() const;  // full dense H, assembled on demand
};

SpinChainModel build_tfim(int n, double J, double h,
                          Boundary boundary = Boundary::open);

// Splits the model into Hermitian blocks of support size <= T whose embedded
// sum reconstructs H exactly. Canonical grouping: every ZZ bond becomes one
// 2-local block that absorbs the X field of its endpoints, h/2 per interior
// qubit (a qubit shared by two bonds) and the full h at chain edges. With
// J = 0 the terms are the n single-qubit field blocks. Open boundaries only;
// T must cover the interaction range.
std::vector<LocalTerm> decompose_local(const SpinChainModel& model, int T);

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    StateVector ground_state;         // one unit-norm eigenvector of E0
    double gap = 0.0;                 // E1 - E0

    // Columns span the (possibly degenerate) ground eigenspace.
    CMatrix ground_subspace;

    // <psi|P0|psi>, the projector overlap with the full ground subspace.
    double ground_fidelity(const StateVector& psi) const;
};

// Dense diagonalization; n_qubits <= 14.
Spectrum exact_spectrum(const SpinChainModel& model);
Spectrum exact_spectrum(const DenseOperator& H);

}  // namespace acqsim

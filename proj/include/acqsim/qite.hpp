// qite.hpp
// The QITE subroutine: reconstruct Hermitian unitary generators over a
// truncated domain by least-squares matching of the normalized
// imaginary-time step, and sweep them over all Hamiltonian pieces.

#pragma once

#include <vector>

#include "acqsim/hamiltonian.hpp"
#include "acqsim/statespace.hpp"

namespace acqsim {

// A = sum_I a_I sigma_I over the Pauli strings supported on `domain`.
// Coefficients are real (Hermitian basis), indexed base-4 with letter order
// I,X,Y,Z per qubit and domain.front() the most significant digit; the
// identity entry (index 0) is excluded from the solve and stays zero.
struct QiteGenerator {
    std::vector<int> domain;     // contiguous ascending qubit indices
    int n_total = 0;             // full register size
    RVector coefficients;        // length 4^|domain|
    double residual = 0.0;       // achieved || Delta0 + i A psi ||

    DenseOperator window_operator() const;          // A restricted to the window
    DenseOperator to_operator() const;              // A embedded on the register
    double max_abs_coefficient() const;
};

// |Delta0> = (c^{-1/2} e^{-dtau h_k} |psi> - |psi>) / dtau with
// c = <psi| e^{-2 dtau h_k} |psi>; h_k is embedded on the full register.
CVector build_target(const LocalTerm& h_k, const StateVector& psi, double dtau);

// Window of size D centered on the support of h_k, clipped at the chain
// edges.
std::vector<int> domain_window(const LocalTerm& h_k, int D, int n_total);

// Minimizes || Delta0 + i A psi ||^2 over Hermitian A supported on `domain`
// via Tikhonov-regularized normal equations:
//   S_IJ = Re<sigma_I psi|sigma_J psi>,  b_I = Im<Delta0|sigma_I psi>,
//   (S + eps I) a = b,  eps = 1e-8 * trace(S) / 4^D.
QiteGenerator solve_generator(const LocalTerm& h_k, const StateVector& psi,
                              double dtau, const std::vector<int>& domain);

struct SweepResult {
    StateVector psi_next;
    std::vector<QiteGenerator> generators;  // one per term, in application order
    double energy_next = 0.0;               // <psi_next| sum_k h_k |psi_next>
};

// One QITE time step: for every local term (ascending by leftmost support
// qubit) solve the generator on its window and apply e^{-i dtau A_k} to the
// running state. dtau = 0 returns the input state and zero generators.
SweepResult qite_sweep(const std::vector<LocalTerm>& terms, const StateVector& psi,
                       double dtau, int D);

// <psi| sum_k embed(h_k) |psi>, evaluated without forming the full H.
double local_energy(const std::vector<LocalTerm>& terms, const StateVector& psi);

}  // namespace acqsim

// evolution.hpp
// Exact imaginary-time evolution and double-bracket unitary steps. These are
// the trusted references the approximate methods are compared against, so
// every exponential here is exact (spectral), never Trotterized.

#pragma once

#include "acqsim/statespace.hpp"

namespace acqsim {

// normalize(exp(-tau*H) |psi0>). Converges to the ground state for tau -> inf
// whenever <E0|psi0> != 0 (not enforced).
StateVector ite_evolve(const DenseOperator& H, const StateVector& psi0, double tau);

// One normalized step; composing k steps equals ite_evolve with tau = k*dtau.
StateVector ite_step(const DenseOperator& H, const StateVector& psi, double dtau);

// Residual of the normalized imaginary-time flow equation
//   d/dtau |psi> = -(H - E(psi)) |psi>
// measured with a centered finite difference of step dtau. Second order:
// halving dtau divides the residual by ~4.
double wick_residual(const DenseOperator& H, const StateVector& psi, double dtau);

// exp(s[rho,H]) |psi> with rho = |psi><psi|. The commutator is anti-Hermitian
// so the step is exactly unitary; for small s it matches ite_step to O(s^2).
StateVector db_qite_step(const DenseOperator& H, const StateVector& psi, double s);

// Hermitian K = i[rho,H], so that exp(-i s K) = exp(s[rho,H]). This is the
// generator the double-bracket step rotates with, in the same e^{-isA}
// convention used by the QITE unitaries.
DenseOperator db_generator(const DenseOperator& H, const StateVector& psi);

}  // namespace acqsim

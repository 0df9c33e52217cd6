#include "acqsim/evolution.hpp"

#include <stdexcept>

namespace acqsim {

namespace {

// exp(-tau*(H - Emin)) |psi>, normalized. The spectral shift keeps the
// amplitudes in floating-point range for large tau and cancels in the
// normalization.
StateVector ite_apply(const HermitianEigen& eig, const StateVector& psi, double tau) {
    const double shift = eig.eigenvalues().minCoeff();
    CVector coeffs = eig.eigenvectors().adjoint() * psi.amplitudes;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs[i] *= std::exp(-tau * (eig.eigenvalues()[i] - shift));
    return normalize(StateVector(psi.n_qubits, eig.eigenvectors() * coeffs));
}

}  // namespace

StateVector ite_evolve(const DenseOperator& H, const StateVector& psi0, double tau) {
    if (tau < 0) throw std::invalid_argument("ite_evolve requires tau >= 0");
    if (H.n_qubits != psi0.n_qubits)
        throw std::invalid_argument("operator/state dimension mismatch");
    if (tau == 0) return psi0;
    return ite_apply(HermitianEigen(H), psi0, tau);
}

StateVector ite_step(const DenseOperator& H, const StateVector& psi, double dtau) {
    if (dtau <= 0) throw std::invalid_argument("ite_step requires dtau > 0");
    return ite_evolve(H, psi, dtau);
}

double wick_residual(const DenseOperator& H, const StateVector& psi, double dtau) {
    if (dtau <= 0) throw std::invalid_argument("wick_residual requires dtau > 0");
    const HermitianEigen eig(H);
    const StateVector fwd = ite_apply(eig, psi, dtau);
    const StateVector bwd = ite_apply(eig, psi, -dtau);
    const CVector derivative = (fwd.amplitudes - bwd.amplitudes) / (2.0 * dtau);
    const double energy = expectation(psi, H);
    const CVector flow = (H.entries * psi.amplitudes) - energy * psi.amplitudes;
    return (derivative + flow).norm();
}

DenseOperator db_generator(const DenseOperator& H, const StateVector& psi) {
    if (H.n_qubits != psi.n_qubits)
        throw std::invalid_argument("operator/state dimension mismatch");
    const CVector hpsi = H.entries * psi.amplitudes;
    // [rho,H] = |psi><psi|H - H|psi><psi|;  K = i[rho,H] is Hermitian.
    CMatrix commutator = psi.amplitudes * hpsi.adjoint() - hpsi * psi.amplitudes.adjoint();
    return DenseOperator(H.n_qubits, Complex(0, 1) * commutator);
}

StateVector db_qite_step(const DenseOperator& H, const StateVector& psi, double s) {
    const DenseOperator K = db_generator(H, psi);
    const HermitianEigen eig(K);
    return StateVector(psi.n_qubits, eig.apply_exp(Complex(0, -s), psi.amplitudes));
}

}  // namespace acqsim

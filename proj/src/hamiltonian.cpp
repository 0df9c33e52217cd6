#include "acqsim/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace acqsim {

namespace {

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

DenseOperator SpinChainModel::hamiltonian() const {
    const auto d = static_cast<Eigen::Index>(dim_for(n_qubits));
    DenseOperator H(n_qubits, CMatrix::Zero(d, d));
    const DenseOperator X(1, pauli_x());
    if (n_qubits == 1) {
        H.entries = field_h * pauli_x();
        return H;
    }
    if (coupling_j != 0.0) {
        const DenseOperator ZZ(2, Eigen::kroneckerProduct(pauli_z(), pauli_z()).eval());
        // A periodic 2-site ring has a single distinct bond.
        const int bonds =
            (boundary == Boundary::open || n_qubits == 2) ? n_qubits - 1 : n_qubits;
        for (int j = 0; j < bonds; ++j)
            H.entries +=
                coupling_j * embed_operator(ZZ, {j, (j + 1) % n_qubits}, n_qubits).entries;
    }
    for (int j = 0; j < n_qubits; ++j)
        H.entries += field_h * embed_operator(X, {j}, n_qubits).entries;
    return H;
}

SpinChainModel build_tfim(int n, double J, double h, Boundary boundary) {
    if (n < 1) throw std::invalid_argument("build_tfim requires n >= 1");
    return SpinChainModel{n, J, h, boundary};
}

std::vector<LocalTerm> decompose_local(const SpinChainModel& model, int T) {
    const int n = model.n_qubits;
    if (T < 1) throw std::invalid_argument("decompose_local requires T >= 1");
    if (model.coupling_j != 0.0 && n > 1 && T < 2)
        throw std::invalid_argument(
            "T=1 cannot cover the ZZ interaction range; need T >= 2");
    if (model.boundary == Boundary::periodic && model.coupling_j != 0.0 && n > 2)
        throw std::invalid_argument(
            "local decomposition supports open boundaries only; the periodic wrap "
            "bond has no contiguous window");

    std::vector<LocalTerm> terms;
    const CMatrix X = pauli_x();
    if (model.coupling_j == 0.0 || n == 1) {
        for (int j = 0; j < n; ++j)
            terms.push_back({{j}, DenseOperator(1, model.field_h * X)});
        return terms;
    }

    const CMatrix ZZ = Eigen::kroneckerProduct(pauli_z(), pauli_z());
    const CMatrix XI = Eigen::kroneckerProduct(X, CMatrix::Identity(2, 2));
    const CMatrix IX = Eigen::kroneckerProduct(CMatrix::Identity(2, 2), X);
    for (int j = 0; j + 1 < n; ++j) {
        // Edge qubits belong to a single bond and keep their full field.
        const double left = (j == 0) ? 1.0 : 0.5;
        const double right = (j + 1 == n - 1) ? 1.0 : 0.5;
        CMatrix block = model.coupling_j * ZZ + model.field_h * (left * XI + right * IX);
        terms.push_back({{j, j + 1}, DenseOperator(2, std::move(block))});
    }
    return terms;
}

Spectrum exact_spectrum(const SpinChainModel& model) {
    if (model.n_qubits > 14)
        throw std::invalid_argument("exact_spectrum limited to n <= 14 qubits");
    return exact_spectrum(model.hamiltonian());
}

Spectrum exact_spectrum(const DenseOperator& H) {
    if (H.n_qubits > 14)
        throw std::invalid_argument("exact_spectrum limited to n <= 14 qubits");
    if (!H.is_hermitian())
        throw std::invalid_argument("exact_spectrum requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(H.entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");

    Spectrum spec;
    const auto& vals = solver.eigenvalues();
    spec.eigenvalues.assign(vals.data(), vals.data() + vals.size());
    spec.ground_state = StateVector(H.n_qubits, solver.eigenvectors().col(0));
    spec.gap = vals.size() > 1 ? vals[1] - vals[0] : 0.0;

    const double e0 = vals[0];
    const double tol = 1e-8 * std::max(1.0, std::abs(e0));
    Eigen::Index degeneracy = 1;
    while (degeneracy < vals.size() && vals[degeneracy] - e0 <= tol) ++degeneracy;
    spec.ground_subspace = solver.eigenvectors().leftCols(degeneracy);
    return spec;
}

double Spectrum::ground_fidelity(const StateVector& psi) const {
    if (psi.amplitudes.size() != ground_subspace.rows())
        throw std::invalid_argument("state dimension does not match spectrum");
    return std::min(1.0, (ground_subspace.adjoint() * psi.amplitudes).squaredNorm());
}

}  // namespace acqsim

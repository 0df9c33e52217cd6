#include "acqsim/qite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace acqsim {

namespace {

constexpr int kMaxDomain = 6;  // 4^D normal-equation budget

void check_term(const LocalTerm& term) {
    if (term.support.empty()) throw std::invalid_argument("local term has empty support");
    for (std::size_t i = 1; i < term.support.size(); ++i)
        if (term.support[i] != term.support[i - 1] + 1)
            throw std::invalid_argument("local term support must be contiguous ascending");
}

}  // namespace

DenseOperator QiteGenerator::window_operator() const {
    const int d = static_cast<int>(domain.size());
    const auto dim = static_cast<Eigen::Index>(dim_for(d));
    CMatrix acc = CMatrix::Zero(dim, dim);
    std::vector<int> local(d);
    for (int r = 0; r < d; ++r) local[r] = r;
    const auto basis = pauli_basis(local, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coefficients[i] == 0.0) continue;
        acc += coefficients[i] * basis[i].to_dense();
    }
    return DenseOperator(d, std::move(acc));
}

DenseOperator QiteGenerator::to_operator() const {
    return embed_operator(window_operator(), domain, n_total);
}

double QiteGenerator::max_abs_coefficient() const {
    return coefficients.size() ? coefficients.cwiseAbs().maxCoeff() : 0.0;
}

CVector build_target(const LocalTerm& h_k, const StateVector& psi, double dtau) {
    if (dtau <= 0) throw std::invalid_argument("build_target requires dtau > 0");
    check_term(h_k);
    if (!h_k.block.is_hermitian())
        throw std::invalid_argument("local term block must be Hermitian");

    const HermitianEigen eig(h_k.block);
    const CVector decayed =
        apply_embedded(eig.exp(-dtau).entries, h_k.support, psi.n_qubits, psi.amplitudes);
    // c = <psi|e^{-2 dtau h}|psi> = ||e^{-dtau h}|psi>||^2 for Hermitian h.
    const double c = decayed.squaredNorm();
    if (c <= 0 || !std::isfinite(c))
        throw std::runtime_error("normalization factor underflow in build_target");
    return (decayed / std::sqrt(c) - psi.amplitudes) / dtau;
}

std::vector<int> domain_window(const LocalTerm& h_k, int D, int n_total) {
    check_term(h_k);
    const int support_size = static_cast<int>(h_k.support.size());
    if (D < support_size)
        throw std::invalid_argument("domain size D must cover the term support");
    const int width = std::min(D, n_total);
    // center on the support, clip at the edges
    int lo = h_k.support.front() - (width - support_size) / 2;
    lo = std::max(0, std::min(lo, n_total - width));
    std::vector<int> window(width);
    for (int i = 0; i < width; ++i) window[i] = lo + i;
    return window;
}

QiteGenerator solve_generator(const LocalTerm& h_k, const StateVector& psi,
                              double dtau, const std::vector<int>& domain) {
    check_term(h_k);
    const int d = static_cast<int>(domain.size());
    if (d > kMaxDomain)
        throw std::invalid_argument("domain size exceeds the 4^D solve budget (D <= 6)");
    for (std::size_t i = 1; i < domain.size(); ++i)
        if (domain[i] != domain[i - 1] + 1)
            throw std::invalid_argument("domain must be contiguous ascending");
    for (int q : h_k.support)
        if (q < domain.front() || q > domain.back())
            throw std::invalid_argument("domain must contain the term support");
    if (domain.back() >= psi.n_qubits)
        throw std::invalid_argument("domain exceeds the register");

    const CVector target = build_target(h_k, psi, dtau);
    const auto basis = pauli_basis(domain, psi.n_qubits);
    const auto m = static_cast<Eigen::Index>(basis.size()) - 1;  // identity excluded

    // Columns of Phi are sigma_I |psi> for the non-identity strings.
    CMatrix phi(psi.amplitudes.size(), m);
    for (Eigen::Index j = 0; j < m; ++j)
        phi.col(j) = basis[j + 1].apply(psi.amplitudes);

    const Eigen::MatrixXd S = (phi.adjoint() * phi).real();
    // b_I = Im<Delta0|sigma_I psi>
    const Eigen::VectorXd b = (target.adjoint() * phi).imag().transpose();

    const double eps = 1e-8 * S.trace() / double(basis.size());
    Eigen::MatrixXd regularized = S;
    regularized.diagonal().array() += eps;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(regularized);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("normal equations are singular beyond regularization");
    const Eigen::VectorXd a = ldlt.solve(b);
    if (!a.allFinite())
        throw std::runtime_error("generator coefficients are not finite");

    QiteGenerator gen;
    gen.domain = domain;
    gen.n_total = psi.n_qubits;
    gen.coefficients = RVector::Zero(basis.size());
    gen.coefficients.tail(m) = a;
    gen.residual = (target + Complex(0, 1) * (phi * a.cast<Complex>())).norm();
    return gen;
}

double local_energy(const std::vector<LocalTerm>& terms, const StateVector& psi) {
    double energy = 0.0;
    for (const auto& term : terms) {
        const CVector applied =
            apply_embedded(term.block.entries, term.support, psi.n_qubits, psi.amplitudes);
        const Complex value = psi.amplitudes.dot(applied);
        energy += value.real();
    }
    return energy;
}

SweepResult qite_sweep(const std::vector<LocalTerm>& terms, const StateVector& psi,
                       double dtau, int D) {
    if (dtau < 0) throw std::invalid_argument("qite_sweep requires dtau >= 0");
    std::vector<std::size_t> order(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return terms[a].support.front() < terms[b].support.front();
    });

    SweepResult result;
    result.psi_next = psi;
    result.generators.reserve(terms.size());

    for (std::size_t idx : order) {
        const LocalTerm& term = terms[idx];
        const auto window = domain_window(term, D, psi.n_qubits);
        if (dtau == 0.0) {
            QiteGenerator zero;
            zero.domain = window;
            zero.n_total = psi.n_qubits;
            zero.coefficients = RVector::Zero(Eigen::Index(1) << (2 * window.size()));
            result.generators.push_back(std::move(zero));
            continue;
        }
        QiteGenerator gen = solve_generator(term, result.psi_next, dtau, window);
        const DenseOperator a_win = gen.window_operator();
        const DenseOperator u_win = herm_exp(a_win, Complex(0, -dtau));
        result.psi_next = StateVector(
            psi.n_qubits,
            apply_embedded(u_win.entries, window, psi.n_qubits, result.psi_next.amplitudes));
        result.generators.push_back(std::move(gen));
    }
    result.energy_next = local_energy(terms, result.psi_next);
    return result;
}

}  // namespace acqsim

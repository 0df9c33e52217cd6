// statespace.hpp
// Dense complex linear algebra over n-qubit Hilbert spaces: state vectors,
// Hermitian operators, Pauli strings, operator embedding and matrix
// exponentials.
//
// Index convention: qubit 0 is the MOST significant bit of the amplitude
// index, i.e. |q0 q1 ... q_{n-1}> maps to index q0*2^{n-1} + ... + q_{n-1}.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace acqsim {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

constexpr double kHermTol = 1e-10;   // relative to max entry magnitude
constexpr double kNormTol = 1e-12;

inline std::size_t dim_for(int n_qubits) { return std::size_t{1} << n_qubits; }

// Normalized complex amplitude vector over n qubits; a point on CP^(2^n - 1).
struct StateVector {
    int n_qubits = 0;
    CVector amplitudes;

    StateVector() = default;
    StateVector(int n, CVector amps);

    std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }

    static StateVector zero_state(int n_qubits);            // |00...0>
    static StateVector plus_state(int n_qubits);             // |++...+>
    static StateVector basis_state(int n_qubits, std::uint64_t index);
};

struct DenseOperator {
    int n_qubits = 0;
    CMatrix entries;

    DenseOperator() = default;
    DenseOperator(int n, CMatrix m);

    std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
    bool is_hermitian(double tol = kHermTol) const;

    static DenseOperator identity(int n_qubits);

    DenseOperator& operator+=(const DenseOperator& other);
    DenseOperator& operator*=(Complex scale);
};

DenseOperator operator+(DenseOperator lhs, const DenseOperator& rhs);
DenseOperator operator*(Complex scale, DenseOperator op);

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

// Tensor product of {I,X,Y,Z} over n qubits, stored as two bitmasks
// (bit q of a mask refers to qubit q). X has the x bit set, Z the z bit,
// Y both. The represented operator carries no global phase.
class PauliString {
  public:
    explicit PauliString(int n_qubits);  // identity string
    PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    // letters[q] is the letter on qubit q, e.g. "XIZ".
    static PauliString from_letters(std::string_view letters);

    int n_qubits() const { return n_qubits_; }
    Pauli letter(int qubit) const;
    int weight() const;  // count of non-identity letters
    bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }

    // Group product: this * rhs = phase * result, phase in {1, i, -1, -i}.
    std::pair<PauliString, Complex> product(const PauliString& rhs) const;

    // Action sigma|v> on a full-register vector of length 2^n.
    CVector apply(const CVector& v) const;

    CMatrix to_dense() const;
    std::string to_string() const;

    bool operator==(const PauliString& rhs) const = default;

  private:
    int n_qubits_;
    std::uint64_t x_mask_;  // qubit-indexed
    std::uint64_t z_mask_;
};

// All 4^k Pauli strings supported on `qubits` of an n_total register,
// enumerated base-4 (letter order I,X,Y,Z) with qubits[0] the most
// significant digit. Entry 0 is the identity.
std::vector<PauliString> pauli_basis(const std::vector<int>& qubits, int n_total);

StateVector normalize(const StateVector& state);

// |<a|b>|, phase invariant, in [0,1].
double overlap_fidelity(const StateVector& a, const StateVector& b);

// <state|O|state> for Hermitian O; throws if the imaginary residue exceeds
// tolerance, discards it otherwise.
double expectation(const StateVector& state, const DenseOperator& O);

Complex inner(const StateVector& a, const StateVector& b);  // <a|b>

// Embeds an m-qubit block on the given (distinct, each < n_total) qubits of
// an n_total register, acting as identity elsewhere. support[r] is the
// register qubit carrying block qubit r.
DenseOperator embed_operator(const DenseOperator& block,
                             const std::vector<int>& support, int n_total);

// embed_operator(block, support, n) * v without forming the full matrix.
CVector apply_embedded(const CMatrix& block, const std::vector<int>& support,
                       int n_total, const CVector& v);

// exp(scale * H) for Hermitian H via spectral decomposition.
DenseOperator herm_exp(const DenseOperator& H, Complex scale);

// Cached eigendecomposition of a Hermitian operator, for repeated
// exponentials exp(scale*H) of the same generator at different scales.
class HermitianEigen {
  public:
    explicit HermitianEigen(const DenseOperator& H);

    DenseOperator exp(Complex scale) const;
    CVector apply_exp(Complex scale, const CVector& v) const;

    const RVector& eigenvalues() const { return eigenvalues_; }
    const CMatrix& eigenvectors() const { return eigenvectors_; }
    int n_qubits() const { return n_qubits_; }

  private:
    int n_qubits_;
    RVector eigenvalues_;
    CMatrix eigenvectors_;
};

}  // namespace acqsim

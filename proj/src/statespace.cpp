#include "acqsim/statespace.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace acqsim {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24)
        throw std::invalid_argument("qubit count must be in [1, 24], got " +
                                    std::to_string(n_qubits));
}

}  // namespace

StateVector::StateVector(int n, CVector amps) : n_qubits(n), amplitudes(std::move(amps)) {
    check_qubit_count(n);
    if (dim() != dim_for(n))
        throw std::invalid_argument("amplitude vector length " + std::to_string(dim()) +
                                    " does not match 2^" + std::to_string(n));
}

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::plus_state(int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t d = dim_for(n_qubits);
    CVector amps = CVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const std::size_t d = dim_for(n_qubits);
    if (index >= d) throw std::invalid_argument("basis index out of range");
    CVector amps = CVector::Zero(d);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

DenseOperator::DenseOperator(int n, CMatrix m) : n_qubits(n), entries(std::move(m)) {
    check_qubit_count(n);
    const auto d = static_cast<Eigen::Index>(dim_for(n));
    if (entries.rows() != d || entries.cols() != d)
        throw std::invalid_argument("operator dimension does not match 2^n x 2^n");
}

bool DenseOperator::is_hermitian(double tol) const {
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

DenseOperator DenseOperator::identity(int n_qubits) {
    check_qubit_count(n_qubits);
    const auto d = static_cast<Eigen::Index>(dim_for(n_qubits));
    return DenseOperator(n_qubits, CMatrix::Identity(d, d));
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
    if (other.n_qubits != n_qubits) throw std::invalid_argument("operator size mismatch in +=");
    entries += other.entries;
    return *this;
}

DenseOperator& DenseOperator::operator*=(Complex scale) {
    entries *= scale;
    return *this;
}

DenseOperator operator+(DenseOperator lhs, const DenseOperator& rhs) {
    lhs += rhs;
    return lhs;
}

DenseOperator operator*(Complex scale, DenseOperator op) {
    op *= scale;
    return op;
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits), x_mask_(0), z_mask_(0) {
    check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask) {
    check_qubit_count(n_qubits);
    const std::uint64_t valid = (n_qubits == 64) ? ~0ull : ((1ull << n_qubits) - 1);
    if ((x_mask & ~valid) || (z_mask & ~valid))
        throw std::invalid_argument("Pauli mask refers to qubits outside the register");
}

PauliString PauliString::from_letters(std::string_view letters) {
    PauliString s(static_cast<int>(letters.size()));
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': s.x_mask_ |= 1ull << q; break;
            case 'Y': s.x_mask_ |= 1ull << q; s.z_mask_ |= 1ull << q; break;
            case 'Z': s.z_mask_ |= 1ull << q; break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                            letters[q] + "'");
        }
    }
    return s;
}

Pauli PauliString::letter(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) throw std::invalid_argument("qubit out of range");
    const bool x = (x_mask_ >> qubit) & 1;
    const bool z = (z_mask_ >> qubit) & 1;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

int PauliString::weight() const {
    return std::popcount(x_mask_ | z_mask_);
}

std::pair<PauliString, Complex> PauliString::product(const PauliString& rhs) const {
    if (rhs.n_qubits_ != n_qubits_)
        throw std::invalid_argument("Pauli string size mismatch in product");
    // Single-qubit products, indexed [lhs][rhs]; phase exponent counts i's.
    // X*Y = iZ, Y*Z = iX, Z*X = iY and the reverses pick up -i.
    static const int phase_exp[4][4] = {
        {0, 0, 0, 0},   // I *
        {0, 0, 1, 3},   // X * {I,X,Y,Z}
        {0, 3, 0, 1},   // Y *
        {0, 1, 3, 0},   // Z *
    };
    int exponent = 0;
    for (int q = 0; q < n_qubits_; ++q) {
        const int a = static_cast<int>(letter(q));
        const int b = static_cast<int>(rhs.letter(q));
        exponent = (exponent + phase_exp[a][b]) % 4;
    }
    static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {PauliString(n_qubits_, x_mask_ ^ rhs.x_mask_, z_mask_ ^ rhs.z_mask_),
            i_pow[exponent]};
}

namespace {

// Maps qubit-indexed masks to amplitude-index space (qubit 0 = MSB).
std::uint64_t to_index_mask(std::uint64_t qubit_mask, int n_qubits) {
    std::uint64_t m = 0;
    for (int q = 0; q < n_qubits; ++q)
        if ((qubit_mask >> q) & 1) m |= 1ull << (n_qubits - 1 - q);
    return m;
}

}  // namespace

CVector PauliString::apply(const CVector& v) const {
    if (v.size() != static_cast<Eigen::Index>(dim_for(n_qubits_)))
        throw std::invalid_argument("vector length does not match Pauli register");
    const std::uint64_t xm = to_index_mask(x_mask_, n_qubits_);
    const std::uint64_t zm = to_index_mask(z_mask_, n_qubits_);
    static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex y_phase = i_pow[std::popcount(x_mask_ & z_mask_) % 4];

    CVector out(v.size());
    const auto d = static_cast<std::uint64_t>(v.size());
    for (std::uint64_t i = 0; i < d; ++i) {
        const Complex sign = (std::popcount(i & zm) & 1) ? Complex(-1, 0) : Complex(1, 0);
        out[i ^ xm] = y_phase * sign * v[i];
    }
    return out;
}

CMatrix PauliString::to_dense() const {
    const auto d = static_cast<Eigen::Index>(dim_for(n_qubits_));
    const std::uint64_t xm = to_index_mask(x_mask_, n_qubits_);
    const std::uint64_t zm = to_index_mask(z_mask_, n_qubits_);
    static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex y_phase = i_pow[std::popcount(x_mask_ & z_mask_) % 4];

    CMatrix m = CMatrix::Zero(d, d);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(d); ++i) {
        const Complex sign = (std::popcount(i & zm) & 1) ? Complex(-1, 0) : Complex(1, 0);
        m(i ^ xm, i) = y_phase * sign;
    }
    return m;
}

std::string PauliString::to_string() const {
    std::string s(n_qubits_, 'I');
    for (int q = 0; q < n_qubits_; ++q) s[q] = pauli_char(letter(q));
    return s;
}

std::vector<PauliString> pauli_basis(const std::vector<int>& qubits, int n_total) {
    for (int q : qubits)
        if (q < 0 || q >= n_total) throw std::invalid_argument("basis qubit out of range");
    const std::size_t count = std::size_t{1} << (2 * qubits.size());
    std::vector<PauliString> basis;
    basis.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::uint64_t xm = 0, zm = 0;
        std::size_t rest = code;
        for (std::size_t r = qubits.size(); r-- > 0;) {
            const int letter = rest & 3;  // 0=I,1=X,2=Y,3=Z
            rest >>= 2;
            const std::uint64_t bit = 1ull << qubits[r];
            if (letter == 1 || letter == 2) xm |= bit;
            if (letter == 2 || letter == 3) zm |= bit;
        }
        basis.emplace_back(n_total, xm, zm);
    }
    return basis;
}

StateVector normalize(const StateVector& state) {
    const double n = state.norm();
    if (n < 1e-14) throw std::invalid_argument("cannot normalize a (near-)zero vector");
    return StateVector(state.n_qubits, state.amplitudes / n);
}

double overlap_fidelity(const StateVector& a, const StateVector& b) {
    return std::min(1.0, std::abs(inner(a, b)));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("state dimension mismatch in inner product");
    return a.amplitudes.dot(b.amplitudes);  // Eigen's dot conjugates the left argument
}

double expectation(const StateVector& state, const DenseOperator& O) {
    if (O.n_qubits != state.n_qubits)
        throw std::invalid_argument("operator/state dimension mismatch in expectation");
    if (!O.is_hermitian())
        throw std::invalid_argument("expectation requires a Hermitian operator");
    const Complex value = state.amplitudes.dot(O.entries * state.amplitudes);
    const double scale = std::max(1.0, std::abs(value));
    if (std::abs(value.imag()) > 1e-10 * scale)
        throw std::runtime_error("expectation value has non-negligible imaginary part");
    return value.real();
}

DenseOperator embed_operator(const DenseOperator& block,
                             const std::vector<int>& support, int n_total) {
    const int m = block.n_qubits;
    if (static_cast<int>(support.size()) != m)
        throw std::invalid_argument("support size does not match block qubit count");
    std::uint64_t seen = 0;
    for (int q : support) {
        if (q < 0 || q >= n_total) throw std::invalid_argument("support qubit out of range");
        if ((seen >> q) & 1) throw std::invalid_argument("duplicate qubit in support");
        seen |= 1ull << q;
    }

    // Precompute index-bit positions of block and rest qubits.
    std::vector<int> block_shift(m);
    for (int r = 0; r < m; ++r) block_shift[r] = n_total - 1 - support[r];
    std::vector<int> rest_shift;
    for (int q = 0; q < n_total; ++q)
        if (!((seen >> q) & 1)) rest_shift.push_back(n_total - 1 - q);

    const std::uint64_t block_dim = 1ull << m;
    const std::uint64_t rest_dim = 1ull << rest_shift.size();
    const auto d = static_cast<Eigen::Index>(dim_for(n_total));
    CMatrix out = CMatrix::Zero(d, d);

    std::vector<std::uint64_t> rest_index(rest_dim, 0);
    for (std::uint64_t r = 0; r < rest_dim; ++r) {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < rest_shift.size(); ++k)
            if ((r >> (rest_shift.size() - 1 - k)) & 1) idx |= 1ull << rest_shift[k];
        rest_index[r] = idx;
    }
    std::vector<std::uint64_t> block_index(block_dim, 0);
    for (std::uint64_t b = 0; b < block_dim; ++b) {
        std::uint64_t idx = 0;
        for (int r = 0; r < m; ++r)
            if ((b >> (m - 1 - r)) & 1) idx |= 1ull << block_shift[r];
        block_index[b] = idx;
    }

    for (std::uint64_t bi = 0; bi < block_dim; ++bi)
        for (std::uint64_t bj = 0; bj < block_dim; ++bj) {
            const Complex value = block.entries(bi, bj);
            if (value == Complex(0, 0)) continue;
            for (std::uint64_t r = 0; r < rest_dim; ++r)
                out(block_index[bi] | rest_index[r], block_index[bj] | rest_index[r]) = value;
        }
    return DenseOperator(n_total, std::move(out));
}

CVector apply_embedded(const CMatrix& block, const std::vector<int>& support,
                       int n_total, const CVector& v) {
    const int m = static_cast<int>(support.size());
    if (block.rows() != block.cols() ||
        block.rows() != static_cast<Eigen::Index>(1ull << m))
        throw std::invalid_argument("block dimension does not match support size");
    if (v.size() != static_cast<Eigen::Index>(dim_for(n_total)))
        throw std::invalid_argument("vector length does not match register");
    std::uint64_t seen = 0;
    for (int q : support) {
        if (q < 0 || q >= n_total) throw std::invalid_argument("support qubit out of range");
        if ((seen >> q) & 1) throw std::invalid_argument("duplicate qubit in support");
        seen |= 1ull << q;
    }

    std::vector<int> block_shift(m);
    for (int r = 0; r < m; ++r) block_shift[r] = n_total - 1 - support[r];
    std::vector<int> rest_shift;
    for (int q = 0; q < n_total; ++q)
        if (!((seen >> q) & 1)) rest_shift.push_back(n_total - 1 - q);

    const std::uint64_t block_dim = 1ull << m;
    const std::uint64_t rest_dim = 1ull << rest_shift.size();

    std::vector<std::uint64_t> block_index(block_dim, 0);
    for (std::uint64_t b = 0; b < block_dim; ++b) {
        std::uint64_t idx = 0;
        for (int r = 0; r < m; ++r)
            if ((b >> (m - 1 - r)) & 1) idx |= 1ull << block_shift[r];
        block_index[b] = idx;
    }

    CVector out(v.size());
    CVector gathered(block_dim);
    for (std::uint64_t r = 0; r < rest_dim; ++r) {
        std::uint64_t rest_idx = 0;
        for (std::size_t k = 0; k < rest_shift.size(); ++k)
            if ((r >> (rest_shift.size() - 1 - k)) & 1) rest_idx |= 1ull << rest_shift[k];
        for (std::uint64_t b = 0; b < block_dim; ++b)
            gathered[b] = v[block_index[b] | rest_idx];
        const CVector scattered = block * gathered;
        for (std::uint64_t b = 0; b < block_dim; ++b)
            out[block_index[b] | rest_idx] = scattered[b];
    }
    return out;
}

DenseOperator herm_exp(const DenseOperator& H, Complex scale) {
    return HermitianEigen(H).exp(scale);
}

HermitianEigen::HermitianEigen(const DenseOperator& H) : n_qubits_(H.n_qubits) {
    if (!H.is_hermitian())
        throw std::invalid_argument("herm_exp requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(H.entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigendecomposition failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

DenseOperator HermitianEigen::exp(Complex scale) const {
    CVector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
        phases[i] = std::exp(scale * eigenvalues_[i]);
    CMatrix result = eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
    return DenseOperator(n_qubits_, std::move(result));
}

CVector HermitianEigen::apply_exp(Complex scale, const CVector& v) const {
    CVector coeffs = eigenvectors_.adjoint() * v;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs[i] *= std::exp(scale * eigenvalues_[i]);
    return eigenvectors_ * coeffs;
}

}  // namespace acqsim

#include "qsim/states_gates.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

std::size_t log2_exact(std::size_t n) {
    if (n == 0 || !std::has_single_bit(n)) {
        return static_cast<std::size_t>(-1);
    }
    return static_cast<std::size_t>(std::countr_zero(n));
}

bool is_unitary(const CMatrix &m) {
    const auto id = CMatrix::identity(m.rows());
    return approx_equal(matmul(conj_transpose(m), m), id) &&
           approx_equal(matmul(m, conj_transpose(m)), id);
}

} // namespace

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_ = log2_exact(amplitudes_.size());
    if (qubits_ == static_cast<std::size_t>(-1) || qubits_ == 0) {
        throw ArgumentError("StateVector: length " + std::to_string(amplitudes_.size()) +
                            " is not a power of two >= 2");
    }
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ArgumentError("StateVector: non-finite amplitude");
        }
    }
    if (std::abs(norm2(amplitudes_) - 1.0) > kNormTolerance) {
        throw ArgumentError("StateVector: not normalized (norm2 = " +
                            std::to_string(norm2(amplitudes_)) + ")");
    }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(CVector(amplitudes)) {}

StateVector StateVector::basis(std::size_t qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << qubits;
    if (index >= dim) {
        throw ArgumentError("StateVector::basis: index out of range");
    }
    CVector v(dim);
    v[index] = 1.0;
    return StateVector(std::move(v));
}

StateVector kron(const StateVector &a, const StateVector &b) {
    return StateVector(kron(a.amplitudes(), b.amplitudes()));
}

GateMatrix::GateMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) {
        throw DimensionError("GateMatrix: not square", matrix_.rows(), matrix_.cols());
    }
    arity_ = log2_exact(matrix_.rows());
    if (arity_ == static_cast<std::size_t>(-1) || arity_ == 0) {
        throw ArgumentError("GateMatrix: dimension is not 2^k with k >= 1");
    }
    if (!is_unitary(matrix_)) {
        throw ArgumentError("GateMatrix: matrix is not unitary");
    }
}

GateMatrix::GateMatrix(CMatrix matrix, Unchecked)
    : matrix_(std::move(matrix)), arity_(log2_exact(matrix_.rows())) {}

StateVector GateMatrix::apply(const StateVector &s) const {
    return StateVector(matvec(matrix_, s.amplitudes()));
}

const StateVector &canonical_state(CanonicalState which) {
    static const std::array<StateVector, 6> table = {
        StateVector{1.0, 0.0},
        StateVector{0.0, 1.0},
        StateVector{kInvSqrt2, kInvSqrt2},
        StateVector{kInvSqrt2, -kInvSqrt2},
        StateVector{kInvSqrt2, kI * kInvSqrt2},
        StateVector{kInvSqrt2, -kI * kInvSqrt2},
    };
    return table[static_cast<std::size_t>(which)];
}

std::string_view to_string(CanonicalState which) {
    switch (which) {
    case CanonicalState::zero: return "zero";
    case CanonicalState::one: return "one";
    case CanonicalState::plus: return "plus";
    case CanonicalState::minus: return "minus";
    case CanonicalState::plus_i: return "plus_i";
    case CanonicalState::minus_i: return "minus_i";
    }
    return "?";
}

const StateVector &canonical_state(std::string_view name) {
    for (auto s : kCanonicalStates) {
        if (to_string(s) == name) {
            return canonical_state(s);
        }
    }
    throw ArgumentError("unknown canonical state '" + std::string(name) + "'");
}

const GateMatrix &gate(GateKind kind) {
    static const std::array<GateMatrix, 9> table = {
        GateMatrix(CMatrix{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}),
        GateMatrix(CMatrix{{0.0, 1.0}, {1.0, 0.0}}),
        GateMatrix(CMatrix{{0.0, -kI}, {kI, 0.0}}),
        GateMatrix(CMatrix{{1.0, 0.0}, {0.0, -1.0}}),
        GateMatrix(CMatrix{{1.0, 0.0}, {0.0, kI}}),
        GateMatrix(CMatrix{{1.0, 0.0}, {0.0, -kI}}),
        GateMatrix(CMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}}),
        GateMatrix(CMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, -std::numbers::pi / 4)}}),
        GateMatrix(CMatrix::identity(2)),
    };
    return table[static_cast<std::size_t>(kind)];
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdagger: return "Sdagger";
    case GateKind::T: return "T";
    case GateKind::Tdagger: return "Tdagger";
    case GateKind::I: return "I";
    }
    return "?";
}

const GateMatrix &gate(std::string_view name) {
    for (auto k : kGateKinds) {
        if (to_string(k) == name) {
            return gate(k);
        }
    }
    throw ArgumentError("unknown gate '" + std::string(name) + "'");
}

GateMatrix lift_single(const GateMatrix &g, std::size_t target, std::size_t register_size) {
    if (g.arity() != 1) {
        throw ArgumentError("lift_single: gate must act on one qubit");
    }
    if (register_size == 0 || register_size > kMaxQubits) {
        throw ArgumentError("lift_single: register size " + std::to_string(register_size) +
                            " out of range");
    }
    if (target >= register_size) {
        throw ArgumentError("lift_single: target " + std::to_string(target) +
                            " out of range for " + std::to_string(register_size) + " qubits");
    }
    const auto id = CMatrix::identity(2);
    CMatrix acc = target == 0 ? g.matrix() : id;
    for (std::size_t slot = 1; slot < register_size; ++slot) {
        acc = kron(acc, slot == target ? g.matrix() : id);
    }
    return GateMatrix(std::move(acc), GateMatrix::Unchecked{});
}

GateMatrix cnot(std::size_t control, std::size_t target, std::size_t register_size) {
    if (register_size < 2 || register_size > kMaxQubits) {
        throw ArgumentError("cnot: register size " + std::to_string(register_size) +
                            " out of range");
    }
    if (control >= register_size || target >= register_size) {
        throw ArgumentError("cnot: qubit index out of range");
    }
    if (control == target) {
        throw ArgumentError("cnot: control and target must differ");
    }
    const std::size_t dim = std::size_t{1} << register_size;
    const std::size_t control_mask = std::size_t{1} << (register_size - 1 - control);
    const std::size_t target_mask = std::size_t{1} << (register_size - 1 - target);
    CMatrix m(dim, dim);
    for (std::size_t in = 0; in < dim; ++in) {
        const std::size_t out = (in & control_mask) ? (in ^ target_mask) : in;
        m(out, in) = 1.0;
    }
    return GateMatrix(std::move(m), GateMatrix::Unchecked{});
}

StateVector state_from_string(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxQubits) {
        throw ArgumentError("state_from_string: length must be in 1.." +
                            std::to_string(kMaxQubits));
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ArgumentError(std::string("state_from_string: invalid character '") + c + "'");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return StateVector::basis(bits.size(), index);
}

std::string string_from_state(const StateVector &s) {
    std::size_t hit = s.dimension();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        const double mag = std::abs(s[i]);
        if (std::abs(mag - 1.0) <= kComplexTolerance) {
            hit = i;
        } else if (mag > kComplexTolerance) {
            throw NotBasisStateError();
        }
    }
    if (hit == s.dimension()) {
        throw NotBasisStateError();
    }
    std::string out(s.qubit_count(), '0');
    for (std::size_t q = 0; q < s.qubit_count(); ++q) {
        if (hit & (std::size_t{1} << (s.qubit_count() - 1 - q))) {
            out[q] = '1';
        }
    }
    return out;
}

StateVector change_basis(const StateVector &s, Basis basis) {
    if (s.qubit_count() != 1) {
        throw ArgumentError("change_basis: expected a single-qubit state");
    }
    switch (basis) {
    case Basis::x: return gate(GateKind::H).apply(s);
    case Basis::y: return gate(GateKind::H).apply(gate(GateKind::Sdagger).apply(s));
    case Basis::z: return s;
    }
    return s;
}

} // namespace qsim

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qsim/linalg.hpp"

namespace qsim {

/// Normalization tolerance enforced on every StateVector.
inline constexpr double kNormTolerance = 1e-10;

/// Normalized amplitude vector of 2^n entries in canonical ordering: qubit 0 is
/// the leftmost tensor factor and the most significant bit of the index.
class StateVector {
public:
    /// Throws ArgumentError unless the length is a power of two, every entry is
    /// finite and the norm is 1 within kNormTolerance.
    explicit StateVector(CVector amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    std::size_t qubit_count() const noexcept { return qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    const CVector &amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |k> on `qubits` qubits.
    static StateVector basis(std::size_t qubits, std::size_t index);

    friend bool operator==(const StateVector &, const StateVector &) = default;

private:
    CVector amplitudes_;
    std::size_t qubits_ = 0;
};

StateVector kron(const StateVector &a, const StateVector &b);

/// Square unitary matrix acting on `arity` qubits.
class GateMatrix {
public:
    /// Throws ArgumentError if the matrix is not 2^k x 2^k or not unitary within 1e-10.
    explicit GateMatrix(CMatrix matrix);

    std::size_t arity() const noexcept { return arity_; }
    const CMatrix &matrix() const noexcept { return matrix_; }

    StateVector apply(const StateVector &s) const;

    friend bool operator==(const GateMatrix &, const GateMatrix &) = default;

private:
    struct Unchecked {};
    GateMatrix(CMatrix matrix, Unchecked);

    friend GateMatrix lift_single(const GateMatrix &, std::size_t, std::size_t);
    friend GateMatrix cnot(std::size_t, std::size_t, std::size_t);

    CMatrix matrix_;
    std::size_t arity_ = 0;
};

enum class CanonicalState { zero, one, plus, minus, plus_i, minus_i };

inline constexpr CanonicalState kCanonicalStates[] = {
    CanonicalState::zero, CanonicalState::one,    CanonicalState::plus,
    CanonicalState::minus, CanonicalState::plus_i, CanonicalState::minus_i};

const StateVector &canonical_state(CanonicalState which);
/// Accepts "zero", "one", "plus", "minus", "plus_i", "minus_i".
const StateVector &canonical_state(std::string_view name);
std::string_view to_string(CanonicalState which);

enum class GateKind { H, X, Y, Z, S, Sdagger, T, Tdagger, I };

inline constexpr GateKind kGateKinds[] = {GateKind::H, GateKind::X,       GateKind::Y,
                                          GateKind::Z, GateKind::S,       GateKind::Sdagger,
                                          GateKind::T, GateKind::Tdagger, GateKind::I};

const GateMatrix &gate(GateKind kind);
/// Accepts the enumerator spellings: "H", "X", ..., "Sdagger", "Tdagger", "I".
const GateMatrix &gate(std::string_view name);
std::string_view to_string(GateKind kind);

/// I (x) ... (x) g (x) ... (x) I with g in tensor slot `target` of `register_size`.
/// Requires g.arity() == 1 and 1 <= register_size <= kMaxQubits.
GateMatrix lift_single(const GateMatrix &g, std::size_t target, std::size_t register_size);

/// CNOT on an n-qubit register, built as the basis permutation that flips bit
/// `target` whenever bit `control` is set.
GateMatrix cnot(std::size_t control, std::size_t target, std::size_t register_size);

/// Largest register the constructors accept.
inline constexpr std::size_t kMaxQubits = 10;

/// "10011" -> |10011>, leftmost character most significant.
StateVector state_from_string(std::string_view bits);

/// Inverse of state_from_string; accepts a basis vector times a global phase.
/// Throws NotBasisStateError otherwise.
std::string string_from_state(const StateVector &s);

enum class Basis { x, y, z };

/// x: H|s>, y: H S^dagger |s>. Only single-qubit states.
StateVector change_basis(const StateVector &s, Basis basis);

} // namespace qsim

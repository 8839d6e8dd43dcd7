#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "qsim/probability.hpp"
#include "qsim/register_collection.hpp"
#include "qsim/reordering.hpp"
#include "qsim/states_gates.hpp"

namespace qsim {

struct BlochCoords {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

bool approx_equal(const BlochCoords &a, const BlochCoords &b, double tol);

BlochCoords bloch_of(const StateVector &single_qubit);

/// Tolerance of the *_equal predicates.
inline constexpr double kCompareTolerance = 1e-6;

/// Ideal gate-model machine with qubits "q0".."q{n-1}", all starting in |0>.
///
/// Qubits live in the smallest registers that can represent them: single-qubit
/// gates act inside the containing register, CNOT merges two registers only
/// when the result is not a product of z-basis states, and measurement
/// collapses the whole containing register.
///
/// Not thread-safe; distinct instances are independent.
class QuantumComputer {
public:
    static constexpr std::size_t kDefaultQubits = 5;

    explicit QuantumComputer(std::uint64_t seed, std::size_t qubit_count = kDefaultQubits);
    /// Seeds from std::random_device.
    QuantumComputer();

    /// Fresh singleton registers in |0> and the RNG reseeded with seed().
    void reset();

    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t qubit_count() const noexcept { return qubits_.qubit_count(); }
    const RegisterCollection &qubits() const noexcept { return qubits_; }

    void apply_gate(const GateMatrix &g, const std::string &qubit);
    void apply_gate(GateKind kind, const std::string &qubit) { apply_gate(gate(kind), qubit); }
    void apply_cnot(const std::string &control, const std::string &target);

    /// Samples a basis state of the register containing `qubit` with
    /// probability |c_k|^2 and collapses that register onto it. The first
    /// measurement of a register stores its pre-collapse state as the noop.
    void measure(const std::string &qubit);

    /// Bloch coordinates (<X>, <Y>, <Z>); throws SeparationError when the qubit
    /// cannot be split off its register.
    BlochCoords bloch(const std::string &qubit) const;

    /// Joint state of the requested qubits in increasing machine order. May
    /// merge registers and reorder qubits within them.
    StateVector ordered_state(const RequestedOrder &order);
    StateVector ordered_state(std::string_view names);

    bool probabilities_equal(const RequestedOrder &order, std::span<const double> expected);
    bool probabilities_equal(std::string_view names, std::span<const double> expected);
    /// Amplitude comparison up to a global phase.
    bool qubit_states_equal(const RequestedOrder &order, const StateVector &expected);
    bool qubit_states_equal(std::string_view names, const StateVector &expected);
    bool bloch_coords_equal(const std::string &qubit, const BlochCoords &expected) const;

    /// Copy in which every measured register is rolled back to its noop.
    QuantumComputer pre_measurement_view() const;

private:
    RegisterCollection qubits_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

} // namespace qsim

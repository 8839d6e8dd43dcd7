#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsim/states_gates.hpp"

namespace qsim {

/// Named, ordered group of qubits sharing one state vector. Name i labels
/// tensor slot i of the state.
///
/// The noop slot keeps the state as it was right before the first measurement
/// of this register. It is simulator-only information: real hardware cannot
/// hand back a pre-collapse state.
class QuantumRegister {
public:
    /// Single qubit in |0>.
    explicit QuantumRegister(std::string name);
    /// Throws ArgumentError on duplicate names or a state of the wrong size.
    QuantumRegister(std::vector<std::string> names, StateVector state);

    std::size_t num_qubits() const noexcept { return names_.size(); }
    const std::vector<std::string> &qubit_names() const noexcept { return names_; }
    const StateVector &get_state() const noexcept { return state_; }
    const std::optional<StateVector> &get_noop() const noexcept { return noop_; }

    bool contains(const std::string &name) const;
    /// Tensor slot of `name`; throws ArgumentError when absent.
    std::size_t position_of(const std::string &name) const;

    /// Replaces the state; dimension must stay 2^num_qubits().
    void set_state(StateVector state);
    /// Stores `pre_collapse` as the noop unless one was already recorded, then
    /// sets the live state to `collapsed`.
    void record_collapse(const StateVector &pre_collapse, StateVector collapsed);
    /// Exchanges the names in slots i and j without touching the state.
    void swap_names(std::size_t i, std::size_t j);

    /// Same names in the same order and states entrywise within 1e-10.
    bool equals(const QuantumRegister &other) const;

private:
    std::vector<std::string> names_;
    StateVector state_;
    std::optional<StateVector> noop_;
};

/// Disjoint merge: names of `a` followed by names of `b`, state kron(a, b),
/// empty noop.
QuantumRegister merge(const QuantumRegister &a, const QuantumRegister &b);

} // namespace qsim

#include "qsim/register.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

QuantumRegister::QuantumRegister(std::string name)
    : names_{std::move(name)}, state_(canonical_state(CanonicalState::zero)) {}

QuantumRegister::QuantumRegister(std::vector<std::string> names, StateVector state)
    : names_(std::move(names)), state_(std::move(state)) {
    if (names_.empty()) {
        throw ArgumentError("QuantumRegister: no qubits");
    }
    if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size()) {
        throw ArgumentError("QuantumRegister: duplicate qubit names");
    }
    if (state_.qubit_count() != names_.size()) {
        throw DimensionError("QuantumRegister: state qubit count", state_.qubit_count(),
                             names_.size());
    }
}

bool QuantumRegister::contains(const std::string &name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t QuantumRegister::position_of(const std::string &name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw ArgumentError("qubit '" + name + "' is not in this register");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

void QuantumRegister::set_state(StateVector state) {
    if (state.qubit_count() != names_.size()) {
        throw DimensionError("QuantumRegister::set_state", state.qubit_count(), names_.size());
    }
    state_ = std::move(state);
}

void QuantumRegister::record_collapse(const StateVector &pre_collapse, StateVector collapsed) {
    if (!noop_) {
        noop_ = pre_collapse;
    }
    set_state(std::move(collapsed));
}

void QuantumRegister::swap_names(std::size_t i, std::size_t j) {
    if (i >= names_.size() || j >= names_.size()) {
        throw ArgumentError("QuantumRegister::swap_names: index out of range");
    }
    std::swap(names_[i], names_[j]);
}

bool QuantumRegister::equals(const QuantumRegister &other) const {
    return names_ == other.names_ && approx_equal(state_.amplitudes(), other.state_.amplitudes());
}

QuantumRegister merge(const QuantumRegister &a, const QuantumRegister &b) {
    std::vector<std::string> names = a.qubit_names();
    names.insert(names.end(), b.qubit_names().begin(), b.qubit_names().end());
    return QuantumRegister(std::move(names), kron(a.get_state(), b.get_state()));
}

} // namespace qsim

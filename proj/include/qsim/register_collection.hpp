#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsim/register.hpp"

namespace qsim {

/// Partition of the machine qubits "q0".."q{n-1}" into disjoint registers.
///
/// Registers are kept sorted by the smallest machine index among their members,
/// so enumeration order is deterministic. Qubits start in singleton registers
/// and are only merged when an operation needs their joint state.
class RegisterCollection {
public:
    explicit RegisterCollection(std::size_t qubit_count);

    std::size_t qubit_count() const noexcept { return machine_order_.size(); }
    const std::vector<std::string> &machine_order() const noexcept { return machine_order_; }
    /// Machine index of a qubit name; throws ArgumentError for unknown names.
    std::size_t machine_index(const std::string &name) const;

    const std::vector<QuantumRegister> &registers() const noexcept { return registers_; }
    std::vector<QuantumRegister> &registers() noexcept { return registers_; }

    QuantumRegister &register_of(const std::string &name);
    const QuantumRegister &register_of(const std::string &name) const;

    /// Replaces the registers holding a and b with merge(reg(a), reg(b)).
    /// Throws ArgumentError when both already share a register.
    QuantumRegister &entangle_qubits(const std::string &a, const std::string &b);

    /// Concatenated register name orders, registers in enumeration order.
    std::vector<std::string> qubit_order() const;

    /// Sum over registers of 2^size.
    std::size_t storage_size() const;

    /// Smallest and largest machine index in a register.
    std::size_t min_index(const QuantumRegister &r) const;
    std::size_t max_index(const QuantumRegister &r) const;

private:
    std::size_t index_of_register(const std::string &name) const;
    void sort_registers();

    std::vector<std::string> machine_order_;
    std::vector<QuantumRegister> registers_;
};

} // namespace qsim

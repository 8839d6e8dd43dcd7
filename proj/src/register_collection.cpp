#include "qsim/register_collection.hpp"

#include <algorithm>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

RegisterCollection::RegisterCollection(std::size_t qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxQubits) {
        throw ArgumentError("RegisterCollection: qubit count " + std::to_string(qubit_count) +
                            " out of range");
    }
    for (std::size_t i = 0; i < qubit_count; ++i) {
        machine_order_.push_back("q" + std::to_string(i));
        registers_.emplace_back(machine_order_.back());
    }
}

std::size_t RegisterCollection::machine_index(const std::string &name) const {
    const auto it = std::find(machine_order_.begin(), machine_order_.end(), name);
    if (it == machine_order_.end()) {
        throw ArgumentError("unknown qubit '" + name + "'");
    }
    return static_cast<std::size_t>(it - machine_order_.begin());
}

std::size_t RegisterCollection::index_of_register(const std::string &name) const {
    machine_index(name);
    for (std::size_t i = 0; i < registers_.size(); ++i) {
        if (registers_[i].contains(name)) {
            return i;
        }
    }
    throw ArgumentError("qubit '" + name + "' is in no register");
}

QuantumRegister &RegisterCollection::register_of(const std::string &name) {
    return registers_[index_of_register(name)];
}

const QuantumRegister &RegisterCollection::register_of(const std::string &name) const {
    return registers_[index_of_register(name)];
}

QuantumRegister &RegisterCollection::entangle_qubits(const std::string &a, const std::string &b) {
    const std::size_t ia = index_of_register(a);
    const std::size_t ib = index_of_register(b);
    if (ia == ib) {
        throw ArgumentError("entangle_qubits: '" + a + "' and '" + b +
                            "' already share a register");
    }
    QuantumRegister merged = merge(registers_[ia], registers_[ib]);
    registers_.erase(registers_.begin() + static_cast<std::ptrdiff_t>(std::max(ia, ib)));
    registers_.erase(registers_.begin() + static_cast<std::ptrdiff_t>(std::min(ia, ib)));
    registers_.push_back(std::move(merged));
    sort_registers();
    return register_of(a);
}

std::vector<std::string> RegisterCollection::qubit_order() const {
    std::vector<std::string> order;
    for (const auto &r : registers_) {
        order.insert(order.end(), r.qubit_names().begin(), r.qubit_names().end());
    }
    return order;
}

std::size_t RegisterCollection::storage_size() const {
    std::size_t total = 0;
    for (const auto &r : registers_) {
        total += r.get_state().dimension();
    }
    return total;
}

std::size_t RegisterCollection::min_index(const QuantumRegister &r) const {
    std::size_t best = machine_order_.size();
    for (const auto &n : r.qubit_names()) {
        best = std::min(best, machine_index(n));
    }
    return best;
}

std::size_t RegisterCollection::max_index(const QuantumRegister &r) const {
    std::size_t best = 0;
    for (const auto &n : r.qubit_names()) {
        best = std::max(best, machine_index(n));
    }
    return best;
}

void RegisterCollection::sort_registers() {
    std::sort(registers_.begin(), registers_.end(),
              [this](const QuantumRegister &x, const QuantumRegister &y) {
                  return min_index(x) < min_index(y);
              });
}

} // namespace qsim

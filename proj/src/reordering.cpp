#include "qsim/reordering.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "qsim/error.hpp"
#include "qsim/probability.hpp"

namespace qsim {

namespace {

std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else if (c != ' ' && c != '\t') {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

std::string join(const std::vector<std::string> &names) {
    std::ostringstream os;
    for (std::size_t i = 0; i < names.size(); ++i) {
        os << (i ? "," : "") << names[i];
    }
    return os.str();
}

bool holds_requested(const QuantumRegister &r, const RequestedOrder &order) {
    return std::any_of(r.qubit_names().begin(), r.qubit_names().end(),
                       [&](const std::string &n) { return order.contains(n); });
}

// Phase 1. Performs at most one merge per call.
bool merge_one_interleaved(RegisterCollection &qubits, const RequestedOrder &order) {
    for (const auto &q : order.names()) {
        const std::size_t qi = qubits.machine_index(q);
        for (const auto &r : qubits.registers()) {
            if (r.contains(q) || !holds_requested(r, order)) {
                continue;
            }
            if (qubits.min_index(r) < qi && qi < qubits.max_index(r)) {
                const std::string anchor = r.qubit_names().front();
                qubits.entangle_qubits(anchor, q);
                return true;
            }
        }
    }
    return false;
}

void bubble_sort(RegisterCollection &qubits, QuantumRegister &r) {
    const std::size_t n = r.num_qubits();
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto &names = r.qubit_names();
            if (qubits.machine_index(names[i]) > qubits.machine_index(names[i + 1])) {
                swap(r, i, i + 1);
                swapped = true;
            }
        }
    }
}

} // namespace

RequestedOrder::RequestedOrder(const RegisterCollection &machine, std::vector<std::string> names)
    : names_(std::move(names)) {
    if (names_.empty()) {
        throw ArgumentError("requested order is empty");
    }
    std::size_t previous = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::size_t idx = machine.machine_index(names_[i]);
        if (i > 0 && idx <= previous) {
            throw ArgumentError("requested order '" + join(names_) +
                                "' must list qubits in strictly increasing index order");
        }
        previous = idx;
    }
}

RequestedOrder::RequestedOrder(const RegisterCollection &machine, std::string_view names)
    : RequestedOrder(machine, split_names(names)) {}

bool RequestedOrder::contains(const std::string &name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void swap(QuantumRegister &r, std::size_t i, std::size_t j) {
    const std::size_t n = r.num_qubits();
    if (i >= n || j >= n) {
        throw ArgumentError("swap: index out of range for " + std::to_string(n) + " qubits");
    }
    if (j != i + 1) {
        throw ArgumentError("swap: only adjacent slots (j == i + 1) are supported");
    }

    // Permute the state.
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        labels.push_back(basis_label(k, n));
    }
    CMatrix permute = CMatrix::identity(dim);
    std::set<std::pair<std::size_t, std::size_t>> swapped;
    for (std::size_t k = 0; k < dim; ++k) {
        std::string relabeled = labels[k];
        swap_helper(relabeled, i, j);
        if (relabeled == labels[k]) {
            continue;
        }
        const std::size_t from = k;
        const std::size_t to = static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), relabeled) - labels.begin());
        if (swapped.insert({std::min(from, to), std::max(from, to)}).second) {
            permute.swap_rows(from, to);
        }
    }
    r.set_state(StateVector(matvec(permute, r.get_state().amplitudes())));

    // Swap the qubit names.
    r.swap_names(i, j);
}

StateVector reorder(RegisterCollection &qubits, const RequestedOrder &order) {
    while (merge_one_interleaved(qubits, order)) {
    }

    for (auto &r : qubits.registers()) {
        const auto &names = r.qubit_names();
        const auto inside = static_cast<std::size_t>(
            std::count_if(names.begin(), names.end(),
                          [&](const std::string &n) { return order.contains(n); }));
        if (inside != 0 && inside != names.size()) {
            std::vector<std::string> outside;
            for (const auto &n : names) {
                if (!order.contains(n)) {
                    outside.push_back(n);
                }
            }
            throw ReorderError("cannot produce order '" + join(order.names()) +
                               "': register (" + join(names) +
                               ") mixes requested and unrequested qubits; not possible to "
                               "separate out " + join(outside));
        }
        if (inside != 0) {
            bubble_sort(qubits, r);
        }
    }

    std::optional<StateVector> answer;
    std::vector<std::string> produced;
    for (const auto &r : qubits.registers()) {
        if (!order.contains(r.qubit_names().front())) {
            continue;
        }
        answer = answer ? kron(*answer, r.get_state()) : r.get_state();
        produced.insert(produced.end(), r.qubit_names().begin(), r.qubit_names().end());
    }
    if (!answer || produced != order.names()) {
        throw ReorderError("reorder produced '" + join(produced) + "' instead of '" +
                           join(order.names()) + "'");
    }
    return *answer;
}

} // namespace qsim

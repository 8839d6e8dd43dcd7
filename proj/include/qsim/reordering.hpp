#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsim/register_collection.hpp"

namespace qsim {

/// Non-empty list of machine qubits in strictly increasing machine index.
class RequestedOrder {
public:
    /// Throws ArgumentError for unknown names, duplicates or decreasing order.
    RequestedOrder(const RegisterCollection &machine, std::vector<std::string> names);
    /// Comma separated form, e.g. "q1,q2" (spaces allowed).
    RequestedOrder(const RegisterCollection &machine, std::string_view names);

    const std::vector<std::string> &names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    bool contains(const std::string &name) const;

private:
    std::vector<std::string> names_;
};

/// Produces the joint state of `order` in that order.
///
/// 1. Merge: a register that holds a requested qubit and whose machine-index
///    span covers another requested qubit absorbs that qubit's register.
/// 2. Sort: every register must lie entirely inside or entirely outside the
///    request (ReorderError otherwise); registers inside are bubble-sorted
///    into increasing machine order with `swap`.
/// 3. Combine: kron of the requested registers in enumeration order.
///
/// Mutates the collection (merges and in-register order), never the physical state.
StateVector reorder(RegisterCollection &qubits, const RequestedOrder &order);

/// Exchanges adjacent slots i and i+1 of a register: permutes the state with the
/// matching basis permutation matrix, then swaps the names.
void swap(QuantumRegister &r, std::size_t i, std::size_t j);

/// Exchanges l[i] and l[j] of any indexable sequence (vector, string).
template <typename Sequence>
void swap_helper(Sequence &l, std::size_t i, std::size_t j) {
    if (i == j) {
        return;
    }
    auto tmp = std::move(l[i]);
    l[i] = std::move(l[j]);
    l[j] = std::move(tmp);
}

} // namespace qsim

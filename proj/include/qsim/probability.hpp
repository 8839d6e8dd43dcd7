#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsim/states_gates.hpp"

namespace qsim {

/// |amplitude_k|^2 in canonical ordering.
class ProbabilityVector {
public:
    /// Validates entries in [0,1] and a total of 1 within 1e-9; length a power of two.
    explicit ProbabilityVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

ProbabilityVector get_probabilities(const StateVector &s);

/// Basis label of index k on n qubits, e.g. (2, 2) -> "10".
std::string basis_label(std::size_t index, std::size_t qubits);

/// Text block in the form
///
///     |psi>=0.7071|00>+0.7071|11>
///     Pr(|00>)=0.500000;
///     Pr(|11>)=0.500000;
///
/// Only basis states with nonzero probability appear. A coefficient equal to 1
/// is omitted from the header; real coefficients print as signed decimals with
/// four places, imaginary ones with an `i` suffix and general ones as `(a+bi)`.
/// No trailing newline.
std::string pretty_print(const StateVector &s);

/// <psi|P|psi> for P = X, Y, Z on a single-qubit state.
double expectation(const StateVector &s, Basis basis);

} // namespace qsim

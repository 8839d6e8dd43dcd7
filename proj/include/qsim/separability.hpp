#pragma once

// "Easy" separation: factor a state into single-qubit states drawn from the
// six canonical states {|0>,|1>,|+>,|->,|+i>,|-i>}. Failure only means no such
// factorization exists; the state may still be separable in some other way.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qsim/states_gates.hpp"

namespace qsim {

inline constexpr double kSeparationTolerance = 1e-9;

/// Factors in tensor order when s equals their kron up to one global phase,
/// otherwise nullopt. Factors are the exact canonical vectors.
std::optional<std::vector<StateVector>> try_separate_all(const StateVector &s);

/// Same search restricted to an alphabet of candidate factors.
std::optional<std::vector<StateVector>> try_separate(const StateVector &s,
                                                     std::span<const CanonicalState> alphabet);

/// Two-qubit state into a pair of z-basis states.
std::optional<std::pair<StateVector, StateVector>> try_separate_z(const StateVector &s);

/// Factor at tensor slot `position`; throws SeparationError when the state is
/// not easily separable and ArgumentError for a bad position.
StateVector extract_qubit(const StateVector &s, std::size_t position);

} // namespace qsim

#include "qsim/separability.hpp"

#include <cmath>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

namespace {

constexpr CanonicalState kZAlphabet[] = {CanonicalState::zero, CanonicalState::one};

// Depth-first search over tensor slots. `residual` is the unnormalized state of
// the remaining qubits (global phase included). Each candidate factor c is
// projected out as rest = (c^dagger (x) I) residual and kept only if
// c (x) rest reproduces the residual.
bool search(const std::vector<Complex> &residual, std::span<const CanonicalState> alphabet,
            std::vector<StateVector> &factors) {
    if (residual.size() == 1) {
        return std::abs(std::abs(residual[0]) - 1.0) <= kSeparationTolerance;
    }
    const std::size_t half = residual.size() / 2;
    for (auto candidate : alphabet) {
        const StateVector &c = canonical_state(candidate);
        std::vector<Complex> rest(half);
        for (std::size_t j = 0; j < half; ++j) {
            rest[j] = std::conj(c[0]) * residual[j] + std::conj(c[1]) * residual[half + j];
        }
        bool matches = true;
        for (std::size_t j = 0; j < half && matches; ++j) {
            matches = approx_equal(residual[j], c[0] * rest[j], kSeparationTolerance) &&
                      approx_equal(residual[half + j], c[1] * rest[j], kSeparationTolerance);
        }
        if (!matches) {
            continue;
        }
        factors.push_back(c);
        if (search(rest, alphabet, factors)) {
            return true;
        }
        factors.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<StateVector>> try_separate(const StateVector &s,
                                                     std::span<const CanonicalState> alphabet) {
    const auto amps = s.amplitudes().elements();
    std::vector<Complex> residual(amps.begin(), amps.end());
    std::vector<StateVector> factors;
    factors.reserve(s.qubit_count());
    if (!search(residual, alphabet, factors)) {
        return std::nullopt;
    }
    std::vector<CVector> parts;
    for (const auto &f : factors) {
        parts.push_back(f.amplitudes());
    }
    if (!equal_up_to_phase(kron_all(parts), s.amplitudes(), kSeparationTolerance)) {
        return std::nullopt;
    }
    return factors;
}

std::optional<std::vector<StateVector>> try_separate_all(const StateVector &s) {
    return try_separate(s, kCanonicalStates);
}

std::optional<std::pair<StateVector, StateVector>> try_separate_z(const StateVector &s) {
    if (s.qubit_count() != 2) {
        throw ArgumentError("try_separate_z: expected a two-qubit state");
    }
    auto factors = try_separate(s, kZAlphabet);
    if (!factors) {
        return std::nullopt;
    }
    return std::pair{(*factors)[0], (*factors)[1]};
}

StateVector extract_qubit(const StateVector &s, std::size_t position) {
    if (position >= s.qubit_count()) {
        throw ArgumentError("extract_qubit: position " + std::to_string(position) +
                            " out of range");
    }
    auto factors = try_separate_all(s);
    if (!factors) {
        throw SeparationError("no product of canonical single-qubit states matches");
    }
    return (*factors)[position];
}

} // namespace qsim

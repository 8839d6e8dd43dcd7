#include "qsim/quantum_computer.hpp"

#include <cmath>
#include <utility>

#include "qsim/error.hpp"
#include "qsim/probability.hpp"
#include "qsim/separability.hpp"

namespace qsim {

namespace {

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

} // namespace

bool approx_equal(const BlochCoords &a, const BlochCoords &b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

BlochCoords bloch_of(const StateVector &single_qubit) {
    return {expectation(single_qubit, Basis::x), expectation(single_qubit, Basis::y),
            expectation(single_qubit, Basis::z)};
}

QuantumComputer::QuantumComputer(std::uint64_t seed, std::size_t qubit_count)
    : qubits_(qubit_count), seed_(seed), rng_(seed) {}

QuantumComputer::QuantumComputer() : QuantumComputer(entropy_seed()) {}

void QuantumComputer::reset() {
    qubits_ = RegisterCollection(qubits_.qubit_count());
    rng_.seed(seed_);
}

void QuantumComputer::apply_gate(const GateMatrix &g, const std::string &qubit) {
    if (g.arity() != 1) {
        throw ArgumentError("apply_gate: expected a single-qubit gate");
    }
    QuantumRegister &r = qubits_.register_of(qubit);
    if (r.num_qubits() == 1) {
        r.set_state(g.apply(r.get_state()));
        return;
    }
    r.set_state(lift_single(g, r.position_of(qubit), r.num_qubits()).apply(r.get_state()));
}

void QuantumComputer::apply_cnot(const std::string &control, const std::string &target) {
    if (control == target) {
        throw ArgumentError("apply_cnot: control and target are both '" + control + "'");
    }
    QuantumRegister &rc = qubits_.register_of(control);
    QuantumRegister &rt = qubits_.register_of(target);

    if (&rc != &rt && rc.num_qubits() == 1 && rt.num_qubits() == 1) {
        const StateVector combined = cnot(0, 1, 2).apply(kron(rc.get_state(), rt.get_state()));
        if (const auto factors = try_separate_z(combined)) {
            // Project out the untouched control; the target keeps its phase.
            const StateVector &c = factors->first;
            const Complex control_phase = inner(c.amplitudes(), rc.get_state().amplitudes());
            CVector t(2);
            for (std::size_t j = 0; j < 2; ++j) {
                t[j] = (std::conj(c[0]) * combined[j] + std::conj(c[1]) * combined[2 + j]) /
                       control_phase;
            }
            const double norm = std::sqrt(norm2(t));
            t[0] /= norm;
            t[1] /= norm;
            rt.set_state(StateVector(std::move(t)));
            return;
        }
        qubits_.entangle_qubits(control, target).set_state(combined);
        return;
    }

    if (&rc != &rt) {
        qubits_.entangle_qubits(control, target);
    }
    QuantumRegister &r = qubits_.register_of(control);
    const auto g = cnot(r.position_of(control), r.position_of(target), r.num_qubits());
    r.set_state(g.apply(r.get_state()));
}

void QuantumComputer::measure(const std::string &qubit) {
    QuantumRegister &r = qubits_.register_of(qubit);
    const StateVector &state = r.get_state();
    const double u = uniform01(rng_);
    std::size_t outcome = state.dimension();
    std::size_t last_nonzero = 0;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        const double p = std::norm(state[k]);
        if (p > 0.0) {
            last_nonzero = k;
        }
        cumulative += p;
        if (u < cumulative && p > 0.0) {
            outcome = k;
            break;
        }
    }
    if (outcome == state.dimension()) {
        // u landed in the rounding gap above the final cumulative sum.
        outcome = last_nonzero;
    }
    const StateVector pre = state;
    r.record_collapse(pre, StateVector::basis(r.num_qubits(), outcome));
}

BlochCoords QuantumComputer::bloch(const std::string &qubit) const {
    const QuantumRegister &r = qubits_.register_of(qubit);
    if (r.num_qubits() == 1) {
        return bloch_of(r.get_state());
    }
    return bloch_of(extract_qubit(r.get_state(), r.position_of(qubit)));
}

StateVector QuantumComputer::ordered_state(const RequestedOrder &order) {
    return reorder(qubits_, order);
}

StateVector QuantumComputer::ordered_state(std::string_view names) {
    return ordered_state(RequestedOrder(qubits_, names));
}

bool QuantumComputer::probabilities_equal(const RequestedOrder &order,
                                          std::span<const double> expected) {
    const auto actual = get_probabilities(ordered_state(order));
    if (actual.size() != expected.size()) {
        throw DimensionError("probabilities_equal", expected.size(), actual.size());
    }
    ProbabilityVector(std::vector<double>(expected.begin(), expected.end()));
    for (std::size_t k = 0; k < actual.size(); ++k) {
        if (std::abs(actual[k] - expected[k]) > kCompareTolerance) {
            return false;
        }
    }
    return true;
}

bool QuantumComputer::probabilities_equal(std::string_view names,
                                          std::span<const double> expected) {
    return probabilities_equal(RequestedOrder(qubits_, names), expected);
}

bool QuantumComputer::qubit_states_equal(const RequestedOrder &order,
                                         const StateVector &expected) {
    const StateVector actual = ordered_state(order);
    if (actual.dimension() != expected.dimension()) {
        throw DimensionError("qubit_states_equal", expected.dimension(), actual.dimension());
    }
    return equal_up_to_phase(actual.amplitudes(), expected.amplitudes(), kCompareTolerance);
}

bool QuantumComputer::qubit_states_equal(std::string_view names, const StateVector &expected) {
    return qubit_states_equal(RequestedOrder(qubits_, names), expected);
}

bool QuantumComputer::bloch_coords_equal(const std::string &qubit,
                                         const BlochCoords &expected) const {
    return approx_equal(bloch(qubit), expected, kCompareTolerance);
}

QuantumComputer QuantumComputer::pre_measurement_view() const {
    QuantumComputer view = *this;
    for (auto &r : view.qubits_.registers()) {
        if (const auto &noop = r.get_noop()) {
            r.set_state(*noop);
        }
    }
    return view;
}

} // namespace qsim

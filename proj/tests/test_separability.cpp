#include <doctest.h>

#include <cmath>
#include <random>

#include "qsim/error.hpp"
#include "qsim/separability.hpp"

using namespace qsim;

namespace {

const double r = 1.0 / std::sqrt(2.0);

StateVector product(const std::vector<CanonicalState> &parts) {
    StateVector s = canonical_state(parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k) s = kron(s, canonical_state(parts[k]));
    return s;
}

// Every factorization returned must reproduce the input up to a global phase.
bool reproduces(const StateVector &s, const std::vector<StateVector> &factors) {
    StateVector p = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) p = kron(p, factors[k]);
    return equal_up_to_phase(p.amplitudes(), s.amplitudes(), 1e-9);
}

bool factors_match(const std::vector<StateVector> &got, const std::vector<CanonicalState> &want) {
    if (got.size() != want.size()) return false;
    for (std::size_t k = 0; k < got.size(); ++k) {
        if (!equal_up_to_phase(got[k].amplitudes(), canonical_state(want[k]).amplitudes(), 1e-9))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("try_separate_all examples") {
    const auto basis = try_separate_all(state_from_string("10"));
    REQUIRE(basis);
    CHECK(factors_match(*basis, {CanonicalState::one, CanonicalState::zero}));

    const auto mixed = try_separate_all(product({CanonicalState::plus, CanonicalState::plus_i}));
    REQUIRE(mixed);
    CHECK(factors_match(*mixed, {CanonicalState::plus, CanonicalState::plus_i}));

    CHECK_FALSE(try_separate_all(StateVector{r, 0.0, 0.0, r}).has_value());
}

TEST_CASE("all 6^n canonical products separate for n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k) total *= 6;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<CanonicalState> parts;
            for (std::size_t k = 0, c = code; k < n; ++k, c /= 6) parts.push_back(kCanonicalStates[c % 6]);
            const auto s = product(parts);
            const auto got = try_separate_all(s);
            REQUIRE(got);
            CHECK(factors_match(*got, parts));
            CHECK(reproduces(s, *got));
        }
    }
}

TEST_CASE("random canonical products with a global phase separate for n <= 5") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4 + trial % 2;
        std::vector<CanonicalState> parts;
        for (std::size_t k = 0; k < n; ++k) parts.push_back(kCanonicalStates[pick(rng)]);
        CVector v = product(parts).amplitudes();
        const Complex phase = std::polar(1.0, angle(rng));
        for (auto &z : v.elements()) z *= phase;
        const StateVector s(v);
        const auto got = try_separate_all(s);
        REQUIRE(got);
        CHECK(factors_match(*got, parts));
        CHECK(reproduces(s, *got));
    }
}

TEST_CASE("entangled and non-canonical states are absent") {
    CHECK_FALSE(try_separate_all(StateVector{0.0, r, r, 0.0}).has_value());
    const double a = std::cos(0.3), b = std::sin(0.3);
    CHECK_FALSE(try_separate_all(StateVector{a, b}).has_value());
    // GHZ over three qubits.
    CVector ghz(8);
    ghz[0] = r;
    ghz[7] = r;
    CHECK_FALSE(try_separate_all(StateVector(ghz)).has_value());
}

TEST_CASE("try_separate with a restricted alphabet") {
    const CanonicalState z_only[] = {CanonicalState::zero, CanonicalState::one};
    CHECK(try_separate(state_from_string("101"), z_only).has_value());
    CHECK_FALSE(try_separate(product({CanonicalState::plus, CanonicalState::zero}), z_only));
}

TEST_CASE("try_separate_z") {
    const auto basis = try_separate_z(state_from_string("01"));
    REQUIRE(basis);
    CHECK(basis->first == StateVector{1.0, 0.0});
    CHECK(basis->second == StateVector{0.0, 1.0});
    CHECK_FALSE(try_separate_z(product({CanonicalState::plus, CanonicalState::zero})));
    CHECK_FALSE(try_separate_z(StateVector{r, 0.0, 0.0, r}));
    CHECK_THROWS_AS(try_separate_z(state_from_string("011")), ArgumentError);
}

TEST_CASE("extract_qubit") {
    CHECK(extract_qubit(state_from_string("10"), 0) == StateVector{0.0, 1.0});
    const auto s = product({CanonicalState::minus, CanonicalState::one, CanonicalState::zero});
    CHECK(equal_up_to_phase(extract_qubit(s, 0).amplitudes(),
                            canonical_state(CanonicalState::minus).amplitudes(), 1e-9));
    CHECK(equal_up_to_phase(extract_qubit(s, 1).amplitudes(), CVector{0.0, 1.0}, 1e-9));
    CHECK_THROWS_AS(extract_qubit(StateVector{r, 0.0, 0.0, r}, 0), SeparationError);
    CHECK_THROWS_AS(extract_qubit(s, 3), ArgumentError);
}

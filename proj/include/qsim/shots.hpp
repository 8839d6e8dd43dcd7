#pragma once

// Repeated execution of one program. Shot i runs on a fresh machine seeded
// with seed + i, so results do not depend on how shots are scheduled.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsim/program.hpp"

namespace qsim {

struct ShotSummary {
    std::uint64_t seed = 0;
    std::size_t shots = 0;
    /// Explicitly measured qubits, increasing machine index; histogram keys
    /// list their bits in this order.
    std::vector<std::string> measured_qubits;
    std::map<std::string, std::size_t> histogram;
    /// Machine and report of the last shot.
    QuantumComputer final_machine;
    ExecutionReport final_report;
};

/// Qubits named in `measure` statements, increasing machine index.
std::vector<std::string> measured_qubits(std::span<const Statement> statements);
/// Qubits named by any statement, increasing machine index.
std::vector<std::string> touched_qubits(std::span<const Statement> statements);

/// Histogram key of one shot: the last measured bit of every qubit in `measured`.
std::string outcome_key(const ExecutionReport &report, std::span<const std::string> measured);

/// OpenMP over shots. Throws the error of the lowest failing shot index.
ShotSummary run_shots(std::span<const Statement> statements, std::size_t shots,
                      std::uint64_t seed,
                      std::size_t qubit_count = QuantumComputer::kDefaultQubits);

/// Single-threaded reference; produces exactly the same summary as run_shots.
ShotSummary run_shots_serial(std::span<const Statement> statements, std::size_t shots,
                             std::uint64_t seed,
                             std::size_t qubit_count = QuantumComputer::kDefaultQubits);

} // namespace qsim

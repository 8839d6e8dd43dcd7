#pragma once

// Circuit language compatible with the IBM Quantum Experience 5-qubit syntax:
//
//     h q[0];            one-qubit gates: h t tdg s sdg x y z id
//     cx q[0], q[1];     CNOT, control first ("cnot" is accepted too)
//     measure q[0];
//     bloch q[0];
//
// Every statement ends with ';'. Lines starting with '#' or '//' are comments;
// a '#' or '//' after a complete statement comments out the rest of the line.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/error.hpp"
#include "qsim/quantum_computer.hpp"

namespace qsim {

enum class StatementKind { gate, cnot, measure, bloch };

struct Statement {
    StatementKind kind = StatementKind::gate;
    std::optional<GateKind> gate;
    /// One machine index, or control then target for cnot.
    std::vector<std::size_t> operands;
    std::size_t line = 0;

    friend bool operator==(const Statement &, const Statement &) = default;
};

/// Token <-> gate mapping of the language (h <-> H, tdg <-> Tdagger, id <-> I, ...).
std::optional<GateKind> gate_from_token(std::string_view token);
std::string_view token_of(GateKind kind);

/// Throws ParseError carrying the 1-based line and the offending token.
std::vector<Statement> parse(std::string_view source,
                             std::size_t qubit_count = QuantumComputer::kDefaultQubits);

/// One statement per line, cnot spelled `cx`, comments dropped.
std::string render(std::span<const Statement> statements);

std::string qubit_name(std::size_t index);

struct MeasurementRecord {
    std::size_t line = 0;
    std::string qubit;
    std::vector<std::string> register_names;
    /// Collapsed basis state of the whole register, in register_names order.
    std::string outcome;
    /// Bit of the measured qubit.
    char bit = '0';
};

struct BlochRecord {
    std::size_t line = 0;
    std::string qubit;
    BlochCoords coords;
};

struct ExecutionReport {
    std::size_t statement_count = 0;
    std::vector<MeasurementRecord> measurements;
    std::vector<BlochRecord> bloch;
};

/// Parses everything first, so a syntax error leaves `qc` untouched. Runtime
/// failures are rethrown as ExecutionError with the statement's line.
ExecutionReport execute(QuantumComputer &qc, std::string_view source);
ExecutionReport execute(QuantumComputer &qc, std::span<const Statement> statements);

struct ExpectedProbabilities {
    std::vector<std::string> order;
    std::vector<double> values;
};

/// Program text plus optional expectations, read from comment headers:
///
///     # expect-order: q1,q2
///     # expect-prob: 0,0,1,0
///     # expect-bloch: q0 = 0,0,1
struct Program {
    std::string name;
    std::string code;
    std::optional<ExpectedProbabilities> result_probability;
    std::map<std::string, BlochCoords> bloch_vals;

    bool has_expectations() const { return result_probability || !bloch_vals.empty(); }
};

/// Throws ParseError for malformed headers or code.
Program parse_program(std::string_view text, std::string name = {});
/// Throws IoError when the file cannot be read.
Program load_program(const std::filesystem::path &path);
/// All *.q files of a directory, sorted by file name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path &dir);

struct CheckResult {
    bool passed = false;
    std::string message;
};

/// Compares every expectation of `p` against the machine after a run.
/// Probability and Bloch expectations are evaluated on the pre-measurement
/// view, so they describe the superposition before any collapse.
CheckResult check_detailed(const Program &p, const QuantumComputer &after_run);
bool check(const Program &p, const QuantumComputer &after_run);

} // namespace qsim

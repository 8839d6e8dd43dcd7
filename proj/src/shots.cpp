#include "qsim/shots.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>

namespace qsim {

namespace {

std::vector<std::string> sorted_names(const std::set<std::size_t> &indices) {
    std::vector<std::string> out;
    for (auto i : indices) {
        out.push_back(qubit_name(i));
    }
    return out;
}

struct OneShot {
    std::string key;
    std::optional<QuantumComputer> machine;
    ExecutionReport report;
};

OneShot run_one(std::span<const Statement> statements, std::uint64_t seed,
                std::size_t qubit_count, std::span<const std::string> measured, bool keep) {
    QuantumComputer qc(seed, qubit_count);
    OneShot out;
    out.report = execute(qc, statements);
    out.key = outcome_key(out.report, measured);
    if (keep) {
        out.machine = std::move(qc);
    }
    return out;
}

ShotSummary assemble(std::uint64_t seed, std::size_t shots, std::vector<std::string> measured,
                     const std::vector<std::string> &keys, OneShot last) {
    ShotSummary summary{seed, shots, std::move(measured), {}, std::move(*last.machine),
                        std::move(last.report)};
    for (const auto &k : keys) {
        ++summary.histogram[k];
    }
    return summary;
}

void require_shots(std::size_t shots) {
    if (shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
}

} // namespace

std::vector<std::string> measured_qubits(std::span<const Statement> statements) {
    std::set<std::size_t> idx;
    for (const auto &st : statements) {
        if (st.kind == StatementKind::measure) {
            idx.insert(st.operands.front());
        }
    }
    return sorted_names(idx);
}

std::vector<std::string> touched_qubits(std::span<const Statement> statements) {
    std::set<std::size_t> idx;
    for (const auto &st : statements) {
        idx.insert(st.operands.begin(), st.operands.end());
    }
    return sorted_names(idx);
}

std::string outcome_key(const ExecutionReport &report, std::span<const std::string> measured) {
    std::string key(measured.size(), '?');
    for (const auto &m : report.measurements) {
        const auto it = std::find(measured.begin(), measured.end(), m.qubit);
        if (it != measured.end()) {
            key[static_cast<std::size_t>(it - measured.begin())] = m.bit;
        }
    }
    return key;
}

ShotSummary run_shots_serial(std::span<const Statement> statements, std::size_t shots,
                             std::uint64_t seed, std::size_t qubit_count) {
    require_shots(shots);
    auto measured = measured_qubits(statements);
    std::vector<std::string> keys(shots);
    std::optional<OneShot> last;
    for (std::size_t i = 0; i < shots; ++i) {
        const bool is_last = i + 1 == shots;
        auto r = run_one(statements, seed + i, qubit_count, measured, is_last);
        keys[i] = r.key;
        if (is_last) {
            last = std::move(r);
        }
    }
    return assemble(seed, shots, std::move(measured), keys, std::move(*last));
}

ShotSummary run_shots(std::span<const Statement> statements, std::size_t shots,
                      std::uint64_t seed, std::size_t qubit_count) {
    require_shots(shots);
    auto measured = measured_qubits(statements);
    std::vector<std::string> keys(shots);
    std::vector<std::exception_ptr> errors(shots);
    std::optional<OneShot> last;
    const auto n = static_cast<std::ptrdiff_t>(shots);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto shot = static_cast<std::size_t>(i);
        const bool is_last = shot + 1 == shots;
        try {
            auto r = run_one(statements, seed + shot, qubit_count, measured, is_last);
            keys[shot] = std::move(r.key);
            if (is_last) {
                last = std::move(r);
            }
        } catch (...) {
            errors[shot] = std::current_exception();
        }
    }

    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return assemble(seed, shots, std::move(measured), keys, std::move(*last));
}

} // namespace qsim

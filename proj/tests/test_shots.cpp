#include <doctest.h>

#include "qsim/error.hpp"
#include "qsim/program.hpp"
#include "qsim/shots.hpp"

using namespace qsim;

namespace {

constexpr const char *kBell = "h q[0];\ncx q[0], q[1];\nmeasure q[0];\nmeasure q[1];\n";
constexpr const char *kMixed = "h q[0]; h q[2]; cx q[2], q[3]; t q[3]; h q[3];\n"
                               "measure q[3]; measure q[0]; bloch q[4];\n";

bool same_summary(const ShotSummary &a, const ShotSummary &b) {
    if (a.seed != b.seed || a.shots != b.shots || a.measured_qubits != b.measured_qubits ||
        a.histogram != b.histogram) {
        return false;
    }
    const auto &ra = a.final_machine.qubits().registers();
    const auto &rb = b.final_machine.qubits().registers();
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
        if (!ra[k].equals(rb[k])) return false;
    }
    return a.final_report.measurements.size() == b.final_report.measurements.size();
}

} // namespace

TEST_CASE("measured and touched qubits") {
    const auto st = parse(kMixed);
    CHECK(measured_qubits(st) == std::vector<std::string>{"q0", "q3"});
    CHECK(touched_qubits(st) == std::vector<std::string>{"q0", "q2", "q3", "q4"});
    CHECK(measured_qubits(parse("h q[0];")).empty());
}

TEST_CASE("outcome_key orders bits by measured qubit") {
    QuantumComputer qc(1);
    const auto report = execute(qc, "x q[3]; measure q[3]; measure q[0];");
    const std::string measured[] = {"q0", "q3"};
    CHECK(outcome_key(report, measured) == "01");
    const std::string with_unmeasured[] = {"q0", "q1", "q3"};
    CHECK(outcome_key(report, with_unmeasured) == "0?1");
}

TEST_CASE("parallel shots match the serial reference") {
    for (const char *src : {kBell, kMixed}) {
        const auto st = parse(src);
        for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
            for (std::size_t shots : {1u, 2u, 37u, 1000u}) {
                const auto par = run_shots(st, shots, seed);
                const auto ser = run_shots_serial(st, shots, seed);
                CHECK(same_summary(par, ser));
                std::size_t total = 0;
                for (const auto &[k, n] : par.histogram) total += n;
                CHECK(total == shots);
            }
        }
    }
}

TEST_CASE("Bell shots only produce correlated outcomes") {
    const auto summary = run_shots(parse(kBell), 2000, 11);
    for (const auto &[key, n] : summary.histogram) {
        CHECK((key == "00" || key == "11"));
    }
    CHECK(summary.histogram.size() == 2);
}

TEST_CASE("shot i uses seed + i") {
    const auto st = parse(kBell);
    const auto many = run_shots(st, 5, 40);
    const auto last = run_shots_serial(st, 1, 44);
    CHECK(same_summary(
        ShotSummary{40, 5, many.measured_qubits, many.histogram, last.final_machine, last.final_report},
        many));
}

TEST_CASE("shot errors propagate") {
    CHECK_THROWS_AS(run_shots(parse(kBell), 0, 1), ArgumentError);
    CHECK_THROWS_AS(run_shots_serial(parse(kBell), 0, 1), ArgumentError);
    const auto bad = parse("h q[0]; cx q[0], q[1]; bloch q[0];");
    CHECK_THROWS_AS(run_shots(bad, 16, 1), ExecutionError);
    CHECK_THROWS_AS(run_shots_serial(bad, 16, 1), ExecutionError);
}

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "qsim/error.hpp"
#include "qsim/program.hpp"

#include "random_program.hpp"

using namespace qsim;

namespace {

const double r = 1.0 / std::sqrt(2.0);

constexpr const char *kSwap = "x q[2];\n"
                              "cx q[1], q[2];\n"
                              "h q[1];\n"
                              "h q[2];\n"
                              "cx q[1], q[2];\n"
                              "h q[1];\n"
                              "h q[2];\n"
                              "cx q[1], q[2];\n"
                              "measure q[1];\n"
                              "measure q[2];\n";

ParseError parse_error(std::string_view src) {
    try {
        parse(src);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected ParseError for: " << src);
    throw std::logic_error("unreachable");
}

Statement gate_st(GateKind g, std::size_t q, std::size_t line) {
    return {StatementKind::gate, g, {q}, line};
}

} // namespace

TEST_CASE("parse single statements") {
    CHECK(parse("x q[2];") == std::vector<Statement>{gate_st(GateKind::X, 2, 1)});
    CHECK(parse("cx q[1], q[2];") ==
          std::vector<Statement>{{StatementKind::cnot, std::nullopt, {1, 2}, 1}});
    CHECK(parse("cnot q[0],q[4];").front().operands == std::vector<std::size_t>{0, 4});
    CHECK(parse("measure q[3];").front().kind == StatementKind::measure);
    CHECK(parse("bloch q[0];").front().kind == StatementKind::bloch);
    CHECK(parse("tdg q[1];").front().gate == GateKind::Tdagger);
    CHECK(parse("sdg q[1];").front().gate == GateKind::Sdagger);
    CHECK(parse("id q[1];").front().gate == GateKind::I);
}

TEST_CASE("parse tolerates whitespace, blank lines and comments") {
    const auto st = parse("\n  # header\n h   q [ 0 ] ;  // trailing\n\t\ncx q[0] ,q[1];h q[1];\n");
    REQUIRE(st.size() == 3);
    CHECK(st[0] == gate_st(GateKind::H, 0, 3));
    CHECK(st[1].line == 5);
    CHECK(st[2] == gate_st(GateKind::H, 1, 5));
    CHECK(parse("").empty());
    CHECK(parse("// nothing\n# at all").empty());
}

TEST_CASE("parse errors carry line and token") {
    auto e = parse_error("foo q[0];");
    CHECK(e.line() == 1);
    CHECK(e.token() == "foo");

    e = parse_error("h q[0];\nh q[0]");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("';'") != std::string::npos);

    e = parse_error("h q[0];\n\nh q[5];");
    CHECK(e.line() == 3);
    CHECK(e.token() == "q[5]");

    CHECK(parse_error("cx q[1], q[1];").token() == "q1");
    CHECK(parse_error("cx q[1];").line() == 1);
    CHECK(parse_error("h q[0], q[1];").token() == ",");
    CHECK(parse_error("h r[0];").token() == "r[0];");
    CHECK(parse_error("h q[];").line() == 1);
    CHECK(parse_error("h q[0] h q[1];").line() == 1);
    CHECK(parse_error("H q[0];").token() == "H");
    CHECK(parse_error("h q[0]; garbage").token() == "garbage");
}

TEST_CASE("parse respects the machine size") {
    CHECK_NOTHROW(parse("h q[6];", 7));
    CHECK_THROWS_AS(parse("h q[6];"), ParseError);
}

TEST_CASE("render round-trips through parse") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ops = testgen::random_ops(rng, 15);
        auto statements = parse(testgen::source_of(ops));
        statements.push_back({StatementKind::measure, std::nullopt, {trial % 5u}, statements.size() + 1});
        statements.push_back({StatementKind::bloch, std::nullopt, {(trial + 1) % 5u}, statements.size() + 1});
        const auto text = render(statements);
        CHECK(parse(text) == statements);
        CHECK(render(parse(text)) == text);
    }
}

TEST_CASE("token lookup") {
    CHECK(gate_from_token("h") == GateKind::H);
    CHECK_FALSE(gate_from_token("cx").has_value());
    CHECK_FALSE(gate_from_token("nope").has_value());
    for (auto k : kGateKinds) CHECK(gate_from_token(token_of(k)) == k);
}

TEST_CASE("execute the swap program") {
    QuantumComputer qc(1);
    const auto report = execute(qc, kSwap);
    CHECK(report.statement_count == 10);
    REQUIRE(report.measurements.size() == 2);
    CHECK(report.measurements[0].bit == '1');
    CHECK(report.measurements[1].bit == '0');
    const double want[] = {0, 0, 1, 0};
    CHECK(qc.probabilities_equal("q1,q2", want));
    CHECK(pretty_print(qc.ordered_state("q1,q2")) == "|psi>=|10>\nPr(|10>)=1.000000;");
}

TEST_CASE("execute the empty program") {
    QuantumComputer qc(1);
    const auto report = execute(qc, "");
    CHECK(report.statement_count == 0);
    CHECK(qc.qubit_states_equal("q0,q1,q2,q3,q4", state_from_string("00000")));
}

TEST_CASE("execute records measurements and keeps the pre-measurement snapshot") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        QuantumComputer qc(seed);
        const auto report = execute(qc, "h q[0]; cx q[0], q[1]; measure q[0];");
        REQUIRE(report.measurements.size() == 1);
        const auto &m = report.measurements.front();
        CHECK(m.qubit == "q0");
        CHECK(m.register_names == std::vector<std::string>{"q0", "q1"});
        CHECK((m.outcome == "00" || m.outcome == "11"));
        CHECK(m.bit == m.outcome[0]);
        CHECK(approx_equal(qc.qubits().register_of("q0").get_noop()->amplitudes(),
                           CVector{r, 0.0, 0.0, r}));
    }
}

TEST_CASE("execute records bloch statements") {
    QuantumComputer qc(1);
    const auto report = execute(qc, "h q[3];\nbloch q[3];");
    REQUIRE(report.bloch.size() == 1);
    CHECK(report.bloch[0].line == 2);
    CHECK(approx_equal(report.bloch[0].coords, BlochCoords{1, 0, 0}, 1e-12));
}

TEST_CASE("runtime failures report their line") {
    QuantumComputer qc(1);
    try {
        execute(qc, "h q[0];\ncx q[0], q[1];\nbloch q[1];");
        FAIL("expected ExecutionError");
    } catch (const ExecutionError &e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("not easily separable") != std::string::npos);
    }
}

TEST_CASE("a parse error leaves the machine untouched") {
    QuantumComputer qc(1);
    CHECK_THROWS_AS(execute(qc, "x q[0];\nx q[1];\nfoo q[2];"), ParseError);
    CHECK(qc.qubit_states_equal("q0,q1,q2,q3,q4", state_from_string("00000")));
}

TEST_CASE("parse_program reads expectation headers") {
    const auto p = parse_program("# expect-order: q1, q2\n# expect-prob: 0,0,1,0\n"
                                 "# expect-bloch: q0 = 0, 0, 1\n" +
                                     std::string(kSwap),
                                 "swap");
    CHECK(p.name == "swap");
    REQUIRE(p.result_probability);
    CHECK(p.result_probability->order == std::vector<std::string>{"q1", "q2"});
    CHECK(p.result_probability->values == std::vector<double>{0, 0, 1, 0});
    REQUIRE(p.bloch_vals.count("q0") == 1);
    CHECK(p.bloch_vals.at("q0").z == 1.0);
    CHECK(p.has_expectations());
    CHECK_FALSE(parse_program("h q[0];").has_expectations());
}

TEST_CASE("parse_program rejects malformed headers") {
    CHECK_THROWS_AS(parse_program("# expect-order: q0\nh q[0];"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-prob: 1,0\nh q[0];"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-order: q0\n# expect-prob: 1,0,0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-order: q0\n# expect-prob: 1,x\n"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-bloch: q0 = 1,0\n"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-phase: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_program("# expect-bloch: q0 = 0,0,1\nfoo q[0];"), ParseError);
}

TEST_CASE("check") {
    auto swap = parse_program("# expect-order: q1,q2\n# expect-prob: 0,0,1,0\n" + std::string(kSwap));
    QuantumComputer qc(1);
    execute(qc, swap.code);
    CHECK(check(swap, qc));

    swap.result_probability->values = {1, 0, 0, 0};
    CHECK_FALSE(check(swap, qc));

    const auto bell = parse_program("# expect-order: q0,q1\n# expect-prob: 0.5,0,0,0.5\n"
                                    "h q[0];\ncx q[0], q[1];\nmeasure q[0];\nmeasure q[1];\n");
    QuantumComputer qb(4);
    execute(qb, bell.code);
    CHECK(check(bell, qb));

    const auto entangled_bloch = parse_program("# expect-bloch: q0 = 0,0,1\nh q[0];\ncx q[0], q[1];\n");
    QuantumComputer qe(1);
    execute(qe, entangled_bloch.code);
    const auto result = check_detailed(entangled_bloch, qe);
    CHECK_FALSE(result.passed);
    CHECK(result.message.find("not easily separable") != std::string::npos);

    const auto no_expect = parse_program("h q[0];\n");
    CHECK_FALSE(check(no_expect, qe));
}

TEST_CASE("load_program and corpus_files") {
    const auto dir = std::filesystem::temp_directory_path() / "qsim_test_program_io";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "b.q") << "# expect-bloch: q0 = 0,0,-1\nx q[0];\n";
    std::ofstream(dir / "a.q") << "h q[0];\n";
    std::ofstream(dir / "notes.txt") << "ignored\n";

    const auto files = corpus_files(dir);
    REQUIRE(files.size() == 2);
    CHECK(files[0].filename() == "a.q");
    CHECK(files[1].filename() == "b.q");
    const auto p = load_program(files[1]);
    CHECK(p.name == "b.q");
    CHECK(p.bloch_vals.at("q0").z == -1.0);

    CHECK_THROWS_AS(load_program(dir / "missing.q"), IoError);
    CHECK_THROWS_AS(corpus_files(dir / "a.q"), IoError);
    std::filesystem::remove_all(dir);
}

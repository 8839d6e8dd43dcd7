// qsim: run circuit programs on the 5-qubit simulator and check program corpora.
//
//   qsim run FILE [--shots N] [--seed S] [--format text|json]
//   qsim checkcorpus DIR
//
// Exit codes: 0 success, 1 corpus check failed, 2 parse/runtime error, 3 I/O error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsim/program.hpp"
#include "qsim/shots.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitProgramError = 2;
constexpr int kExitIoError = 3;

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("QSIM_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (env[used] == '\0') {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw qsim::ArgumentError(std::string("QSIM_SEED is not an unsigned integer: ") + env);
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(const std::vector<std::string> &names) {
    std::string out;
    for (const auto &n : names) {
        out += (out.empty() ? "" : ",") + n;
    }
    return out;
}

// Last recorded Bloch vector per qubit.
std::map<std::string, qsim::BlochCoords> last_bloch(const qsim::ExecutionReport &report) {
    std::map<std::string, qsim::BlochCoords> out;
    for (const auto &b : report.bloch) {
        out[b.qubit] = b.coords;
    }
    return out;
}

int run_command(const std::string &file, std::size_t shots,
                const std::optional<std::uint64_t> &seed_flag, const std::string &format) {
    const qsim::Program program = qsim::load_program(file);
    const auto statements = qsim::parse(program.code);
    const std::uint64_t seed = resolve_seed(seed_flag);
    const auto summary = qsim::run_shots(statements, shots, seed);

    auto shown = qsim::touched_qubits(statements);
    if (shown.empty()) {
        shown = summary.final_machine.qubits().machine_order();
    }
    auto view = summary.final_machine.pre_measurement_view();
    const qsim::StateVector state =
        view.ordered_state(qsim::RequestedOrder(view.qubits(), shown));
    const auto probs = qsim::get_probabilities(state);
    const auto bloch = last_bloch(summary.final_report);

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["seed"] = seed;
        doc["shots"] = summary.shots;
        doc["qubits"] = shown;
        doc["probabilities"] = std::vector<double>(probs.begin(), probs.end());
        doc["measured_qubits"] = summary.measured_qubits;
        doc["histogram"] = nlohmann::ordered_json::object();
        for (const auto &[key, count] : summary.histogram) {
            doc["histogram"][key] = count;
        }
        doc["bloch"] = nlohmann::ordered_json::object();
        for (const auto &[q, c] : bloch) {
            doc["bloch"][q] = {c.x, c.y, c.z};
        }
        std::cout << doc.dump(2) << '\n';
        return 0;
    }

    std::cout << "seed: " << seed << '\n' << "shots: " << summary.shots << '\n';
    if (!summary.measured_qubits.empty()) {
        std::cout << "histogram (" << join(summary.measured_qubits) << "):\n";
        for (const auto &[key, count] : summary.histogram) {
            std::cout << "  " << key << ": " << count << '\n';
        }
    }
    for (const auto &[q, c] : bloch) {
        std::cout << "bloch " << q << ": " << fixed(c.x) << ' ' << fixed(c.y) << ' ' << fixed(c.z)
                  << '\n';
    }
    std::cout << "state (" << join(shown) << "):\n" << qsim::pretty_print(state) << '\n';
    return 0;
}

int checkcorpus_command(const std::string &dir) {
    const auto files = qsim::corpus_files(dir);
    if (files.empty()) {
        std::cerr << "warning: no .q programs found in '" << dir << "'\n";
        return 0;
    }
    std::size_t passed = 0;
    for (const auto &path : files) {
        std::string status = "FAIL";
        std::string message;
        try {
            const auto program = qsim::load_program(path);
            qsim::QuantumComputer qc(0);
            qsim::execute(qc, program.code);
            const auto result = qsim::check_detailed(program, qc);
            message = result.message;
            if (result.passed) {
                status = "PASS";
                ++passed;
            }
        } catch (const qsim::Error &e) {
            message = e.what();
        }
        std::cout << status << "  " << path.filename().string();
        if (status != "PASS") {
            std::cout << "  " << message;
        }
        std::cout << '\n';
    }
    std::cout << passed << '/' << files.size() << " programs passed\n";
    return passed == files.size() ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Ideal 5-qubit quantum computer simulator"};
    app.require_subcommand(1);

    std::string run_file;
    std::size_t shots = 1;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    auto *run = app.add_subcommand("run", "Execute a program file");
    run->add_option("file", run_file, "Program file")->required();
    run->add_option("--shots", shots, "Number of shots, each on a fresh machine")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "RNG seed (falls back to QSIM_SEED, then OS entropy)");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string corpus_dir;
    auto *checkcorpus =
        app.add_subcommand("checkcorpus", "Run every program in a directory against its expectations");
    checkcorpus->add_option("dir", corpus_dir, "Directory of .q programs")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return run_command(run_file, shots, seed, format);
        }
        return checkcorpus_command(corpus_dir);
    } catch (const qsim::IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const qsim::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitProgramError;
    }
}

#include "qsim/program.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace qsim {

namespace {

struct OpToken {
    std::string_view token;
    StatementKind kind;
    std::optional<GateKind> gate;
};

constexpr OpToken kOps[] = {
    {"h", StatementKind::gate, GateKind::H},
    {"t", StatementKind::gate, GateKind::T},
    {"tdg", StatementKind::gate, GateKind::Tdagger},
    {"s", StatementKind::gate, GateKind::S},
    {"sdg", StatementKind::gate, GateKind::Sdagger},
    {"x", StatementKind::gate, GateKind::X},
    {"y", StatementKind::gate, GateKind::Y},
    {"z", StatementKind::gate, GateKind::Z},
    {"id", StatementKind::gate, GateKind::I},
    {"cx", StatementKind::cnot, std::nullopt},
    {"cnot", StatementKind::cnot, std::nullopt},
    {"measure", StatementKind::measure, std::nullopt},
    {"bloch", StatementKind::bloch, std::nullopt},
};

bool is_comment_start(std::string_view rest) {
    return rest.starts_with('#') || rest.starts_with("//");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Scanner over one source line.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line, std::size_t qubit_count)
        : text_(text), line_(line), qubit_count_(qubit_count) {}

    void parse_into(std::vector<Statement> &out) {
        while (true) {
            skip_space();
            if (at_end() || is_comment_start(rest())) {
                return;
            }
            out.push_back(statement());
        }
    }

private:
    Statement statement() {
        const std::string op = identifier();
        if (op.empty()) {
            fail(next_token(), "expected an operation");
        }
        const auto it = std::find_if(std::begin(kOps), std::end(kOps),
                                     [&](const OpToken &t) { return t.token == op; });
        if (it == std::end(kOps)) {
            fail(op, "unknown operation");
        }
        Statement st;
        st.kind = it->kind;
        st.gate = it->gate;
        st.line = line_;
        st.operands.push_back(operand());
        skip_space();
        if (peek() == ',') {
            if (st.kind != StatementKind::cnot) {
                fail(",", "'" + op + "' takes a single operand");
            }
            ++pos_;
            st.operands.push_back(operand());
            if (st.operands[0] == st.operands[1]) {
                fail(qubit_name(st.operands[1]), "cnot control and target must differ");
            }
        } else if (st.kind == StatementKind::cnot) {
            fail(next_token(), "'" + op + "' takes two operands");
        }
        skip_space();
        if (at_end()) {
            fail(op, "missing ';' terminator");
        }
        if (peek() != ';') {
            fail(next_token(), "expected ';'");
        }
        ++pos_;
        return st;
    }

    std::size_t operand() {
        skip_space();
        if (peek() != 'q') {
            fail(next_token(), "expected a qubit operand q[i]");
        }
        ++pos_;
        skip_space();
        if (peek() != '[') {
            fail(next_token(), "expected '['");
        }
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        const std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.empty()) {
            fail(next_token(), "expected a qubit index");
        }
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc{} || index >= qubit_count_) {
            fail("q[" + std::string(digits) + "]",
                 "qubit index out of range 0.." + std::to_string(qubit_count_ - 1));
        }
        skip_space();
        if (peek() != ']') {
            fail(next_token(), "expected ']'");
        }
        ++pos_;
        return index;
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string next_token() const {
        std::size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end]))) {
            ++end;
        }
        return std::string(text_.substr(pos_, end - pos_));
    }

    [[noreturn]] void fail(const std::string &token, const std::string &message) const {
        throw ParseError(line_, token, message);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::string_view rest() const { return text_.substr(pos_); }

    std::string_view text_;
    std::size_t line_;
    std::size_t qubit_count_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view source) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= source.size()) {
        const std::size_t nl = source.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(source.substr(start));
            break;
        }
        lines.push_back(source.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<double> parse_numbers(std::string_view text, std::size_t line,
                                  const std::string &what) {
    std::vector<double> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const std::string_view t = trim(item);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            throw ParseError(line, std::string(t), "malformed number in " + what);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> parse_names(std::string_view text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        out.emplace_back(trim(item));
    }
    return out;
}

std::string join(const std::vector<std::string> &names) {
    std::string out;
    for (const auto &n : names) {
        out += (out.empty() ? "" : ",") + n;
    }
    return out;
}

} // namespace

std::optional<GateKind> gate_from_token(std::string_view token) {
    for (const auto &op : kOps) {
        if (op.token == token) {
            return op.gate;
        }
    }
    return std::nullopt;
}

std::string_view token_of(GateKind kind) {
    for (const auto &op : kOps) {
        if (op.gate == kind) {
            return op.token;
        }
    }
    return "?";
}

std::string qubit_name(std::size_t index) { return "q" + std::to_string(index); }

std::vector<Statement> parse(std::string_view source, std::size_t qubit_count) {
    std::vector<Statement> out;
    const auto lines = split_lines(source);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        LineScanner(lines[i], i + 1, qubit_count).parse_into(out);
    }
    return out;
}

std::string render(std::span<const Statement> statements) {
    std::string out;
    for (const auto &st : statements) {
        switch (st.kind) {
        case StatementKind::gate: out += std::string(token_of(*st.gate)); break;
        case StatementKind::cnot: out += "cx"; break;
        case StatementKind::measure: out += "measure"; break;
        case StatementKind::bloch: out += "bloch"; break;
        }
        for (std::size_t i = 0; i < st.operands.size(); ++i) {
            out += (i ? ", q[" : " q[") + std::to_string(st.operands[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

ExecutionReport execute(QuantumComputer &qc, std::string_view source) {
    const auto statements = parse(source, qc.qubit_count());
    return execute(qc, statements);
}

ExecutionReport execute(QuantumComputer &qc, std::span<const Statement> statements) {
    ExecutionReport report;
    for (const auto &st : statements) {
        if (std::any_of(st.operands.begin(), st.operands.end(),
                        [&](std::size_t q) { return q >= qc.qubit_count(); })) {
            throw ExecutionError(st.line, "qubit index out of range");
        }
        const std::string q = qubit_name(st.operands.front());
        try {
            switch (st.kind) {
            case StatementKind::gate: qc.apply_gate(*st.gate, q); break;
            case StatementKind::cnot: qc.apply_cnot(q, qubit_name(st.operands.at(1))); break;
            case StatementKind::measure: {
                qc.measure(q);
                const auto &r = qc.qubits().register_of(q);
                MeasurementRecord rec;
                rec.line = st.line;
                rec.qubit = q;
                rec.register_names = r.qubit_names();
                rec.outcome = string_from_state(r.get_state());
                rec.bit = rec.outcome[r.position_of(q)];
                report.measurements.push_back(std::move(rec));
                break;
            }
            case StatementKind::bloch:
                report.bloch.push_back({st.line, q, qc.bloch(q)});
                break;
            }
        } catch (const ExecutionError &) {
            throw;
        } catch (const Error &e) {
            throw ExecutionError(st.line, e.what());
        }
    }
    report.statement_count = statements.size();
    return report;
}

Program parse_program(std::string_view text, std::string name) {
    Program p;
    p.name = std::move(name);
    p.code = std::string(text);
    std::optional<std::vector<std::string>> order;
    std::optional<std::vector<double>> probs;
    std::size_t prob_line = 0;

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        std::string_view l = trim(lines[i]);
        if (!l.starts_with('#')) {
            continue;
        }
        l = trim(l.substr(1));
        if (!l.starts_with("expect-")) {
            continue;
        }
        const std::size_t colon = l.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line, std::string(l), "expectation header needs ':'");
        }
        const std::string key(trim(l.substr(0, colon)));
        const std::string_view value = trim(l.substr(colon + 1));
        if (key == "expect-order") {
            order = parse_names(value);
        } else if (key == "expect-prob") {
            probs = parse_numbers(value, line, key);
            prob_line = line;
        } else if (key == "expect-bloch") {
            const std::size_t eq = value.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(line, std::string(value), "expect-bloch needs 'qubit = x,y,z'");
            }
            const auto xyz = parse_numbers(value.substr(eq + 1), line, key);
            if (xyz.size() != 3) {
                throw ParseError(line, std::string(value), "expect-bloch needs three coordinates");
            }
            p.bloch_vals[std::string(trim(value.substr(0, eq)))] = {xyz[0], xyz[1], xyz[2]};
        } else {
            throw ParseError(line, key, "unknown expectation header");
        }
    }
    if (order.has_value() != probs.has_value()) {
        throw ParseError(prob_line, "", "expect-order and expect-prob must be given together");
    }
    if (order) {
        if (probs->size() != (std::size_t{1} << order->size())) {
            throw ParseError(prob_line, "",
                             "expect-prob needs 2^" + std::to_string(order->size()) + " entries");
        }
        p.result_probability = ExpectedProbabilities{*order, *probs};
    }
    parse(p.code);
    return p;
}

Program load_program(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return parse_program(buf.str(), path.filename().string());
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path &dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw IoError("'" + dir.string() + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".q") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

CheckResult check_detailed(const Program &p, const QuantumComputer &after_run) {
    if (!p.has_expectations()) {
        return {false, "program carries no expectations"};
    }
    QuantumComputer view = after_run.pre_measurement_view();
    try {
        if (const auto &rp = p.result_probability) {
            if (!view.probabilities_equal(RequestedOrder(view.qubits(), rp->order), rp->values)) {
                const auto actual = get_probabilities(
                    view.ordered_state(RequestedOrder(view.qubits(), rp->order)));
                std::ostringstream os;
                os << "probabilities over (" << join(rp->order) << ") differ: got";
                for (double v : actual) {
                    os << ' ' << v;
                }
                return {false, os.str()};
            }
        }
        for (const auto &[qubit, expected] : p.bloch_vals) {
            if (!view.bloch_coords_equal(qubit, expected)) {
                const auto b = view.bloch(qubit);
                std::ostringstream os;
                os << "bloch " << qubit << " differs: got " << b.x << ',' << b.y << ',' << b.z;
                return {false, os.str()};
            }
        }
    } catch (const Error &e) {
        return {false, e.what()};
    }
    return {true, "ok"};
}

bool check(const Program &p, const QuantumComputer &after_run) {
    return check_detailed(p, after_run).passed;
}

} // namespace qsim

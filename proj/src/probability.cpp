#include "qsim/probability.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

namespace {

// Sum tolerance for user-supplied distributions.
constexpr double kSumTolerance = 1e-6;
constexpr double kShowThreshold = 1e-12;

std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

// Coefficient text for the |psi>= header, including its leading sign.
std::string coefficient_text(Complex c, bool first) {
    const bool real_only = std::abs(c.imag()) <= kComplexTolerance;
    const bool imag_only = std::abs(c.real()) <= kComplexTolerance;
    std::string sign_prefix = first ? "" : "+";
    if (real_only) {
        if (std::abs(c.real() - 1.0) <= kComplexTolerance) {
            return sign_prefix;
        }
        if (c.real() < 0) {
            return "-" + format_fixed(-c.real(), 4);
        }
        return sign_prefix + format_fixed(c.real(), 4);
    }
    if (imag_only) {
        if (c.imag() < 0) {
            return "-" + format_fixed(-c.imag(), 4) + "i";
        }
        return sign_prefix + format_fixed(c.imag(), 4) + "i";
    }
    const char *im_sign = c.imag() < 0 ? "-" : "+";
    return sign_prefix + "(" + format_fixed(c.real(), 4) + im_sign +
           format_fixed(std::abs(c.imag()), 4) + "i)";
}

} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2 || (values_.size() & (values_.size() - 1)) != 0) {
        throw ArgumentError("ProbabilityVector: length " + std::to_string(values_.size()) +
                            " is not a power of two >= 2");
    }
    for (double p : values_) {
        if (!(p >= -kSumTolerance && p <= 1.0 + kSumTolerance)) {
            throw ArgumentError("ProbabilityVector: entry outside [0,1]");
        }
    }
    const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw ArgumentError("ProbabilityVector: entries sum to " + std::to_string(total));
    }
}

ProbabilityVector get_probabilities(const StateVector &s) {
    std::vector<double> out(s.dimension());
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        out[k] = std::norm(s[k]);
    }
    return ProbabilityVector(std::move(out));
}

std::string basis_label(std::size_t index, std::size_t qubits) {
    std::string bits(qubits, '0');
    for (std::size_t q = 0; q < qubits; ++q) {
        if (index & (std::size_t{1} << (qubits - 1 - q))) {
            bits[q] = '1';
        }
    }
    return bits;
}

std::string pretty_print(const StateVector &s) {
    const auto probs = get_probabilities(s);
    std::string header = "|psi>=";
    std::string lines;
    bool first = true;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] <= kShowThreshold) {
            continue;
        }
        const std::string label = "|" + basis_label(k, s.qubit_count()) + ">";
        header += coefficient_text(s[k], first) + label;
        lines += "\nPr(" + label + ")=" + format_fixed(probs[k], 6) + ";";
        first = false;
    }
    return header + lines;
}

double expectation(const StateVector &s, Basis basis) {
    if (s.qubit_count() != 1) {
        throw ArgumentError("expectation: expected a single-qubit state");
    }
    const Complex a = s[0];
    const Complex b = s[1];
    switch (basis) {
    case Basis::x: return 2.0 * (std::conj(a) * b).real();
    case Basis::y: return 2.0 * (std::conj(a) * b).imag();
    case Basis::z: return std::norm(a) - std::norm(b);
    }
    return 0.0;
}

} // namespace qsim

#pragma once

// Naive always-dense reference simulator used only by tests. Holds the whole
// machine in one 2^n amplitude array and applies gates by direct index
// arithmetic; it shares no code with the library's lifting, kron, register
// bookkeeping or reordering.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Mat2 {
    cd a, b, c, d; // [[a, b], [c, d]]
};

inline Mat2 gate_by_token(const std::string &token) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd i{0.0, 1.0};
    const cd t = std::exp(i * (std::numbers::pi / 4));
    if (token == "h") return {r, r, r, -r};
    if (token == "x") return {0.0, 1.0, 1.0, 0.0};
    if (token == "y") return {0.0, -i, i, 0.0};
    if (token == "z") return {1.0, 0.0, 0.0, -1.0};
    if (token == "s") return {1.0, 0.0, 0.0, i};
    if (token == "sdg") return {1.0, 0.0, 0.0, -i};
    if (token == "t") return {1.0, 0.0, 0.0, t};
    if (token == "tdg") return {1.0, 0.0, 0.0, std::conj(t)};
    if (token == "id") return {1.0, 0.0, 0.0, 1.0};
    throw std::invalid_argument("oracle: unknown gate " + token);
}

class DenseSim {
public:
    explicit DenseSim(std::size_t n = 5) : n_(n), amp_(std::size_t{1} << n) { amp_[0] = 1.0; }

    std::size_t qubits() const { return n_; }
    const std::vector<cd> &amplitudes() const { return amp_; }

    // Qubit q is bit (n-1-q) of the basis index.
    std::size_t mask(std::size_t q) const { return std::size_t{1} << (n_ - 1 - q); }

    void apply(const Mat2 &g, std::size_t q) {
        const std::size_t m = mask(q);
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            if (k & m) {
                continue;
            }
            const cd lo = amp_[k];
            const cd hi = amp_[k | m];
            amp_[k] = g.a * lo + g.b * hi;
            amp_[k | m] = g.c * lo + g.d * hi;
        }
    }

    void apply(const std::string &token, std::size_t q) { apply(gate_by_token(token), q); }

    void cnot(std::size_t control, std::size_t target) {
        const std::size_t cm = mask(control);
        const std::size_t tm = mask(target);
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            if ((k & cm) && !(k & tm)) {
                std::swap(amp_[k], amp_[k | tm]);
            }
        }
    }

    // Joint state of the listed qubits (in the listed order), valid when the
    // other qubits factor out as a product. Computed as amplitudes at a fixed
    // assignment of the rest with the largest weight, then renormalized.
    std::vector<cd> marginal_state(const std::vector<std::size_t> &order) const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < amp_.size(); ++k) {
            if (std::norm(amp_[k]) > std::norm(amp_[best])) best = k;
        }
        std::vector<cd> out(std::size_t{1} << order.size());
        for (std::size_t j = 0; j < out.size(); ++j) {
            std::size_t k = best;
            for (std::size_t p = 0; p < order.size(); ++p) {
                const bool bit = j & (std::size_t{1} << (order.size() - 1 - p));
                k = bit ? (k | mask(order[p])) : (k & ~mask(order[p]));
            }
            out[j] = amp_[k];
        }
        double norm = 0;
        for (auto z : out) norm += std::norm(z);
        for (auto &z : out) z /= std::sqrt(norm);
        return out;
    }

    // Marginal probabilities of the listed qubits (in the listed order).
    std::vector<double> marginal_probabilities(const std::vector<std::size_t> &order) const {
        std::vector<double> out(std::size_t{1} << order.size());
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            std::size_t j = 0;
            for (std::size_t p = 0; p < order.size(); ++p) {
                j = (j << 1) | ((k & mask(order[p])) ? 1u : 0u);
            }
            out[j] += std::norm(amp_[k]);
        }
        return out;
    }

    // Bloch vector of qubit q from its reduced density matrix.
    std::array<double, 3> bloch(std::size_t q) const {
        const std::size_t m = mask(q);
        cd rho01 = 0.0;
        double p0 = 0, p1 = 0;
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            if (k & m) {
                p1 += std::norm(amp_[k]);
            } else {
                p0 += std::norm(amp_[k]);
                rho01 += amp_[k] * std::conj(amp_[k | m]);
            }
        }
        return {2 * rho01.real(), -2 * rho01.imag(), p0 - p1};
    }

private:
    std::size_t n_;
    std::vector<cd> amp_;
};

/// max_k |a_k - phase * b_k| with the phase fitted on the largest entry of b.
inline double phase_distance(const std::vector<cd> &a, const std::vector<cd> &b) {
    std::size_t anchor = 0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        if (std::abs(b[k]) > std::abs(b[anchor])) anchor = k;
    }
    cd phase = a[anchor] / b[anchor];
    phase /= std::abs(phase);
    double worst = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - phase * b[k]));
    }
    return worst;
}

} // namespace oracle

#include "qsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qsim/error.hpp"

namespace qsim {

bool approx_equal(Complex a, Complex b, double tol) {
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

CVector::CVector(std::size_t size) : data_(size) {
    if (size == 0) {
        throw ArgumentError("CVector: length must be at least 1");
    }
}

CVector::CVector(std::initializer_list<Complex> elements) : CVector(std::vector<Complex>(elements)) {}

CVector::CVector(std::vector<Complex> elements) : data_(std::move(elements)) {
    if (data_.empty()) {
        throw ArgumentError("CVector: length must be at least 1");
    }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("CMatrix: dimensions must be at least 1x1");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw ArgumentError("CMatrix: dimensions must be at least 1x1");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("CMatrix: ragged row", r.size(), cols_);
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

void CMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

CVector matvec(const CMatrix &m, const CVector &v) {
    if (m.cols() != v.size()) {
        throw DimensionError("matvec", m.cols(), v.size());
    }
    CVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex acc = 0.0;
        const auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul", a.cols(), b.rows());
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

CVector kron_all(std::span<const CVector> factors) {
    if (factors.empty()) {
        throw ArgumentError("kron_all: no factors");
    }
    CVector acc = factors.front();
    for (const auto &f : factors.subspan(1)) {
        acc = kron(acc, f);
    }
    return acc;
}

CMatrix conj_transpose(const CMatrix &m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

double norm2(const CVector &v) {
    double acc = 0.0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return acc;
}

Complex inner(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner", a.size(), b.size());
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

bool approx_equal(const CVector &a, const CVector &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!approx_equal(a[i], b[i], tol)) {
            return false;
        }
    }
    return true;
}

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!approx_equal(a(r, c), b(r, c), tol)) {
                return false;
            }
        }
    }
    return true;
}

bool equal_up_to_phase(const CVector &a, const CVector &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    // Phase anchored on the largest entry of b.
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (std::abs(b[i]) > std::abs(b[anchor])) {
            anchor = i;
        }
    }
    if (std::abs(b[anchor]) <= tol) {
        return approx_equal(a, b, tol);
    }
    Complex phase = a[anchor] / b[anchor];
    if (std::abs(std::abs(phase) - 1.0) > tol) {
        return false;
    }
    phase /= std::abs(phase);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!approx_equal(a[i], phase * b[i], tol)) {
            return false;
        }
    }
    return true;
}

} // namespace qsim

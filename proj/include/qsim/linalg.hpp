#pragma once

// Minimal dense complex linear algebra for state vectors and gate matrices of
// at most a few qubits. Everything is a value type; no operation shares state.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;

/// Per-component absolute tolerance used for complex equality.
inline constexpr double kComplexTolerance = 1e-10;

bool approx_equal(Complex a, Complex b, double tol = kComplexTolerance);

class CVector {
public:
    /// Zero vector of length `size` (size >= 1).
    explicit CVector(std::size_t size);
    CVector(std::initializer_list<Complex> elements);
    explicit CVector(std::vector<Complex> elements);

    std::size_t size() const noexcept { return data_.size(); }

    Complex &operator[](std::size_t i) { return data_[i]; }
    const Complex &operator[](std::size_t i) const { return data_[i]; }

    std::span<const Complex> elements() const noexcept { return data_; }
    std::span<Complex> elements() noexcept { return data_; }

    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    friend bool operator==(const CVector &, const CVector &) = default;

private:
    std::vector<Complex> data_;
};

/// Row-major dense complex matrix.
class CMatrix {
public:
    /// Zero matrix (rows, cols >= 1).
    CMatrix(std::size_t rows, std::size_t cols);
    /// Nested rows; all rows must have the same length.
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> row(std::size_t r) const {
        return std::span<const Complex>(data_).subspan(r * cols_, cols_);
    }

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const CMatrix &, const CMatrix &) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Throws DimensionError when m.cols() != v.size().
CVector matvec(const CMatrix &m, const CVector &v);
/// Throws DimensionError when a.cols() != b.rows().
CMatrix matmul(const CMatrix &a, const CMatrix &b);

/// Kronecker product; the left operand varies slowest, so a|1> kron |0> is
/// basis index 2.
CMatrix kron(const CMatrix &a, const CMatrix &b);
CVector kron(const CVector &a, const CVector &b);
/// Left fold of kron over a non-empty list.
CVector kron_all(std::span<const CVector> factors);

CMatrix conj_transpose(const CMatrix &m);

/// Sum of squared moduli.
double norm2(const CVector &v);

/// <a|b>, conjugating the left operand.
Complex inner(const CVector &a, const CVector &b);

bool approx_equal(const CVector &a, const CVector &b, double tol = kComplexTolerance);
bool approx_equal(const CMatrix &a, const CMatrix &b, double tol = kComplexTolerance);

/// True when `a == phase * b` for some unit-modulus phase, entrywise within tol.
bool equal_up_to_phase(const CVector &a, const CVector &b, double tol);

} // namespace qsim

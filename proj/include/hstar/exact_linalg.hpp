#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hstar/errors.hpp"
#include "hstar/numeric.hpp"

namespace hstar {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IVec>& rows);
    static IntMatrix from_columns(const std::vector<IVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IVec row(std::size_t i) const;
    IVec column(std::size_t j) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IVec apply(const IVec& x) const;  // M * x
    IntMatrix transposed() const;

    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal with
// the divisibility chain d_1 | d_2 | ... (diagonal entries nonnegative).
struct SnfResult {
    IntMatrix u, d, v;
    std::vector<Int> divisors() const;  // nonzero diagonal entries, in order
};

SnfResult smith_normal_form(const IntMatrix& m);

// Bareiss fraction-free determinant; throws InvalidInputError on non-square input.
Int determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Exact solution of a*x = b for square nonsingular a; throws SingularMatrixError.
QVec solve_unique_rational(const IntMatrix& a, const IVec& b);

// Like the above but for a general rational right-hand side.
QVec solve_unique_rational(const IntMatrix& a, const QVec& b);

// Basis of the saturated integer kernel {x in Z^cols : m*x = 0}.
std::vector<IVec> integer_kernel_basis(const IntMatrix& m);

// Index [Z^n : span_Z(generators)]; nullopt when the generators do not span rank n.
std::optional<Int> lattice_index(const std::vector<IVec>& generators);

// v / gcd(v); the zero vector is returned unchanged.
IVec primitive(IVec v);

}  // namespace hstar

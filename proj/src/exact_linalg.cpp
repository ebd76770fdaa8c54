#include "hstar/exact_linalg.hpp"

#include <algorithm>

namespace hstar {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InvalidInputError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw InvalidInputError("ragged column list");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IVec IntMatrix::row(std::size_t i) const {
    IVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IVec IntMatrix::column(std::size_t j) const {
    IVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInputError("dimension mismatch in matrix product");
    IntMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += x * rhs(k, j);
        }
    return r;
}

IVec IntMatrix::apply(const IVec& x) const {
    if (x.size() != cols_) throw InvalidInputError("dimension mismatch in matrix-vector product");
    IVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::vector<Int> SnfResult::divisors() const {
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfResult res{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    // Row operations on d are mirrored on u (left factor), column operations on v.
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        d.add_row_multiple(dst, src, -q);
        u.add_row_multiple(dst, src, -q);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        d.add_col_multiple(dst, src, -q);
        v.add_col_multiple(dst, src, -q);
    };

    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        // Pivot: minimal nonzero absolute value in the trailing block.
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::size_t bi = r, bj = c;
            Int best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (d(i, j) == 0) continue;
                    Int a = abs(d(i, j));
                    if (bi == r || a < best) {
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };

        auto [pi, pj] = find_pivot();
        if (pi == r) break;  // trailing block is zero

        bool settled = false;
        while (!settled) {
            if (pi != t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            // Reduce column t then row t by the pivot; remainders become new pivots.
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d(i, t) == 0) continue;
                row_op(i, t, nearest_div(d(i, t), d(t, t)));
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d(t, j) == 0) continue;
                col_op(j, t, nearest_div(d(t, j), d(t, t)));
                if (d(t, j) != 0) clean = false;
            }
            if (clean) {
                // Enforce the divisibility chain: fold a non-divisible entry into row t.
                bool fixed = false;
                for (std::size_t i = t + 1; i < r && !fixed; ++i)
                    for (std::size_t j = t + 1; j < c && !fixed; ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            d.add_row_multiple(t, i, 1);
                            u.add_row_multiple(t, i, 1);
                            fixed = true;
                        }
                if (!fixed) settled = true;
            }
            if (!settled) {
                auto p = find_pivot();
                pi = p.first;
                pj = p.second;
            }
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInputError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t p = rk;
        while (p < r && a(p, col) == 0) ++p;
        if (p == r) continue;
        a.swap_rows(rk, p);
        for (std::size_t i = rk + 1; i < r; ++i) {
            if (a(i, col) == 0) continue;
            Int x = a(i, col), y = a(rk, col);
            Int g = gcd(x, y);
            Int cx = y / g, cy = x / g;
            for (std::size_t j = col; j < c; ++j) a(i, j) = cx * a(i, j) - cy * a(rk, j);
        }
        ++rk;
    }
    return rk;
}

namespace {

QVec solve_impl(const IntMatrix& a, QVec rhs) {
    if (a.rows() != a.cols()) throw InvalidInputError("solve requires a square matrix");
    const std::size_t n = a.rows();
    if (rhs.size() != n) throw InvalidInputError("dimension mismatch in solve");
    std::vector<QVec> w(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a(i, j));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w[p][k] == 0) ++p;
        if (p == n) throw SingularMatrixError();
        std::swap(w[p], w[k]);
        std::swap(rhs[p], rhs[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (std::size_t j = k; j < n; ++j) w[i][j] -= f * w[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    QVec x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rat s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= w[k][j] * x[j];
        x[k] = s / w[k][k];
    }
    return x;
}

}  // namespace

QVec solve_unique_rational(const IntMatrix& a, const IVec& b) {
    QVec rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = Rat(b[i]);
    return solve_impl(a, std::move(rhs));
}

QVec solve_unique_rational(const IntMatrix& a, const QVec& b) { return solve_impl(a, b); }

std::vector<IVec> integer_kernel_basis(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    const std::size_t rk = s.divisors().size();
    std::vector<IVec> basis;
    for (std::size_t j = rk; j < m.cols(); ++j) basis.push_back(s.v.column(j));
    return basis;
}

std::optional<Int> lattice_index(const std::vector<IVec>& generators) {
    if (generators.empty()) throw InvalidInputError("lattice_index needs at least one generator");
    IntMatrix m = IntMatrix::from_columns(generators);
    SnfResult s = smith_normal_form(m);
    std::vector<Int> div = s.divisors();
    if (div.size() < m.rows()) return std::nullopt;
    Int idx = 1;
    for (const Int& d : div) idx *= d;
    return idx;
}

IVec primitive(IVec v) {
    Int g = gcd_vec(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace hstar

#ifndef ELLCOB_HERMITE_HPP
#define ELLCOB_HERMITE_HPP

#include <optional>
#include <vector>

#include <ellcob/matrix.hpp>

namespace ellcob
{

// Column-style Hermite normal form H = A U with U unimodular.
//
// Convention: H is lower echelon (pivot of column c sits in row r_c with
// r_0 < r_1 < ...), every pivot is positive, and entries to the left of a
// pivot in its row satisfy 0 <= h < pivot. Zero columns come last.
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_rows; // pivot_rows[c] for each nonzero column c
};

inline HermiteForm column_hnf(const IntMatrix &a)
{
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.cols());
    std::vector<std::size_t> pivots;
    std::size_t col = 0;
    for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
        // gcd-combine the entries of this row in columns col.. into column col
        for (std::size_t j = col + 1; j < h.cols(); ++j) {
            const Integer b = h(row, j);
            if (b == 0) {
                continue;
            }
            const Integer a0 = h(row, col);
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a0.get_mpz_t(), b.get_mpz_t());
            // [col, j] <- [x col + y j, -(b/g) col + (a0/g) j], determinant 1
            const Integer u1 = -b / g, w1 = a0 / g;
            h.combine_columns(col, j, x, y, u1, w1);
            u.combine_columns(col, j, x, y, u1, w1);
        }
        if (h(row, col) == 0) {
            continue;
        }
        if (h(row, col) < 0) {
            h.negate_column(col);
            u.negate_column(col);
        }
        const Integer piv = h(row, col);
        for (std::size_t j = 0; j < col; ++j) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), h(row, j).get_mpz_t(), piv.get_mpz_t());
            if (f != 0) {
                h.subtract_column(j, col, f);
                u.subtract_column(j, col, f);
            }
        }
        pivots.push_back(row);
        ++col;
    }
    return HermiteForm{std::move(h), std::move(u), std::move(pivots)};
}

// Integer x with A x = b, using the Hermite form of A; nullopt when b is not
// in the column lattice.
inline std::optional<std::vector<Integer>> solve_in_lattice(const HermiteForm &form, const std::vector<Integer> &b)
{
    const IntMatrix &h = form.h;
    if (b.size() != h.rows()) {
        throw std::invalid_argument("right-hand side has the wrong length");
    }
    const std::size_t rank = form.pivot_rows.size();
    std::vector<Integer> y(h.cols(), Integer(0));
    std::vector<Integer> residual = b;
    for (std::size_t c = 0; c < rank; ++c) {
        const std::size_t r = form.pivot_rows[c];
        // rows strictly between pivots must already be satisfied
        const std::size_t prev = c == 0 ? 0 : form.pivot_rows[c - 1] + 1;
        for (std::size_t i = prev; i < r; ++i) {
            if (residual[i] != 0) {
                return std::nullopt;
            }
        }
        if (!mpz_divisible_p(residual[r].get_mpz_t(), h(r, c).get_mpz_t())) {
            return std::nullopt;
        }
        y[c] = residual[r] / h(r, c);
        for (std::size_t i = 0; i < h.rows(); ++i) {
            residual[i] -= h(i, c) * y[c];
        }
    }
    for (const auto &v : residual) {
        if (v != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(h.cols(), Integer(0));
    for (std::size_t i = 0; i < h.cols(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            x[i] += form.u(i, j) * y[j];
        }
    }
    return x;
}

} // namespace ellcob

#endif

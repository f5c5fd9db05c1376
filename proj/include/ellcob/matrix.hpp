#ifndef ELLCOB_MATRIX_HPP
#define ELLCOB_MATRIX_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <ellcob/rational.hpp>

namespace ellcob
{

using Vector4 = std::array<Rational, 4>;

// Exact 4x4 matrix over the rationals.
class Matrix4
{
public:
    using Rows = std::array<Vector4, 4>;

    Matrix4() = default;
    explicit Matrix4(Rows rows) : rows_(std::move(rows)) {}

    static Matrix4 identity()
    {
        Matrix4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            m.rows_[i][i] = Rational(1);
        }
        return m;
    }

    static Matrix4 diagonal(const Vector4 &d)
    {
        Matrix4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            m.rows_[i][i] = d[i];
        }
        return m;
    }

    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return rows_.at(i).at(j);
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return rows_.at(i).at(j);
    }

    Vector4 row(std::size_t i) const
    {
        return rows_.at(i);
    }
    Vector4 column(std::size_t j) const
    {
        return {rows_[0].at(j), rows_[1].at(j), rows_[2].at(j), rows_[3].at(j)};
    }

    Matrix4 transpose() const
    {
        Matrix4 t;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                t.rows_[j][i] = rows_[i][j];
            }
        }
        return t;
    }

    friend Matrix4 operator*(const Matrix4 &a, const Matrix4 &b)
    {
        Matrix4 r;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                Rational s;
                for (std::size_t l = 0; l < 4; ++l) {
                    s += a.rows_[i][l] * b.rows_[l][j];
                }
                r.rows_[i][j] = s;
            }
        }
        return r;
    }

    friend Vector4 operator*(const Matrix4 &a, const Vector4 &v)
    {
        Vector4 r;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t l = 0; l < 4; ++l) {
                r[i] += a.rows_[i][l] * v[l];
            }
        }
        return r;
    }

    friend bool operator==(const Matrix4 &, const Matrix4 &) = default;

    Rational determinant() const
    {
        Rows m = rows_;
        Rational det(1);
        for (std::size_t c = 0; c < 4; ++c) {
            std::size_t p = c;
            while (p < 4 && m[p][c].is_zero()) {
                ++p;
            }
            if (p == 4) {
                return Rational(0);
            }
            if (p != c) {
                std::swap(m[p], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (std::size_t r = c + 1; r < 4; ++r) {
                if (m[r][c].is_zero()) {
                    continue;
                }
                const Rational f = m[r][c] / m[c][c];
                for (std::size_t j = c; j < 4; ++j) {
                    m[r][j] -= f * m[c][j];
                }
            }
        }
        return det;
    }

    // Gauss-Jordan inverse; nullopt when singular.
    std::optional<Matrix4> inverse() const
    {
        Rows m = rows_;
        Rows inv = identity().rows_;
        for (std::size_t c = 0; c < 4; ++c) {
            std::size_t p = c;
            while (p < 4 && m[p][c].is_zero()) {
                ++p;
            }
            if (p == 4) {
                return std::nullopt;
            }
            std::swap(m[p], m[c]);
            std::swap(inv[p], inv[c]);
            const Rational piv = m[c][c];
            for (std::size_t j = 0; j < 4; ++j) {
                m[c][j] /= piv;
                inv[c][j] /= piv;
            }
            for (std::size_t r = 0; r < 4; ++r) {
                if (r == c || m[r][c].is_zero()) {
                    continue;
                }
                const Rational f = m[r][c];
                for (std::size_t j = 0; j < 4; ++j) {
                    m[r][j] -= f * m[c][j];
                    inv[r][j] -= f * inv[c][j];
                }
            }
        }
        return Matrix4(inv);
    }

    bool is_integral() const
    {
        for (const auto &r : rows_) {
            for (const auto &x : r) {
                if (!x.is_integer()) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    Rows rows_{};
};

// Dense integer matrix, row-major.
class IntMatrix
{
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static IntMatrix from(const Matrix4 &m)
    {
        IntMatrix r(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                r(i, j) = to_integer(m(i, j));
            }
        }
        return r;
    }

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }
    Integer &operator()(std::size_t i, std::size_t j)
    {
        return data_.at(i * cols_ + j);
    }
    const Integer &operator()(std::size_t i, std::size_t j) const
    {
        return data_.at(i * cols_ + j);
    }

    Matrix4 to_matrix4() const
    {
        if (rows_ != 4 || cols_ != 4) {
            throw std::logic_error("not a 4x4 matrix");
        }
        Matrix4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) = Rational((*this)(i, j));
            }
        }
        return m;
    }

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix shape mismatch");
        }
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < b.cols_; ++j) {
                Integer s(0);
                for (std::size_t l = 0; l < a.cols_; ++l) {
                    s += a(i, l) * b(l, j);
                }
                r(i, j) = s;
            }
        }
        return r;
    }

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

    // col_a <- x col_a + y col_b, col_b <- u col_a + w col_b (simultaneously)
    void combine_columns(std::size_t a, std::size_t b, const Integer &x, const Integer &y, const Integer &u,
                         const Integer &w)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            const Integer ca = (*this)(i, a), cb = (*this)(i, b);
            (*this)(i, a) = x * ca + y * cb;
            (*this)(i, b) = u * ca + w * cb;
        }
    }

    void swap_columns(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }

    // col_dst -= f * col_src
    void subtract_column(std::size_t dst, std::size_t src, const Integer &f)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, dst) -= f * (*this)(i, src);
        }
    }

    void negate_column(std::size_t c)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, c) = -(*this)(i, c);
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

} // namespace ellcob

#endif

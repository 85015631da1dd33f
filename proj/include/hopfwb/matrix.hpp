#pragma once

#include "hopfwb/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hopfwb {

/// Dense exact matrix over a Field. Columns are vectors: a map V -> W of
/// dimensions n -> m is an m x n matrix acting on the left.
///
/// Tensor bases are ordered left-major: the basis vector e_i (x) f_j of
/// V (x) W has index i * dim W + j. kron() follows the same ordering.
class Mat {
public:
    Mat() : field_(Field::rationals()) {}
    Mat(Field field, std::size_t rows, std::size_t cols);
    Mat(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> values);

    static Mat identity(Field field, std::size_t n);
    static Mat zeros(Field field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
    /// Column vector with the given entries.
    static Mat column(Field field, const std::vector<Scalar>& entries);
    /// n x 1 standard basis vector e_i.
    static Mat unit_vector(Field field, std::size_t n, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Sets an entry, reducing into the field.
    void set(std::size_t r, std::size_t c, const Scalar& v) { (*this)(r, c) = field_.from_rational(v); }

    Mat col(std::size_t c) const;
    Mat cols_range(std::size_t first, std::size_t count) const;
    Mat rows_range(std::size_t first, std::size_t count) const;
    Mat select_cols(std::span<const std::size_t> idx) const;
    Mat select_rows(std::span<const std::size_t> idx) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& block);

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    /// Reshapes the column vector of length rows*cols (row-major) into a matrix.
    static Mat from_vec(const Mat& v, std::size_t rows, std::size_t cols);
    /// Row-major flattening into a column vector.
    Mat vec() const;

    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat scale(const Mat& a, const Scalar& s);
Mat neg(const Mat& a);

Mat kron(const Mat& a, const Mat& b);
Mat kron(std::span<const Mat> factors);
Mat hstack(std::span<const Mat> blocks);
Mat vstack(std::span<const Mat> blocks);
Mat block_diag(std::span<const Mat> blocks);

/// Applies kron(f_1, ..., f_n) to the columns of v without forming the
/// Kronecker product. Each f_i maps a space of dimension f_i.cols() to
/// f_i.rows(); v.rows() must equal the product of the f_i.cols().
Mat kron_apply(std::span<const Mat> factors, const Mat& v);
/// v * kron(f_1, ..., f_n), again without forming the product.
Mat kron_apply_right(const Mat& v, std::span<const Mat> factors);

/// Permutation matrix of the flip V (x) W -> W (x) V.
Mat flip_matrix(Field field, std::size_t dim_v, std::size_t dim_w);

} // namespace hopfwb

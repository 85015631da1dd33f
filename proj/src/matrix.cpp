#include "hopfwb/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfwb {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols)
{
}

Mat::Mat(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : Mat(field, rows, cols)
{
    require(values.size() == rows * cols, "Mat: initializer size mismatch");
    std::size_t k = 0;
    for (long v : values)
        data_[k++] = field_.from_int(v);
}

Mat Mat::identity(Field field, std::size_t n)
{
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Mat Mat::column(Field field, const std::vector<Scalar>& entries)
{
    Mat m(field, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i, 0, entries[i]);
    return m;
}

Mat Mat::unit_vector(Field field, std::size_t n, std::size_t i)
{
    Mat m(field, n, 1);
    m(i, 0) = 1;
    return m;
}

Mat Mat::col(std::size_t c) const
{
    return cols_range(c, 1);
}

Mat Mat::cols_range(std::size_t first, std::size_t count) const
{
    require(first + count <= cols_, "Mat::cols_range out of range");
    Mat m(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            m(r, c) = (*this)(r, first + c);
    return m;
}

Mat Mat::rows_range(std::size_t first, std::size_t count) const
{
    require(first + count <= rows_, "Mat::rows_range out of range");
    Mat m(field_, count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(first + r, c);
    return m;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const
{
    Mat m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m(r, c) = (*this)(r, idx[c]);
    return m;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const
{
    Mat m(field_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(idx[r], c);
    return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& block)
{
    require(r0 + block.rows_ <= rows_ && c0 + block.cols_ <= cols_, "Mat::set_block out of range");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c)
            (*this)(r0 + r, c0 + c) = block(r, c);
}

Mat Mat::transpose() const
{
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Mat::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool Mat::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

std::size_t Mat::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& x : data_)
        n += sgn(x) != 0;
    return n;
}

Mat Mat::from_vec(const Mat& v, std::size_t rows, std::size_t cols)
{
    require(v.cols_ == 1 && v.rows_ == rows * cols, "Mat::from_vec shape mismatch");
    Mat m(v.field_, rows, cols);
    m.data_ = v.data_;
    return m;
}

Mat Mat::vec() const
{
    Mat v(field_, rows_ * cols_, 1);
    v.data_ = data_;
    return v;
}

bool operator==(const Mat& a, const Mat& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat& Mat::operator+=(const Mat& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::+= shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (sgn(o.data_[k]) != 0)
            data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
}

Mat& Mat::operator-=(const Mat& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::-= shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (sgn(o.data_[k]) != 0)
            data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
}

std::string Mat::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << (*this)(r, c).get_str();
    }
    os << "]";
    return os.str();
}

Mat operator*(const Mat& a, const Mat& b)
{
    require(a.cols() == b.rows(), "Mat::* shape mismatch");
    const Field& f = a.field();
    Mat c(f, a.rows(), b.cols());
    const std::size_t n = b.cols();
    // Row-sparse view of b; most structural matrices are very sparse.
    std::vector<std::vector<std::size_t>> nz(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(b(k, j)) != 0)
                nz[k].push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j : nz[k])
                f.add_mul_to(c(i, j), aik, b(k, j));
        }
    return c;
}

Mat operator+(Mat a, const Mat& b)
{
    a += b;
    return a;
}

Mat operator-(Mat a, const Mat& b)
{
    a -= b;
    return a;
}

Mat scale(const Mat& a, const Scalar& s)
{
    Mat r(a.field(), a.rows(), a.cols());
    Scalar sv = a.field().from_rational(s);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0)
                r(i, j) = a.field().mul(a(i, j), sv);
    return r;
}

Mat neg(const Mat& a)
{
    return scale(a, Scalar(-1));
}

Mat kron(const Mat& a, const Mat& b)
{
    const Field& f = a.field();
    Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (sgn(b(p, q)) != 0)
                        k(i * b.rows() + p, j * b.cols() + q) = f.mul(a(i, j), b(p, q));
        }
    return k;
}

Mat kron(std::span<const Mat> factors)
{
    require(!factors.empty(), "kron: no factors");
    Mat acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = kron(acc, factors[i]);
    return acc;
}

Mat hstack(std::span<const Mat> blocks)
{
    require(!blocks.empty(), "hstack: no blocks");
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        require(b.rows() == blocks[0].rows(), "hstack: row mismatch");
        cols += b.cols();
    }
    Mat m(blocks[0].field(), blocks[0].rows(), cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(0, c0, b);
        c0 += b.cols();
    }
    return m;
}

Mat vstack(std::span<const Mat> blocks)
{
    require(!blocks.empty(), "vstack: no blocks");
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == blocks[0].cols(), "vstack: column mismatch");
        rows += b.rows();
    }
    Mat m(blocks[0].field(), rows, blocks[0].cols());
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, 0, b);
        r0 += b.rows();
    }
    return m;
}

Mat block_diag(std::span<const Mat> blocks)
{
    require(!blocks.empty(), "block_diag: no blocks");
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat m(blocks[0].field(), rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Mat kron_apply(std::span<const Mat> factors, const Mat& v)
{
    const Field& f = v.field();
    std::vector<std::size_t> dims;
    for (const auto& m : factors)
        dims.push_back(m.cols());
    std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    require(total == v.rows(), "kron_apply: dimension mismatch");

    // Apply one factor at a time along its tensor mode.
    Mat cur = v;
    for (std::size_t mode = 0; mode < factors.size(); ++mode) {
        const Mat& a = factors[mode];
        if (a.is_identity())
            continue;
        std::size_t outer = 1, inner = 1;
        for (std::size_t i = 0; i < mode; ++i)
            outer *= dims[i];
        for (std::size_t i = mode + 1; i < dims.size(); ++i)
            inner *= dims[i];
        Mat next(f, outer * a.rows() * inner, cur.cols());
        std::vector<std::pair<std::size_t, std::size_t>> nz;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (sgn(a(r, c)) != 0)
                    nz.emplace_back(r, c);
        for (std::size_t o = 0; o < outer; ++o)
            for (auto [r, c] : nz) {
                const Scalar& arc = a(r, c);
                for (std::size_t in = 0; in < inner; ++in) {
                    std::size_t src = (o * a.cols() + c) * inner + in;
                    std::size_t dst = (o * a.rows() + r) * inner + in;
                    for (std::size_t col = 0; col < cur.cols(); ++col) {
                        const Scalar& x = cur(src, col);
                        if (sgn(x) != 0)
                            f.add_mul_to(next(dst, col), arc, x);
                    }
                }
            }
        dims[mode] = a.rows();
        cur = std::move(next);
    }
    return cur;
}

Mat kron_apply_right(const Mat& v, std::span<const Mat> factors)
{
    std::vector<Mat> t;
    t.reserve(factors.size());
    for (const auto& m : factors)
        t.push_back(m.transpose());
    return kron_apply(t, v.transpose()).transpose();
}

Mat flip_matrix(Field field, std::size_t dim_v, std::size_t dim_w)
{
    Mat p(field, dim_v * dim_w, dim_v * dim_w);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j)
            p(j * dim_v + i, i * dim_w + j) = 1;
    return p;
}

} // namespace hopfwb

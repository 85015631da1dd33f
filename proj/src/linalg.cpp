#include "hopfwb/linalg.hpp"

#include <algorithm>
#include <map>

namespace hopfwb {

namespace {

// In-place Gauss-Jordan on the first `pivot_cols` columns of m; returns the
// pivot columns. Rows beyond the rank are left zero in those columns.
std::vector<std::size_t> gauss_jordan(Mat& m, std::size_t pivot_cols)
{
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < pivot_cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(row, j));
        Scalar inv = f.inv(m(row, c));
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(row, j)) != 0) {
                m(row, j) = f.mul(m(row, j), inv);
                nz.push_back(j);
            }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || sgn(m(r, c)) == 0)
                continue;
            Scalar factor = m(r, c);
            for (std::size_t j : nz)
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

Subspace kernel_from_rref(const Mat& reduced, const std::vector<std::size_t>& pivots, std::size_t n)
{
    const Field& f = reduced.field();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Mat basis(f, n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (sgn(reduced(i, fc)) != 0)
                basis(pivots[i], k) = f.neg(reduced(i, fc));
    }
    return Subspace{std::move(basis), std::move(free_cols)};
}

SparseRow axpy(const Field& f, const SparseRow& a, const Scalar& s, const SparseRow& b)
{
    // a - s * b
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, f.neg(f.mul(s, b[j].second)));
            ++j;
        } else {
            Scalar v = f.sub(a[i].second, f.mul(s, b[j].second));
            if (sgn(v) != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Echelon rref(const Mat& a)
{
    Mat m = a;
    auto pivots = gauss_jordan(m, m.cols());
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& a)
{
    return rref(a).rank();
}

Mat Subspace::coordinates(const Mat& v) const
{
    Mat c = v.select_rows(coord_rows);
    if (basis * c != v)
        throw NoSolution("vector not in subspace");
    return c;
}

bool Subspace::contains(const Mat& v) const
{
    return basis * v.select_rows(coord_rows) == v;
}

Subspace kernel(const Mat& a)
{
    Echelon e = rref(a);
    return kernel_from_rref(e.reduced, e.pivots, a.cols());
}

Subspace span_of(const Mat& v)
{
    Echelon e = rref(v.transpose());
    Mat basis = e.reduced.rows_range(0, e.rank()).transpose();
    return Subspace{std::move(basis), e.pivots};
}

Mat image(const Mat& a)
{
    Echelon e = rref(a);
    return a.select_cols(e.pivots);
}

std::optional<Solution> try_solve(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row mismatch");
    const Field& f = a.field();
    const std::size_t n = a.cols();
    Mat aug(f, a.rows(), n + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    auto pivots = gauss_jordan(aug, n);
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        for (std::size_t j = n; j < aug.cols(); ++j)
            if (sgn(aug(r, j)) != 0)
                return std::nullopt;
    Mat x(f, n, b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[i], j) = aug(i, n + j);
    return Solution{std::move(x), kernel_from_rref(aug, pivots, n)};
}

Solution solve(const Mat& a, const Mat& b)
{
    auto s = try_solve(a, b);
    if (!s)
        throw NoSolution("right-hand side not in the image");
    return std::move(*s);
}

Mat invert(const Mat& a)
{
    if (a.rows() != a.cols())
        throw Singular("non-square matrix");
    auto s = try_solve(a, Mat::identity(a.field(), a.rows()));
    if (!s || s->kernel.dim() != 0)
        throw Singular("matrix is singular");
    return std::move(s->particular);
}

Mat right_inverse(const Mat& a)
{
    auto s = try_solve(a, Mat::identity(a.field(), a.rows()));
    if (!s)
        throw NoSolution("map is not surjective");
    return std::move(s->particular);
}

std::vector<SparseRow> sparse_columns(const Mat& m)
{
    std::vector<SparseRow> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0)
                out[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    return out;
}

Subquotient quotient_by_rows(const Field& f, std::size_t n, std::vector<SparseRow> rows)
{
    // Shortest rows first keeps fill-in low.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<SparseRow> pivots;
    std::vector<long> pivot_of(n, -1);
    for (auto& row : rows) {
        SparseRow r = std::move(row);
        while (!r.empty()) {
            std::uint32_t lead = r.front().first;
            long p = pivot_of[lead];
            if (p < 0) {
                Scalar inv = f.inv(r.front().second);
                for (auto& [c, v] : r)
                    v = f.mul(v, inv);
                pivot_of[lead] = static_cast<long>(pivots.size());
                pivots.push_back(std::move(r));
                break;
            }
            Scalar s = r.front().second;
            r = axpy(f, r, s, pivots[p]);
        }
    }
    // Back substitution in decreasing order of leading column.
    std::vector<std::size_t> order(pivots.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots[a].front().first > pivots[b].front().first; });
    for (auto idx : order) {
        SparseRow& row = pivots[idx];
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 1; k < row.size(); ++k) {
                long q = pivot_of[row[k].first];
                if (q >= 0) {
                    Scalar s = row[k].second;
                    row = axpy(f, row, s, pivots[q]);
                    changed = true;
                    break;
                }
            }
        }
    }

    Subquotient sq;
    sq.ambient_ = n;
    std::vector<long> qindex(n, -1);
    std::size_t q = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of[c] < 0)
            qindex[c] = static_cast<long>(q++);
    sq.proj_ = Mat(f, q, n);
    sq.sec_ = Mat(f, n, q);
    for (std::size_t c = 0; c < n; ++c)
        if (qindex[c] >= 0) {
            sq.proj_(qindex[c], c) = 1;
            sq.sec_(c, qindex[c]) = 1;
        }
    for (const auto& row : pivots) {
        std::uint32_t lead = row.front().first;
        for (std::size_t k = 1; k < row.size(); ++k)
            sq.proj_(qindex[row[k].first], lead) = f.neg(row[k].second);
        sq.relation_pivots_.push_back(lead);
    }
    sq.relations_ = std::move(pivots);
    return sq;
}

Mat Subquotient::relation_basis() const
{
    const Field& f = proj_.field();
    Mat b(f, ambient_, relations_.size());
    for (std::size_t k = 0; k < relations_.size(); ++k)
        for (const auto& [c, v] : relations_[k])
            b(c, k) = v;
    return b;
}

bool Subquotient::kills_relations(const Mat& fmat) const
{
    // f vanishes on S iff f = (f * sec) * proj.
    return fmat * sec_ * proj_ == fmat;
}

Subquotient quotient_by(const Mat& gens)
{
    return quotient_by_rows(gens.field(), gens.rows(), sparse_columns(gens));
}

Subquotient coequalizer(const Mat& f, const Mat& g)
{
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw std::invalid_argument("coequalizer: shape mismatch");
    return quotient_by(f - g);
}

} // namespace hopfwb

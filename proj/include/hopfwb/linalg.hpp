#pragma once

#include "hopfwb/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hopfwb {

class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Singular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
    Mat reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Mat& a);
std::size_t rank(const Mat& a);

/// A subspace of k^n with a basis in reduced column echelon form: the
/// coordinates of any vector of the subspace are its entries at coord_rows.
struct Subspace {
    Mat basis;
    std::vector<std::size_t> coord_rows;

    std::size_t dim() const { return basis.cols(); }
    std::size_t ambient() const { return basis.rows(); }
    /// Coordinates of the columns of v; throws NoSolution if some column is
    /// not in the subspace.
    Mat coordinates(const Mat& v) const;
    /// Coordinates without the membership check.
    Mat coordinates_unchecked(const Mat& v) const { return v.select_rows(coord_rows); }
    bool contains(const Mat& v) const;
};

/// Null space of a, basis in reduced form (coordinates = free variables).
Subspace kernel(const Mat& a);
/// Column span of v.
Subspace span_of(const Mat& v);
/// Basis of the column space, as a subset of the columns of a.
Mat image(const Mat& a);

struct Solution {
    Mat particular;
    Subspace kernel;
};

/// Solves a * x = b for every column of b simultaneously.
std::optional<Solution> try_solve(const Mat& a, const Mat& b);
/// As try_solve, but throws NoSolution.
Solution solve(const Mat& a, const Mat& b);

/// Exact inverse; throws Singular.
Mat invert(const Mat& a);

/// Some right inverse of a surjective map (a * r = identity); throws
/// NoSolution when a is not surjective.
Mat right_inverse(const Mat& a);

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Presentation of a quotient k^n / S with projection (q x n) and a section
/// (n x q) such that proj * sec = identity and ker(proj) = S.
class Subquotient {
public:
    Subquotient() = default;

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return proj_.rows(); }
    std::size_t relation_rank() const { return ambient_ - dim(); }
    const Mat& proj() const { return proj_; }
    const Mat& sec() const { return sec_; }
    /// Basis of the relation subspace S (columns).
    Mat relation_basis() const;
    /// True iff the map f (rows x n) vanishes on S.
    bool kills_relations(const Mat& f) const;

    friend Subquotient quotient_by_rows(const Field& field, std::size_t n, std::vector<SparseRow> rows);

private:
    std::size_t ambient_ = 0;
    Mat proj_;
    Mat sec_;
    std::vector<SparseRow> relations_;
    std::vector<std::uint32_t> relation_pivots_;
};

/// Quotient by the span of the given sparse relation vectors (sparse
/// Gaussian elimination; relation vectors are typically 2-4 entries long).
Subquotient quotient_by_rows(const Field& field, std::size_t n, std::vector<SparseRow> rows);
/// Quotient by the column span of gens (n x m).
Subquotient quotient_by(const Mat& gens);
/// Quotient of the common codomain by image(f - g).
Subquotient coequalizer(const Mat& f, const Mat& g);

/// Columns of m as sparse rows.
std::vector<SparseRow> sparse_columns(const Mat& m);

} // namespace hopfwb

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfwb/linalg.hpp"
#include "hopfwb/report.hpp"

using namespace hopfwb;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("field arithmetic over Q and F_p")
{
    CHECK(Q.parse("-3/6") == Scalar(-1, 2));
    Field f7 = Field::prime(7);
    CHECK(f7.parse("-1") == 6);
    CHECK(f7.parse("1/3") == 5);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.mul(4, 5) == 6);
    CHECK_THROWS_AS(Field::prime(9), FieldError);
    CHECK_THROWS_AS(f7.parse("1/7"), FieldError);
    CHECK_THROWS_AS(f7.inv(0), FieldError);
    CHECK(Field::prime(2).name() != Q.name());
}

TEST_CASE("kron follows left-major ordering")
{
    Mat a(Q, 2, 2, {1, 2, 3, 4});
    Mat b(Q, 2, 2, {0, 1, 1, 0});
    Mat k = kron(a, b);
    // (i,j) -> i*2+j; entry ((0,1),(0,0)) = a00*b10 = 1
    CHECK(k(1, 0) == 1);
    CHECK(k(3, 0) == 3);
    CHECK(k(2, 1) == 3);
    CHECK(k(3, 3) == 0);
    CHECK(k(2, 3) == 4);
    CHECK(k(0, 0) == 0);
    Mat v(Q, 4, 1, {1, 2, 3, 4});
    std::vector<Mat> fs{a, b};
    CHECK(kron_apply(fs, v) == k * v);
    Mat row(Q, 1, 4, {5, -1, 0, 2});
    CHECK(kron_apply_right(row, fs) == row * k);
    Mat fl = flip_matrix(Q, 2, 3);
    CHECK(fl * kron(Mat::unit_vector(Q, 2, 1), Mat::unit_vector(Q, 3, 2)) == kron(Mat::unit_vector(Q, 3, 2), Mat::unit_vector(Q, 2, 1)));
}

TEST_CASE("solve returns particular solution and kernel")
{
    Mat a(Q, 2, 2, {1, 2, 2, 4});
    Mat b(Q, 2, 1, {1, 2});
    auto sol = try_solve(a, b);
    REQUIRE(sol);
    CHECK(sol->particular == Mat(Q, 2, 1, {1, 0}));
    REQUIRE(sol->kernel.dim() == 1);
    CHECK(sol->kernel.basis == Mat(Q, 2, 1, {-2, 1}));
    CHECK_FALSE(try_solve(a, Mat(Q, 2, 1, {1, 0})));
    CHECK_THROWS_AS(solve(a, Mat(Q, 2, 1, {1, 0})), NoSolution);
    CHECK_THROWS_AS(invert(a), Singular);
}

TEST_CASE("inverse and rank")
{
    Mat a(Q, 3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
    Mat inv = invert(a);
    CHECK(a * inv == Mat::identity(Q, 3));
    CHECK(rank(Mat(Q, 3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 0})) == 2);
    Field f2 = Field::prime(2);
    CHECK(rank(Mat(f2, 2, 2, {1, 1, 1, 1})) == 1);
    CHECK(rank(Mat(f2, 2, 2, {1, 1, 1, -1})) == 1);
    CHECK(rank(Mat(Q, 2, 2, {1, 1, 1, -1})) == 2);
}

TEST_CASE("sparse quotient agrees with dense rank")
{
    // Relations e0 - e1, e1 - e2 in k^4 leave a 2-dimensional quotient.
    std::vector<SparseRow> rows{{{0, 1}, {1, -1}}, {{1, 1}, {2, -1}}, {{0, 1}, {2, -1}}};
    Subquotient q = quotient_by_rows(Q, 4, rows);
    CHECK(q.dim() == 2);
    CHECK(q.relation_rank() == 2);
    CHECK(q.proj() * q.sec() == Mat::identity(Q, 2));
    CHECK((q.proj() * Mat(Q, 4, 1, {1, -1, 0, 0})).is_zero());
    CHECK(q.kills_relations(Mat(Q, 1, 4, {1, 1, 1, 0})));
    CHECK_FALSE(q.kills_relations(Mat(Q, 1, 4, {1, 0, 0, 0})));

    Mat gens(Q, 3, 1, {1, 1, 1});
    Subquotient c = quotient_by(gens);
    CHECK(c.dim() == 2);
    Subquotient ce = coequalizer(Mat::identity(Q, 3), Mat::identity(Q, 3));
    CHECK(ce.dim() == 3);
}

TEST_CASE("subspace coordinates")
{
    Subspace s = span_of(Mat(Q, 3, 2, {1, 0, 1, 1, 0, 1}));
    CHECK(s.dim() == 2);
    CHECK(s.contains(Mat(Q, 3, 1, {2, 5, 3})));
    CHECK_FALSE(s.contains(Mat(Q, 3, 1, {1, 0, 0})));
    Mat v(Q, 3, 1, {2, 5, 3});
    CHECK(s.basis * s.coordinates(v) == v);
    CHECK_THROWS_AS(s.coordinates(Mat(Q, 3, 1, {1, 0, 0})), NoSolution);
    Subspace k = kernel(Mat(Q, 1, 3, {1, 1, 1}));
    CHECK(k.dim() == 2);
    CHECK((Mat(Q, 1, 3, {1, 1, 1}) * k.basis).is_zero());
}

TEST_CASE("report aggregation")
{
    auto g = CheckReport::group("root");
    g.add(CheckReport::inapplicable("a", "n/a"));
    CHECK(g.verdict == Verdict::Inapplicable);
    g.add(CheckReport::pass("b"));
    CHECK(g.verdict == Verdict::Pass);
    g.add(CheckReport::fail("c", {{"why", 1}}));
    CHECK(g.verdict == Verdict::Fail);
    CHECK(g.leaf_count() == 3);
    REQUIRE(g.find("c") != nullptr);
    CHECK(g.find("c")->witness["why"] == 1);
}

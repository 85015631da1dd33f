#include "hopfwb/fixtures.hpp"

#include <stdexcept>

namespace hopfwb {

Algebra algebra_from_table(const Field& field, std::size_t dim, const std::vector<long>& unit,
                           const std::vector<StructureEntry>& table)
{
    Mat u(field, dim, 1);
    for (std::size_t i = 0; i < dim; ++i)
        u.set(i, 0, unit.at(i));
    Mat mul(field, dim, dim * dim);
    for (auto [i, j, k, v] : table)
        mul.set(k, i * dim + j, field.add(mul(k, i * dim + j), field.from_int(v)));
    return Algebra(u, mul);
}

Algebra cyclic_group_algebra(const Field& field, std::size_t n)
{
    std::vector<long> unit(n, 0);
    unit[0] = 1;
    std::vector<StructureEntry> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.emplace_back(i, j, (i + j) % n, 1);
    return algebra_from_table(field, n, unit, table);
}

Algebra dual_numbers(const Field& field)
{
    return algebra_from_table(field, 2, {1, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
}

Algebra upper_triangular(const Field& field)
{
    return algebra_from_table(field, 3, {1, 0, 1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
}

namespace {

Algebra ground(const Field& field)
{
    return algebra_from_table(field, 1, {1}, {{0, 0, 0, 1}});
}

// Bialgebra over R = k with grouplike basis elements.
Bialgebroid monoid_bialgebroid(std::string name, const Algebra& h)
{
    const Field& f = h.field();
    const std::size_t n = h.dim();
    Mat delta(f, n * n, n);
    Mat eps(f, 1, n);
    for (std::size_t i = 0; i < n; ++i) {
        delta(i * n + i, i) = 1;
        eps(0, i) = 1;
    }
    return Bialgebroid(std::move(name), ground(f), h, h.unit(), h.unit(), delta, eps);
}

} // namespace

Bialgebroid cyclic_group_bialgebroid(std::string name, const Field& field, std::size_t n)
{
    return monoid_bialgebroid(std::move(name), cyclic_group_algebra(field, n));
}

Bialgebroid enveloping_bialgebroid(std::string name, const Algebra& r)
{
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Algebra h = enveloping(r);
    Mat s(f, n * n, n), t(f, n * n, n);
    Mat delta(f, n * n * n * n, n * n);
    Mat eps(f, n, n * n);
    for (std::size_t a = 0; a < n; ++a) {
        Mat ea = Mat::unit_vector(f, n, a);
        s.set_block(0, a, kron(ea, r.unit()));
        t.set_block(0, a, kron(r.unit(), ea));
        for (std::size_t b = 0; b < n; ++b) {
            Mat eb = Mat::unit_vector(f, n, b);
            delta.set_block(0, a * n + b, kron(kron(ea, r.unit()), kron(r.unit(), eb)));
            eps.set_block(0, a * n + b, r.mul().col(a * n + b));
        }
    }
    return Bialgebroid(std::move(name), r, h, s, t, delta, eps);
}

Bialgebroid sweedler(const Field& field)
{
    // basis 0:1 1:g 2:x 3:gx
    Algebra h = algebra_from_table(field, 4, {1, 0, 0, 0},
                                   {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
                                    {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 3, 1}, {1, 3, 2, 1},
                                    {2, 0, 2, 1}, {2, 1, 3, -1},
                                    {3, 0, 3, 1}, {3, 1, 2, -1}});
    Mat delta(field, 16, 4);
    auto put = [&](std::size_t i, std::size_t j, std::size_t col, long v) { delta.set(i * 4 + j, col, v); };
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 0, 2, 1);
    put(1, 2, 2, 1);
    put(3, 1, 3, 1);
    put(0, 3, 3, 1);
    Mat eps(field, 1, 4, {1, 1, 0, 0});
    return Bialgebroid("H4Q", ground(field), h, h.unit(), h.unit(), delta, eps);
}

Bialgebroid idempotent_monoid(const Field& field)
{
    Algebra h = algebra_from_table(field, 2, {1, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}});
    return monoid_bialgebroid("IDEM", h);
}

std::vector<Bialgebroid> builtin_fixtures()
{
    const Field q = Field::rationals();
    return {
        cyclic_group_bialgebroid("C2Q", q, 2),
        cyclic_group_bialgebroid("C2F2", Field::prime(2), 2),
        sweedler(q),
        enveloping_bialgebroid("RE2", dual_numbers(q)),
        enveloping_bialgebroid("UT2E", upper_triangular(q)),
        idempotent_monoid(q),
    };
}

std::vector<std::string> fixture_names()
{
    return {"C2Q", "C2F2", "H4Q", "RE2", "UT2E", "IDEM"};
}

Bialgebroid fixture(std::string_view name)
{
    for (auto& b : builtin_fixtures())
        if (b.name() == name)
            return b;
    throw std::out_of_range("unknown fixture: " + std::string(name));
}

} // namespace hopfwb

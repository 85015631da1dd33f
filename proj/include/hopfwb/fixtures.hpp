#pragma once

#include "hopfwb/bialgebroid.hpp"

#include <string_view>
#include <tuple>
#include <vector>

namespace hopfwb {

using StructureEntry = std::tuple<std::size_t, std::size_t, std::size_t, long>;

/// Algebra from sparse structure constants e_i e_j += v e_k.
Algebra algebra_from_table(const Field& field, std::size_t dim, const std::vector<long>& unit,
                           const std::vector<StructureEntry>& table);
/// Group algebra of the cyclic group of order n (basis g^0 .. g^{n-1}).
Algebra cyclic_group_algebra(const Field& field, std::size_t n);
/// k[x]/(x^2), basis 1, x.
Algebra dual_numbers(const Field& field);
/// Upper triangular 2x2 matrices, basis e11, e12, e22.
Algebra upper_triangular(const Field& field);

/// Group bialgebra k[C_n] over R = k.
Bialgebroid cyclic_group_bialgebroid(std::string name, const Field& field, std::size_t n);
/// R (x) R^op with s(a) = a (x) 1, t(b) = 1 (x) b,
/// Delta(a (x) b) = (a (x) 1) (x)_R (1 (x) b), eps(a (x) b) = ab.
Bialgebroid enveloping_bialgebroid(std::string name, const Algebra& r);
/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
Bialgebroid sweedler(const Field& field);
/// Monoid bialgebra of {1, e} with e^2 = e.
Bialgebroid idempotent_monoid(const Field& field);

/// C2Q, C2F2, H4Q, RE2, UT2E, IDEM in that order.
std::vector<Bialgebroid> builtin_fixtures();
/// Throws std::out_of_range for an unknown name.
Bialgebroid fixture(std::string_view name);
std::vector<std::string> fixture_names();

} // namespace hopfwb

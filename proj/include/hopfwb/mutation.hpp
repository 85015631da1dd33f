#pragma once

#include "hopfwb/bialgebroid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopfwb {

/// A single-entry perturbation of the comultiplication ("delta"), the counit
/// ("eps") or the structure constants of H ("mul").
struct Mutation {
    std::string part;
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar shift;
};

Bialgebroid mutate(const Bialgebroid& b, const Mutation& m);

/// `count` mutations drawn from a seeded generator. Comultiplication changes
/// that vanish in H (x)_R H are redrawn since they leave B unchanged.
std::vector<Mutation> seeded_mutations(const Bialgebroid& b, std::uint64_t seed, std::size_t count);

/// One leaf per mutation: passes when check_bialgebroid reports at least one
/// failing axiom with a witness.
CheckReport mutation_self_test(const Bialgebroid& b, std::uint64_t seed, std::size_t count = 20);

} // namespace hopfwb

#include "hopfwb/mutation.hpp"

#include <random>

namespace hopfwb {

Bialgebroid mutate(const Bialgebroid& b, const Mutation& m)
{
    const Field& f = b.field();
    auto bump = [&](Mat a) {
        a.set(m.row, m.col, f.add(a(m.row, m.col), m.shift));
        return a;
    };
    if (m.part == "delta")
        return Bialgebroid(b.name(), b.R(), b.H(), b.s(), b.t(), bump(b.delta()), b.eps());
    if (m.part == "eps")
        return Bialgebroid(b.name(), b.R(), b.H(), b.s(), b.t(), b.delta(), bump(b.eps()));
    if (m.part == "mul")
        return Bialgebroid(b.name(), b.R(), Algebra(b.H().unit(), bump(b.H().mul())), b.s(), b.t(), b.delta(), b.eps());
    throw std::invalid_argument("unknown mutation target " + m.part);
}

std::vector<Mutation> seeded_mutations(const Bialgebroid& b, std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 gen(seed);
    const Field& f = b.field();
    std::vector<Mutation> out;
    while (out.size() < count) {
        const char* parts[] = {"delta", "eps", "mul"};
        std::string part = parts[gen() % 3];
        const Mat& target = part == "delta" ? b.delta() : part == "eps" ? b.eps() : b.H().mul();
        Mutation m{part, gen() % target.rows(), gen() % target.cols(), Scalar(0)};
        // Nonzero shift in the field: 1..3 over Q, 1..p-1 over F_p.
        long span = f.is_prime() ? static_cast<long>(f.characteristic()) - 1 : 3;
        m.shift = f.from_int(1 + static_cast<long>(gen() % span));
        if (part == "delta") {
            Mat d(f, target.rows(), 1);
            d.set(m.row, 0, m.shift);
            if ((b.hh().proj() * d).is_zero())
                continue;
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

bool has_failing_witness(const CheckReport& r)
{
    if (r.children.empty())
        return r.failed() && !r.witness.is_null();
    for (const auto& c : r.children)
        if (has_failing_witness(c))
            return true;
    return false;
}

} // namespace

CheckReport mutation_self_test(const Bialgebroid& b, std::uint64_t seed, std::size_t count)
{
    auto report = CheckReport::group("mutations");
    const Field& f = b.field();
    std::size_t i = 0;
    for (const auto& m : seeded_mutations(b, seed, count)) {
        std::string id = "mutation_" + std::to_string(i++);
        nlohmann::json where{{"part", m.part}, {"row", m.row}, {"col", m.col}, {"shift", f.to_string(m.shift)}};
        CheckReport axioms = check_bialgebroid(mutate(b, m));
        std::vector<std::string> failing;
        for (const auto& leaf : axioms.children)
            if (leaf.failed())
                failing.push_back(leaf.id);
        where["failing_axioms"] = failing;
        bool ok = has_failing_witness(axioms);
        report.add(ok ? CheckReport::pass(id, where) : CheckReport::fail(id, where));
    }
    return report;
}

} // namespace hopfwb

#include "hopfwb/report.hpp"

namespace hopfwb {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Inapplicable:
        return "inapplicable";
    }
    return "?";
}

CheckReport CheckReport::pass(std::string id, nlohmann::json witness)
{
    return CheckReport{std::move(id), Verdict::Pass, std::move(witness), {}, 0.0};
}

CheckReport CheckReport::fail(std::string id, nlohmann::json witness)
{
    return CheckReport{std::move(id), Verdict::Fail, std::move(witness), {}, 0.0};
}

CheckReport CheckReport::inapplicable(std::string id, std::string reason)
{
    return CheckReport{std::move(id), Verdict::Inapplicable, nlohmann::json{{"reason", std::move(reason)}}, {}, 0.0};
}

CheckReport CheckReport::check(std::string id, bool ok, nlohmann::json witness)
{
    return ok ? pass(std::move(id)) : fail(std::move(id), std::move(witness));
}

CheckReport CheckReport::group(std::string id)
{
    return CheckReport{std::move(id), Verdict::Pass, nullptr, {}, 0.0};
}

CheckReport& CheckReport::add(CheckReport child)
{
    children.push_back(std::move(child));
    aggregate();
    return children.back();
}

void CheckReport::aggregate()
{
    if (children.empty())
        return;
    bool any_fail = false, any_pass = false;
    for (const auto& c : children) {
        any_fail |= c.verdict == Verdict::Fail;
        any_pass |= c.verdict == Verdict::Pass;
    }
    verdict = any_fail ? Verdict::Fail : any_pass ? Verdict::Pass : Verdict::Inapplicable;
}

std::size_t CheckReport::count(Verdict v) const
{
    std::size_t n = children.empty() && verdict == v ? 1 : 0;
    for (const auto& c : children)
        n += c.count(v);
    return n;
}

std::size_t CheckReport::leaf_count() const
{
    if (children.empty())
        return 1;
    std::size_t n = 0;
    for (const auto& c : children)
        n += c.leaf_count();
    return n;
}

const CheckReport* CheckReport::find(std::string_view needle) const
{
    if (id == needle)
        return this;
    for (const auto& c : children)
        if (auto* r = c.find(needle))
            return r;
    return nullptr;
}

} // namespace hopfwb

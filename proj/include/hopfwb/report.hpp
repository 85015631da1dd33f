#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hopfwb {

enum class Verdict { Pass, Fail, Inapplicable };

std::string_view to_string(Verdict v);

/// Verdict tree produced by every checker. Leaves carry a witness payload on
/// failure; groups aggregate their children (any fail -> fail, otherwise any
/// pass -> pass, otherwise inapplicable).
struct CheckReport {
    std::string id;
    Verdict verdict = Verdict::Pass;
    nlohmann::json witness;
    std::vector<CheckReport> children;
    double millis = 0.0;

    static CheckReport pass(std::string id, nlohmann::json witness = nullptr);
    static CheckReport fail(std::string id, nlohmann::json witness = nullptr);
    static CheckReport inapplicable(std::string id, std::string reason);
    static CheckReport check(std::string id, bool ok, nlohmann::json witness = nullptr);
    static CheckReport group(std::string id);

    CheckReport& add(CheckReport child);
    /// Recomputes the verdict of this node from its children.
    void aggregate();

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
    std::size_t count(Verdict v) const;
    std::size_t leaf_count() const;
    /// Depth-first search by id.
    const CheckReport* find(std::string_view needle) const;
};

} // namespace hopfwb

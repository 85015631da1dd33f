#pragma once

#include "hopfwb/bialgebroid.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hopfwb {

/// Schema violation; the message names the offending field path (and for
/// syntax errors the JSON parser's position).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view document_format = "hopfwb-bialgebroid/1";
inline constexpr std::string_view report_format = "hopfwb-report/1";

struct NamedModule {
    std::string name;
    HModule module;
};

/// A bialgebroid as read from a document. Scalars are strings ("-3/7"),
/// algebras are sparse structure constants [i, j, k, "v"] meaning
/// e_i e_j += v e_k, and matrices are {"rows", "cols", "entries": [[r, c, "v"]]}.
/// Delta is (dim H)^2 x dim H, eps is dim R x dim H, s and t are dim H x dim R.
struct InputDocument {
    std::string name;
    Field field = Field::rationals();
    Algebra r;
    Algebra h;
    Mat s, t, delta, eps;
    std::vector<NamedModule> modules;

    Bialgebroid bialgebroid() const;
    friend bool operator==(const InputDocument& a, const InputDocument& b);
};

InputDocument document_of(const Bialgebroid& b, std::vector<NamedModule> modules = {});
/// Throws ParseError.
InputDocument parse_document(std::string_view text);
std::string render_document(const InputDocument& doc);

enum class ReportFormat { Text, Json };

/// Deterministic rendering without timings. Text shows passing nodes to
/// depth 2 and expands failing and inapplicable ones fully with witnesses.
std::string render_report(const CheckReport& r, ReportFormat format);
nlohmann::json report_json(const CheckReport& r);

} // namespace hopfwb

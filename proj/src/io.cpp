#include "hopfwb/io.hpp"

#include <algorithm>
#include <sstream>

namespace hopfwb {

using nlohmann::json;

namespace {

Field parse_field(const json& j)
{
    if (!j.is_string())
        throw ParseError("field: expected \"Q\" or \"F_p\"");
    std::string s = j.get<std::string>();
    if (s == "Q")
        return Field::rationals();
    if (s.rfind("F_", 0) == 0 && s.size() > 2 && s.find_first_not_of("0123456789", 2) == std::string::npos) {
        try {
            return Field::prime(std::stoul(s.substr(2)));
        } catch (const std::exception& e) {
            throw ParseError("field: " + std::string(e.what()));
        }
    }
    throw ParseError("field: unknown field \"" + s + "\"");
}

const json& member(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(path + ": missing field \"" + key + "\"");
    return obj.at(key);
}

std::size_t parse_index(const json& j, const std::string& path)
{
    if (!j.is_number_unsigned())
        throw ParseError(path + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& path)
{
    if (!j.is_string())
        throw ParseError(path + ": scalars must be strings such as \"-3/7\"");
    try {
        return f.parse(j.get<std::string>());
    } catch (const FieldError& e) {
        std::string what = e.what();
        throw ParseError(path + ": " + what + (what.find(f.name()) == std::string::npos ? " over " + f.name() : ""));
    }
}

Mat parse_matrix(const Field& f, const json& j, const std::string& path, std::size_t rows, std::size_t cols)
{
    std::size_t r = parse_index(member(j, "rows", path), path + ".rows");
    std::size_t c = parse_index(member(j, "cols", path), path + ".cols");
    if (r != rows || c != cols)
        throw ParseError(path + ": expected shape " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                         std::to_string(r) + "x" + std::to_string(c));
    const json& entries = member(j, "entries", path);
    if (!entries.is_array())
        throw ParseError(path + ".entries: expected an array");
    Mat m(f, r, c);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        std::string epath = path + ".entries[" + std::to_string(e) + "]";
        const json& t = entries[e];
        if (!t.is_array() || t.size() != 3)
            throw ParseError(epath + ": expected [row, col, \"value\"]");
        std::size_t i = parse_index(t[0], epath), k = parse_index(t[1], epath);
        if (i >= r || k >= c)
            throw ParseError(epath + ": index (" + std::to_string(i) + ", " + std::to_string(k) + ") out of range for " +
                             std::to_string(r) + "x" + std::to_string(c));
        m.set(i, k, m(i, k) + parse_scalar(f, t[2], epath));
    }
    return m;
}

Algebra parse_algebra(const Field& f, const json& j, const std::string& path)
{
    std::size_t n = parse_index(member(j, "dim", path), path + ".dim");
    if (n == 0)
        throw ParseError(path + ".dim: must be positive");
    const json& unit = member(j, "unit", path);
    if (!unit.is_array() || unit.size() != n)
        throw ParseError(path + ".unit: expected " + std::to_string(n) + " scalars");
    Mat u(f, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        u.set(i, 0, parse_scalar(f, unit[i], path + ".unit[" + std::to_string(i) + "]"));
    const json& table = member(j, "mul", path);
    if (!table.is_array())
        throw ParseError(path + ".mul: expected an array of [i, j, k, \"value\"]");
    Mat mul(f, n, n * n);
    for (std::size_t e = 0; e < table.size(); ++e) {
        std::string epath = path + ".mul[" + std::to_string(e) + "]";
        const json& t = table[e];
        if (!t.is_array() || t.size() != 4)
            throw ParseError(epath + ": expected [i, j, k, \"value\"]");
        std::size_t a = parse_index(t[0], epath), b = parse_index(t[1], epath), c = parse_index(t[2], epath);
        if (a >= n || b >= n || c >= n)
            throw ParseError(epath + ": triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                             std::to_string(c) + ") out of range for dim " + std::to_string(n));
        mul.set(c, a * n + b, mul(c, a * n + b) + parse_scalar(f, t[3], epath));
    }
    return Algebra(u, mul);
}

json matrix_json(const Field& f, const Mat& m)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (m(i, k) != 0)
                entries.push_back({i, k, f.to_string(m(i, k))});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json algebra_json(const Algebra& a)
{
    const Field& f = a.field();
    json unit = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        unit.push_back(f.to_string(a.unit()(i, 0)));
    json mul = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.constant(i, j, k) != 0)
                    mul.push_back({i, j, k, f.to_string(a.constant(i, j, k))});
    return {{"dim", a.dim()}, {"unit", unit}, {"mul", mul}};
}

// Indented objects, with arrays of scalars (index triples, units) on one line.
void pretty(const json& j, std::size_t depth, std::string& out)
{
    const std::string pad(2 * depth, ' '), inner(2 * depth + 2, ' ');
    auto flat = [](const json& a) {
        return std::all_of(a.begin(), a.end(), [](const json& e) { return e.is_primitive(); });
    };
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += inner + json(it.key()).dump() + ": ";
            pretty(it.value(), depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            pretty(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

} // namespace

Bialgebroid InputDocument::bialgebroid() const
{
    return Bialgebroid(name, r, h, s, t, delta, eps);
}

bool operator==(const InputDocument& a, const InputDocument& b)
{
    if (a.modules.size() != b.modules.size())
        return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i)
        if (a.modules[i].name != b.modules[i].name || a.modules[i].module.dim != b.modules[i].module.dim ||
            a.modules[i].module.action != b.modules[i].module.action)
            return false;
    return a.name == b.name && a.field == b.field && a.r == b.r && a.h == b.h && a.s == b.s && a.t == b.t &&
           a.delta == b.delta && a.eps == b.eps;
}

InputDocument document_of(const Bialgebroid& b, std::vector<NamedModule> modules)
{
    return InputDocument{b.name(), b.field(), b.R(), b.H(), b.s(), b.t(), b.delta(), b.eps(), std::move(modules)};
}

InputDocument parse_document(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("document: expected a JSON object");
    const json& format = member(j, "format", "document");
    if (!format.is_string() || format.get<std::string>() != document_format)
        throw ParseError("format: expected \"" + std::string(document_format) + "\"");
    const json& name = member(j, "name", "document");
    if (!name.is_string())
        throw ParseError("name: expected a string");
    Field f = parse_field(member(j, "field", "document"));
    Algebra r = parse_algebra(f, member(j, "R", "document"), "R");
    Algebra h = parse_algebra(f, member(j, "H", "document"), "H");
    const std::size_t n = h.dim(), m = r.dim();
    Mat s = parse_matrix(f, member(j, "s", "document"), "s", n, m);
    Mat t = parse_matrix(f, member(j, "t", "document"), "t", n, m);
    Mat delta = parse_matrix(f, member(j, "delta", "document"), "delta", n * n, n);
    Mat eps = parse_matrix(f, member(j, "eps", "document"), "eps", m, n);
    std::vector<NamedModule> modules;
    if (j.contains("modules")) {
        const json& mods = j.at("modules");
        if (!mods.is_array())
            throw ParseError("modules: expected an array");
        for (std::size_t i = 0; i < mods.size(); ++i) {
            std::string path = "modules[" + std::to_string(i) + "]";
            const json& mj = mods[i];
            const json& mname = member(mj, "name", path);
            if (!mname.is_string())
                throw ParseError(path + ".name: expected a string");
            NamedModule nm{mname.get<std::string>(), {}};
            nm.module.dim = parse_index(member(mj, "dim", path), path + ".dim");
            const json& action = member(mj, "action", path);
            if (!action.is_array() || action.size() != n)
                throw ParseError(path + ".action: expected one matrix per basis element of H (" + std::to_string(n) + ")");
            for (std::size_t k = 0; k < n; ++k)
                nm.module.action.push_back(parse_matrix(f, action[k], path + ".action[" + std::to_string(k) + "]",
                                                        nm.module.dim, nm.module.dim));
            modules.push_back(std::move(nm));
        }
    }
    return InputDocument{name.get<std::string>(), f, std::move(r), std::move(h), std::move(s), std::move(t),
                         std::move(delta), std::move(eps), std::move(modules)};
}

std::string render_document(const InputDocument& doc)
{
    const Field& f = doc.field;
    json j{{"format", document_format},
           {"name", doc.name},
           {"field", f.name()},
           {"R", algebra_json(doc.r)},
           {"H", algebra_json(doc.h)},
           {"s", matrix_json(f, doc.s)},
           {"t", matrix_json(f, doc.t)},
           {"delta", matrix_json(f, doc.delta)},
           {"eps", matrix_json(f, doc.eps)}};
    if (!doc.modules.empty()) {
        json mods = json::array();
        for (const auto& m : doc.modules) {
            json action = json::array();
            for (const auto& a : m.module.action)
                action.push_back(matrix_json(f, a));
            mods.push_back({{"name", m.name}, {"dim", m.module.dim}, {"action", action}});
        }
        j["modules"] = mods;
    }
    std::string out;
    pretty(j, 0, out);
    return out + "\n";
}

json report_json(const CheckReport& r)
{
    json j{{"id", r.id}, {"verdict", to_string(r.verdict)}};
    if (!r.witness.is_null())
        j["witness"] = r.witness;
    if (!r.children.empty()) {
        json kids = json::array();
        for (const auto& c : r.children)
            kids.push_back(report_json(c));
        j["children"] = kids;
    }
    return j;
}

namespace {

void render_text(const CheckReport& r, std::size_t depth, std::ostringstream& out)
{
    for (const auto& c : r.children) {
        if (c.passed() && depth > 2)
            continue;
        out << std::string(2 * (depth - 1), ' ') << to_string(c.verdict) << "  " << c.id;
        if (!c.passed() && !c.witness.is_null())
            out << "  " << c.witness.dump();
        out << "\n";
        render_text(c, depth + 1, out);
    }
}

} // namespace

std::string render_report(const CheckReport& r, ReportFormat format)
{
    if (format == ReportFormat::Json)
        return json{{"format", report_format}, {"report", report_json(r)}}.dump(2) + "\n";
    std::ostringstream out;
    out << "# " << r.id << ": " << to_string(r.verdict) << " (" << r.count(Verdict::Pass) << " pass, "
        << r.count(Verdict::Fail) << " fail, " << r.count(Verdict::Inapplicable) << " inapplicable)\n";
    if (r.children.empty() && !r.passed() && !r.witness.is_null())
        out << "  " << r.witness.dump() << "\n";
    render_text(r, 1, out);
    return out.str();
}

} // namespace hopfwb

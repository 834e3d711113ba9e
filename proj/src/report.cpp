#include "angmax/report.hpp"

#include "angmax/format.hpp"
#include "angmax/version.hpp"

namespace angmax {

namespace {

void dump_value(const ordered_json& j, std::string& out, int indent, int depth)
{
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');

    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += ordered_json(it.key()).dump();
                out += ": ";
                dump_value(it.value(), out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_value(el, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case nlohmann::detail::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump(); // strings, ints, bools, null
            return;
    }
}

} // namespace

std::string dump_json(const ordered_json& j, int indent)
{
    std::string out;
    dump_value(j, out, indent, 0);
    out += '\n';
    return out;
}

std::string Report::to_json() const
{
    ordered_json doc;
    doc["experiment"] = experiment;
    doc["version"] = kVersion;
    doc["seed"] = seed;
    doc["config"] = config;
    doc["rows"] = rows;
    doc["empirical_constants"] = empirical_constants;
    doc["flags"] = flags;
    return dump_json(doc);
}

std::string Report::rows_csv() const
{
    std::string out;
    if (rows.empty()) return out;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += it.key();
    }
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) out += ',';
            first = false;
            const auto& v = it.value();
            if (v.is_number_float())
                out += format_double(v.get<double>());
            else if (v.is_string())
                out += v.get<std::string>();
            else
                out += v.dump();
        }
        out += '\n';
    }
    return out;
}

} // namespace angmax

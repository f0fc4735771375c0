#include "fairaudit/canonical_json.hpp"

#include <cmath>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

namespace {

void emit(const nlohmann::json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    const char* nl = indent > 0 ? "\n" : "";
    const char* colon = indent > 0 ? ": " : ":";

    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.cbegin(); it != j.cend(); ++it) { // std::map order: sorted keys
                if (!first)
                    out += ',';
                first = false;
                out += nl;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += colon;
                emit(it.value(), out, indent, depth + 1);
            }
            out += nl;
            out += close_pad;
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first)
                    out += ',';
                first = false;
                out += nl;
                out += pad;
                emit(item, out, indent, depth + 1);
            }
            out += nl;
            out += close_pad;
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            out += format_double(v);
            return;
        }
        default:
            out += j.dump(); // null, bool, integers, strings
            return;
    }
}

} // namespace

std::string canonical_dump(const nlohmann::json& j) {
    std::string out;
    emit(j, out, 2, 0);
    out += '\n';
    return out;
}

std::string canonical_dump_compact(const nlohmann::json& j) {
    std::string out;
    emit(j, out, 0, 0);
    return out;
}

} // namespace fairaudit

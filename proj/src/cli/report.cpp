#include "torrigid/cli.hpp"

#include <sstream>

namespace torrigid::cli {

Json to_json(const Report& r)
{
    Json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["results"] = r.results;
    j["hypotheses"] = Json::array();
    for (const auto& h : r.hypotheses)
        j["hypotheses"].push_back({{"name", h.name}, {"status", h.status}, {"detail", h.detail}});
    j["contributions"] = Json::array();
    for (const auto& c : r.contributions)
        j["contributions"].push_back({{"part", c.part}, {"degree", c.degree}, {"dimension", c.dimension}});
    j["completeness"] = r.completeness;
    j["warnings"] = r.warnings;
    j["exit_code"] = r.exit_code;
    return j;
}

Report report_from_json(const Json& j)
{
    Report r;
    try {
        r.command = j.at("command").get<std::string>();
        r.input_digest = j.at("input_digest").get<std::string>();
        r.results = j.at("results");
        for (const auto& h : j.at("hypotheses"))
            r.hypotheses.push_back({h.at("name").get<std::string>(), h.at("status").get<std::string>(),
                                    h.at("detail").get<std::string>()});
        for (const auto& c : j.at("contributions"))
            r.contributions.push_back({c.at("part").get<std::string>(), c.at("degree").get<std::vector<long>>(),
                                       c.at("dimension").get<std::size_t>()});
        r.completeness = j.at("completeness").get<std::string>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.exit_code = j.at("exit_code").get<int>();
    } catch (const Json::exception& e) {
        throw InputError(std::string("not a report: ") + e.what());
    }
    return r;
}

namespace {

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

void results_text(std::ostream& os, const Json& obj, const std::string& indent)
{
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            os << indent << key << ":\n";
            results_text(os, value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << indent << key << ":\n";
            for (const auto& item : value) {
                os << indent << "  -\n";
                results_text(os, item, indent + "    ");
            }
        } else {
            os << indent << key << ": " << scalar_text(value) << '\n';
        }
    }
}

} // namespace

std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << "command: " << r.command << '\n';
    os << "input digest: " << r.input_digest << '\n';
    results_text(os, r.results, "");
    if (!r.completeness.empty())
        os << "completeness: " << r.completeness << '\n';
    if (!r.hypotheses.empty()) {
        os << "hypotheses:\n";
        std::size_t width = 0;
        for (const auto& h : r.hypotheses)
            width = std::max(width, h.name.size());
        for (const auto& h : r.hypotheses) {
            os << "  " << h.name << std::string(width - h.name.size() + 2, ' ') << h.status;
            if (!h.detail.empty())
                os << "  (" << h.detail << ')';
            os << '\n';
        }
    }
    if (!r.contributions.empty()) {
        os << "contributing degrees:\n";
        for (const auto& c : r.contributions) {
            os << "  " << c.part << " p=(";
            for (std::size_t k = 0; k < c.degree.size(); ++k)
                os << (k ? "," : "") << c.degree[k];
            os << ") dim " << c.dimension << '\n';
        }
    }
    for (const auto& w : r.warnings)
        os << "warning: " << w << '\n';
    os << "exit code: " << r.exit_code << '\n';
    return os.str();
}

} // namespace torrigid::cli

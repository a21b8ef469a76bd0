#include "torrigid/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace torrigid::cli {

namespace {

Json parse_document(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Translate the byte offset into a line number.
        std::size_t line = 1;
        std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < end; ++k)
            if (text[k] == '\n')
                ++line;
        throw InputError(source + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
    }
}

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& what)
{
    throw InputError(source + ": field '" + field + "': " + what);
}

long as_long(const Json& j, const std::string& source, const std::string& field)
{
    if (!j.is_number_integer())
        field_error(source, field, "expected an integer, got " + j.dump());
    return j.get<long>();
}

std::vector<long> as_long_array(const Json& j, const std::string& source, const std::string& field)
{
    if (!j.is_array())
        field_error(source, field, "expected an array");
    std::vector<long> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(as_long(j[k], source, field + "[" + std::to_string(k) + "]"));
    return out;
}

} // namespace

toric::RawFan parse_fan(const std::string& text, const std::string& source)
{
    Json doc = parse_document(text, source);
    if (!doc.is_object())
        throw InputError(source + ": expected a JSON object");
    if (!doc.contains("rays"))
        field_error(source, "rays", "missing");
    if (!doc.contains("max_cones"))
        field_error(source, "max_cones", "missing");

    toric::RawFan raw;
    const Json& rays = doc["rays"];
    if (!rays.is_array() || rays.empty())
        field_error(source, "rays", "expected a non-empty array of integer vectors");
    for (std::size_t k = 0; k < rays.size(); ++k) {
        std::string field = "rays[" + std::to_string(k) + "]";
        raw.rays.push_back(as_long_array(rays[k], source, field));
        if (raw.rays.back().size() != raw.rays.front().size())
            field_error(source, field, "has length " + std::to_string(raw.rays.back().size()) + ", expected " +
                                           std::to_string(raw.rays.front().size()));
    }
    if (raw.rays.front().empty())
        field_error(source, "rays[0]", "rays must have at least one coordinate");

    const Json& cones = doc["max_cones"];
    if (!cones.is_array() || cones.empty())
        field_error(source, "max_cones", "expected a non-empty array of index lists");
    for (std::size_t k = 0; k < cones.size(); ++k) {
        std::string field = "max_cones[" + std::to_string(k) + "]";
        std::vector<long> idx = as_long_array(cones[k], source, field);
        std::vector<int> cone;
        for (long i : idx) {
            if (i < 0 || i >= static_cast<long>(raw.rays.size()))
                field_error(source, field, "ray index " + std::to_string(i) + " out of range (0-based, " +
                                               std::to_string(raw.rays.size()) + " rays)");
            cone.push_back(static_cast<int>(i));
        }
        raw.max_cones.push_back(std::move(cone));
    }

    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            field_error(source, "name", "expected a string");
        raw.name = doc["name"].get<std::string>();
    }
    return raw;
}

std::optional<std::vector<IntVector>> parse_polygon(const std::string& text, const std::string& source)
{
    Json doc = parse_document(text, source);
    if (!doc.is_object() || !doc.contains("polygon"))
        return std::nullopt;
    const Json& poly = doc["polygon"];
    if (!poly.is_array())
        field_error(source, "polygon", "expected an array of vertices");
    std::vector<IntVector> vertices;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        std::string field = "polygon[" + std::to_string(k) + "]";
        auto v = as_long_array(poly[k], source, field);
        if (v.size() != 2)
            field_error(source, field, "expected 2 coordinates");
        vertices.push_back(to_integer_vector(v));
    }
    return vertices;
}

t1::CoxPolynomial parse_polynomial(const std::string& text, const std::string& source)
{
    Json doc = parse_document(text, source);
    if (!doc.is_object() || !doc.contains("terms"))
        field_error(source, "terms", "missing");
    const Json& terms = doc["terms"];
    if (!terms.is_array() || terms.empty())
        field_error(source, "terms", "expected a non-empty array");

    t1::CoxPolynomial f;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string field = "terms[" + std::to_string(k) + "]";
        const Json& t = terms[k];
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
            field_error(source, field, "expected { \"coeff\": \"p/q\", \"exp\": [...] }");
        if (!t["coeff"].is_string())
            field_error(source, field + ".coeff", "expected a rational string such as \"3/2\"");

        t1::Term term;
        std::string c = t["coeff"].get<std::string>();
        if (c.empty() || term.coefficient.set_str(c, 10) != 0 || term.coefficient.get_den() == 0)
            field_error(source, field + ".coeff", "not a rational number: \"" + c + "\"");
        term.coefficient.canonicalize();
        if (term.coefficient == 0)
            field_error(source, field + ".coeff", "coefficient must be nonzero");

        auto exp = as_long_array(t["exp"], source, field + ".exp");
        for (long e : exp)
            if (e < 0)
                field_error(source, field + ".exp", "exponents must be non-negative");
        if (k > 0 && exp.size() != f.terms.front().exponent.size())
            field_error(source, field + ".exp", "length differs from the first term");
        term.exponent = to_integer_vector(exp);
        f.terms.push_back(std::move(term));
    }
    return f;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace torrigid::cli

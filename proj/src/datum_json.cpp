#include "langdual/datum_json.hpp"

#include "langdual/errors.hpp"

namespace langdual {

namespace {

using nlohmann::json;

std::string line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<IntVector> read_vectors(const json& doc, const char* key, std::size_t rank,
                                    std::vector<std::string>& violations)
{
    std::vector<IntVector> out;
    if (!doc.contains(key)) {
        violations.push_back(std::string("missing field \"") + key + "\"");
        return out;
    }
    const json& list = doc.at(key);
    if (!list.is_array()) {
        violations.push_back(std::string("\"") + key + "\" must be an array of integer arrays");
        return out;
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
        const json& v = list[k];
        const std::string where = std::string(key) + "[" + std::to_string(k) + "]";
        if (!v.is_array()) {
            violations.push_back(where + " is not an array");
            continue;
        }
        IntVector vec;
        bool ok = true;
        for (const auto& c : v) {
            if (!c.is_number_integer()) {
                violations.push_back(where + " has a non-integer entry " + c.dump());
                ok = false;
                break;
            }
            vec.push_back(c.get<Int>());
        }
        if (!ok) continue;
        if (vec.size() != rank) {
            violations.push_back(where + " has length " + std::to_string(vec.size()) + ", expected rank " +
                                 std::to_string(rank));
            continue;
        }
        out.push_back(std::move(vec));
    }
    return out;
}

}  // namespace

RootDatum parse_datum(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON", {"syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                                                     ": " + e.what()});
    }
    std::vector<std::string> violations;
    if (!doc.is_object()) throw ValidationError("malformed datum document", {"top level must be an object"});

    RootDatum d;
    if (doc.contains("name")) {
        if (doc["name"].is_string()) d.name = doc["name"].get<std::string>();
        else violations.push_back("\"name\" must be a string");
    }
    if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<Int>() < 0) {
        violations.push_back("\"rank\" must be a nonnegative integer");
        throw ValidationError("malformed datum document", violations);
    }
    d.rank = static_cast<std::size_t>(doc["rank"].get<Int>());
    d.simple_roots = read_vectors(doc, "simple_roots", d.rank, violations);
    d.simple_coroots = read_vectors(doc, "simple_coroots", d.rank, violations);
    if (!violations.empty()) throw ValidationError("malformed datum document", violations);

    auto axioms = validate_datum(d);
    if (!axioms.empty()) throw ValidationError("invalid root datum", axioms);
    return d;
}

nlohmann::json datum_to_json(const RootDatum& d)
{
    json j;
    j["name"] = d.name;
    j["rank"] = d.rank;
    j["simple_roots"] = d.simple_roots;
    j["simple_coroots"] = d.simple_coroots;
    return j;
}

std::string emit_datum(const RootDatum& d)
{
    return datum_to_json(d).dump(2) + "\n";
}

}  // namespace langdual

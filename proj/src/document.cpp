#include "vval/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coinflip_fixture.hpp"
#include "vval/errors.hpp"

namespace vval {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using Kind = ValidationError::Kind;

[[noreturn]] void malformed(const std::string& what)
{
    throw ValidationError(Kind::Malformed, what);
}

const json& require_member(const json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        malformed(where + ": missing \"" + key + "\"");
    }
    return *it;
}

StateSet read_state_list(const StateSpace& space, const json& list, const std::string& where)
{
    if (!list.is_array()) {
        malformed(where + ": expected an array of state names");
    }
    StateSet out = space.none();
    for (const auto& item : list) {
        if (!item.is_string()) {
            malformed(where + ": state names must be strings");
        }
        const auto name = item.get<std::string>();
        auto index = space.find(name);
        if (!index) {
            throw ValidationError(Kind::UndeclaredState, where + ": undeclared state '" + name + "'");
        }
        out.insert(*index);
    }
    return out;
}

VariableValuation read_valuation(const StateSpace& space, const std::string& atom, const json& entry)
{
    const std::string where = "atom '" + atom + "'";
    if (!entry.is_object()) {
        malformed(where + ": expected an object mapping states (or \"*\") to state lists");
    }
    if (entry.contains("*")) {
        if (entry.size() != 1) {
            malformed(where + ": \"*\" cannot be combined with per-state interpretations");
        }
        return VariableValuation::constant(space.size(), read_state_list(space, entry["*"], where));
    }
    for (const auto& [name, value] : entry.items()) {
        if (!space.find(name)) {
            throw ValidationError(Kind::UndeclaredState, where + ": interpretation for undeclared state '" + name + "'");
        }
    }
    std::vector<StateSet> images;
    images.reserve(space.size());
    for (const auto& name : space.names()) {
        auto it = entry.find(name);
        if (it == entry.end()) {
            throw ValidationError(Kind::MissingState, where + ": no interpretation for state '" + name + "'");
        }
        images.push_back(read_state_list(space, *it, where + " at state '" + name + "'"));
    }
    return VariableValuation(std::move(images));
}

ProbabilityMeasure read_measure(const StateSpace& space, const std::string& name, const json& entry)
{
    const std::string where = "measure '" + name + "'";
    if (!entry.is_object()) {
        malformed(where + ": expected an object mapping states to rational strings");
    }
    std::map<std::string, Rational> weights;
    for (const auto& [state, value] : entry.items()) {
        if (!value.is_string()) {
            malformed(where + ": weight for '" + state + "' must be a string such as \"3/10\"");
        }
        try {
            weights.emplace(state, Rational::parse(value.get<std::string>()));
        }
        catch (const ValidationError& e) {
            throw ValidationError(e.kind(), where + " at state '" + state + "': " + e.what());
        }
    }
    try {
        return measure_from_weights(space, weights);
    }
    catch (const ValidationError& e) {
        throw ValidationError(e.kind(), where + ": " + e.what());
    }
}

} // namespace

const ProbabilityMeasure& ModelDocument::measure(const std::string& name) const
{
    if (auto it = measures.find(name); it != measures.end()) {
        return it->second;
    }
    throw LookupError("unknown measure '" + name + "'");
}

ModelDocument parse_document(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    }
    catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        malformed("model document must be a JSON object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "states" && key != "atoms" && key != "measures") {
            malformed("unknown top-level key \"" + key + "\"");
        }
    }

    const json& states = require_member(root, "states", "model document");
    if (!states.is_array()) {
        malformed("\"states\" must be an array of names");
    }
    std::vector<std::string> names;
    for (const auto& s : states) {
        if (!s.is_string()) {
            malformed("\"states\" must contain only strings");
        }
        names.push_back(s.get<std::string>());
    }
    StateSpace space(std::move(names));

    std::map<std::string, VariableValuation> atoms;
    const json& atom_entries = require_member(root, "atoms", "model document");
    if (!atom_entries.is_object()) {
        malformed("\"atoms\" must be an object");
    }
    for (const auto& [name, entry] : atom_entries.items()) {
        if (!is_identifier(name)) {
            malformed("atom name '" + name + "' is not an identifier");
        }
        atoms.emplace(name, read_valuation(space, name, entry));
    }

    std::map<std::string, ProbabilityMeasure> measures;
    if (auto it = root.find("measures"); it != root.end()) {
        if (!it->is_object()) {
            malformed("\"measures\" must be an object");
        }
        for (const auto& [name, entry] : it->items()) {
            measures.emplace(name, read_measure(space, name, entry));
        }
    }
    return ModelDocument{Model(std::move(space), std::move(atoms)), std::move(measures)};
}

ModelDocument load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(Kind::Malformed, "cannot open model file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string dump_document(const ModelDocument& doc)
{
    const StateSpace& space = doc.model.space();
    auto names_of = [&](const StateSet& s) {
        ordered_json list = ordered_json::array();
        for (std::size_t i : s.members()) {
            list.push_back(space.name(i));
        }
        return list;
    };

    ordered_json root;
    root["states"] = space.names();
    ordered_json atoms = ordered_json::object();
    for (const auto& [name, v] : doc.model.atoms()) {
        ordered_json entry = ordered_json::object();
        if (v.is_constant()) {
            entry["*"] = names_of(v.at(0));
        }
        else {
            for (std::size_t x = 0; x < space.size(); ++x) {
                entry[space.name(x)] = names_of(v.at(x));
            }
        }
        atoms[name] = std::move(entry);
    }
    root["atoms"] = std::move(atoms);
    ordered_json measures = ordered_json::object();
    for (const auto& [name, m] : doc.measures) {
        ordered_json weights = ordered_json::object();
        for (std::size_t x = 0; x < space.size(); ++x) {
            weights[space.name(x)] = m.weight(x).str();
        }
        measures[name] = std::move(weights);
    }
    root["measures"] = std::move(measures);
    return root.dump(2) + "\n";
}

std::optional<std::string_view> builtin_document(std::string_view name)
{
    if (name == "coinflip") {
        return fixtures::coinflip_json;
    }
    return std::nullopt;
}

std::string format_set(const StateSpace& space, const StateSet& set)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i : set.members()) {
        if (!first) {
            out += ',';
        }
        out += space.name(i);
        first = false;
    }
    out += '}';
    return out;
}

StateSet parse_state_set(const StateSpace& space, std::string_view text)
{
    auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos) {
            return std::string_view{};
        }
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw ValidationError(Kind::Malformed, "state set '" + std::string(text) + "' must be written as {a,b,...}");
    }
    StateSet out = space.none();
    std::string_view body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) {
        return out;
    }
    while (true) {
        const auto comma = body.find(',');
        const auto name = trim(body.substr(0, comma));
        if (name.empty()) {
            throw ValidationError(Kind::Malformed, "empty state name in '" + std::string(text) + "'");
        }
        out.insert(space.index_of(std::string(name)));
        if (comma == std::string_view::npos) {
            break;
        }
        body = body.substr(comma + 1);
    }
    return out;
}

bool is_identifier(std::string_view name)
{
    if (name.empty()) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (!alpha(name.front())) {
        return false;
    }
    for (char c : name) {
        if (!alpha(c) && !(c >= '0' && c <= '9')) {
            return false;
        }
    }
    return true;
}

} // namespace vval

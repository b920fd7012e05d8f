#include "volterra/serialize.hpp"

#include <fstream>
#include <sstream>

namespace volterra {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based byte index of the offending character.
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < end; ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    return obj.at(key);
}

int require_int(const Json& obj, const char* key, const std::string& where) {
    const Json& v = require(obj, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational values must be strings such as \"1/3\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Json spec_to_json(const AlgebraSpec& spec) {
    AlgebraSpec sorted = spec;
    sorted.sort();
    Json out;
    out["dimension"] = sorted.dimension;
    Json params = Json::array();
    for (const auto& p : sorted.params)
        params.push_back(Json{{"i", p.i + 1}, {"j", p.j + 1}, {"value", to_json(p.value)}});
    out["p"] = std::move(params);
    return out;
}

AlgebraSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra spec must be a JSON object");
    AlgebraSpec spec;
    spec.dimension = require_int(j, "dimension", "spec");
    const Json& params = require(j, "p", "spec");
    if (!params.is_array()) throw ParseError("spec: \"p\" must be an array");
    for (std::size_t k = 0; k < params.size(); ++k) {
        const std::string where = "spec.p[" + std::to_string(k) + "]";
        const Json& entry = params[k];
        if (!entry.is_object()) throw ParseError(where + ": expected an object");
        PairParameter p;
        p.i = require_int(entry, "i", where) - 1;
        p.j = require_int(entry, "j", where) - 1;
        try {
            p.value = rational_from_json(require(entry, "value", where));
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        spec.params.push_back(std::move(p));
    }
    return spec;
}

AlgebraSpec parse_spec(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + e.what(),
                         line, column);
    }
    return spec_from_json(j);
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json matrix_to_json(std::span<const Rational> flat) {
    Json out = Json::array();
    for (const auto& x : flat) out.push_back(to_json(x));
    return out;
}

Json derivation_space_to_json(const DerivationSpace& space) {
    Json basis = Json::array();
    for (const auto& v : space.basis.vectors()) basis.push_back(matrix_to_json(v));
    return Json{{"dim", space.dim()}, {"basis", std::move(basis)}};
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        Json entry;
        entry["kind"] = to_string(v.kind);
        if (v.i >= 0) entry["i"] = v.i + 1;
        if (v.j >= 0) entry["j"] = v.j + 1;
        entry["message"] = v.message;
        out.push_back(std::move(entry));
    }
    return out;
}

Json classification_to_json(const Classification& cls) {
    Json perm = Json::array();
    for (int v : cls.permutation) perm.push_back(v + 1);
    return Json{{"case", std::string(to_string(cls.label))}, {"signature", cls.signature}, {"permutation", perm}};
}

Json coincidences_to_json(const CoincidenceReport& rep) {
    Json preds = Json::array();
    for (const auto& p : rep.predicates)
        preds.push_back(Json{{"name", p.name},
                             {"lhs", to_json(p.lhs)},
                             {"rhs", to_json(p.rhs)},
                             {"holds", p.holds},
                             {"source", p.source}});
    Json out;
    out["case"] = std::string(to_string(rep.label));
    out["predicates"] = std::move(preds);
    out["list_item"] = rep.list_item ? Json(*rep.list_item) : Json(nullptr);
    out["list_admits_nontrivial"] = rep.list_admits_nontrivial;
    out["refined_admits_nontrivial"] = rep.refined_admits_nontrivial;
    return out;
}

Json outcome_to_json(LocalOutcome outcome) {
    switch (outcome) {
        case LocalOutcome::Equal: return true;
        case LocalOutcome::NotEqual: return false;
        case LocalOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Json local_fragment_to_json(const LocalDerivationSpace& local, LocalOutcome outcome) {
    return Json{{"locder_dim", local.dim()},
                {"samples_used", local.samples_used},
                {"stabilized", local.stabilized},
                {"equals_der", outcome_to_json(outcome)}};
}

}  // namespace volterra

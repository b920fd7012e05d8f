#ifndef VOLTERRA_SERIALIZE_HPP
#define VOLTERRA_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "volterra/algebra.hpp"
#include "volterra/derivation.hpp"
#include "volterra/local.hpp"

namespace volterra {

// Insertion-ordered so that output is byte-reproducible.
using Json = nlohmann::ordered_json;

/// Malformed JSON text or a document that does not follow the schema.
/// line and column are 1-based; both are 0 for schema errors.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"dimension": n, "p": [{"i": 1, "j": 2, "value": "1/2"}, ...]}, pairs in
/// lexicographic order.
Json spec_to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);
/// Parses JSON text; syntax errors carry line and column.
AlgebraSpec parse_spec(std::string_view text);
AlgebraSpec load_spec(const std::string& path);

/// Two-space indent, trailing newline.
std::string dump(const Json& j);

Json matrix_to_json(std::span<const Rational> flat);
/// {"dim": k, "basis": [[row-major rationals], ...]}
Json derivation_space_to_json(const DerivationSpace& space);
Json violations_to_json(const std::vector<Violation>& violations);
/// Permutation and indices rendered 1-based.
Json classification_to_json(const Classification& cls);
Json coincidences_to_json(const CoincidenceReport& rep);
/// {"locder_dim", "samples_used", "stabilized", "equals_der"}; equals_der is
/// true, false or "inconclusive".
Json local_fragment_to_json(const LocalDerivationSpace& local, LocalOutcome outcome);
Json outcome_to_json(LocalOutcome outcome);

}  // namespace volterra

#endif  // VOLTERRA_SERIALIZE_HPP

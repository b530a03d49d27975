#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cy4/conditions.hpp"
#include "cy4/euler.hpp"
#include "cy4/mat3.hpp"
#include "cy4/search.hpp"
#include "cy4/torus.hpp"

namespace cy4 {

/// Malformed matrix text, matrix JSON, or record file. Messages carry a
/// position or field path where one is known.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Serializers. Field names are stable lowercase snake_case; EisensteinInt is
// the two-element array [a, b].
nlohmann::json to_json(const EisensteinInt& x);
nlohmann::json to_json(const Mat3& m);
nlohmann::json to_json(const TorusPoint& q);
nlohmann::json to_json(const CharPoly& cp);
nlohmann::json to_json(const FixedLocusSummary& s);
nlohmann::json to_json(const MatrixReport& r);
nlohmann::json to_json(const PairReport& r);
nlohmann::json to_json(const EulerBreakdown& b);
nlohmann::json to_json(const SearchRecord& r);
nlohmann::json to_json(const Checkpoint& c);
nlohmann::json to_json(const SearchSummary& s);
nlohmann::json to_json(const ConjectureReport& r);

EisensteinInt eisenstein_from_json(const nlohmann::json& j);
Mat3 mat3_from_json(const nlohmann::json& j);
CharPoly char_poly_from_json(const nlohmann::json& j);
SearchRecord record_from_json(const nlohmann::json& j);
Checkpoint checkpoint_from_json(const nlohmann::json& j);

/// Accepts the matrix JSON object {"rows": ...}, the compact text form
/// "[[-1,0,0],[0,1,0],[0,0,1]]" with entries "a", "b*w" or "a+b*w" (also a
/// bare "w"), or a path to a file holding either. The unicode minus sign is
/// treated as '-'.
Mat3 parse_matrix(const std::string& source);

/// Compact text form; parse_matrix(render_matrix_text(m)) == m.
std::string render_matrix_text(const Mat3& m);

} // namespace cy4

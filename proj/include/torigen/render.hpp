#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "torigen/exactalg.hpp"

namespace torigen {

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

std::string monomial_text(const Exponents& e, const ArenaPtr& arena);

// Canonical text: terms in descending graded-lex order, explicit * and ^,
// e.g. "6*a1^3 + 6*a1*a2 - 6*a3".
std::string to_text(const MultiPoly& p);
std::string to_text(const IntPoly& p);
// Series text: ascending degree blocks, "(coeff)*monomial".
std::string to_text(const Poly<CobordismPoly>& p);
std::string to_text(const GradedSeries& s);

MultiPoly parse_poly(std::string_view text, const ArenaPtr& arena);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, const ArenaPtr& arena);
nlohmann::json to_json(const GradedSeries& s);
GradedSeries series_from_json(const nlohmann::json& j, const ArenaPtr& arena,
                              const ArenaPtr& coeff_arena);

}  // namespace torigen

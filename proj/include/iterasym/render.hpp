#pragma once

#include <string>
#include <string_view>

#include "iterasym/expansion.hpp"

namespace iterasym {

enum class Format { Text, Json, Latex };

Format parseFormat(std::string_view text);

/// Expansion in the published constant C, terms ordered by m ascending and
/// ln-power descending. tau = 1 folds lambda into the coefficients; tau >= 2
/// divides x_n by lambda^{1/tau}; the pi^2 family is written with
/// kappa = sqrt(lambda/16)/pi, i.e. x_n / sqrt(kappa) with a factor 2 folded in.
std::string renderExpansionText(const AsymptoticExpansion& e);
std::string renderExpansionLatex(const AsymptoticExpansion& e);

/// Exact term table in the engine constant K (rationals as "p/q" strings).
std::string renderExpansionJson(const AsymptoticExpansion& e);
AsymptoticExpansion parseExpansionJson(std::string_view text);

/// LaTeX for a polynomial, highest degree first, e.g. "\frac{1}{2}X^{2}-X+3".
std::string polyLatex(const RatPoly& p, const std::string& var = "X");
std::string rationalLatex(const Rational& r);

}  // namespace iterasym

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cremona/ratfunc.hpp"

namespace cremona {

/* Supplies values for names that are not ring variables (e.g. previously
 * defined expressions).  Returning nullopt makes the name undefined. */
using NameResolver =
    std::function<std::optional<RationalFunction>(const std::string&)>;

/* Expression grammar: + - * / ^ with the usual precedence, ^ binding
 * tightest and right-associative with constant integer exponents, unary
 * minus, parentheses, integer literals, and names.  No implicit
 * multiplication.  Rejections throw parse_error carrying the offset. */
RationalFunction parse_expression(const std::string& text, RingPtr ring,
                                  const NameResolver& names = nullptr);

/* Canonical rendering: terms in descending lex order, explicit '*', '^'
 * only for exponents > 1.  Distinct canonical values render distinctly and
 * every rendering parses back to the same value. */
std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);

/* Rendering for failure witnesses: at most `max_terms` leading terms per
 * polynomial, with an elided-term count appended. */
std::string to_string_truncated(const Polynomial& p, std::size_t max_terms);
std::string to_string_truncated(const RationalFunction& f, std::size_t max_terms);

} // namespace cremona

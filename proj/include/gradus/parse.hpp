#pragma once

#include <map>
#include <string>
#include <string_view>

#include "gradus/order.hpp"
#include "gradus/ring.hpp"

namespace gradus {

/// Named polynomial bindings visible to the parser (ring-spec `let`s).
using Scope = std::map<std::string, Polynomial>;

/// Parses the shared expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | base ("^" UINT)?
///   base   := RATIONAL | IDENT | "(" expr ")"
///   RATIONAL := INT ("/" UINT)?
/// Identifiers resolve to ring variables or to `lets` entries. Throws
/// ParseError with the offending position, or on an unknown name.
Polynomial parse_poly(const Ring& ring, std::string_view text, const Scope* lets = nullptr);

/// Canonical text form: terms in descending monomial order, explicit
/// rational coefficients, "^" powers. parse_poly(print_poly(p)) == p.
std::string print_poly(const Polynomial& p,
                       MonomialOrder order = MonomialOrder(OrderKind::GrevLex));

}  // namespace gradus

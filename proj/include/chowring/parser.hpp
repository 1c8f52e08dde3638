#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chowring/polynomial.hpp"

namespace chowring {

/// Syntax or resolution failure; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Identifiers that expand to fixed polynomials (e.g. a boundary class
/// written in the generators). They must live over the same generators.
using NamedClasses = std::map<std::string, Polynomial>;

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nonneg-int)?
///   atom   := integer ['/' integer] | identifier | '(' expr ')'
/// Juxtaposition is not multiplication and there is no general division.
Polynomial parse_polynomial(std::string_view text, const GeneratorSetPtr& gens,
                            const NamedClasses& named = {});

/// Canonical rendering, terms in descending monomial order. The output
/// reparses to the same polynomial.
std::string render(const Polynomial& p);
std::string render_monomial(const GeneratorSet& gens, const Monomial& m);

}  // namespace chowring

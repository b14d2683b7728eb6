#pragma once

#include "bvl/pc/group.hpp"
#include "bvl/pc/presentation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bvl {

/// Word expression over named generators.
///
///   expr := term ('*' term)*
///   term := atom ('^' int)?
///   atom := name | '1' | '(' expr ')' | '[' expr ',' expr ']'
///
/// '1' is the empty word. Products are left-to-right; [a,b] = a^-1 b^-1 a b.
struct WordExpr {
  enum class Kind { Identity, Generator, Product, Power, Commutator };

  Kind kind = Kind::Identity;
  std::string name;               // Generator
  std::int64_t exponent = 1;      // Power
  std::vector<WordExpr> children; // Product (>= 2), Power (1), Commutator (2)

  bool operator==(const WordExpr&) const = default;

  static WordExpr generator(std::string name);
  static WordExpr product(std::vector<WordExpr> factors);
  static WordExpr power(WordExpr base, std::int64_t k);
  static WordExpr commutator(WordExpr a, WordExpr b);
};

/// Throws SyntaxError (with 0-based position) or UnknownGenerator.
WordExpr parse_word(std::string_view text, std::span<const std::string> names);
std::string render(const WordExpr& expr);

/// Syntactic expansion into letters; a power of a single generator stays one letter.
Word flatten(const WordExpr& expr, const PcPresentation& pres);
std::string render_word(const Word& word, const PcPresentation& pres);

Element evaluate(const Group& g, const WordExpr& expr);
Element evaluate(const Group& g, std::string_view text);

/// Splits "w1,w2" at the top-level comma (commas inside [..] are kept).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace bvl

#include "bvl/text/word_expr.hpp"

#include "bvl/error.hpp"

#include <algorithm>
#include <cctype>

namespace bvl {

WordExpr WordExpr::generator(std::string name) {
  WordExpr e;
  e.kind = Kind::Generator;
  e.name = std::move(name);
  return e;
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
  WordExpr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return e;
}

WordExpr WordExpr::power(WordExpr base, std::int64_t k) {
  WordExpr e;
  e.kind = Kind::Power;
  e.exponent = k;
  e.children.push_back(std::move(base));
  return e;
}

WordExpr WordExpr::commutator(WordExpr a, WordExpr b) {
  WordExpr e;
  e.kind = Kind::Commutator;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  WordExpr parse() {
    WordExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  WordExpr expr() {
    std::vector<WordExpr> factors;
    factors.push_back(term());
    while (eat('*')) factors.push_back(term());
    if (factors.size() == 1) return std::move(factors.front());
    return WordExpr::product(std::move(factors));
  }

  WordExpr term() {
    WordExpr a = atom();
    if (eat('^')) return WordExpr::power(std::move(a), integer());
    return a;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected integer exponent");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("exponent too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return negative ? -v : v;
  }

  WordExpr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordExpr e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      WordExpr a = expr();
      expect(',');
      WordExpr b = expr();
      expect(']');
      return WordExpr::commutator(std::move(a), std::move(b));
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return WordExpr{};
    }
    if (!is_name_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (std::find(names_.begin(), names_.end(), name) == names_.end())
      throw Error(ErrorKind::UnknownGenerator, name);
    return WordExpr::generator(std::move(name));
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

}  // namespace

WordExpr parse_word(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse();
}

std::string render(const WordExpr& e) {
  using K = WordExpr::Kind;
  switch (e.kind) {
    case K::Identity: return "1";
    case K::Generator: return e.name;
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += '*';
        const auto& c = e.children[i];
        out += c.kind == K::Product ? "(" + render(c) + ")" : render(c);
      }
      return out;
    }
    case K::Power: {
      const auto& c = e.children.front();
      const bool wrap = c.kind == K::Product || c.kind == K::Power;
      return (wrap ? "(" + render(c) + ")" : render(c)) + "^" + std::to_string(e.exponent);
    }
    case K::Commutator: return "[" + render(e.children[0]) + "," + render(e.children[1]) + "]";
  }
  return {};
}

Word flatten(const WordExpr& e, const PcPresentation& pres) {
  using K = WordExpr::Kind;
  switch (e.kind) {
    case K::Identity: return {};
    case K::Generator: return {Letter{pres.index_of(e.name), 1}};
    case K::Product: {
      Word out;
      for (const auto& c : e.children) append(out, flatten(c, pres));
      return out;
    }
    case K::Power: {
      const auto& c = e.children.front();
      if (c.kind == K::Generator) return {Letter{pres.index_of(c.name), e.exponent}};
      Word base = flatten(c, pres);
      if (e.exponent < 0) base = inverse(base);
      Word out;
      for (std::int64_t k = 0; k < (e.exponent < 0 ? -e.exponent : e.exponent); ++k) append(out, base);
      return out;
    }
    case K::Commutator: {
      Word a = flatten(e.children[0], pres), b = flatten(e.children[1], pres);
      Word out = inverse(a);
      append(out, inverse(b));
      append(out, a);
      append(out, b);
      return out;
    }
  }
  return {};
}

std::string render_word(const Word& word, const PcPresentation& pres) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    out += pres.names.at(word[i].gen);
    if (word[i].exp != 1) out += "^" + std::to_string(word[i].exp);
  }
  return out;
}

Element evaluate(const Group& g, const WordExpr& e) {
  using K = WordExpr::Kind;
  switch (e.kind) {
    case K::Identity: return g.identity();
    case K::Generator: return g.generator(e.name);
    case K::Product: {
      ElemId acc = Group::kIdentity;
      for (const auto& c : e.children) acc = g.mul(acc, g.id_of(evaluate(g, c)));
      return g.element(acc);
    }
    case K::Power: return g.pow(evaluate(g, e.children.front()), e.exponent);
    case K::Commutator: return g.comm(evaluate(g, e.children[0]), evaluate(g, e.children[1]));
  }
  return g.identity();
}

Element evaluate(const Group& g, std::string_view text) {
  return evaluate(g, parse_word(text, g.presentation().names));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace bvl

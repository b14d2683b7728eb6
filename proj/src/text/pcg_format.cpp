#include "bvl/text/pcg_format.hpp"

#include "bvl/error.hpp"
#include "bvl/text/word_expr.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bvl {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint32_t parse_prime(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || !is_prime(v)) parse_fail(line, "'" + s + "' is not a prime");
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    parse_fail(line, "'" + s + "' is not a prime");
  }
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  PcPresentation pres;
  std::optional<std::uint32_t> p;
  bool have_gens = false;
  std::vector<std::pair<std::size_t, std::uint32_t>> overrides;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    std::string head = line.substr(0, line.find_first_of(" \t"));
    std::string rest = trim(line.substr(head.size()));
    if (head == "p") {
      p = parse_prime(rest, lineno);
    } else if (head == "gens") {
      if (have_gens) parse_fail(lineno, "duplicate gens line");
      if (!p) parse_fail(lineno, "'p' must precede 'gens'");
      pres = PcPresentation::elementary(*p, tokens(rest));
      for (std::size_t i = 0; i < pres.rank(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (pres.names[i] == pres.names[j]) parse_fail(lineno, "duplicate generator " + pres.names[i]);
      have_gens = true;
    } else if (head == "relorder" || head == "pow" || head == "comm") {
      if (!have_gens) parse_fail(lineno, "'" + head + "' before 'gens'");
      if (head == "relorder") {
        auto t = tokens(rest);
        if (t.size() != 2) parse_fail(lineno, "expected 'relorder <gen> <prime>'");
        auto i = pres.find(t[0]);
        if (!i) parse_fail(lineno, "unknown generator " + t[0]);
        pres.relative_orders[*i] = parse_prime(t[1], lineno);
        continue;
      }
      const auto eq = rest.find('=');
      if (eq == std::string::npos) parse_fail(lineno, "missing '='");
      auto lhs = tokens(rest.substr(0, eq));
      const std::string rhs = trim(rest.substr(eq + 1));
      Word tail;
      try {
        tail = flatten(parse_word(rhs, pres.names), pres);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SyntaxError) parse_fail(lineno, e.detail());
        throw;
      }
      auto index = [&](const std::string& name) {
        auto i = pres.find(name);
        if (!i) parse_fail(lineno, "unknown generator " + name);
        return *i;
      };
      if (head == "pow") {
        if (lhs.size() != 1) parse_fail(lineno, "expected 'pow <gen> = <word>'");
        const std::size_t i = index(lhs[0]);
        for (const auto& l : tail)
          if (l.gen <= i)
            throw Error(ErrorKind::WeightViolation,
                        "line " + std::to_string(lineno) + ": power tail of " + lhs[0] + " uses " + pres.names[l.gen]);
        pres.set_power(i, std::move(tail));
      } else {
        if (lhs.size() != 2) parse_fail(lineno, "expected 'comm <gj> <gi> = <word>'");
        const std::size_t j = index(lhs[0]), i = index(lhs[1]);
        if (j <= i)
          throw Error(ErrorKind::WeightViolation,
                      "line " + std::to_string(lineno) + ": " + lhs[0] + " must come after " + lhs[1]);
        for (const auto& l : tail)
          if (l.gen <= j)
            throw Error(ErrorKind::WeightViolation, "line " + std::to_string(lineno) + ": commutator tail uses " +
                                                        pres.names[l.gen] + ", not later than " + lhs[0]);
        pres.set_comm(j, i, std::move(tail));
      }
    } else {
      parse_fail(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_gens) throw Error(ErrorKind::ParseError, "missing 'gens' line");
  return pres;
}

std::string render_presentation(const PcPresentation& pres) {
  std::ostringstream out;
  const std::uint32_t p = pres.relative_orders.empty() ? 2 : pres.relative_orders.front();
  out << "p " << p << "\n";
  out << "gens";
  for (const auto& n : pres.names) out << ' ' << n;
  out << "\n";
  for (std::size_t i = 0; i < pres.rank(); ++i)
    if (pres.relative_orders[i] != p) out << "relorder " << pres.names[i] << ' ' << pres.relative_orders[i] << "\n";
  for (std::size_t i = 0; i < pres.rank(); ++i)
    if (!pres.power_tails[i].empty())
      out << "pow " << pres.names[i] << " = " << render_word(pres.power_tails[i], pres) << "\n";
  for (const auto& [key, tail] : pres.comm_tails)
    out << "comm " << pres.names[key.first] << ' ' << pres.names[key.second] << " = " << render_word(tail, pres)
        << "\n";
  return out.str();
}

PcPresentation read_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

void write_presentation(const std::filesystem::path& path, const PcPresentation& pres) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << render_presentation(pres);
}

}  // namespace bvl

#include "bvl/catalog/catalog.hpp"

#include "bvl/analysis/analysis.hpp"
#include "bvl/error.hpp"
#include "bvl/text/word_expr.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace bvl {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string num(std::int64_t v) { return std::to_string(v); }

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::BadParameters, msg); }

/// Presentation under construction plus the defining relations it must satisfy.
struct Recipe {
  PcPresentation pres;
  std::vector<Relation> relations;
  std::map<std::string, std::string> aliases;
  std::uint64_t expected_order = 0;
  std::uint32_t p = 0;

  void gens(std::initializer_list<std::string> names) {
    for (const auto& n : names) gen(n);
  }
  void gen(const std::string& name) {
    pres.names.push_back(name);
    pres.relative_orders.push_back(p);
    pres.power_tails.emplace_back();
  }
  Word word(const std::string& text) const { return flatten(parse_word(text, pres.names), pres); }
  void pow(const std::string& g, const std::string& tail) { pres.set_power(pres.index_of(g), word(tail)); }
  void comm(const std::string& gj, const std::string& gi, const std::string& tail) {
    pres.set_comm(pres.index_of(gj), pres.index_of(gi), word(tail));
  }
  void rel(std::string lhs, std::string rhs) { relations.push_back({std::move(lhs), std::move(rhs)}); }

  /// Names base, prefix1, ..., prefix{len-1} with prefix_i = base^(p^i).
  void chain(const std::string& base, const std::string& prefix, std::uint32_t len) {
    gen(base);
    for (std::uint32_t m = 1; m < len; ++m) gen(prefix + num(m));
  }
  void chain_powers(const std::string& base, const std::string& prefix, std::uint32_t len) {
    for (std::uint32_t m = 1; m < len; ++m) {
      const std::string prev = m == 1 ? base : prefix + num(m - 1);
      pow(prev, prefix + num(m));
      aliases[prefix + num(m)] = base + "^" + num(ipow(p, m));
      rel(prefix + num(m), base + "^" + num(ipow(p, m)));
    }
  }
  /// x^e as a word in the chain a1, a2, ...; e must be divisible by p.
  std::string chain_word(const std::string& prefix, std::int64_t e, std::uint32_t len) const {
    const auto mod = static_cast<std::int64_t>(ipow(p, len));
    auto v = static_cast<std::uint64_t>(((e % mod) + mod) % mod);
    if (v % p) bad("internal: exponent not divisible by p");
    std::string out;
    v /= p;
    for (std::uint32_t m = 1; m < len && v; ++m, v /= p) {
      if (v % p == 0) continue;
      if (!out.empty()) out += "*";
      out += prefix + num(m) + "^" + num(static_cast<std::int64_t>(v % p));
    }
    return out.empty() ? "1" : out;
  }
};

std::int64_t need(const std::optional<std::int64_t>& v, std::int64_t fallback) { return v.value_or(fallback); }

std::int64_t posmod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// <x, y | x^(p^a), y^(p^b) = x^s, x^y = x^r> with PC order x, y, b1.., a1...
void metacyclic(Recipe& rc, std::uint32_t a, std::uint32_t b, std::int64_t r, std::int64_t s) {
  const auto P = static_cast<std::int64_t>(rc.p);
  const auto mod = static_cast<std::int64_t>(ipow(rc.p, a));
  r = posmod(r, mod);
  rc.gen("x");
  rc.gen("y");
  for (std::uint32_t k = 1; k < b; ++k) rc.gen("b" + num(k));
  for (std::uint32_t m = 1; m < a; ++m) rc.gen("a" + num(m));
  rc.chain_powers("x", "a", a);
  rc.chain_powers("y", "b", b);
  const std::string ylast = b == 1 ? "y" : "b" + num(b - 1);
  if (s) rc.pow(ylast, rc.chain_word("a", s, a));
  std::int64_t R = r;  // r^(p^k) mod p^a
  for (std::uint32_t k = 0; k < b; ++k) {
    const std::string yk = k == 0 ? "y" : "b" + num(k);
    rc.comm(yk, "x", rc.chain_word("a", 1 - R, a));
    std::int64_t pm = P;
    for (std::uint32_t m = 1; m < a; ++m, pm *= P)
      rc.comm("a" + num(m), yk, rc.chain_word("a", pm * (R - 1), a));
    std::int64_t next = 1;
    for (std::int64_t t = 0; t < P; ++t) next = next * R % mod;
    R = next;
  }
  rc.rel("x^" + num(mod), "1");
  rc.rel("y^" + num(static_cast<std::int64_t>(ipow(rc.p, b))), s ? "x^" + num(s) : "1");
  rc.rel("y^-1*x*y", "x^" + num(r));
  rc.expected_order = ipow(rc.p, a + b);
}

void heisenberg(Recipe& rc) {
  rc.gens({"x", "y", "z"});
  rc.comm("y", "x", "z^-1");
  for (auto g : {"x", "y", "z"}) rc.rel(std::string(g) + "^" + num(rc.p), "1");
  rc.rel("[x,y]", "z");
  rc.expected_order = ipow(rc.p, 3);
}

/// Order p^4 shapes G3..G6 (and G8): PC order x, z, y, a1 with a1 = x^p.
void table1_xzy(Recipe& rc) {
  rc.gens({"x", "z", "y", "a1"});
  rc.pow("x", "a1");
  rc.aliases["a1"] = "x^" + num(rc.p);
  rc.comm("z", "x", "y^-1");
  const auto P = num(rc.p);
  rc.rel("x^" + num(rc.p * rc.p), "1");
  rc.rel("y^" + P, "1");
  rc.rel("[x,z]", "y");
  rc.expected_order = ipow(rc.p, 4);
}

/// H1..H7, example17, H_ijkl: PC order x, y, z, w, t.
void h_base(Recipe& rc) {
  rc.gens({"x", "y", "z", "w", "t"});
  for (auto g : {"z", "w", "t"}) rc.rel(std::string(g) + "^" + num(rc.p), "1");
  rc.expected_order = ipow(rc.p, 5);
}

void h_rule(Recipe& rc, const std::string& a, const std::string& b, const std::string& tail) {
  rc.comm(a, b, tail);
  rc.rel("[" + a + "," + b + "]", tail);
}

void h_power(Recipe& rc, const std::string& g, const std::string& tail) {
  if (tail != "1") rc.pow(g, tail);
  rc.rel(g + "^" + num(rc.p), tail);
}

void require_odd(const FamilySpec& s) {
  if (s.p == 2) bad(s.family + " needs an odd prime");
}

void require_range(const std::string& what, std::int64_t v, std::int64_t lo, std::int64_t hi) {
  if (v < lo || v > hi) bad(what + "=" + num(v) + " outside [" + num(lo) + ", " + num(hi) + "]");
}

const std::map<std::uint32_t, std::uint32_t>& h4_table() {
  static const std::map<std::uint32_t, std::uint32_t> t{{5, 2}, {7, 5}, {11, 6}, {13, 7}, {17, 6}, {19, 10}};
  return t;
}

std::string canonical_family(std::string id) {
  if (id.size() > 7 && id.starts_with("table2_") && id.back() == 'p') id.back() = '\'';
  return id;
}

Recipe recipe(FamilySpec& s) {
  s.family = canonical_family(s.family);
  const std::string& f = s.family;
  if (s.p == 0) {
    if (f.starts_with("table2_")) s.p = 2;
    else if (f == "example17" || f == "table1_G8") s.p = 3;
    else bad(f + " needs p");
  }
  if (!is_prime(s.p)) bad("p=" + num(s.p) + " is not prime");
  if (s.p > 255) bad("p=" + num(s.p) + " too large");
  Recipe rc;
  rc.p = s.p;
  const auto P = static_cast<std::int64_t>(s.p);
  const std::string Ps = num(P);

  if (f == "cyclic") {
    s.n = need(s.n, 1);
    require_range("n", *s.n, 1, 30);
    rc.chain("x", "a", *s.n);
    rc.chain_powers("x", "a", *s.n);
    rc.rel("x^" + num(ipow(s.p, *s.n)), "1");
    rc.expected_order = ipow(s.p, *s.n);
  } else if (f == "cn_x_cn") {
    s.n = need(s.n, 1);
    require_range("n", *s.n, 1, 15);
    const auto n = static_cast<std::uint32_t>(*s.n);
    rc.gens({"x", "y"});
    for (std::uint32_t m = 1; m < n; ++m) rc.gen("a" + num(m));
    for (std::uint32_t m = 1; m < n; ++m) rc.gen("b" + num(m));
    rc.chain_powers("x", "a", n);
    rc.chain_powers("y", "b", n);
    rc.rel("x^" + num(ipow(s.p, n)), "1");
    rc.rel("y^" + num(ipow(s.p, n)), "1");
    rc.rel("[x,y]", "1");
    rc.expected_order = ipow(s.p, 2 * n);
  } else if (f == "abelian") {
    if (s.exponents.empty() || s.exponents.size() > 6) bad("abelian needs 1 to 6 exponents");
    static const char* bases[] = {"x", "y", "z", "u", "v", "w"};
    static const char* prefixes[] = {"a", "b", "c", "d", "e", "f"};
    std::uint32_t total = 0;
    for (std::size_t q = 0; q < s.exponents.size(); ++q) {
      require_range("exponent", s.exponents[q], 1, 15);
      rc.chain(bases[q], prefixes[q], s.exponents[q]);
      total += s.exponents[q];
    }
    for (std::size_t q = 0; q < s.exponents.size(); ++q) {
      rc.chain_powers(bases[q], prefixes[q], s.exponents[q]);
      rc.rel(std::string(bases[q]) + "^" + num(ipow(s.p, s.exponents[q])), "1");
      for (std::size_t t = 0; t < q; ++t) rc.rel("[" + std::string(bases[q]) + "," + bases[t] + "]", "1");
    }
    rc.expected_order = ipow(s.p, total);
  } else if (f == "holder_heisenberg") {
    heisenberg(rc);
  } else if (f == "lemma10") {
    s.n = need(s.n, 2);
    require_range("n", *s.n, 2, 20);
    metacyclic(rc, *s.n, 1, static_cast<std::int64_t>(ipow(s.p, *s.n - 1)) + 1, 0);
  } else if (f == "lemma11") {
    s.n = need(s.n, 2);
    require_range("n", *s.n, 2, 10);
    metacyclic(rc, *s.n, *s.n, P + 1, 0);
  } else if (f == "lemma12") {
    s.n = need(s.n, 2);
    require_range("n", *s.n, 1, 10);
    const auto n = static_cast<std::uint32_t>(*s.n);
    rc.gens({"x", "y", "z"});
    for (std::uint32_t m = 1; m < n; ++m) rc.gen("a" + num(m));
    for (std::uint32_t m = 1; m < n; ++m) rc.gen("b" + num(m));
    rc.chain_powers("x", "a", n);
    rc.chain_powers("y", "b", n);
    rc.comm("y", "x", "z^-1");
    rc.rel("x^" + num(ipow(s.p, n)), "1");
    rc.rel("y^" + num(ipow(s.p, n)), "1");
    rc.rel("z^" + Ps, "1");
    rc.rel("[x,y]", "z");
    rc.expected_order = ipow(s.p, 2 * n + 1);
  } else if (f == "table1_G1") {
    metacyclic(rc, 3, 1, 1 + P * P, 0);
  } else if (f == "table1_G2") {
    metacyclic(rc, 2, 2, 1 + P, 0);
  } else if (f == "table1_G3") {
    table1_xzy(rc);
    rc.rel("z^" + Ps, "1");
  } else if (f == "table1_G4" || f == "table1_G5" || f == "table1_G6") {
    require_odd(s);
    table1_xzy(rc);
    rc.comm("y", "x", "a1^-1");
    rc.rel("y^-1*x*y", "x^" + num(P + 1));
    if (f == "table1_G4") {
      rc.rel("z^" + Ps, "1");
    } else if (f == "table1_G5") {
      rc.pow("z", "a1");
      rc.rel("z^" + Ps, "x^" + Ps);
    } else {
      if (!s.alpha) s.alpha = smallest_nonresidue(s.p);
      require_range("alpha", *s.alpha, 1, P - 1);
      for (std::int64_t q = 1; q < P; ++q)
        if (q * q % P == *s.alpha) bad("alpha=" + num(*s.alpha) + " is a square mod " + Ps);
      rc.pow("z", "a1^" + num(*s.alpha));
      rc.rel("z^" + Ps, "x^" + num(P * *s.alpha));
    }
  } else if (f == "table1_G7") {
    require_odd(s);
    rc.gens({"y", "z", "x", "w"});
    rc.comm("z", "y", "x^-1");
    rc.comm("x", "z", "w");
    for (auto g : {"w", "x", "y", "z"}) rc.rel(std::string(g) + "^" + Ps, "1");
    rc.rel("[y,z]", "x");
    rc.rel("[x,z]", "w");
    rc.expected_order = ipow(s.p, 4);
  } else if (f == "table1_G8") {
    if (s.p != 3) bad("table1_G8 needs p=3");
    table1_xzy(rc);
    rc.comm("y", "z", "a1");
    rc.rel("z^3", "1");
    rc.rel("[y,z]", "x^3");
  } else if (f == "table2_G4'" || f == "table2_G5'" || f == "table2_G6'") {
    if (s.p != 2) bad(f + " needs p=2");
    if (f == "table2_G4'") metacyclic(rc, 3, 1, 7, 0);
    else if (f == "table2_G5'") metacyclic(rc, 3, 1, 3, 0);
    else {
      metacyclic(rc, 3, 1, -1, 4);
      rc.rel("y^4", "1");
    }
  } else if (f.size() == 2 && f[0] == 'H' && f[1] >= '1' && f[1] <= '7') {
    require_odd(s);
    h_base(rc);
    const int which = f[1] - '0';
    const bool powered = which == 1 || which == 3 || which == 4 || which == 5;
    h_power(rc, "x", powered ? "w" : "1");
    if (which == 4) {
      if (!s.r) {
        auto r = h4_default_r(s.p);
        if (!r)
          throw Error(ErrorKind::UnsupportedPrimeForFamily,
                      "H4 has no published r for p=" + Ps + "; pass r explicitly");
        s.r = *r;
      }
      require_range("r", *s.r, 1, P - 1);
      h_power(rc, "y", "t^" + num(*s.r));
    } else {
      h_power(rc, "y", powered ? "t" : "1");
    }
    h_rule(rc, "y", "x", "z");
    if (which == 2 || which == 6 || which == 7) h_rule(rc, "z", "x", "w");
    if (which == 3 || which == 4 || which == 5) h_rule(rc, "z", "x", "t");
    if (which == 2 || which == 5 || which == 7) h_rule(rc, "z", "y", "t");
    if (which == 6 || which == 7) h_rule(rc, "w", "x", "t");
  } else if (f == "H_ijkl") {
    require_odd(s);
    for (auto [name, v] : {std::pair{"i", &s.i}, {"j", &s.j}, {"k", &s.k}, {"l", &s.l}}) {
      if (!*v) bad(std::string("H_ijkl needs ") + name);
      require_range(name, **v, 0, P - 1);
    }
    h_base(rc);
    auto tail = [&](std::int64_t a, std::int64_t b) {
      std::string out;
      if (a) out = "w^" + num(a);
      if (b) out += (out.empty() ? "" : "*") + std::string("t^") + num(b);
      return out.empty() ? std::string("1") : out;
    };
    h_power(rc, "x", tail(*s.i, *s.j));
    h_power(rc, "y", tail(*s.k, *s.l));
    rc.comm("y", "x", "z^-1");
    rc.comm("z", "x", "w^-1");
    rc.comm("z", "y", "t^-1");
    rc.rel("[x,y]", "z");
    rc.rel("[x,z]", "w");
    rc.rel("[y,z]", "t");
  } else if (f == "K_r") {
    require_odd(s);
    if (!s.r) bad("K_r needs r");
    require_range("r", *s.r, 1, P - 1);
    rc.gens({"x", "y", "z", "u", "v", "w"});
    rc.pow("x", "u");
    rc.pow("u", "v");
    rc.pow("y", "w^" + num(*s.r));
    rc.comm("y", "x", "z");
    rc.comm("z", "x", "v");
    rc.comm("z", "y", "w");
    rc.rel("x^" + Ps, "u");
    rc.rel("y^" + Ps, "w^" + num(*s.r));
    rc.rel("u^" + Ps, "v");
    for (auto g : {"z", "v", "w"}) rc.rel(std::string(g) + "^" + Ps, "1");
    rc.rel("[y,x]", "z");
    rc.rel("[z,x]", "v");
    rc.rel("[z,y]", "w");
    rc.expected_order = ipow(s.p, 6);
  } else if (f == "example17") {
    if (s.p != 3) bad("example17 needs p=3");
    h_base(rc);
    rc.comm("y", "x", "z");
    rc.comm("z", "x", "w");
    rc.comm("z", "y", "t");
    rc.rel("x^3", "1");
    rc.rel("y^3", "1");
    rc.rel("x^-1*y*x", "y*z");
    rc.rel("x^-1*z*x", "z*w");
    rc.rel("y^-1*z*y", "z*t");
  } else {
    bad("unknown family '" + f + "'");
  }
  return rc;
}

std::int64_t parse_int(std::string_view key, std::string_view v) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    bad("parameter " + std::string(key) + " expects an integer, got '" + std::string(v) + "'");
  return out;
}

}  // namespace

bool ValidationReport::all_pass() const {
  return order_ok() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

CatalogGroup build_family(const FamilySpec& spec) {
  FamilySpec s = spec;
  Recipe rc = recipe(s);
  BuildOptions opts;
  Group g = Group::build(rc.pres, opts);
  return CatalogGroup{std::move(s), std::move(g), std::move(rc.relations), std::move(rc.aliases), rc.expected_order};
}

ValidationReport validate_family(const Group& g, const FamilySpec& spec) {
  FamilySpec s = spec;
  Recipe rc = recipe(s);
  ValidationReport report;
  report.expected_order = rc.expected_order;
  report.actual_order = g.order();
  for (const auto& r : rc.relations) {
    RelationCheck c{r.lhs + " = " + r.rhs, false};
    try {
      c.holds = evaluate(g, r.lhs) == evaluate(g, r.rhs);
    } catch (const Error&) {
      c.holds = false;
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

CountsRecord expected_counts(std::uint32_t p) {
  CountsRecord c;
  const std::uint64_t q = p;
  if (p >= 5) {
    c.h = q + 26 + 2 * std::gcd(q - 1, std::uint64_t{3}) + std::gcd(q - 1, std::uint64_t{4});
    c.f = 10 * q + 62 + 14 * std::gcd(std::uint64_t{3}, q - 1) + 7 * std::gcd(std::uint64_t{4}, q - 1) +
          2 * std::gcd(std::uint64_t{5}, q - 1);
  }
  c.lemma24 = q + 7;
  c.conjectured_g = q + 10;
  c.theorem4_lower = q + 8;
  return c;
}

std::optional<std::uint32_t> h4_default_r(std::uint32_t p) {
  auto it = h4_table().find(p);
  if (it == h4_table().end()) return std::nullopt;
  return it->second;
}

FamilySpec parse_family_ref(std::string_view text) {
  FamilySpec s;
  const auto colon = text.find(':');
  s.family = canonical_family(std::string(text.substr(0, colon)));
  if (colon == std::string_view::npos) return s;
  for (const auto& item : split_top_level(text.substr(colon + 1), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) bad("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string_view val = std::string_view(item).substr(eq + 1);
    if (key == "exponents") {
      for (const auto& e : split_top_level(val, '.'))
        s.exponents.push_back(static_cast<std::uint32_t>(parse_int(key, e)));
      continue;
    }
    const auto v = parse_int(key, val);
    if (key == "p") {
      if (v < 2 || v > 255) bad("p out of range");
      s.p = static_cast<std::uint32_t>(v);
    } else if (key == "n") s.n = v;
    else if (key == "r") s.r = v;
    else if (key == "i") s.i = v;
    else if (key == "j") s.j = v;
    else if (key == "k") s.k = v;
    else if (key == "l") s.l = v;
    else if (key == "alpha") s.alpha = v;
    else bad("unknown parameter '" + key + "'");
  }
  return s;
}

std::string render_family_ref(const FamilySpec& spec) {
  std::string out = spec.family + ":p=" + num(spec.p);
  auto add = [&](const char* key, const std::optional<std::int64_t>& v) {
    if (v) out += std::string(",") + key + "=" + num(*v);
  };
  add("n", spec.n);
  add("r", spec.r);
  add("i", spec.i);
  add("j", spec.j);
  add("k", spec.k);
  add("l", spec.l);
  add("alpha", spec.alpha);
  if (!spec.exponents.empty()) {
    out += ",exponents=";
    for (std::size_t q = 0; q < spec.exponents.size(); ++q) out += (q ? "." : "") + num(spec.exponents[q]);
  }
  return out;
}

bool looks_like_family_ref(std::string_view text) {
  const std::string id = canonical_family(std::string(text.substr(0, text.find(':'))));
  const auto& all = list_families();
  return std::any_of(all.begin(), all.end(), [&](const FamilyInfo& f) { return f.id == id; });
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> all = {
      {"cyclic", "p, n", "C_{p^n}"},
      {"cn_x_cn", "p, n", "C_{p^n} x C_{p^n}"},
      {"abelian", "p, exponents", "product of C_{p^e} over the listed exponents"},
      {"holder_heisenberg", "p", "<x,y,z | x^p, y^p, z^p, [x,y]=z>, order p^3"},
      {"lemma10", "p, n>=2", "<x,y | x^(p^n), y^p, x^y = x^(p^(n-1)+1)>, order p^(n+1)"},
      {"lemma11", "p, n>=2", "<x,y | x^(p^n), y^(p^n), x^y = x^(p+1)>, order p^(2n)"},
      {"lemma12", "p, n", "<x,y,z | x^(p^n), y^(p^n), z^p, [x,y]=z>, order p^(2n+1)"},
      {"table1_G1", "p", "<x,y | x^(p^3), y^p, x^y = x^(1+p^2)>"},
      {"table1_G2", "p", "<x,y | x^(p^2), y^(p^2), x^y = x^(p+1)>"},
      {"table1_G3", "p", "<x,y,z | x^(p^2), y^p, z^p, [x,z]=y>"},
      {"table1_G4", "p odd", "G3 with x^y = x^(p+1)"},
      {"table1_G5", "p odd", "G4 with z^p = x^p"},
      {"table1_G6", "p odd, alpha", "G4 with z^p = x^(p*alpha), alpha a non-residue"},
      {"table1_G7", "p odd", "<w,x,y,z | w^p, x^p, y^p, z^p, [y,z]=x, [x,z]=w>"},
      {"table1_G8", "p=3", "<x,y,z | x^9, y^3, z^3, [x,z]=y, [y,z]=x^3>"},
      {"table2_G4'", "p=2", "<x,y | x^8, y^2, x^y = x^7>"},
      {"table2_G5'", "p=2", "<x,y | x^8, y^2, x^y = x^3>"},
      {"table2_G6'", "p=2", "<x,y | x^8, y^4, x^y = x^-1, x^4 = y^2>"},
      {"H1", "p odd", "x^p=w, y^p=t, [y,x]=z"},
      {"H2", "p odd", "[y,x]=z, [z,x]=w, [z,y]=t"},
      {"H3", "p odd", "x^p=w, y^p=t, [y,x]=z, [z,x]=t"},
      {"H4", "p odd, r", "x^p=w, y^p=t^r, [y,x]=z, [z,x]=t"},
      {"H5", "p odd", "x^p=w, y^p=t, [y,x]=z, [z,x]=t, [z,y]=t"},
      {"H6", "p odd", "[y,x]=z, [z,x]=w, [w,x]=t"},
      {"H7", "p odd", "[y,x]=z, [z,x]=w, [z,y]=t, [w,x]=t"},
      {"H_ijkl", "p odd, i, j, k, l", "x^p=w^i t^j, y^p=w^k t^l, [x,y]=z, [x,z]=w, [y,z]=t"},
      {"K_r", "p odd, r", "x^p=u, y^p=w^r, u^p=v, [y,x]=z, [z,x]=v, [z,y]=w, order p^6"},
      {"example17", "p=3", "H2 at p=3, order 243"},
  };
  return all;
}

}  // namespace bvl

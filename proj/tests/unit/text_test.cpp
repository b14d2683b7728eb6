#include <doctest.h>

#include "oracles.hpp"

#include <bvl/error.hpp>
#include <bvl/text/pcg_format.hpp>
#include <bvl/text/word_expr.hpp>

#include <filesystem>
#include <random>

using namespace bvl;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

const std::vector<std::string> kNames{"x", "y", "z", "a1", "b2"};

WordExpr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 4 : 1);
  std::uniform_int_distribution<std::size_t> name(0, kNames.size() - 1);
  std::uniform_int_distribution<std::int64_t> ex(-9, 9);
  switch (kind(rng)) {
    case 0: return WordExpr{};
    case 1: return WordExpr::generator(kNames[name(rng)]);
    case 2: {
      std::vector<WordExpr> f;
      for (int k = std::uniform_int_distribution<int>(2, 4)(rng); k > 0; --k) f.push_back(random_expr(rng, depth - 1));
      return WordExpr::product(std::move(f));
    }
    case 3: return WordExpr::power(random_expr(rng, depth - 1), ex(rng));
    default: return WordExpr::commutator(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("word expressions: parse(render(e)) == e") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const WordExpr e = random_expr(rng, 4);
    const std::string text = render(e);
    CAPTURE(text);
    CHECK(parse_word(text, kNames) == e);
  }
}

TEST_CASE("word expressions: examples and errors") {
  const auto g = testing::family("holder_heisenberg:p=5").group;
  const auto& names = g.presentation().names;
  const WordExpr e = parse_word("x*y^2", names);
  CHECK(e.kind == WordExpr::Kind::Product);
  CHECK(evaluate(g, "x*y^2") == g.mul(g.generator("x"), g.pow(g.generator("y"), 2)));
  CHECK(evaluate(g, "[x,y]") == g.generator("z"));
  CHECK(evaluate(g, "1") == g.identity());
  CHECK(kind_of([&] { parse_word("x*q", names); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([&] { parse_word("x*", names); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { parse_word("[x,y", names); }) == ErrorKind::SyntaxError);
  CHECK(split_top_level("x*y,[x,y]*z") == std::vector<std::string>{"x*y", "[x,y]*z"});
}

TEST_CASE("presentation files: parse, errors, round trip") {
  const auto pres = parse_presentation("p 5\ngens x y z\ncomm y x = z\n# trivial powers omitted\n");
  CHECK(Group::build(pres).order() == 125);
  CHECK(kind_of([] { parse_presentation("p 5\ngens x y z\ncomm z x = y\n"); }) == ErrorKind::WeightViolation);
  CHECK(kind_of([] { parse_presentation("p 5\ngens x y\npow x = q\n"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { parse_presentation("p 5\nfrobnicate\n"); }) == ErrorKind::ParseError);

  const auto dir = std::filesystem::temp_directory_path() / "bvl_text_test";
  std::filesystem::create_directories(dir);
  for (const auto& spec : testing::small_catalog(3125)) {
    const auto cg = build_family(spec);
    const auto& p = cg.group.presentation();
    CAPTURE(render_family_ref(spec));
    CHECK(parse_presentation(render_presentation(p)) == p);
    const auto file = dir / "group.pcg";
    write_presentation(file, p);
    CHECK(read_presentation(file) == p);
  }
  const auto mixed = parse_presentation("p 5\ngens a b\nrelorder b 7\n");
  CHECK(mixed.relative_orders == std::vector<std::uint32_t>{5, 7});
  CHECK(parse_presentation(render_presentation(mixed)) == mixed);
}

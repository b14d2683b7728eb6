#include <doctest.h>

#include "oracles.hpp"

#include <bvl/error.hpp>
#include <bvl/pc/group.hpp>
#include <bvl/text/pcg_format.hpp>
#include <bvl/text/word_expr.hpp>

#include <map>
#include <random>
#include <set>

using namespace bvl;
using testing::family;

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

Group heisenberg(std::uint32_t p) { return family("holder_heisenberg:p=" + std::to_string(p)).group; }

}  // namespace

TEST_CASE("build: orders of small presentations") {
  CHECK(heisenberg(5).order() == 125);
  CHECK(Group::build(PcPresentation::elementary(3, {"a"})).order() == 3);
  CHECK(family("lemma12:p=5,n=2").group.order() == 3125);
  CHECK(Group::build(PcPresentation::elementary(5, {})).order() == 1);
}

TEST_CASE("build: inconsistent presentation is rejected") {
  // x^2 = y makes y commute with x, contradicting [y, x] = z.
  auto pres = parse_presentation("p 2\ngens x y z\npow x = y\ncomm y x = z\n");
  CHECK(kind_of([&] { Group::build(pres); }) == ErrorKind::InconsistentPresentation);
}

TEST_CASE("build: weight violations and bounds") {
  PcPresentation pres = PcPresentation::elementary(3, {"x", "y", "z"});
  pres.comm_tails[{2, 1}] = Word{{0, 1}};
  CHECK(kind_of([&] { Group::build(pres); }) == ErrorKind::WeightViolation);
  BuildOptions small;
  small.max_order = 100;
  CHECK(kind_of([&] { Group::build(heisenberg(5).presentation(), small); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("collect: empty word and a convention check") {
  const Group g = heisenberg(7);
  CHECK(g.collect(Word{}).is_identity());
  // x^-1 (x y^2) x = y^2 x
  const Word lhs{{0, -1}, {0, 1}, {1, 2}, {0, 1}};
  const Word rhs{{1, 2}, {0, 1}};
  CHECK(g.collect(lhs) == g.collect(rhs));
}

TEST_CASE("collect: step budget") {
  const Group g = heisenberg(7);
  Collector tight(g.presentation(), 3);
  std::vector<Exponent> acc(3, 0);
  const Word w{{1, 6}, {0, 6}, {1, 6}, {0, 6}};
  CHECK(kind_of([&] { tight.multiply(acc, w); }) == ErrorKind::StepBudgetExceeded);
}

TEST_CASE("collect: random words agree with the table oracle") {
  std::mt19937_64 rng(7);
  for (const auto& cg : testing::build_small_catalog(625)) {
    const Group& g = cg.group;
    if (g.rank() == 0) continue;
    const testing::TableOracle oracle(g);
    std::uniform_int_distribution<std::size_t> gen(0, g.rank() - 1);
    std::uniform_int_distribution<int> len(0, 12), ex(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
      Word w;
      for (int k = len(rng); k > 0; --k) w.push_back({gen(rng), ex(rng)});
      CHECK(g.id_of(g.collect(w)) == oracle.fold(0, w));
    }
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
    for (int trial = 0; trial < 200; ++trial) {
      const ElemId a = pick(rng), b = pick(rng);
      CHECK(g.mul(a, b) == oracle.mul(a, b));
    }
  }
}

TEST_CASE("mul/inv/conj/comm: worked examples") {
  const Group g = heisenberg(5);
  const Element x = g.generator("x"), y = g.generator("y"), z = g.generator("z");
  CHECK(g.mul(g.identity(), x) == x);
  CHECK(g.inv(g.identity()) == g.identity());
  CHECK(g.conj(x, g.identity()) == x);
  // y x = x y [y, x] = x y z^-1
  CHECK(g.mul(y, x) == Element({1, 1, 4}));
  CHECK(g.comm(x, y) == z);
  CHECK(g.conj(z, x) == z);

  const Group m = family("lemma10:p=5,n=2").group;
  const Element mx = evaluate(m, "x"), my = evaluate(m, "y");
  CHECK(m.mul(m.inv(my), m.mul(mx, my)) == m.pow(mx, 6));
  CHECK(m.element_order(mx) == 25);
  CHECK(m.element_order(m.identity()) == 1);

  const Group l11 = family("lemma11:p=5,n=2").group;
  const Element lx = evaluate(l11, "x"), ly = evaluate(l11, "y");
  CHECK(l11.pow(l11.mul(lx, ly), 5) == l11.mul(l11.pow(lx, 5), l11.pow(ly, 5)));
}

TEST_CASE("heisenberg matches the unitriangular matrix model") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Group g = heisenberg(p);
    const testing::UnitriangularModel model{p};
    const ElemId x = g.gen_id(0), y = g.gen_id(1);
    // phi(x^a y^b [x,y]^c), with [x,y] = x^-1 y^-1 x y taken in the matrices.
    const auto commutator = model.mul(model.mul(model.mul({p - 1, 0, 0}, {0, p - 1, 0}), {1, 0, 0}), {0, 1, 0});
    std::map<ElemId, testing::UnitriangularModel::M> phi;
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c) {
          const ElemId e = g.mul(g.mul(g.pow(x, a), g.pow(y, b)), g.pow(g.comm(x, y), c));
          phi[e] = model.mul(model.mul(model.pow({1, 0, 0}, a), model.pow({0, 1, 0}, b)), model.pow(commutator, c));
        }
    REQUIRE(phi.size() == g.order());
    bool hom = true;
    for (const auto& [a, ma] : phi)
      for (const auto& [b, mb] : phi) hom = hom && phi[g.mul(a, b)] == model.mul(ma, mb);
    CHECK(hom);
  }
}

TEST_CASE("split metacyclic families match the formula model") {
  struct Case {
    const char* ref;
    std::uint64_t X, Y, r;
  };
  for (const Case& c : {Case{"lemma10:p=5,n=2", 25, 5, 6}, Case{"lemma10:p=3,n=3", 27, 3, 10},
                        Case{"lemma11:p=5,n=2", 25, 25, 6}, Case{"table1_G1:p=3", 27, 3, 10},
                        Case{"table2_G4':p=2", 8, 2, 7}}) {
    CAPTURE(c.ref);
    const Group g = family(c.ref).group;
    const testing::MetacyclicModel model{c.X, c.Y, c.r};
    const ElemId x = g.id_of(evaluate(g, "x")), y = g.id_of(evaluate(g, "y"));
    std::map<std::array<std::uint64_t, 2>, ElemId> psi;
    for (std::uint64_t a = 0; a < c.X; ++a)
      for (std::uint64_t b = 0; b < c.Y; ++b) psi[{a, b}] = g.mul(g.pow(x, a), g.pow(y, b));
    std::set<ElemId> image;
    for (const auto& [k, v] : psi) image.insert(v);
    REQUIRE(image.size() == g.order());
    bool hom = true;
    for (const auto& [u, a] : psi)
      for (const auto& [v, b] : psi) hom = hom && psi[model.mul(u, v)] == g.mul(a, b);
    CHECK(hom);
  }
}

TEST_CASE("indexed and normal-form APIs agree") {
  const Group g = family("table1_G7:p=5").group;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
  for (int t = 0; t < 500; ++t) {
    const ElemId a = pick(rng), b = pick(rng);
    CHECK(g.id_of(g.mul(g.element(a), g.element(b))) == g.mul(a, b));
    CHECK(g.id_of(g.comm(g.element(a), g.element(b))) == g.comm(a, b));
    CHECK(g.mul(a, g.inv(a)) == Group::kIdentity);
    CHECK(g.pow(a, -3) == g.inv(g.pow(a, 3)));
  }
  CHECK(g.id_of(g.identity()) == 0);
  CHECK(kind_of([&] { g.element(static_cast<ElemId>(g.order())); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("build: class-4 presentation with exponent-3 generators is inconsistent") {
  CHECK(kind_of([] { family("H6:p=3"); }) == ErrorKind::InconsistentPresentation);
}

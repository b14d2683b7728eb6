#include "oracles.hpp"

#include <deque>
#include <stdexcept>

namespace bvl::testing {

std::uint64_t MetacyclicModel::r_inv() const {
  for (std::uint64_t s = 1; s < X; ++s)
    if (s * r % X == 1) return s;
  throw std::logic_error("r not invertible");
}

std::array<std::uint64_t, 2> MetacyclicModel::mul(std::array<std::uint64_t, 2> u,
                                                  std::array<std::uint64_t, 2> v) const {
  // y^b x^c = x^(c r^-b) y^b
  std::uint64_t t = v[0] % X;
  const auto ri = r_inv();
  for (std::uint64_t k = 0; k < u[1]; ++k) t = t * ri % X;
  return {(u[0] + t) % X, (u[1] + v[1]) % Y};
}

TableOracle::TableOracle(const Group& g) {
  const auto n = g.order();
  right_gen.assign(n, std::vector<ElemId>(g.rank(), 0));
  word_of.assign(n, {});
  std::vector<bool> seen(n, false);
  std::deque<ElemId> queue{Group::kIdentity};
  seen[0] = true;
  while (!queue.empty()) {
    const ElemId a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      Word w = word_of[a];
      w.push_back({i, 1});
      const ElemId b = g.id_of(g.collect(w));
      right_gen[a][i] = b;
      if (!seen[b]) {
        seen[b] = true;
        word_of[b] = std::move(w);
        queue.push_back(b);
      }
    }
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::uint64_t ord = 1;
    for (ElemId a = right_gen[0][i]; a != 0; a = right_gen[a][i]) ++ord;
    gen_order.push_back(ord);
  }
}

ElemId TableOracle::fold(ElemId a, const Word& w) const {
  for (const Letter& l : w) {
    // Negative exponents go through the generator's order.
    const auto ord = static_cast<std::int64_t>(gen_order[l.gen]);
    const auto steps = ((l.exp % ord) + ord) % ord;
    for (std::int64_t s = 0; s < steps; ++s) a = right_gen[a][l.gen];
  }
  return a;
}

ElemId TableOracle::mul(ElemId a, ElemId b) const { return fold(a, word_of[b]); }

FamilySpec ref(const std::string& text) { return parse_family_ref(text); }
CatalogGroup family(const std::string& text) { return build_family(ref(text)); }

std::vector<FamilySpec> small_catalog(std::uint64_t max_order) {
  struct Entry {
    const char* text;
    std::uint64_t order;
  };
  static const std::vector<Entry> all = {
      {"cyclic:p=2,n=4", 16},         {"cn_x_cn:p=2,n=1", 4},       {"cn_x_cn:p=2,n=2", 16},
      {"cn_x_cn:p=2,n=3", 64},        {"abelian:p=2,exponents=2.1", 8},
      {"abelian:p=2,exponents=1.1.1", 8}, {"abelian:p=2,exponents=3.1", 16},
      {"holder_heisenberg:p=2", 8},   {"lemma10:p=2,n=2", 8},       {"lemma10:p=2,n=3", 16},
      {"lemma10:p=2,n=5", 64},        {"lemma11:p=2,n=2", 16},      {"lemma11:p=2,n=3", 64},
      {"lemma12:p=2,n=1", 8},         {"lemma12:p=2,n=2", 32},      {"table1_G1:p=2", 16},
      {"table1_G2:p=2", 16},          {"table1_G3:p=2", 16},        {"table2_G4':p=2", 16},
      {"table2_G5':p=2", 16},         {"table2_G6':p=2", 16},
      {"cyclic:p=3,n=2", 9},          {"cn_x_cn:p=3,n=1", 9},       {"cn_x_cn:p=3,n=2", 81},
      {"abelian:p=3,exponents=2.1", 27}, {"abelian:p=3,exponents=1.1.1", 27},
      {"abelian:p=3,exponents=3.1", 81}, {"holder_heisenberg:p=3", 27}, {"lemma10:p=3,n=2", 27},
      {"lemma10:p=3,n=3", 81},        {"lemma10:p=3,n=4", 243},     {"lemma11:p=3,n=2", 81},
      {"lemma12:p=3,n=1", 27},        {"lemma12:p=3,n=2", 243},     {"table1_G1:p=3", 81},
      {"table1_G2:p=3", 81},          {"table1_G3:p=3", 81},        {"table1_G4:p=3", 81},
      {"table1_G5:p=3", 81},          {"table1_G6:p=3", 81},        {"table1_G7:p=3", 81},
      {"table1_G8:p=3", 81},          {"example17:p=3", 243},       {"H1:p=3", 243},
      {"H3:p=3", 243},                {"H5:p=3", 243},              {"H_ijkl:p=3,i=1,j=0,k=0,l=1", 243},
      {"H_ijkl:p=3,i=0,j=0,k=1,l=0", 243},
      {"cyclic:p=5,n=2", 25},         {"cn_x_cn:p=5,n=1", 25},      {"cn_x_cn:p=5,n=2", 625},
      {"abelian:p=5,exponents=2.1", 125}, {"abelian:p=5,exponents=1.1.1", 125},
      {"abelian:p=5,exponents=3.1", 625}, {"holder_heisenberg:p=5", 125}, {"lemma10:p=5,n=2", 125},
      {"lemma10:p=5,n=3", 625},       {"lemma11:p=5,n=2", 625},     {"lemma12:p=5,n=1", 125},
      {"table1_G1:p=5", 625},         {"table1_G2:p=5", 625},       {"table1_G3:p=5", 625},
      {"table1_G4:p=5", 625},         {"table1_G5:p=5", 625},       {"table1_G6:p=5", 625},
      {"table1_G7:p=5", 625},
      {"cn_x_cn:p=7,n=1", 49},        {"abelian:p=7,exponents=1.1.1", 343},
      {"holder_heisenberg:p=7", 343}, {"lemma10:p=7,n=2", 343},     {"lemma12:p=7,n=1", 343},
      {"lemma12:p=5,n=2", 3125},      {"abelian:p=5,exponents=3.2", 3125}, {"H1:p=5", 3125},
      {"H2:p=5", 3125},               {"H3:p=5", 3125},             {"H4:p=5,r=2", 3125},
      {"H5:p=5", 3125},               {"H6:p=5", 3125},             {"H7:p=5", 3125},
      {"H_ijkl:p=5,i=0,j=1,k=1,l=2", 3125}, {"lemma10:p=3,n=6", 2187},
  };
  std::vector<FamilySpec> out;
  for (const auto& e : all)
    if (e.order <= max_order) out.push_back(ref(e.text));
  return out;
}

std::vector<CatalogGroup> build_small_catalog(std::uint64_t max_order) {
  std::vector<CatalogGroup> out;
  for (const auto& s : small_catalog(max_order)) out.push_back(build_family(s));
  return out;
}

}  // namespace bvl::testing

#include "zzl/diagram.hpp"
#include "zzl/error.hpp"

namespace zzl::diagram {

namespace {

using simplicial::MonotoneMap;

MonotoneMap values(std::size_t target, std::vector<std::size_t> v) {
  const std::size_t n = v.size();
  return MonotoneMap(n, target, std::move(v));
}

/// A 1-diagram `base g0 base g1 ... base`, every leg an arrow base -> g_i.
Diagram line(const std::string& base, const std::vector<std::string>& singular) {
  std::vector<Diagram> reg(singular.size() + 1, Diagram::point(base));
  std::vector<Diagram> sing;
  std::vector<DiagramMap> fw, bw;
  for (const auto& g : singular) {
    sing.push_back(Diagram::point(g));
    fw.push_back(DiagramMap::point(base, g));
    bw.push_back(DiagramMap::point(base, g));
  }
  return Diagram::zigzag(std::move(reg), std::move(sing), std::move(fw), std::move(bw));
}

/// The map of 1-diagrams over f_s; in a thin signature the slices are forced.
DiagramMap line_map(const Diagram& x, const Diagram& y, const MonotoneMap& fs) {
  const MonotoneMap fr = simplicial::regularize(fs).map();
  std::vector<DiagramMap> sing, reg;
  for (std::size_t i = 0; i < fs.source_size(); ++i) {
    sing.push_back(DiagramMap::point(x.singular(i).generator(), y.singular(fs(i)).generator()));
  }
  for (std::size_t j = 0; j <= fs.target_size(); ++j) {
    reg.push_back(DiagramMap::point(x.regular(fr(j)).generator(), y.regular(j).generator()));
  }
  return DiagramMap::zigzag(fs, std::move(sing), std::move(reg));
}

Diagram cospans(std::vector<Diagram> regular, std::vector<Diagram> singular,
                const std::vector<MonotoneMap>& forward, const std::vector<MonotoneMap>& backward) {
  std::vector<DiagramMap> fw, bw;
  for (std::size_t i = 0; i < singular.size(); ++i) {
    fw.push_back(line_map(regular[i], singular[i], forward[i]));
    bw.push_back(line_map(regular[i + 1], singular[i], backward[i]));
  }
  return Diagram::zigzag(std::move(regular), std::move(singular), std::move(fw), std::move(bw));
}

Signature monad_signature() {
  return Signature({{"x", 0, "#f2efe6"}, {"f", 1, "#1f4e79"}, {"m", 2, "#c0392b"}},
                   {{"x", "f"}, {"x", "m"}, {"f", "m"}});
}

Document point_example() {
  return {Signature({{"x", 0, "#f2efe6"}}, {}), Diagram::point("x")};
}

Document identity1_example() {
  return {Signature({{"x", 0, "#f2efe6"}}, {}), line("x", {})};
}

Document arrow_example() { return {monad_signature(), line("x", {"f"})}; }

Document identity2_example() {
  return {monad_signature(), Diagram::zigzag({line("x", {"f"})}, {}, {}, {})};
}

Document monad_example() {
  const Diagram f = line("x", {"f"});
  const Diagram ff = line("x", {"f", "f"});
  const Diagram m = line("x", {"m"});
  return {monad_signature(), cospans({ff, f}, {m}, {values(1, {0, 0})}, {values(1, {0})})};
}

Document eckmann_hilton_example() {
  Signature sig({{"x", 0, "#f2efe6"}, {"alpha", 2, "#c0392b"}, {"beta", 2, "#2471a3"}},
                {{"x", "alpha"}, {"x", "beta"}});
  const Diagram id = line("x", {});
  const Diagram a = line("x", {"alpha"});
  const Diagram b = line("x", {"beta"});
  const Diagram ab = line("x", {"alpha", "beta"});
  const MonotoneMap into1 = values(1, {});
  const MonotoneMap into2 = values(2, {});
  const Diagram alpha_beta = cospans({id, id, id}, {a, b}, {into1, into1}, {into1, into1});
  const Diagram beta_alpha = cospans({id, id, id}, {b, a}, {into1, into1}, {into1, into1});
  const Diagram side = cospans({id, id}, {ab}, {into2}, {into2});

  const MonotoneMap merge = values(1, {0, 0});
  const DiagramMap a_left = line_map(a, ab, values(2, {0}));
  const DiagramMap b_right = line_map(b, ab, values(2, {1}));
  const DiagramMap lower = DiagramMap::zigzag(merge, {a_left, b_right},
                                              {identity_map(id), identity_map(id)});
  const DiagramMap upper = DiagramMap::zigzag(merge, {b_right, a_left},
                                              {identity_map(id), identity_map(id)});
  return {sig, Diagram::zigzag({alpha_beta, beta_alpha}, {side}, {lower}, {upper})};
}

Signature associator_signature() {
  return Signature({{"x", 0, "#f2efe6"},
                    {"f", 1, "#1f4e79"},
                    {"m", 2, "#c0392b"},
                    {"a", 3, "#7d3c98"}},
                   {{"x", "f"}, {"x", "m"}, {"x", "a"}, {"f", "m"}, {"f", "a"}, {"m", "a"}});
}

Diagram associator_diagram() {
  const Diagram f = line("x", {"f"});
  const Diagram ff = line("x", {"f", "f"});
  const Diagram fff = line("x", {"f", "f", "f"});
  const Diagram mf = line("x", {"m", "f"});
  const Diagram fm = line("x", {"f", "m"});
  const Diagram m = line("x", {"m"});
  const Diagram a = line("x", {"a"});

  // m ∘ (m ⊗ 1) and m ∘ (1 ⊗ m).
  const Diagram left = cospans({fff, ff, f}, {mf, m}, {values(2, {0, 0, 1}), values(1, {0, 0})},
                               {values(2, {0, 1}), values(1, {0})});
  const Diagram right = cospans({fff, ff, f}, {fm, m}, {values(2, {0, 1, 1}), values(1, {0, 0})},
                                {values(2, {0, 1}), values(1, {0})});
  const Diagram apex = cospans({fff, f}, {a}, {values(1, {0, 0, 0})}, {values(1, {0})});

  const MonotoneMap merge = values(1, {0, 0});
  const DiagramMap from_left = DiagramMap::zigzag(
      merge, {line_map(mf, a, values(1, {0, 0})), line_map(m, a, values(1, {0}))},
      {identity_map(fff), identity_map(f)});
  const DiagramMap from_right = DiagramMap::zigzag(
      merge, {line_map(fm, a, values(1, {0, 0})), line_map(m, a, values(1, {0}))},
      {identity_map(fff), identity_map(f)});
  return Diagram::zigzag({left, right}, {apex}, {from_left}, {from_right});
}

Document associator_example() { return {associator_signature(), associator_diagram()}; }

Document associator_identity_example() {
  const Diagram assoc = associator_diagram();
  return {associator_signature(),
          Diagram::zigzag({assoc, assoc}, {assoc}, {identity_map(assoc)}, {identity_map(assoc)})};
}

}  // namespace

const std::vector<Example>& builtin_examples() {
  static const std::vector<Example> examples = {
      {"point", "0-diagram: the generator x", point_example()},
      {"identity-1", "1-diagram of length 0: the identity on x", identity1_example()},
      {"arrow", "1-diagram: the 1-cell f : x -> x", arrow_example()},
      {"identity-2", "2-diagram of length 0: the identity on f", identity2_example()},
      {"monad", "2-diagram: the multiplication m : f f -> f", monad_example()},
      {"eckmann-hilton", "3-diagram: 2-cells alpha, beta on id_x exchanging heights",
       eckmann_hilton_example()},
      {"associator", "3-diagram: the associator m(m x 1) -> m(1 x m)", associator_example()},
      {"associator-identity", "4-diagram: one-step identity extension of the associator",
       associator_identity_example()},
  };
  return examples;
}

const Example* find_example(const std::string& name) {
  for (const auto& e : builtin_examples()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace zzl::diagram

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "support.hpp"
#include "zzl/diagram.hpp"
#include "zzl/error.hpp"
#include "zzl/layout.hpp"
#include "zzl/lp.hpp"
#include "zzl/render.hpp"
#include "zzl/simplicial.hpp"
#include "zzl/zigzag.hpp"

using namespace zzl;

namespace {

// Criteria report through this: an empty string means pass.
struct Outcome {
  std::string failure;
  std::string detail;
};

using Check = std::function<Outcome()>;

std::vector<std::size_t> values(const simplicial::MonotoneMap& f) {
  return {f.values().begin(), f.values().end()};
}

std::vector<diagram::ExplodedDiagram> stages(const diagram::Diagram& d) {
  if (d.dimension() == 0) return {};
  std::vector<diagram::ExplodedDiagram> out{diagram::explode_base(d)};
  while (out.size() < d.dimension()) out.push_back(diagram::explode_once(out.back()));
  return out;
}

const diagram::Document& example(const std::string& name) {
  const auto* e = diagram::find_example(name);
  if (e == nullptr) throw std::runtime_error("missing example " + name);
  return e->document;
}

Outcome reg_equivalence() {
  std::size_t maps = 0, pairs = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      std::set<std::vector<std::size_t>> image, codomain;
      for (const auto& f : simplicial::enumerate_monotone(n, m)) {
        const auto r = simplicial::regularize(f).map();
        if (values(r) != test::reg_formula(f)) return {"Reg disagrees with the min formula", ""};
        image.insert(values(r));
        ++maps;
      }
      for (const auto& g : simplicial::enumerate_monotone(m + 1, n + 1)) {
        if (g.preserves_endpoints()) codomain.insert(values(g));
      }
      if (image != codomain) {
        return {"not a bijection for n=" + std::to_string(n) + " m=" + std::to_string(m), ""};
      }
      for (std::size_t k = 0; k <= 4; ++k) {
        for (const auto& f : simplicial::enumerate_monotone(n, m)) {
          for (const auto& g : simplicial::enumerate_monotone(m, k)) {
            const auto lhs = simplicial::regularize(simplicial::compose(f, g)).map();
            const auto rhs =
                simplicial::compose(simplicial::regularize(g).map(), simplicial::regularize(f).map());
            if (lhs != rhs) return {"Reg(g f) != Reg f Reg g", ""};
            ++pairs;
          }
        }
      }
    }
    if (simplicial::regularize(simplicial::identity(n)).map() != simplicial::identity(n + 1)) {
      return {"Reg does not preserve identities", ""};
    }
  }
  return {"", std::to_string(maps) + " maps, " + std::to_string(pairs) + " composable pairs"};
}

Outcome universal_bundle() {
  std::size_t homs = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto all = simplicial::enumerate_monotone(n, m);
      for (const auto p : zigzag::points(n)) {
        for (const auto q : zigzag::points(m)) {
          const zigzag::ZObject a{n, p}, b{m, q};
          std::vector<simplicial::MonotoneMap> expect;
          for (const auto& f : all) {
            if (test::hom_formula(a, b, f)) expect.push_back(f);
          }
          if (zigzag::universal_hom(a, b) != expect) {
            return {"hom-set mismatch at " + std::to_string(n) + p.to_string() + " -> " +
                        std::to_string(m) + q.to_string(), ""};
          }
          ++homs;
        }
      }
    }
  }
  std::size_t checked = 0;
  for (const auto& e : diagram::builtin_examples()) {
    const auto& d = e.document.diagram;
    for (std::size_t k = 1; k <= d.dimension(); ++k) {
      std::size_t expect = 0;
      for (const auto& p : diagram::points(d, k - 1)) expect += 2 * diagram::subdiagram(d, p).length() + 1;
      if (diagram::points(d, k).size() != expect) {
        return {e.name + ": |pt^" + std::to_string(k) + "| differs from the fiber sum", ""};
      }
      ++checked;
    }
  }
  return {"", std::to_string(homs) + " hom-sets, " + std::to_string(checked) + " point counts"};
}

Outcome injectification_suite() {
  std::mt19937 rng(20240);
  std::size_t built = 0, reported = 0;
  for (int t = 0; t < 200; ++t) {
    const poset::PosetFunctor p = test::random_functor(rng, 5, 4);
    try {
      const poset::Injectification inj = poset::injectify(p);
      const std::string v = test::injectification_violation(p, inj);
      if (!v.empty()) return {"instance " + std::to_string(t) + ": " + v, ""};
      const std::string w = poset::check_injectification(p, inj);
      if (!w.empty()) return {"instance " + std::to_string(t) + ": " + w, ""};
      ++built;
    } catch (const poset::InjectificationError& e) {
      if (e.offending().empty()) return {"error without offending indices", ""};
      ++reported;
    }
  }
  // a known collapse must surface as an error
  try {
    poset::injectify(test::collapsing_functor());
    return {"collapsing colimit was absorbed", ""};
  } catch (const poset::InjectificationError&) {
  }
  return {"", std::to_string(built) + " built, " + std::to_string(reported) + " reported"};
}

Outcome lp_oracle() {
  std::mt19937 rng(500);
  std::size_t by_status[3] = {0, 0, 0};
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const lp::LinearProgram p = test::random_lp(rng, 6, 10);
    const lp::LpSolution exact = lp::brute_force(p);
    const lp::LpSolution s = lp::solve(p);
    if (s.status != exact.status) {
      return {"instance " + std::to_string(t) + ": status " + lp::to_string(s.status) + " vs " +
                  lp::to_string(exact.status), ""};
    }
    if (s.status == lp::Status::Optimal) {
      const double err = std::abs(s.objective - exact.objective);
      worst = std::max(worst, err);
      if (err > 1e-6) return {"instance " + std::to_string(t) + ": objective off by " + std::to_string(err), ""};
    }
    ++by_status[static_cast<int>(s.status)];
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu optimal, %zu infeasible, %zu unbounded; max error %.2g",
                by_status[0], by_status[1], by_status[2], worst);
  return {"", buf};
}

Outcome layout_soundness() {
  double worst = 0.0, worst_lambda = 0.0;
  std::size_t programs = 0;
  for (const auto& ex : diagram::builtin_examples()) {
    for (const auto& e : stages(ex.document.diagram)) {
      const auto p = layout::singular_poset_diagram(e);
      const auto inj = poset::injectify(p);
      const auto prog = layout::build_lp(p, inj);
      const auto sol = lp::solve(prog.program);
      if (sol.status != lp::Status::Optimal) return {ex.name + ": program not optimal", ""};
      worst = std::max(worst, test::separation_violation(p, inj, prog, sol.assignment));
      ++programs;

      // the layout read off this solution, as zigzag_layout does
      layout::ZigzagLayout z;
      z.width = sol.assignment[prog.width];
      std::vector<std::size_t> lengths;
      for (std::size_t i = 0; i < e.size(); ++i) {
        lengths.push_back(e.assignment[i].length());
        z.heights.emplace_back();
        for (std::size_t x = 0; x < lengths.back(); ++x) {
          z.heights[i].push_back(sol.assignment[prog.v[i][*inj.find(i, {i, x})]]);
        }
      }
      const auto ext = layout::extend_heights(z, lengths);
      const double w = z.width;
      for (std::size_t i = 0; i < e.size(); ++i) {
        const auto& h = ext.heights[i];
        if (lengths[i] == 0) {
          worst_lambda = std::max(worst_lambda, std::abs(h[0] - (0.5 * w + 1.0)));
          continue;
        }
        worst_lambda = std::max({worst_lambda, std::abs(h.front()), std::abs(h.back() - (w + 2.0))});
        for (std::size_t s = 0; s < lengths[i]; ++s) {
          worst_lambda = std::max(worst_lambda, std::abs(h[2 * s + 1] - (z.heights[i][s] + 1.0)));
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu programs; max violation %.2g, max interpolation error %.2g",
                programs, worst, worst_lambda);
  if (worst > 1e-9) return {buf, ""};
  if (worst_lambda > 1e-12) return {buf, ""};
  return {"", buf};
}

Outcome fairness_dichotomy() {
  const double monad = layout::diagram_layout(example("monad").diagram).total_defect();
  const double eh = layout::diagram_layout(example("eckmann-hilton").diagram).total_defect();
  const double assoc = layout::diagram_layout(example("associator").diagram).total_defect();
  char buf[160];
  std::snprintf(buf, sizeof buf, "monad %.3g, eckmann-hilton %.3g, associator %.3g", monad, eh, assoc);
  if (monad > 1e-6 || eh > 1e-6 || assoc <= 1e-6) return {buf, ""};
  return {"", buf};
}

Outcome straight_wires() {
  std::size_t wires = 0, diagrams = 0;
  for (const auto& ex : diagram::builtin_examples()) {
    const auto& d = ex.document;
    if (d.diagram.dimension() > 2) continue;
    const auto l = layout::diagram_layout(d.diagram);
    if (l.total_defect() > 1e-9) continue;
    const std::string svg = render::render(d);
    for (const auto& xs : test::svg_wire_xs(svg)) {
      for (const auto& x : xs) {
        if (x != xs.front()) return {ex.name + ": wire x " + x + " vs " + xs.front(), ""};
      }
      ++wires;
    }
    ++diagrams;
  }
  if (wires == 0) return {"no wires checked", ""};
  return {"", std::to_string(wires) + " wires in " + std::to_string(diagrams) + " diagrams"};
}

Outcome determinism() {
  std::size_t n = 0;
  for (const auto& ex : diagram::builtin_examples()) {
    // the two runs go side by side; rendering is a pure function
    std::string a, b;
    std::thread other([&] { b = render::render(ex.document); });
    a = render::render(ex.document);
    other.join();
    if (a != b) return {ex.name + ": two runs differ", ""};
    const std::string file = test::golden_dir() + "/" + ex.name +
                             (ex.document.diagram.dimension() <= 2 ? ".svg" : ".json");
    const auto golden = test::read_text(file);
    if (!golden) return {"missing " + file, ""};
    if (*golden != a) return {ex.name + ": differs from its golden file", ""};
    ++n;
  }
  return {"", std::to_string(n) + " examples"};
}

Outcome four_dimensional() {
  const auto& d = example("associator-identity");
  if (d.diagram.dimension() != 4) return {"example is not a 4-diagram", ""};
  const auto l = layout::diagram_layout(d.diagram);
  const auto scene = render::extract_scene(d.diagram, l, d.signature);
  const std::size_t expect = 2 * d.diagram.length() + 1;
  const std::string json = render::to_scene_json(scene);
  std::string detail = std::to_string(l.paths.size()) + " points, " +
                       std::to_string(scene.frames.size()) + " frames";
  if (scene.frames.size() != expect) return {detail + ", expected " + std::to_string(expect), ""};
  return {"", detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"reg equivalence", reg_equivalence},
      {"universal bundle oracle", universal_bundle},
      {"injectification", injectification_suite},
      {"lp solver oracle", lp_oracle},
      {"layout soundness", layout_soundness},
      {"fairness dichotomy", fairness_dichotomy},
      {"straight wires", straight_wires},
      {"render determinism", determinism},
      {"4d pipeline", four_dimensional},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // every criterion has to finish within 10 s
    if (o.failure.empty() && secs >= 10.0) o.failure = "took longer than 10 s";
    const bool pass = o.failure.empty();
    failed += pass ? 0 : 1;
    std::printf("%s %zu %s (%.2fs): %s\n", pass ? "PASS" : "FAIL", k + 1, criteria[k].first, secs,
                pass ? o.detail.c_str() : o.failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}

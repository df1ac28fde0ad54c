#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "support.hpp"
#include "zzl/error.hpp"
#include "zzl/lp.hpp"
#include "zzl/lp_kernels.hpp"

using namespace zzl;
using namespace zzl::lp;

namespace {

LinearProgram small_program() {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
  LinearProgram p;
  const auto x = p.add_variable("x"), y = p.add_variable("y");
  p.add_constraint({{x, 1}, {y, 2}}, Relation::LessEqual, 4);
  p.add_constraint({{x, 3}, {y, 1}}, Relation::LessEqual, 6);
  p.set_objective({{x, -1}, {y, -1}});
  return p;
}

std::vector<double> random_row(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void compare_kernels(const kernels::Kernels& a, const kernels::Kernels& b) {
  std::mt19937 rng(3);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 257}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto src = random_row(rng, n);
      auto d1 = random_row(rng, n);
      auto d2 = d1;
      const double f = std::uniform_real_distribution<double>(-7, 7)(rng);
      a.axpy(d1.data(), src.data(), f, n);
      b.axpy(d2.data(), src.data(), f, n);
      REQUIRE(std::memcmp(d1.data(), d2.data(), n * sizeof(double)) == 0);
      a.scale(d1.data(), 1.0 / f, n);
      b.scale(d2.data(), 1.0 / f, n);
      REQUIRE(std::memcmp(d1.data(), d2.data(), n * sizeof(double)) == 0);
    }
  }
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook program") {
  const LpSolution s = solve(small_program());
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == doctest::Approx(-2.8));
  CHECK(s.assignment[0] == doctest::Approx(1.6));
  CHECK(s.assignment[1] == doctest::Approx(1.2));
  const LpSolution exact = brute_force(small_program());
  CHECK(exact.status == Status::Optimal);
  CHECK(exact.objective == doctest::Approx(-2.8));
}

TEST_CASE("statuses") {
  LinearProgram inf;
  const auto x = inf.add_variable("x");
  inf.add_constraint({{x, 1}}, Relation::GreaterEqual, 2);
  inf.add_constraint({{x, 1}}, Relation::LessEqual, 1);
  CHECK(solve(inf).status == Status::Infeasible);
  CHECK(brute_force(inf).status == Status::Infeasible);

  LinearProgram unb;
  const auto y = unb.add_variable("y", true);
  unb.set_objective({{y, 1}});
  CHECK(solve(unb).status == Status::Unbounded);
  CHECK(brute_force(unb).status == Status::Unbounded);

  LinearProgram empty;
  const LpSolution e = solve(empty);
  CHECK(e.status == Status::Optimal);
  CHECK(e.objective == 0.0);
}

TEST_CASE("cycling example terminates") {
  // Beale's example, which cycles under plain Dantzig pricing
  LinearProgram p;
  std::vector<std::size_t> x;
  for (int k = 0; k < 4; ++k) x.push_back(p.add_variable("x" + std::to_string(k)));
  p.add_constraint({{x[0], 0.25}, {x[1], -60}, {x[2], -0.04}, {x[3], 9}}, Relation::LessEqual, 0);
  p.add_constraint({{x[0], 0.5}, {x[1], -90}, {x[2], -0.02}, {x[3], 3}}, Relation::LessEqual, 0);
  p.add_constraint({{x[2], 1}}, Relation::LessEqual, 1);
  p.set_objective({{x[0], -0.75}, {x[1], 150}, {x[2], -0.02}, {x[3], 6}});
  const LpSolution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == doctest::Approx(-0.05));
}

TEST_CASE("equalities and free variables") {
  LinearProgram p;
  const auto a = p.add_variable("a", true), b = p.add_variable("b");
  p.add_constraint({{a, 1}, {b, 1}}, Relation::Equal, -1);
  p.add_constraint({{a, 1}}, Relation::GreaterEqual, -5);
  p.set_objective({{b, 1}, {a, -1}});
  const LpSolution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.assignment[0] == doctest::Approx(-1));
  CHECK(s.assignment[1] == doctest::Approx(0));
  // redundant equality rows
  LinearProgram r;
  const auto u = r.add_variable("u"), v = r.add_variable("v");
  r.add_constraint({{u, 1}, {v, 1}}, Relation::Equal, 2);
  r.add_constraint({{u, 2}, {v, 2}}, Relation::Equal, 4);
  r.set_objective({{u, 1}, {v, -1}});
  const LpSolution rs = solve(r);
  REQUIRE(rs.status == Status::Optimal);
  CHECK(rs.objective == doctest::Approx(-2));
}

TEST_CASE("randomized programs agree with the exact oracle") {
  std::mt19937 rng(77);
  int counts[3] = {0, 0, 0};
  for (int t = 0; t < 400; ++t) {
    const LinearProgram p = test::random_lp(rng, 6, 10);
    const LpSolution exact = brute_force(p);
    for (Method m : {Method::Automatic, Method::TwoPhase}) {
      SolveOptions o;
      o.method = m;
      const LpSolution s = solve(p, o);
      REQUIRE_MESSAGE(s.status == exact.status, to_lp_text(p));
      if (s.status == Status::Optimal) {
        CHECK(std::abs(s.objective - exact.objective) <= 1e-6);
        CHECK(p.violation(s.assignment) <= 1e-7);
      }
    }
    ++counts[static_cast<int>(exact.status)];
  }
  // every status shows up
  CHECK(counts[0] > 20);
  CHECK(counts[1] > 20);
  CHECK(counts[2] > 20);
}

TEST_CASE("no sampled feasible point beats the optimum") {
  std::mt19937 rng(404);
  std::normal_distribution<double> noise(0.0, 1.0);
  int sampled = 0;
  for (int t = 0; t < 200; ++t) {
    const LinearProgram p = test::random_lp(rng, 6, 10);
    const LpSolution s = solve(p);
    if (s.status != Status::Optimal) continue;
    for (int k = 0; k < 100; ++k) {
      std::vector<double> x = s.assignment;
      for (double& v : x) v = std::round((v + noise(rng)) * 4.0) / 4.0;
      if (p.violation(x) > 1e-9) continue;
      ++sampled;
      CHECK(p.evaluate(x) >= s.objective - 1e-6);
    }
  }
  CHECK(sampled > 100);
}

TEST_CASE("oracle guard") {
  LinearProgram p;
  for (int k = 0; k < 9; ++k) p.add_variable("x" + std::to_string(k));
  CHECK_THROWS_AS(brute_force(p), ArgumentError);
}

TEST_CASE("kernel variants are bit-identical") {
  const kernels::Kernels& s = kernels::scalar();
  CHECK(std::string(s.name) == "scalar");
  compare_kernels(s, kernels::active());
  if (const auto* k = kernels::avx2()) compare_kernels(s, *k);
  if (const auto* k = kernels::neon()) compare_kernels(s, *k);
  std::vector<double> d{1, 2, 3};
  const std::vector<double> src{1, 1, 1};
  s.axpy(d.data(), src.data(), 2.0, 3);
  CHECK(d == std::vector<double>{-1, 0, 1});
}

TEST_CASE("solve is deterministic") {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const LinearProgram p = test::random_lp(rng, 6, 10);
    const LpSolution a = solve(p), b = solve(p);
    CHECK(a.status == b.status);
    CHECK(a.assignment == b.assignment);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("lp text round trip") {
  std::mt19937 rng(123);
  for (int t = 0; t < 100; ++t) {
    const LinearProgram p = test::random_lp(rng, 6, 10);
    const std::string text = to_lp_text(p);
    const LinearProgram q = parse_lp_text(text);
    CHECK(to_lp_text(q) == text);
    CHECK(solve(q).status == solve(p).status);
  }
}

TEST_CASE("lp text parsing") {
  const LinearProgram p = parse_lp_text(
      "\\ comment\n"
      "Minimize\n obj: x + 2 y - z\n"
      "Subject To\n c1: x + y >= 1\n 3 z - x <= 4\n x - y = 0\n"
      "Bounds\n z free\n -inf <= y <= 10\n"
      "End\n");
  REQUIRE(p.variable_count() == 3);
  CHECK(p.variables()[2].free);
  CHECK(p.constraint_count() == 4);
  const LpSolution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == doctest::Approx(0.0));
  CHECK(s.assignment[0] == doctest::Approx(0.5));

  CHECK_THROWS_AS(parse_lp_text("Maximize\n x\nEnd\n"), ParseError);
  try {
    parse_lp_text("Minimize\n x\nSubject To\n c1: x <=\nEnd\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location().find("line") != std::string::npos);
  }
}

}

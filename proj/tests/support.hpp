#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zzl/layout.hpp"
#include "zzl/lp.hpp"
#include "zzl/poset.hpp"
#include "zzl/simplicial.hpp"
#include "zzl/zigzag.hpp"

namespace zzl::test {

/// Random partial order on `size` elements. The order is generated by
/// pairs a < b with a < b as integers, so 0..size-1 is a linear extension.
poset::Poset random_poset(std::mt19937& rng, std::size_t size, double density);

/// Every monotone map between two small posets, by brute force.
std::vector<std::vector<std::size_t>> monotone_maps(const poset::Poset& s, const poset::Poset& t);

/// A random functor over a random index poset with |J| <= max_index and
/// fibers of size <= max_fiber. Retries until the arrows compose
/// path-independently. With `chains` every fiber is a chain, as for the
/// singular levels of a diagram.
poset::PosetFunctor random_functor(std::mt19937& rng, std::size_t max_index,
                                   std::size_t max_fiber, bool chains = false);

/// Random LP with small integer data. Roughly a third have a planted
/// feasible point with slack constraints, the others are unconstrained
/// draws that are often infeasible or unbounded.
lp::LinearProgram random_lp(std::mt19937& rng, std::size_t max_vars, std::size_t max_cons);

/// The min formula for Reg, evaluated directly.
std::vector<std::size_t> reg_formula(const simplicial::MonotoneMap& f);

/// Membership in the universal zigzag hom-set, case by case.
bool hom_formula(const zigzag::ZObject& a, const zigzag::ZObject& b,
                 const simplicial::MonotoneMap& f);

/// First violated injectification property, checked from the definitions;
/// empty when none.
std::string injectification_violation(const poset::PosetFunctor& p,
                                      const poset::Injectification& inj);

/// Largest violation of the bound and unit-gap constraints by a solution of
/// the layout program.
double separation_violation(const poset::PosetFunctor& p, const poset::Injectification& inj,
                            const layout::LayoutProgram& prog, const std::vector<double>& x);

/// The x values in each wire path of an SVG document, as written.
std::vector<std::vector<std::string>> svg_wire_xs(const std::string& svg);

/// Hand-built functor whose colimit below the top index collapses.
poset::PosetFunctor collapsing_functor();

/// Directory holding the golden files.
std::string golden_dir();

std::optional<std::string> read_text(const std::string& path);

}  // namespace zzl::test

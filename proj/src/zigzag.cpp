#include "zzl/zigzag.hpp"

#include <charconv>

#include "zzl/error.hpp"

namespace zzl::zigzag {

using simplicial::MonotoneMap;

std::string PointIndex::to_string() const {
  return (regular() ? "r" : "s") + std::to_string(index);
}

PointIndex PointIndex::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'r' && text[0] != 's')) {
    throw ParseError("", "invalid point index '" + std::string(text) + "'");
  }
  std::size_t value = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("", "invalid point index '" + std::string(text) + "'");
  }
  return text[0] == 'r' ? reg(value) : sing(value);
}

std::vector<PointIndex> points(std::size_t length) {
  std::vector<PointIndex> out;
  out.reserve(2 * length + 1);
  for (std::size_t k = 0; k < 2 * length + 1; ++k) out.push_back(PointIndex::from_fence_position(k));
  return out;
}

poset::Poset zigzag_point_poset(std::size_t length) {
  poset::Relation gen;
  for (std::size_t i = 0; i < length; ++i) {
    gen.emplace_back(2 * i, 2 * i + 1);
    gen.emplace_back(2 * i + 2, 2 * i + 1);
  }
  return poset::Poset::from_relation(2 * length + 1, gen);
}

ShapeMap identity_shape_map(std::size_t length) { return {simplicial::identity(length)}; }

ShapeMap compose(const ShapeMap& f, const ShapeMap& g) {
  return {simplicial::compose(f.singular, g.singular)};
}

MonotoneMap singular_projection(const ShapeMap& f) { return f.singular; }
std::size_t singular_projection(const ZigzagShape& z) { return z.length; }

bool universal_contains(const ZObject& a, const ZObject& b, const MonotoneMap& f) {
  if (f.source_size() != a.length || f.target_size() != b.length) return false;
  const std::size_t i = a.point.index;
  const std::size_t j = b.point.index;
  if (a.point.singular() && b.point.singular()) return f(i) == j;
  if (a.point.singular()) return false;
  const auto reg = simplicial::regularize(f);
  if (b.point.regular()) return reg(j) == i;
  return reg(j) <= i && i <= reg(j + 1);
}

std::vector<MonotoneMap> universal_hom(const ZObject& a, const ZObject& b) {
  if (!a.point.valid_for(a.length) || !b.point.valid_for(b.length)) {
    throw ValidationError("universal_hom: point index invalid for its zigzag length");
  }
  std::vector<MonotoneMap> out;
  for (auto& f : simplicial::enumerate_monotone(a.length, b.length)) {
    if (universal_contains(a, b, f)) out.push_back(std::move(f));
  }
  return out;
}

std::string SliceCondition::to_string() const {
  const std::string i = std::to_string(target);
  switch (type) {
    case Type::EmptyTriangle:
      return "empty-preimage triangle at sing " + i;
    case Type::LowerSquare:
      return "lower square at sing " + i + " (p = " + std::to_string(lower) + ")";
    case Type::MiddleSpan:
      return "middle span at sing " + i + " (j = " + std::to_string(middle) + ")";
    case Type::UpperSquare:
      return "upper square at sing " + i + " (q = " + std::to_string(upper) + ")";
  }
  return {};
}

std::vector<SliceCondition> slice_conditions(const MonotoneMap& f_s) {
  using Type = SliceCondition::Type;
  std::vector<SliceCondition> out;
  for (std::size_t i = 0; i < f_s.target_size(); ++i) {
    std::size_t p = 0, q = 0;
    if (!f_s.preimage_bounds(i, p, q)) {
      out.push_back({Type::EmptyTriangle, i});
      continue;
    }
    out.push_back({Type::LowerSquare, i, p, q});
    for (std::size_t j = p; j < q; ++j) out.push_back({Type::MiddleSpan, i, p, q, j});
    out.push_back({Type::UpperSquare, i, p, q});
  }
  return out;
}

std::vector<SliceCondition> check_slice_conditions(
    const MonotoneMap& f_s, const std::function<bool(const SliceCondition&)>& holds) {
  std::vector<SliceCondition> failed;
  for (const auto& c : slice_conditions(f_s)) {
    if (!holds(c)) failed.push_back(c);
  }
  return failed;
}

}  // namespace zzl::zigzag

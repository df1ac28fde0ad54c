#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "zzl/poset.hpp"
#include "zzl/simplicial.hpp"

namespace zzl::zigzag {

enum class Kind { Regular, Singular };

/// `reg j` or `sing i` in a zigzag.
struct PointIndex {
  Kind kind = Kind::Regular;
  std::size_t index = 0;

  static constexpr PointIndex reg(std::size_t j) { return {Kind::Regular, j}; }
  static constexpr PointIndex sing(std::size_t i) { return {Kind::Singular, i}; }

  bool regular() const noexcept { return kind == Kind::Regular; }
  bool singular() const noexcept { return kind == Kind::Singular; }

  /// Position along the fence reg 0 < sing 0 < reg 1 < ...: 2j or 2i + 1.
  std::size_t fence_position() const noexcept {
    return regular() ? 2 * index : 2 * index + 1;
  }
  static PointIndex from_fence_position(std::size_t k) {
    return k % 2 == 0 ? reg(k / 2) : sing(k / 2);
  }

  bool valid_for(std::size_t length) const noexcept {
    return regular() ? index <= length : index < length;
  }

  /// "r<j>" or "s<i>".
  std::string to_string() const;
  /// Inverse of to_string; throws ParseError.
  static PointIndex parse(std::string_view text);

  friend bool operator==(const PointIndex&, const PointIndex&) = default;
  friend std::strong_ordering operator<=>(const PointIndex& a, const PointIndex& b) {
    return a.fence_position() <=> b.fence_position();
  }
};

/// The shape of a zigzag: its number of singular objects.
struct ZigzagShape {
  std::size_t length = 0;
  std::size_t point_count() const noexcept { return 2 * length + 1; }
  friend bool operator==(const ZigzagShape&, const ZigzagShape&) = default;
};

/// Object (n, p) of the universal zigzag category.
struct ZObject {
  std::size_t length = 0;
  PointIndex point;
};

/// All 2n+1 points of a length-n zigzag in fence order.
std::vector<PointIndex> points(std::size_t length);

/// The fence poset on the points of a length-n zigzag, elements in fence
/// order, generated by reg j <= sing j and reg j+1 <= sing j.
poset::Poset zigzag_point_poset(std::size_t length);

/// Shape-level zigzag map data: source and target shapes with a singular map.
struct ShapeMap {
  simplicial::MonotoneMap singular;

  ZigzagShape source() const { return {singular.source_size()}; }
  ZigzagShape target() const { return {singular.target_size()}; }
};

ShapeMap identity_shape_map(std::size_t length);
ShapeMap compose(const ShapeMap& f, const ShapeMap& g);

/// The singular projection: a zigzag map to its singular map, a zigzag to its
/// length.
simplicial::MonotoneMap singular_projection(const ShapeMap& f);
std::size_t singular_projection(const ZigzagShape& z);

/// True when f belongs to Z(a, b) for the universal zigzag category.
bool universal_contains(const ZObject& a, const ZObject& b, const simplicial::MonotoneMap& f);

/// Z(a, b): the monotone maps ord(a.length) -> ord(b.length) in the hom-set.
/// Throws ValidationError for points invalid for their lengths.
std::vector<simplicial::MonotoneMap> universal_hom(const ZObject& a, const ZObject& b);

/// One commuting condition a zigzag map must satisfy, by index data only.
struct SliceCondition {
  enum class Type {
    EmptyTriangle,  // f_s^{-1}(i) empty: Y(reg i) -> Y(sing i) <- Y(reg i+1)
    LowerSquare,    // Y(reg i) -> Y(sing i) over X(reg p) -> X(sing p)
    MiddleSpan,     // X(sing j) <- X(reg j+1) -> X(sing j+1) into Y(sing i)
    UpperSquare,    // Y(sing i) <- Y(reg i+1) over X(sing q) <- X(reg q+1)
  };
  Type type;
  std::size_t target;     // i
  std::size_t lower = 0;  // p
  std::size_t upper = 0;  // q
  std::size_t middle = 0; // j, for MiddleSpan

  std::string to_string() const;
  friend bool operator==(const SliceCondition&, const SliceCondition&) = default;
};

/// Every condition required of a zigzag map with singular map `f_s`.
std::vector<SliceCondition> slice_conditions(const simplicial::MonotoneMap& f_s);

/// Evaluates every condition with `holds`; returns the failing ones.
std::vector<SliceCondition> check_slice_conditions(
    const simplicial::MonotoneMap& f_s,
    const std::function<bool(const SliceCondition&)>& holds);

}  // namespace zzl::zigzag

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zzl::simplicial {

/// A monotone function ord(n) -> ord(m), stored as its dense value table.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  /// Throws ArgumentError unless `values` is weakly increasing and bounded by
  /// `target_size`.
  MonotoneMap(std::size_t source_size, std::size_t target_size,
              std::vector<std::size_t> values);

  std::size_t source_size() const noexcept { return values_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t operator()(std::size_t i) const { return values_.at(i); }

  /// True when the first and last elements are preserved (a morphism of Δ₌).
  bool preserves_endpoints() const noexcept;

  /// Smallest and largest preimage of `i`, if any.
  bool preimage_bounds(std::size_t i, std::size_t& lo, std::size_t& hi) const;

  std::string to_string() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  std::size_t target_size_ = 0;
  std::vector<std::size_t> values_;
};

/// A morphism of Δ₌: a monotone map with source and target nonempty that
/// sends 0 to 0 and the last element to the last element.
class DeltaEqMap {
 public:
  /// Throws ArgumentError if `map` is not in Δ₌.
  explicit DeltaEqMap(MonotoneMap map);

  const MonotoneMap& map() const noexcept { return map_; }
  std::size_t source_size() const noexcept { return map_.source_size(); }
  std::size_t target_size() const noexcept { return map_.target_size(); }
  std::size_t operator()(std::size_t i) const { return map_(i); }

  friend bool operator==(const DeltaEqMap&, const DeltaEqMap&) = default;

 private:
  MonotoneMap map_;
};

MonotoneMap identity(std::size_t n);

/// g ∘ f. Throws CompositionError unless f.target_size() == g.source_size().
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// The Reg equivalence Δ -> Δ₌^op:
/// (Reg f)(i) = min({ j | f(j) >= i } ∪ { n }) for f : ord(n) -> ord(m).
DeltaEqMap regularize(const MonotoneMap& f);

/// Every monotone map ord(n) -> ord(m) in lexicographic order of values.
/// Guarded to n*m <= 64 (and n <= 64 when m == 0) to keep results small.
std::vector<MonotoneMap> enumerate_monotone(std::size_t n, std::size_t m);

/// binomial(n + m - 1, n), with the convention that it is 1 for n == 0.
std::size_t count_monotone(std::size_t n, std::size_t m);

}  // namespace zzl::simplicial

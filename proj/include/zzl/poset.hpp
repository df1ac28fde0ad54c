#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zzl/error.hpp"

namespace zzl::poset {

using Relation = std::vector<std::pair<std::size_t, std::size_t>>;

/// A finite partial order on {0, ..., size-1}, stored as its reflexive and
/// transitive closure matrix.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of `generators`. Throws ArgumentError if
  /// the closure is not antisymmetric.
  static Poset from_relation(std::size_t size, const Relation& generators);
  /// Takes an already closed matrix as is; call `check()` to verify it.
  static Poset from_matrix(std::size_t size, std::vector<std::uint8_t> leq);

  static Poset discrete(std::size_t size);
  static Poset chain(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return leq(a, b) || leq(b, a);
  }

  /// Covering pairs (a, b): a < b with nothing strictly between. Sorted.
  Relation covers() const;
  /// Strict pairs (a, b) with a < b, sorted.
  Relation strict_pairs() const;

  std::vector<std::size_t> minimal_elements() const;
  /// { j | j < i }, sorted.
  std::vector<std::size_t> strictly_below(std::size_t i) const;
  /// Stable topological sort: among available elements the smallest index
  /// comes first.
  std::vector<std::size_t> linear_extension() const;

  /// Empty string when reflexive, transitive and antisymmetric; otherwise a
  /// description of the first violation.
  std::string check() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// A monotone function between finite posets.
class MonotoneFn {
 public:
  MonotoneFn() = default;
  /// Throws ArgumentError unless the mapping is in range and monotone.
  MonotoneFn(Poset source, Poset target, std::vector<std::size_t> mapping);

  static MonotoneFn identity(const Poset& p);

  const Poset& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  std::span<const std::size_t> mapping() const noexcept { return mapping_; }
  std::size_t operator()(std::size_t x) const { return mapping_.at(x); }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const MonotoneFn&, const MonotoneFn&) = default;

 private:
  Poset source_;
  Poset target_;
  std::vector<std::size_t> mapping_;
};

/// g ∘ f.
MonotoneFn compose(const MonotoneFn& f, const MonotoneFn& g);

/// A functor J -> Pos over a finite poset J, given by its objects and its
/// arrows on covering pairs of J.
class PosetFunctor {
 public:
  using Arrows = std::map<std::pair<std::size_t, std::size_t>, MonotoneFn>;

  PosetFunctor() = default;
  /// Checks arrow boundaries and path-independence; throws StructuralError.
  PosetFunctor(Poset index, std::vector<Poset> objects, Arrows arrows);

  const Poset& index() const noexcept { return index_; }
  const Poset& object(std::size_t i) const { return objects_.at(i); }
  const std::vector<Poset>& objects() const noexcept { return objects_; }
  const Arrows& arrows() const noexcept { return arrows_; }
  const MonotoneFn& arrow(std::size_t i, std::size_t j) const;

  /// The composite P(i <= j), for any comparable pair.
  const std::vector<std::size_t>& composite(std::size_t i, std::size_t j) const;

 private:
  Poset index_;
  std::vector<Poset> objects_;
  Arrows arrows_;
  // composites_[i * |J| + j] is P(i <= j) when i <= j.
  std::vector<std::vector<std::size_t>> composites_;
};

// ---------------------------------------------------------------------------
// Colimits

struct Reflection {
  Poset poset;
  /// Surjective monotone quotient from the input elements.
  std::vector<std::size_t> quotient;
  bool collapsed = false;
};

/// Poset reflection of a reflexive relation: transitive closure followed by
/// collapsing strongly connected components. Classes are numbered in order of
/// their smallest member.
Reflection poset_reflection(std::size_t size, const Relation& relation);

struct Element {
  std::size_t index;    // object of the shape
  std::size_t element;  // element of that object
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct Colimit {
  Poset poset;
  /// Shape indices the colimit was taken over, sorted.
  std::vector<std::size_t> shape;
  /// Cocone legs: legs[k][x] is the image of element x of object shape[k].
  std::vector<std::vector<std::size_t>> legs;
  /// Minimum (index, element) member of each class.
  std::vector<Element> representatives;
  /// Shape indices whose cocone leg is not injective.
  std::vector<std::size_t> non_injective;

  bool injective() const noexcept { return non_injective.empty(); }
  const std::vector<std::size_t>& leg(std::size_t index) const;
};

/// Colimit of `functor` restricted to `shape`, which must be downward closed.
Colimit colimit(const PosetFunctor& functor, std::vector<std::size_t> shape);

/// Mediating map out of a colimit induced by a competing cocone into
/// `target`; std::nullopt when `legs` is not a cocone or the induced map is
/// not monotone.
std::optional<MonotoneFn> mediate(const Colimit& colim, const Poset& target,
                                  const std::vector<std::vector<std::size_t>>& legs);

// ---------------------------------------------------------------------------
// Mono-epi factorization

struct Factorization {
  /// Elements 0..|C|-1 are the domain copy, |C|..|C|+|X|-1 the codomain copy.
  Poset middle;
  MonotoneFn left;   // injective, C -> F
  MonotoneFn right;  // surjective, F -> X
};

/// Factors p : C -> X through the disjoint union C ⊔ X, ordered by the orders
/// of C and X plus the strict cross relations c < x when p(c) < x and
/// x < c when x < p(c).
Factorization factorize_mono_epi(const MonotoneFn& p);

// ---------------------------------------------------------------------------
// Injectification

struct Injectification {
  PosetFunctor hat;
  /// epsilon[i] : hat(i) -> P(i), surjective.
  std::vector<MonotoneFn> epsilon;
  /// origin[i][e] = (j, x): element e of hat(i) is the copy of x ∈ P(j).
  std::vector<std::vector<Element>> origin;
  /// Linear extension of J used for the construction.
  std::vector<std::size_t> order;

  /// Position of the element labelled `label` in hat(i), if present.
  std::optional<std::size_t> find(std::size_t i, Element label) const;
};

/// Raised when a colimit of the partial injectification is not preserved by
/// the inclusion of injective maps.
class InjectificationError : public Error {
 public:
  InjectificationError(std::size_t index, std::vector<std::size_t> offending);
  std::size_t index() const noexcept { return index_; }
  const std::vector<std::size_t>& offending() const noexcept { return offending_; }

 private:
  std::size_t index_;
  std::vector<std::size_t> offending_;
};

Injectification injectify(const PosetFunctor& p);

class LiftError : public Error {
 public:
  LiftError(std::size_t index, const std::string& reason);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Lifts a natural transformation alpha : P => Q to hat(P) => hat(Q) with
/// eps_Q ∘ lifted = alpha ∘ eps_P. Both injectifications must share the
/// linear extension. Throws LiftError if the factorization is not functorial
/// on the squares involved.
std::vector<MonotoneFn> lift(const PosetFunctor& p, const Injectification& hat_p,
                             const PosetFunctor& q, const Injectification& hat_q,
                             const std::vector<MonotoneFn>& alpha);

/// Checks the four injectification invariants; empty string when all hold.
std::string check_injectification(const PosetFunctor& p, const Injectification& inj);

/// Debug JSON: the index order, then per index the elements of hat(i) with
/// origin tags and epsilon, the strict order pairs, and the hat arrows on
/// covers. Indented, newline terminated.
std::string to_debug_json(const PosetFunctor& p, const Injectification& inj);

}  // namespace zzl::poset

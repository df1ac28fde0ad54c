#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zzl/error.hpp"
#include "zzl/poset.hpp"
#include "zzl/simplicial.hpp"
#include "zzl/zigzag.hpp"

namespace zzl::diagram {

using zigzag::PointIndex;

struct Generator {
  std::string id;
  std::size_t dimension = 0;
  std::optional<std::string> color;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A thin direct category: generators with dimensions, and the non-identity
/// arrows between them.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<Generator> generators,
            std::vector<std::pair<std::string, std::string>> arrows);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<std::pair<std::string, std::string>>& arrows() const noexcept {
    return arrows_;
  }
  const Generator* find(const std::string& id) const;
  /// Identity arrows are implicit.
  bool has_arrow(const std::string& source, const std::string& target) const;

  /// Violations of the direct-category invariants; empty when valid.
  std::vector<std::string> check() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<std::pair<std::string, std::string>> arrows_;
  std::map<std::string, std::size_t> by_id_;
  std::set<std::pair<std::string, std::string>> arrow_set_;
};

class DiagramMap;

/// An n-diagram: a generator (n = 0) or a zigzag of (n-1)-diagrams. Immutable
/// and cheap to copy; equality is structural.
class Diagram {
 public:
  static Diagram point(std::string generator);
  /// No validation beyond the list sizes; see validate().
  static Diagram zigzag(std::vector<Diagram> regular, std::vector<Diagram> singular,
                        std::vector<DiagramMap> forward, std::vector<DiagramMap> backward);

  bool is_point() const noexcept;
  /// Generator id of a 0-diagram.
  const std::string& generator() const;
  /// Number of singular levels (0 for a 0-diagram).
  std::size_t length() const noexcept;
  std::size_t dimension() const noexcept;

  const Diagram& regular(std::size_t j) const;
  const Diagram& singular(std::size_t i) const;
  const DiagramMap& forward(std::size_t i) const;
  const DiagramMap& backward(std::size_t i) const;
  const Diagram& at(PointIndex p) const {
    return p.regular() ? regular(p.index) : singular(p.index);
  }

  const std::vector<Diagram>& regulars() const;
  const std::vector<Diagram>& singulars() const;
  const std::vector<DiagramMap>& forwards() const;
  const std::vector<DiagramMap>& backwards() const;

  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A morphism of n-diagrams: an arrow of the signature (n = 0) or a zigzag
/// map with singular map and singular/regular slices.
class DiagramMap {
 public:
  static DiagramMap point(std::string source, std::string target);
  static DiagramMap zigzag(simplicial::MonotoneMap singular_map,
                           std::vector<DiagramMap> singular_slices,
                           std::vector<DiagramMap> regular_slices);

  bool is_point() const noexcept;
  const std::string& source() const;
  const std::string& target() const;
  const simplicial::MonotoneMap& singular_map() const;
  /// Reg of the singular map.
  simplicial::MonotoneMap regular_map() const;
  const DiagramMap& singular_slice(std::size_t i) const;
  const DiagramMap& regular_slice(std::size_t j) const;
  const std::vector<DiagramMap>& singular_slices() const;
  const std::vector<DiagramMap>& regular_slices() const;
  std::size_t dimension() const noexcept;

  friend bool operator==(const DiagramMap& a, const DiagramMap& b);

 private:
  struct Node;
  explicit DiagramMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::size_t dimension(const Diagram& d);

DiagramMap identity_map(const Diagram& d);

/// g ∘ f (first f, then g). Throws CompositionError when the boundaries
/// visibly disagree.
DiagramMap compose(const DiagramMap& f, const DiagramMap& g);

/// True when f has the shape of a map source -> target (recursively).
bool map_fits(const DiagramMap& f, const Diagram& source, const Diagram& target);

using PointPath = std::vector<PointIndex>;

std::string to_string(const PointPath& p);

/// Subdiagram addressed by a path; throws ArgumentError for invalid paths.
const Diagram& subdiagram(const Diagram& d, const PointPath& path);

// ---------------------------------------------------------------------------

struct Issue {
  PointPath path;
  std::string message;

  std::string to_string() const;
};

/// Structural validity against a signature; empty iff valid.
std::vector<Issue> validate(const Diagram& d, const Signature& sig);
std::vector<Issue> validate_map(const DiagramMap& f, const Diagram& source, const Diagram& target,
                                const Signature& sig);

// ---------------------------------------------------------------------------

/// k-points in lexicographic fence order. Throws ArgumentError if k > dim.
std::vector<PointPath> points(const Diagram& d, std::size_t k);

/// A diagram unfolded over its poset of k-points.
struct ExplodedDiagram {
  std::size_t depth = 0;
  poset::Poset base;
  std::vector<PointPath> paths;
  std::vector<Diagram> assignment;
  /// Maps on the covering pairs of `base`.
  std::map<std::pair<std::size_t, std::size_t>, DiagramMap> arrows;
  /// Set once path-independence of the arrows has been verified.
  bool functorial = false;

  std::size_t size() const noexcept { return paths.size(); }
  std::optional<std::size_t> index_of(const PointPath& p) const;
};

/// The diagram itself over the one-point poset (k = 0).
ExplodedDiagram explode_base(const Diagram& d);
/// One further explosion of an exploded diagram whose values have dimension
/// at least 1. Throws StructuralError on non-functorial input.
ExplodedDiagram explode_once(const ExplodedDiagram& e);
/// k-fold explosion, 1 <= k <= dimension(d).
ExplodedDiagram explode(const Diagram& d, std::size_t k);

// ---------------------------------------------------------------------------

struct Document {
  Signature signature;
  Diagram diagram = Diagram::point("");
};

/// A well-formed document whose shape data is inconsistent (list lengths,
/// out-of-range or non-monotone singular maps).
class ShapeError : public ValidationError {
 public:
  ShapeError(std::string location, Issue issue)
      : ValidationError(issue.to_string()), location_(std::move(location)), issue_(std::move(issue)) {}
  /// JSON pointer into the document.
  const std::string& location() const noexcept { return location_; }
  const Issue& issue() const noexcept { return issue_; }

 private:
  std::string location_;
  Issue issue_;
};

/// Parses the JSON diagram file format. Throws ParseError for malformed
/// documents and ShapeError for inconsistent shapes.
Document parse(const std::string& text);
std::string serialize(const Document& doc, bool canonical = true);

struct Example {
  std::string name;
  std::string description;
  Document document;
};

const std::vector<Example>& builtin_examples();
const Example* find_example(const std::string& name);

}  // namespace zzl::diagram

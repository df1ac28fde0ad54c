#include "zzl/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "zzl/error.hpp"

namespace zzl::simplicial {

MonotoneMap::MonotoneMap(std::size_t source_size, std::size_t target_size,
                         std::vector<std::size_t> values)
    : target_size_(target_size), values_(std::move(values)) {
  if (values_.size() != source_size) {
    throw ArgumentError("monotone map: expected " + std::to_string(source_size) +
                        " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= target_size_) {
      throw ArgumentError("monotone map: value " + std::to_string(values_[i]) +
                          " out of range for target size " +
                          std::to_string(target_size_));
    }
    if (i > 0 && values_[i - 1] > values_[i]) {
      throw ArgumentError("monotone map: values are not weakly increasing");
    }
  }
}

bool MonotoneMap::preserves_endpoints() const noexcept {
  if (values_.empty() || target_size_ == 0) return false;
  return values_.front() == 0 && values_.back() == target_size_ - 1;
}

bool MonotoneMap::preimage_bounds(std::size_t i, std::size_t& lo,
                                  std::size_t& hi) const {
  auto first = std::lower_bound(values_.begin(), values_.end(), i);
  if (first == values_.end() || *first != i) return false;
  auto last = std::upper_bound(first, values_.end(), i);
  lo = static_cast<std::size_t>(first - values_.begin());
  hi = static_cast<std::size_t>(last - values_.begin()) - 1;
  return true;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << "]:" << values_.size() << "->" << target_size_;
  return os.str();
}

DeltaEqMap::DeltaEqMap(MonotoneMap map) : map_(std::move(map)) {
  if (!map_.preserves_endpoints()) {
    throw ArgumentError("map " + map_.to_string() +
                        " does not preserve first and last elements");
  }
}

MonotoneMap identity(std::size_t n) {
  std::vector<std::size_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = i;
  return MonotoneMap(n, n, std::move(values));
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target_size() != g.source_size()) {
    throw CompositionError("cannot compose " + f.to_string() + " with " +
                           g.to_string());
  }
  std::vector<std::size_t> values(f.source_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = g(f(i));
  return MonotoneMap(f.source_size(), g.target_size(), std::move(values));
}

DeltaEqMap regularize(const MonotoneMap& f) {
  const std::size_t n = f.source_size();
  const std::size_t m = f.target_size();
  std::vector<std::size_t> values(m + 1);
  // f is monotone, so the min over { j | f(j) >= i } is a lower_bound.
  const auto vals = f.values();
  for (std::size_t i = 0; i <= m; ++i) {
    auto it = std::lower_bound(vals.begin(), vals.end(), i);
    values[i] = static_cast<std::size_t>(it - vals.begin());
  }
  return DeltaEqMap(MonotoneMap(m + 1, n + 1, std::move(values)));
}

std::size_t count_monotone(std::size_t n, std::size_t m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  // binomial(n + m - 1, n) computed incrementally; exact at these sizes.
  std::size_t result = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    result = result * (m - 1 + k) / k;
  }
  return result;
}

std::vector<MonotoneMap> enumerate_monotone(std::size_t n, std::size_t m) {
  if (n * m > 64 || (m == 0 && n > 64)) {
    throw ArgumentError("enumerate_monotone: ord(" + std::to_string(n) +
                        ") -> ord(" + std::to_string(m) + ") is too large");
  }
  std::vector<MonotoneMap> out;
  if (n == 0) {
    out.emplace_back(0, m, std::vector<std::size_t>{});
    return out;
  }
  if (m == 0) return out;
  out.reserve(count_monotone(n, m));
  std::vector<std::size_t> values(n, 0);
  for (;;) {
    out.emplace_back(n, m, values);
    // Next weakly increasing sequence in lexicographic order.
    std::size_t k = n;
    while (k > 0 && values[k - 1] == m - 1) --k;
    if (k == 0) break;
    const std::size_t next = values[k - 1] + 1;
    for (std::size_t t = k - 1; t < n; ++t) values[t] = next;
  }
  return out;
}

}  // namespace zzl::simplicial

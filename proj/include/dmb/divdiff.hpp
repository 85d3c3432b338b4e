#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dmb/interval.hpp"

namespace dmb {

/// Pairwise distinct interpolation nodes, each an enclosure.
/// Construction rejects any pair whose difference may vanish.
class NodeList {
 public:
  explicit NodeList(std::vector<CInterval> nodes);

  std::size_t size() const { return nodes_.size(); }
  const CInterval& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<CInterval>& nodes() const { return nodes_; }
  Precision precision() const { return nodes_.empty() ? 53 : nodes_.front().precision(); }

 private:
  std::vector<CInterval> nodes_;
};

/// f[v_1..v_n] via (f[v_1..v_{n-1}] - f[v_2..v_n]) / (v_1 - v_n).
CInterval divdiff_recursive(std::span<const CInterval> values, const NodeList& nodes);

/// f[v_1..v_n] = sum_h f(v_h) prod_{k != h} 1 / (v_h - v_k).
CInterval divdiff_explicit(std::span<const CInterval> values, const NodeList& nodes);

/// Divided difference of z^p: the complete homogeneous polynomial
/// h_{p-n+1}(v_1..v_n) when n <= p + 1, exactly zero otherwise.
CInterval divdiff_monomial(long p, const NodeList& nodes);

/// Componentwise divided difference of F = (f_1..f_m); rows[h] = F(v_h).
/// Throws std::invalid_argument on ragged input.
std::vector<CInterval> divdiff_vector(const std::vector<std::vector<CInterval>>& rows, const NodeList& nodes);

}  // namespace dmb

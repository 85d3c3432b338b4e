#include "dmb/divdiff.hpp"

#include <stdexcept>
#include <string>

namespace dmb {

NodeList::NodeList(std::vector<CInterval> nodes) : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if ((nodes_[i] - nodes_[j]).contains_zero()) {
        throw std::invalid_argument("duplicate nodes " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

namespace {

void check_sizes(std::span<const CInterval> values, const NodeList& nodes) {
  if (values.size() != nodes.size() || values.empty()) {
    throw std::invalid_argument("divided difference needs one value per node and at least one node");
  }
}

}  // namespace

CInterval divdiff_recursive(std::span<const CInterval> values, const NodeList& nodes) {
  check_sizes(values, nodes);
  std::vector<CInterval> table(values.begin(), values.end());
  const std::size_t n = nodes.size();
  for (std::size_t width = 1; width < n; ++width) {
    for (std::size_t i = 0; i + width < n; ++i) {
      table[i] = (table[i] - table[i + 1]) / (nodes[i] - nodes[i + width]);
    }
  }
  return table[0];
}

CInterval divdiff_explicit(std::span<const CInterval> values, const NodeList& nodes) {
  check_sizes(values, nodes);
  const std::size_t n = nodes.size();
  CInterval sum = CInterval::from_long(0, nodes.precision());
  for (std::size_t h = 0; h < n; ++h) {
    CInterval den = CInterval::from_long(1, nodes.precision());
    for (std::size_t k = 0; k < n; ++k) {
      if (k != h) den = den * (nodes[h] - nodes[k]);
    }
    sum = sum + values[h] / den;
  }
  return sum;
}

CInterval divdiff_monomial(long p, const NodeList& nodes) {
  if (p < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  const long n = static_cast<long>(nodes.size());
  Precision prec = nodes.precision();
  if (n == 0) throw std::invalid_argument("divided difference needs at least one node");
  if (n >= p + 2) return CInterval::from_long(0, prec);
  const std::size_t order = static_cast<std::size_t>(p - n + 1);
  // h[k] = h_k(v_1..v_j), built node by node.
  std::vector<CInterval> h(order + 1, CInterval::from_long(0, prec));
  h[0] = CInterval::from_long(1, prec);
  for (const auto& v : nodes.nodes()) {
    for (std::size_t k = 1; k <= order; ++k) h[k] = h[k] + v * h[k - 1];
  }
  return h[order];
}

std::vector<CInterval> divdiff_vector(const std::vector<std::vector<CInterval>>& rows, const NodeList& nodes) {
  if (rows.size() != nodes.size() || rows.empty()) {
    throw std::invalid_argument("divided difference needs one vector per node");
  }
  const std::size_t m = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != m) throw std::invalid_argument("ragged vector input to divided difference");
  }
  std::vector<CInterval> out;
  out.reserve(m);
  std::vector<CInterval> column;
  for (std::size_t c = 0; c < m; ++c) {
    column.clear();
    for (const auto& row : rows) column.push_back(row[c]);
    out.push_back(divdiff_explicit(column, nodes));
  }
  return out;
}

}  // namespace dmb

#include "latmax/network.hpp"

#include <algorithm>
#include <string>

namespace latmax {

InfluenceNetwork::InfluenceNetwork(std::vector<std::int64_t> thresholds,
                                   std::vector<std::int64_t> costs, std::vector<Arc> arcs)
    : threshold_(std::move(thresholds)), cost_(std::move(costs)), arcs_(std::move(arcs)) {
  if (threshold_.size() != cost_.size()) {
    throw InvalidArgumentError("threshold and cost lists differ in length");
  }
  const int n = static_cast<int>(threshold_.size());
  for (int v = 0; v < n; ++v) {
    if (threshold_[v] < 0) throw InvalidArgumentError("negative threshold at node " + std::to_string(v));
    if (cost_[v] < 0) throw InvalidArgumentError("negative cost at node " + std::to_string(v));
  }
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
  out_.assign(n, {});
  in_sum_.assign(n, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n) {
      throw InvalidArgumentError("arc endpoint out of range");
    }
    if (a.src == a.dst) throw InvalidArgumentError("self-loop at node " + std::to_string(a.src));
    if (a.weight < 0) throw InvalidArgumentError("negative arc weight");
    if (i > 0 && arcs_[i - 1].src == a.src && arcs_[i - 1].dst == a.dst) {
      throw InvalidArgumentError("duplicate arc (" + std::to_string(a.src) + ", " +
                                 std::to_string(a.dst) + ")");
    }
    out_[a.src].push_back(a);
    in_sum_[a.dst] += a.weight;
  }
}

bool InfluenceNetwork::has_arc(NodeId u, NodeId v) const {
  const auto& row = out_.at(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Arc& a, NodeId dst) { return a.dst < dst; });
  return it != row.end() && it->dst == v;
}

std::int64_t InfluenceNetwork::arc_weight(NodeId u, NodeId v) const {
  const auto& row = out_.at(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Arc& a, NodeId dst) { return a.dst < dst; });
  return (it != row.end() && it->dst == v) ? it->weight : 0;
}

std::int64_t InfluenceNetwork::max_in_weight_sum() const {
  std::int64_t best = 0;
  for (std::int64_t w : in_sum_) best = std::max(best, w);
  return best;
}

std::int64_t InfluenceNetwork::total_cost() const {
  std::int64_t sum = 0;
  for (std::int64_t c : cost_) sum += c;
  return sum;
}

}  // namespace latmax

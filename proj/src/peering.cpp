#include "locarec/peering.hpp"

#include <algorithm>
#include <cmath>

#include "locarec/similarity.hpp"

namespace locarec {

void PeeringConfig::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be finite and >= 0");
  if (!std::isfinite(threshold)) throw Error(ErrorCode::InvalidArgument, "threshold must be finite");
  if (max_peers && *max_peers == 0) throw Error(ErrorCode::InvalidArgument, "max_peers must be positive");
}

bool peer_rank_less(const ScoredPeer& a, const ScoredPeer& b) noexcept {
  if (a.boosted_similarity != b.boosted_similarity) return a.boosted_similarity > b.boosted_similarity;
  return a.peer < b.peer;
}

std::vector<ScoredPeer> score_candidates(const Dataset& dataset, const UserId& active, const PeeringConfig& config) {
  config.validate();
  const UserIndex me = dataset.require_user(active);
  const Country& home = dataset.user(me).country;

  std::vector<ScoredPeer> out;
  out.reserve(dataset.user_count() - 1);
  for (UserIndex other = 0; other < dataset.user_count(); ++other) {
    if (other == me) continue;
    const auto sim = pearson(dataset, me, other);
    const bool same = dataset.user(other).country == home;
    out.push_back({dataset.user(other).id, sim.value, same ? sim.value + config.alpha : sim.value,
                   sim.co_rated_count, same});
  }
  return out;
}

PeerList select_peers(const UserId& active, std::span<const ScoredPeer> scored, const PeeringConfig& config) {
  config.validate();
  PeerList list{active, {}, config};
  for (const auto& p : scored)
    if (p.boosted_similarity >= config.threshold) list.peers.push_back(p);
  std::sort(list.peers.begin(), list.peers.end(), peer_rank_less);
  if (config.max_peers && list.peers.size() > *config.max_peers) list.peers.resize(*config.max_peers);
  return list;
}

PeerList find_peers(const Dataset& dataset, const UserId& active, const PeeringConfig& config) {
  const auto scored = score_candidates(dataset, active, config);
  return select_peers(active, scored, config);
}

}  // namespace locarec

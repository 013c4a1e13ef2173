#pragma once

#include <optional>
#include <span>
#include <vector>

#include "locarec/dataset.hpp"

namespace locarec {

struct PeeringConfig {
  /// Added to the raw similarity of candidates in the active user's country.
  double alpha = 0.0;
  /// Candidates with boosted similarity below this are dropped.
  double threshold = 0.5;
  /// nullopt means unbounded.
  std::optional<std::size_t> max_peers = 20;

  /// Throws InvalidArgument.
  void validate() const;
};

struct ScoredPeer {
  UserId peer;
  double raw_similarity = 0.0;
  double boosted_similarity = 0.0;
  std::size_t co_rated_count = 0;
  bool same_location = false;

  friend bool operator==(const ScoredPeer&, const ScoredPeer&) = default;
};

/// Final neighbors, descending boosted similarity then ascending id.
struct PeerList {
  UserId active_user;
  std::vector<ScoredPeer> peers;
  PeeringConfig config;
};

/// One ScoredPeer per other user, ascending id. Throws UnknownUser.
std::vector<ScoredPeer> score_candidates(const Dataset& dataset, const UserId& active, const PeeringConfig& config);

/// Threshold (kept when boosted >= threshold), order, truncate.
PeerList select_peers(const UserId& active, std::span<const ScoredPeer> scored, const PeeringConfig& config);

/// score_candidates followed by select_peers.
PeerList find_peers(const Dataset& dataset, const UserId& active, const PeeringConfig& config);

/// Ranking order used for peer lists.
bool peer_rank_less(const ScoredPeer& a, const ScoredPeer& b) noexcept;

}  // namespace locarec

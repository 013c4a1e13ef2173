#pragma once

#include <optional>

#include "locarec/dataset.hpp"
#include "locarec/peering.hpp"
#include "locarec/recommend.hpp"

namespace locarec::baseline {

// Plain user-based CF with no location handling. Similarities come from a
// sparse profile merge rather than the dense kernels. The result must match
// the boosted pipeline at alpha = 0 exactly, peer for peer.

PeerList find_peers(const Dataset& dataset, const UserId& active, double threshold,
                    std::optional<std::size_t> max_peers);

Recommendation recommend(const Dataset& dataset, const UserId& active, double threshold,
                         std::optional<std::size_t> max_peers, const RecommendConfig& config);

}  // namespace locarec::baseline

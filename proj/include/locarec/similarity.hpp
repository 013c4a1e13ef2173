#pragma once

#include <vector>

#include "locarec/dataset.hpp"
#include "locarec/kernels.hpp"

namespace locarec {

/// Items rated by both users, ascending. Throws UnknownUser; a == b is an
/// InvalidArgument.
std::vector<ItemId> co_rated(const Dataset& dataset, const UserId& a, const UserId& b);

/// Mean of `u`'s ratings over `over`. Every item must be rated by `u`.
/// Throws EmptyItemSet, UnknownUser, InvalidArgument.
double mean_rating(const Dataset& dataset, const UserId& u, const std::vector<ItemId>& over);

/// Pearson correlation over co-rated items with means taken over that set.
/// Fewer than two co-rated items, or zero variance on either side, yields
/// value 0. The result is clamped to [-1, 1].
Similarity pearson(const Dataset& dataset, const UserId& a, const UserId& b);

/// Index-based variant used by the peer scan.
Similarity pearson(const Dataset& dataset, UserIndex a, UserIndex b);

/// Closed form from exact integer moments:
///   (n*Sab - Sa*Sb) / (sqrt(n*Saa - Sa^2) * sqrt(n*Sbb - Sb^2))
Similarity similarity_from_sums(const kernels::PearsonSums& sums) noexcept;

}  // namespace locarec

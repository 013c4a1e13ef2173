#pragma once

#include <optional>
#include <span>
#include <vector>

#include "locarec/dataset.hpp"
#include "locarec/peering.hpp"
#include "locarec/recommend.hpp"

namespace locarec {

struct UserEval {
  UserId user;
  std::size_t peer_count = 0;
  std::size_t same_location_peers = 0;
  std::size_t recommended_count = 0;
  std::size_t same_location_items = 0;

  friend bool operator==(const UserEval&, const UserEval&) = default;
};

struct EvalReport {
  double alpha = 0.0;
  double threshold = 0.5;
  std::optional<std::size_t> max_peers;
  std::size_t top_n = 10;
  int min_peer_rating = 4;

  /// Macro averages; 0 when no user contributes.
  double peers_locality_rate = 0.0;
  double item_locality_rate = 0.0;
  std::size_t users_evaluated = 0;
  std::size_t users_skipped_empty_peers = 0;
  std::vector<UserEval> per_user;  // ascending user id

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

enum class Pipeline {
  Boosted,
  /// baseline:: path; the peering alpha is ignored and reported as 0.
  BoostFree,
};

struct EvalOptions {
  /// Worker threads for per-user evaluation; 0 means hardware concurrency.
  unsigned jobs = 1;
  Pipeline pipeline = Pipeline::Boosted;
};

/// Full pipeline for every user as the active user, aggregated. Output does
/// not depend on options.jobs.
EvalReport evaluate(const Dataset& dataset, const PeeringConfig& peering, const RecommendConfig& rec,
                    const EvalOptions& options = {});

/// Rebuilds the aggregate fields of `report` from its per_user rows.
void aggregate(EvalReport& report);

/// One report per alpha, in the given order. Throws InvalidArgument on an
/// empty list.
std::vector<EvalReport> sweep(const Dataset& dataset, std::span<const double> alphas, const PeeringConfig& peering,
                              const RecommendConfig& rec, const EvalOptions& options = {});

struct LocalityDelta {
  double peers_delta_pp = 0.0;
  double items_delta_pp = 0.0;
};

/// Percentage-point change variant - baseline. Throws ConfigMismatch when
/// the reports differ in anything other than alpha.
LocalityDelta report_delta(const EvalReport& baseline, const EvalReport& variant);

}  // namespace locarec

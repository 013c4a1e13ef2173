#include "locarec/eval.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "locarec/baseline.hpp"

namespace locarec {

namespace {

UserEval evaluate_user(const Dataset& dataset, UserIndex u, const PeeringConfig& peering, const RecommendConfig& rec,
                       Pipeline pipeline) {
  const UserProfile& active = dataset.user(u);
  const PeerList peers = pipeline == Pipeline::Boosted
                             ? find_peers(dataset, active.id, peering)
                             : baseline::find_peers(dataset, active.id, peering.threshold, peering.max_peers);
  const Recommendation recs = recommend(dataset, peers, rec);

  UserEval row{active.id, peers.peers.size(), 0, recs.items.size(), 0};
  for (const auto& p : peers.peers)
    if (p.same_location) ++row.same_location_peers;
  for (const auto& item : recs.items)
    if (item.item_country == active.country) ++row.same_location_items;
  return row;
}

}  // namespace

void aggregate(EvalReport& report) {
  double peer_sum = 0.0;
  double item_sum = 0.0;
  std::size_t with_recs = 0;
  report.users_evaluated = 0;
  report.users_skipped_empty_peers = 0;
  for (const auto& row : report.per_user) {
    if (row.peer_count == 0) {
      ++report.users_skipped_empty_peers;
      continue;
    }
    ++report.users_evaluated;
    peer_sum += static_cast<double>(row.same_location_peers) / static_cast<double>(row.peer_count);
    if (row.recommended_count > 0) {
      ++with_recs;
      item_sum += static_cast<double>(row.same_location_items) / static_cast<double>(row.recommended_count);
    }
  }
  report.peers_locality_rate = report.users_evaluated ? peer_sum / static_cast<double>(report.users_evaluated) : 0.0;
  report.item_locality_rate = with_recs ? item_sum / static_cast<double>(with_recs) : 0.0;
}

EvalReport evaluate(const Dataset& dataset, const PeeringConfig& peering, const RecommendConfig& rec,
                    const EvalOptions& options) {
  peering.validate();
  rec.validate();

  EvalReport report;
  report.alpha = options.pipeline == Pipeline::Boosted ? peering.alpha : 0.0;
  report.threshold = peering.threshold;
  report.max_peers = peering.max_peers;
  report.top_n = rec.top_n;
  report.min_peer_rating = rec.min_peer_rating;
  report.per_user.resize(dataset.user_count());

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, dataset.user_count()));

  std::atomic<UserIndex> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (UserIndex u = next++; u < dataset.user_count(); u = next++)
        report.per_user[u] = evaluate_user(dataset, u, peering, rec, options.pipeline);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = static_cast<UserIndex>(dataset.user_count());
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  aggregate(report);
  return report;
}

std::vector<EvalReport> sweep(const Dataset& dataset, std::span<const double> alphas, const PeeringConfig& peering,
                              const RecommendConfig& rec, const EvalOptions& options) {
  if (alphas.empty()) throw Error(ErrorCode::InvalidArgument, "alpha list is empty");
  std::vector<EvalReport> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    PeeringConfig config = peering;
    config.alpha = alpha;
    out.push_back(evaluate(dataset, config, rec, options));
  }
  return out;
}

LocalityDelta report_delta(const EvalReport& baseline, const EvalReport& variant) {
  const bool same_config = baseline.threshold == variant.threshold && baseline.max_peers == variant.max_peers &&
                           baseline.top_n == variant.top_n && baseline.min_peer_rating == variant.min_peer_rating;
  bool same_users = baseline.per_user.size() == variant.per_user.size();
  for (std::size_t k = 0; same_users && k < baseline.per_user.size(); ++k)
    same_users = baseline.per_user[k].user == variant.per_user[k].user;
  if (!same_config || !same_users)
    throw Error(ErrorCode::ConfigMismatch, "reports differ in configuration or user population");
  return {(variant.peers_locality_rate - baseline.peers_locality_rate) * 100.0,
          (variant.item_locality_rate - baseline.item_locality_rate) * 100.0};
}

}  // namespace locarec

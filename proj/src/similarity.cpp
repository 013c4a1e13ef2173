#include "locarec/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace locarec {

namespace {

void require_distinct(UserIndex a, UserIndex b) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "similarity of a user with itself is undefined");
}

}  // namespace

std::vector<ItemId> co_rated(const Dataset& dataset, const UserId& a, const UserId& b) {
  const UserIndex ua = dataset.require_user(a);
  const UserIndex ub = dataset.require_user(b);
  require_distinct(ua, ub);

  const auto& ra = dataset.user(ua).ratings;
  const auto& rb = dataset.user(ub).ratings;
  std::vector<ItemId> out;
  auto ia = ra.begin();
  auto ib = rb.begin();
  while (ia != ra.end() && ib != rb.end()) {
    if (ia->item < ib->item) {
      ++ia;
    } else if (ib->item < ia->item) {
      ++ib;
    } else {
      out.push_back(dataset.item(ia->item).id);
      ++ia;
      ++ib;
    }
  }
  return out;
}

double mean_rating(const Dataset& dataset, const UserId& u, const std::vector<ItemId>& over) {
  const UserIndex ui = dataset.require_user(u);
  if (over.empty()) throw Error(ErrorCode::EmptyItemSet, "mean over an empty item set");
  std::int64_t sum = 0;
  for (const auto& id : over) {
    const auto item = dataset.find_item(id);
    const int r = item ? dataset.rating(ui, *item) : 0;
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "user '" + u.str() + "' has not rated '" + id.str() + "'");
    sum += r;
  }
  return static_cast<double>(sum) / static_cast<double>(over.size());
}

Similarity similarity_from_sums(const kernels::PearsonSums& s) noexcept {
  Similarity out{0.0, static_cast<std::size_t>(s.n)};
  if (s.n < 2) return out;
  const std::int64_t numerator = s.n * s.sum_ab - s.sum_a * s.sum_b;
  const std::int64_t var_a = s.n * s.sum_aa - s.sum_a * s.sum_a;
  const std::int64_t var_b = s.n * s.sum_bb - s.sum_b * s.sum_b;
  if (var_a == 0 || var_b == 0) return out;
  const double value = static_cast<double>(numerator) /
                       (std::sqrt(static_cast<double>(var_a)) * std::sqrt(static_cast<double>(var_b)));
  out.value = std::clamp(value, -1.0, 1.0);
  return out;
}

Similarity pearson(const Dataset& dataset, UserIndex a, UserIndex b) {
  require_distinct(a, b);
  if (a >= dataset.user_count() || b >= dataset.user_count())
    throw Error(ErrorCode::UnknownUser, "user index out of range");
  return similarity_from_sums(kernels::pearson_sums(dataset.row(a), dataset.row(b)));
}

Similarity pearson(const Dataset& dataset, const UserId& a, const UserId& b) {
  return pearson(dataset, dataset.require_user(a), dataset.require_user(b));
}

}  // namespace locarec

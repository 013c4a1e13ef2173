#include "locarec/dataset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace locarec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::ConflictingUserCountry: return "ConflictingUserCountry";
    case ErrorCode::ConflictingItemCountry: return "ConflictingItemCountry";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::UnknownUser: return "UnknownUser";
    case ErrorCode::EmptyItemSet: return "EmptyItemSet";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
  }
  return "Unknown";
}

namespace {

template <typename Key>
void check_single_country(std::map<Key, const Country*>& seen, const Key& key, const Country& country,
                          ErrorCode code) {
  auto [it, inserted] = seen.emplace(key, &country);
  if (!inserted && *it->second != country) {
    throw Error(code, "'" + key.str() + "' appears with countries '" + it->second->str() + "' and '" +
                          country.str() + "'");
  }
}

}  // namespace

Dataset Dataset::build(std::span<const RatingRecord> records) {
  if (records.empty()) throw Error(ErrorCode::EmptyDataset, "dataset has no records");

  std::map<UserId, const Country*> user_country;
  std::map<ItemId, const Country*> item_country;
  std::map<ItemId, const std::string*> item_description;
  for (const auto& r : records) {
    if (r.user.empty() || r.item.empty() || r.user_country.empty() || r.item_country.empty())
      throw Error(ErrorCode::InvalidArgument, "record with empty identifier");
    check_single_country(user_country, r.user, r.user_country, ErrorCode::ConflictingUserCountry);
    check_single_country(item_country, r.item, r.item_country, ErrorCode::ConflictingItemCountry);
    item_description[r.item] = &r.item_description;
  }

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = records[a];
    const auto& rb = records[b];
    if (ra.user != rb.user) return ra.user < rb.user;
    return ra.item < rb.item;
  });

  Dataset ds;
  ds.records_.reserve(records.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const bool last_of_pair = k + 1 == order.size() || records[order[k]].user != records[order[k + 1]].user ||
                              records[order[k]].item != records[order[k + 1]].item;
    if (last_of_pair) ds.records_.push_back(records[order[k]]);
  }
  ds.duplicates_replaced_ = records.size() - ds.records_.size();

  ds.items_.reserve(item_country.size());
  for (const auto& [id, country] : item_country) ds.items_.push_back({id, *country, *item_description.at(id)});

  ds.users_.reserve(user_country.size());
  for (const auto& [id, country] : user_country) ds.users_.push_back({id, *country, {}});

  ds.stride_ = (ds.items_.size() + kRowAlignment - 1) / kRowAlignment * kRowAlignment;
  ds.dense_.assign(ds.users_.size() * ds.stride_, 0);

  UserIndex u = 0;
  for (const auto& r : ds.records_) {
    while (ds.users_[u].id != r.user) ++u;
    const ItemIndex i = *ds.find_item(r.item);
    ds.users_[u].ratings.push_back({i, static_cast<std::uint8_t>(r.rating.value())});
    ds.dense_[u * ds.stride_ + i] = static_cast<std::uint8_t>(r.rating.value());
  }
  return ds;
}

std::optional<UserIndex> Dataset::find_user(const UserId& id) const {
  auto it = std::lower_bound(users_.begin(), users_.end(), id,
                             [](const UserProfile& p, const UserId& key) { return p.id < key; });
  if (it == users_.end() || it->id != id) return std::nullopt;
  return static_cast<UserIndex>(it - users_.begin());
}

std::optional<ItemIndex> Dataset::find_item(const ItemId& id) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), id,
                             [](const ItemInfo& info, const ItemId& key) { return info.id < key; });
  if (it == items_.end() || it->id != id) return std::nullopt;
  return static_cast<ItemIndex>(it - items_.begin());
}

UserIndex Dataset::require_user(const UserId& id) const {
  if (auto u = find_user(id)) return *u;
  throw Error(ErrorCode::UnknownUser, "unknown user '" + id.str() + "'");
}

std::vector<Country> Dataset::countries() const {
  std::vector<Country> out;
  for (const auto& u : users_) out.push_back(u.country);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace locarec

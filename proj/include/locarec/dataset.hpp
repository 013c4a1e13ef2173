#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "locarec/types.hpp"

namespace locarec {

using UserIndex = std::uint32_t;
using ItemIndex = std::uint32_t;

/// One rated item inside a user profile.
struct ProfileEntry {
  ItemIndex item;
  std::uint8_t rating;
};

struct UserProfile {
  UserId id;
  Country country;
  std::vector<ProfileEntry> ratings;  // ascending by item index
};

struct ItemInfo {
  ItemId id;
  Country country;
  std::string description;
};

/// Immutable in-memory rating store.
///
/// Users and items are kept sorted by id, so UserIndex/ItemIndex order is the
/// id order. Besides the sparse per-user profiles the dataset holds a dense
/// users x items byte matrix (0 = unrated) whose rows are padded to a
/// multiple of kRowAlignment; the similarity kernels run over those rows.
class Dataset {
 public:
  static constexpr std::size_t kRowAlignment = 32;

  /// Duplicate (user, item) pairs keep the last occurrence.
  /// Throws EmptyDataset, ConflictingUserCountry, ConflictingItemCountry.
  static Dataset build(std::span<const RatingRecord> records);

  std::size_t user_count() const noexcept { return users_.size(); }
  std::size_t item_count() const noexcept { return items_.size(); }
  std::size_t record_count() const noexcept { return records_.size(); }

  /// Number of input records superseded by a later record for the same pair.
  std::size_t duplicates_replaced() const noexcept { return duplicates_replaced_; }

  /// Deduplicated records ordered by (user, item).
  const std::vector<RatingRecord>& records() const noexcept { return records_; }

  const std::vector<UserProfile>& users() const noexcept { return users_; }
  const std::vector<ItemInfo>& items() const noexcept { return items_; }
  const UserProfile& user(UserIndex u) const { return users_.at(u); }
  const ItemInfo& item(ItemIndex i) const { return items_.at(i); }

  std::optional<UserIndex> find_user(const UserId& id) const;
  std::optional<ItemIndex> find_item(const ItemId& id) const;
  /// Throws UnknownUser.
  UserIndex require_user(const UserId& id) const;

  /// Rating of `item` by `user`, 0 if unrated.
  std::uint8_t rating(UserIndex user, ItemIndex item) const noexcept { return dense_[user * stride_ + item]; }

  /// Dense rating row, length item_count() (padding excluded).
  std::span<const std::uint8_t> row(UserIndex user) const noexcept {
    return {dense_.data() + user * stride_, items_.size()};
  }

  /// Distinct user countries in ascending order.
  std::vector<Country> countries() const;

 private:
  Dataset() = default;

  std::vector<RatingRecord> records_;
  std::vector<UserProfile> users_;
  std::vector<ItemInfo> items_;
  std::vector<std::uint8_t> dense_;
  std::size_t stride_ = 0;
  std::size_t duplicates_replaced_ = 0;
};

}  // namespace locarec

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace locarec {

enum class ErrorCode {
  InvalidArgument,
  EmptyDataset,
  ConflictingUserCountry,
  ConflictingItemCountry,
  MissingHeader,
  UnknownUser,
  EmptyItemSet,
  InfeasibleSpec,
  IoFailure,
  ConfigMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

// Non-empty string identifier; Tag keeps user ids, item ids and countries
// from being mixed up.
template <typename Tag>
class Label {
 public:
  Label() = default;
  explicit Label(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error(ErrorCode::InvalidArgument, std::string(Tag::kind) + " must be non-empty");
  }

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) { return a.value_.compare(b.value_) <=> 0; }

 private:
  std::string value_;
};

struct UserTag {
  static constexpr const char* kind = "user id";
};
struct ItemTag {
  static constexpr const char* kind = "item id";
};
struct CountryTag {
  static constexpr const char* kind = "country";
};

}  // namespace detail

using UserId = detail::Label<detail::UserTag>;
using ItemId = detail::Label<detail::ItemTag>;
using Country = detail::Label<detail::CountryTag>;

/// Integer rating on the 1..5 scale.
class Rating {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;

  constexpr Rating() = default;
  explicit Rating(int value) : value_(value) {
    if (value < kMin || value > kMax)
      throw Error(ErrorCode::InvalidArgument, "rating " + std::to_string(value) + " outside [1, 5]");
  }

  constexpr int value() const noexcept { return value_; }
  friend constexpr auto operator<=>(const Rating&, const Rating&) = default;

 private:
  int value_ = kMin;
};

struct RatingRecord {
  UserId user;
  ItemId item;
  Rating rating;
  Country user_country;
  std::string item_description;
  Country item_country;

  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

/// Pearson correlation between two users plus the size of the co-rated set
/// it was computed over. A value of 0 with co_rated_count < 2 means "no
/// evidence".
struct Similarity {
  double value = 0.0;
  std::size_t co_rated_count = 0;

  friend bool operator==(const Similarity&, const Similarity&) = default;
};

}  // namespace locarec

template <typename Tag>
struct std::hash<locarec::detail::Label<Tag>> {
  std::size_t operator()(const locarec::detail::Label<Tag>& l) const noexcept {
    return std::hash<std::string>{}(l.str());
  }
};

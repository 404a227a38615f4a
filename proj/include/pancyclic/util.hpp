#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pancyclic {

// Search/construction results that can fail for honest structural reasons.
// Failure carries a human-readable report; callers branch, they don't catch.
template <class T>
class Expected {
 public:
  static Expected ok(T value) {
    Expected e;
    e.value_.emplace(std::move(value));
    return e;
  }
  static Expected fail(std::string why) {
    Expected e;
    e.error_ = std::move(why);
    return e;
  }

  explicit operator bool() const { return value_.has_value(); }
  bool has_value() const { return value_.has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("Expected::value on failure: " + error_);
    return *value_;
  }
  T& value() {
    if (!value_) throw std::logic_error("Expected::value on failure: " + error_);
    return *value_;
  }
  const std::string& error() const { return error_; }

  const T& operator*() const { return value(); }
  T& operator*() { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

 private:
  Expected() = default;
  std::optional<T> value_;
  std::string error_;
};

// Resource-limit overrun (search node budgets). Distinct from honest
// structural failure: the caller asked for more work than allowed.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pancyclic

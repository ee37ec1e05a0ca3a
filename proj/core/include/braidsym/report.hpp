#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace braidsym {

enum class Status { Pass, Fail, Skip, Error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

struct ReportItem {
  std::string key;
  Status status = Status::Pass;
  std::string detail;
  double elapsed_ms = 0;
};

/// Ordered list of checked items. Passes iff nothing failed or errored.
class CheckReport {
 public:
  void add(std::string key, bool ok, std::string detail = {}, double elapsed_ms = 0) {
    items_.push_back({std::move(key), ok ? Status::Pass : Status::Fail, std::move(detail), elapsed_ms});
  }
  void add(ReportItem item) { items_.push_back(std::move(item)); }
  void skip(std::string key, std::string detail = {}) {
    items_.push_back({std::move(key), Status::Skip, std::move(detail), 0});
  }
  void error(std::string key, std::string detail) {
    items_.push_back({std::move(key), Status::Error, std::move(detail), 0});
  }
  /// Appends other's items with keys prefixed by "prefix.".
  void merge(const std::string& prefix, const CheckReport& other) {
    for (auto item : other.items_) {
      item.key = prefix.empty() ? item.key : prefix + "." + item.key;
      items_.push_back(std::move(item));
    }
  }

  const std::vector<ReportItem>& items() const { return items_; }
  bool passed() const {
    return std::none_of(items_.begin(), items_.end(),
                        [](const ReportItem& i) { return i.status == Status::Fail || i.status == Status::Error; });
  }
  /// Item with the given key, or nullptr.
  const ReportItem* find(const std::string& key) const {
    for (const auto& item : items_)
      if (item.key == key) return &item;
    return nullptr;
  }

 private:
  std::vector<ReportItem> items_;
};

/// Milliseconds since construction.
class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace braidsym

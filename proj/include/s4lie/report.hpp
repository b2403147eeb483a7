#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace s4lie {

enum class CheckMode { exhaustive, sampled };

struct Check {
  std::string condition;
  bool pass = true;
  CheckMode mode = CheckMode::exhaustive;
  std::optional<std::uint64_t> seed;
  nlohmann::json witness;  // null when passing
  std::string detail;
  std::size_t cases = 0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void pass(std::string condition, std::size_t cases = 0, std::string detail = {});
  void fail(std::string condition, nlohmann::json witness, std::string detail = {});
  void expect(bool ok, std::string condition, nlohmann::json witness = nullptr, std::string detail = {});
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::string& title() const noexcept { return title_; }
  const Check* find(const std::string& condition) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace s4lie

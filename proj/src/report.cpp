#include "s4lie/report.hpp"

#include <algorithm>
#include <sstream>

namespace s4lie {

void Report::pass(std::string condition, std::size_t cases, std::string detail) {
  Check c;
  c.condition = std::move(condition);
  c.cases = cases;
  c.detail = std::move(detail);
  checks_.push_back(std::move(c));
}

void Report::fail(std::string condition, nlohmann::json witness, std::string detail) {
  Check c;
  c.condition = std::move(condition);
  c.pass = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
  checks_.push_back(std::move(c));
}

void Report::expect(bool ok, std::string condition, nlohmann::json witness, std::string detail) {
  if (ok)
    pass(std::move(condition), 1, std::move(detail));
  else
    fail(std::move(condition), std::move(witness), std::move(detail));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.condition = prefix + c.condition;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& condition) const {
  for (const auto& c : checks_)
    if (c.condition == condition) return &c;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j;
    j["condition"] = c.condition;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.pass && !c.witness.is_null()) j["witness"] = c.witness;
    j["mode"] = c.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
    if (c.seed) j["seed"] = *c.seed;
    if (c.cases) j["cases"] = c.cases;
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << title_ << "\n";
  for (const auto& c : checks_) {
    os << (c.pass ? "  PASS " : "  FAIL ") << c.condition;
    os << " [" << (c.mode == CheckMode::exhaustive ? "exhaustive" : "sampled");
    if (c.seed) os << ", seed " << *c.seed;
    if (c.cases) os << ", " << c.cases << " cases";
    os << "]";
    if (!c.detail.empty()) os << " " << c.detail;
    if (!c.pass && !c.witness.is_null()) os << " witness " << c.witness.dump();
    os << "\n";
  }
  return os.str();
}

}  // namespace s4lie

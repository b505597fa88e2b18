#pragma once

// Three-valued decision results shared by every decider.

#include <string>
#include <vector>

#include <json.hpp>

namespace tgwa {

enum class Outcome { Yes, No, Unknown };

std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string summary;
  nlohmann::json data = nlohmann::json::object();  // certificate or witness payload
  std::vector<std::string> blockers;                // only for Unknown

  static Verdict yes(std::string summary, nlohmann::json data = nlohmann::json::object());
  static Verdict no(std::string summary, nlohmann::json data = nlohmann::json::object());
  static Verdict unknown(std::vector<std::string> blockers);

  bool is_yes() const noexcept { return outcome == Outcome::Yes; }
  bool is_no() const noexcept { return outcome == Outcome::No; }
  bool is_unknown() const noexcept { return outcome == Outcome::Unknown; }

  nlohmann::json to_json() const;
};

}  // namespace tgwa

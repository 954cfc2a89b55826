#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "regsel/game.hpp"
#include "regsel/unlink.hpp"

namespace regsel {

/// Solvability, per-site changeability, kernel dimension, and where the
/// board allows it a tanglize summary and foldability report.
nlohmann::json analyze_report(const LampBoard &b, std::size_t budget = kDefaultWeightBudget);
/// Minimum-weight solving set from the current lamps, or a certificate.
nlohmann::json solve_report(const GameInstance &g, std::size_t budget = kDefaultWeightBudget);

struct UnlinkOptions {
  int budget = -1; // -1: c(D)/2
  std::optional<CirclePlacement> circle;
  int max_path = 6;
};
nlohmann::json unlink_report(const LinkDiagram &d, const UnlinkOptions &opt = {});

std::string analyze_text(const nlohmann::json &report);
std::string solve_text(const nlohmann::json &report);
std::string unlink_text(const nlohmann::json &report);

/// Error payload {"error": {"code", "message"}}.
nlohmann::json error_json(const std::string &code, const std::string &message);

} // namespace regsel

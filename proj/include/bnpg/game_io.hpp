#pragma once

#include <string>

#include <json.hpp>

#include "bnpg/game.hpp"

namespace bnpg {

/// A game file: the instance plus an optional free-form provenance block
/// (generator parameters and the like) that survives a load/save round
/// trip byte for byte.
struct GameDocument {
  BnpgInstance instance;
  nlohmann::ordered_json provenance;  // null when absent
};

/// Parse a game document. Throws ParseError (with a 1-based line number
/// for malformed JSON) or ValidationError listing every violated
/// invariant.
GameDocument game_from_string(const std::string& text);

GameDocument load_game(const std::string& path);

std::string game_to_string(const BnpgInstance& inst,
                           const nlohmann::ordered_json& provenance = nullptr);

void save_game(const BnpgInstance& inst, const std::string& path,
               const nlohmann::ordered_json& provenance = nullptr);

}  // namespace bnpg

#pragma once

#include "json.hpp"

#include "zigzag/model/ladder.hpp"

namespace zigzag {

// {n_rungs, twice_s, boundary, couplings: {J: [...], Jp: [...], J2: [...], J2p: [...]}}
nlohmann::json spec_to_json(const LadderSpec& spec);
LadderSpec spec_from_json(const nlohmann::json& doc, const BuildOptions& opts = {});

}  // namespace zigzag

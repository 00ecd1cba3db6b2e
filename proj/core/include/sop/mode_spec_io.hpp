#pragma once

#include <filesystem>
#include <string>

#include "sop/local_mode.hpp"

namespace sop {

struct ModeSpec {
  LatticeSpec spec;
  WindowFunctions window;
};

// Mode-spec JSON schema:
//   {"n": int, "eta": float, "x": [...], "y": [...], "z": [...], "w": [...]}
// Each vector may be dense (array of length n) or sparse (object mapping
// 1-based site indices to values); missing vectors default to zero. The
// loaded window is validated (NotCanonical on failure).
ModeSpec parse_mode_spec(const std::string& json_text);
ModeSpec load_mode_spec(const std::filesystem::path& path);

}  // namespace sop

#pragma once

#include "kato/hk_audit.hpp"
#include "kato/kato_inversion.hpp"
#include "kato/local_scaling.hpp"
#include "kato/topology.hpp"

#include "json.hpp"

#include <string>

namespace kato {

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const NuclearFrame& frame);
nlohmann::json to_json(const CriticalPoint& cp);
nlohmann::json to_json(const FrameMatch& match);
nlohmann::json to_json(const ReconstructionReport& report);
nlohmann::json to_json(const CuspVerification& verification);
nlohmann::json to_json(const IncompatibilityVerdict& verdict);
nlohmann::json to_json(const HKAuditReport& report);
/// Rows of (r, f, f', q_residual) plus summary fields.
nlohmann::json to_json(const LocalScalingMap& map);

NuclearFrame frame_from_json(const nlohmann::json& doc);

/// 64-bit FNV-1a of `bytes`, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace kato

#include "istforge/build_result.hpp"

#include <type_traits>

namespace istforge {

std::string to_string(FailStage s) {
  switch (s) {
    case FailStage::None: return "";
    case FailStage::QSelection: return "Q-selection";
    case FailStage::PathGrowth: return "path-growth";
    case FailStage::Niceness: return "niceness";
    case FailStage::Partition: return "partition";
    case FailStage::Connection: return "connection";
    case FailStage::Other: return "other";
  }
  return "other";
}

}  // namespace istforge

namespace istforge {

bool check_failure(const Graph& g, const BuildFailure& f) {
  if (f.stage == FailStage::None || f.message.empty()) return false;
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, NicenessFailure>) {
          return f.stage == FailStage::Niceness && check_niceness_failure(g, f.trees, cert);
        } else if constexpr (std::is_same_v<T, GrowthFailure>) {
          return f.stage == FailStage::PathGrowth && check_growth_failure(g, cert, f.forbidden);
        } else if constexpr (std::is_same_v<T, PartitionFailure>) {
          return f.stage == FailStage::Partition && (!cert.bad_vertices.empty() || !cert.oversized.empty());
        } else if constexpr (std::is_same_v<T, ConnectFailure>) {
          return f.stage == FailStage::Connection && !cert.reason.empty();
        } else {
          return f.stage == FailStage::QSelection || f.stage == FailStage::Other;
        }
      },
      f.certificate);
}

}  // namespace istforge

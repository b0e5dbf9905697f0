#pragma once

// Ordered inequality chains "w-power ≤ refined bound ≤ classical bound",
// evaluated link by link so a failure pinpoints the broken step.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrad/bound_catalog.hpp"

namespace nrad {

enum class ChainId { Th2Dragomir, Th2AlDolat, Th3ElHaddad, Th4ElHaddad, Th5ElHaddad, BomiElHaddad };

std::string_view to_string(ChainId id);
/// th2_dragomir, th2_aldolat, th3_elhaddad, th4_elhaddad, th5_elhaddad, bomi_elhaddad.
ChainId chain_from_name(std::string_view name);
std::span<const ChainId> all_chains();
bool is_product_chain(ChainId id);

/// Links may decrease by at most this fraction of the larger value.
inline constexpr double kChainTolerance = 1e-9;

struct ChainLink {
  std::string label;
  double value = 0.0;
  bool operator==(const ChainLink&) const = default;
};

struct ChainResult {
  std::string chain_name;
  std::vector<ChainLink> links;
  bool holds = true;
};

bool non_decreasing(std::span<const ChainLink> links, double rel_tol = kChainTolerance);

/// Product chains read inputs.product; the others read inputs.single.
/// th3_elhaddad uses the square-root pair, th2_aldolat uses r = 1 and
/// bomi_elhaddad uses n = 1, whatever inputs.params says.
ChainResult refinement_chain(ChainId id, const BoundInputs& inputs, double lambda);

/// Convenience form; product chains fall back to S = T when s is null.
ChainResult refinement_chain(const ComplexMatrix& t, const ComplexMatrix* s, std::string_view chain_id,
                             const BoundParams& params);

}  // namespace nrad

#pragma once

#include "vcsim/hose.hpp"
#include "vcsim/request.hpp"
#include "vcsim/topology.hpp"

#include <optional>

namespace vcsim {

namespace oktopus {

/// Largest VM count this host can take for req, given at most `remaining`
/// VMs are still unplaced. Full collocation (k = n) needs zero uplink
/// bandwidth, so larger counts are tried first.
int max_vms_on_host(const FatTree& tree, int host, const VCRequest& req, int remaining);

/// Level traversal with dense collocation: single hosts first, then racks,
/// pods, and finally the whole tree. Candidates are scanned in fixed index
/// order; within a candidate, hosts are filled greedily in index order.
std::optional<Placement> embed(const FatTree& tree, const VCRequest& req);

}  // namespace oktopus

namespace tetris {

/// Balance score of placing one more VM of req on this host (which already
/// holds current_k VMs of the same VC in the in-progress placement): the
/// ratio min/max of the host's residual-compute and residual-bandwidth
/// fractions after the hypothetical placement. 1 means perfectly balanced
/// residuals; nullopt means the VM does not fit on this host.
std::optional<Rational> score(const FatTree& tree, int host, const VCRequest& req, int current_k);

/// Algorithm: per level ascending, place the n VMs one at a time on the
/// in-subtree host with the highest score (ties go to the lowest host
/// index). The score only looks at access-level bandwidth; rack and pod
/// uplinks are checked by a validation gate on the completed placement.
/// Falls back to oktopus::embed when no level yields a valid placement.
std::optional<Placement> embed(const FatTree& tree, const VCRequest& req);

}  // namespace tetris

}  // namespace vcsim

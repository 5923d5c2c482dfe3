#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "villainy/coloring.hpp"
#include "villainy/graph.hpp"

namespace villainy {

/// STRONG keeps every color's multiplicity when repairing; WEAK only keeps
/// the palette.
enum class RepairMode { kStrong, kWeak };

const char* to_string(RepairMode mode);

/// Which colorings the graph-level maximum ranges over. kPermutations takes
/// every rearrangement of an optimal proper coloring; kProperOnly takes the
/// optimal proper colorings themselves and is always 0.
enum class OuterDomain { kPermutations, kProperOnly };

class InfeasibleMultiplicity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Repair {
  int value = 0;
  Coloring repair;
};

/// Minimum number of vertices of `c` to recolor to reach a proper coloring
/// over c's palette (with c's per-color counts in STRONG mode). The repair is
/// the lexicographically smallest closest proper coloring. Empty when no
/// proper coloring satisfies the constraint.
std::optional<Repair> repair_distance(const Graph& g, const Coloring& c, RepairMode mode);

struct WorstAssignment {
  Coloring worst;
  int value = 0;
};

/// Lexicographically smallest assignment of the color multiset `m` (entry i
/// is the count of color i) maximizing repair_distance. Branch and bound over
/// vertices in index order, split across OpenMP threads at the top levels.
/// Throws InfeasibleMultiplicity if no proper coloring realizes `m`.
WorstAssignment worst_assignment(const Graph& g, const MultiplicityVector& m, RepairMode mode);
/// Single-threaded reference for worst_assignment; same result.
WorstAssignment worst_assignment_serial(const Graph& g, const MultiplicityVector& m, RepairMode mode);

struct VillainyCertificate {
  int value = 0;
  Coloring worst;
  Coloring repair;
  VertexMask changed = 0;
  RepairMode mode = RepairMode::kStrong;
  bool exhaustive = false;
};

struct VillainyOptions {
  int exact_bound = 8;
  OuterDomain domain = OuterDomain::kPermutations;
  bool parallel = true;
};

/// B(G). Throws OrderTooLarge when the order exceeds options.exact_bound.
VillainyCertificate villainy(const Graph& g, const VillainyOptions& options = {});
/// B_w(G), over the same rearrangements as villainy().
VillainyCertificate weak_villainy(const Graph& g, const VillainyOptions& options = {});
VillainyCertificate graph_villainy(const Graph& g, RepairMode mode, const VillainyOptions& options = {});

/// Re-checks a certificate from scratch: the repair is proper, `changed` is
/// exactly where worst and repair differ, STRONG repairs keep multiplicities,
/// the worst coloring's profile is feasible, and no proper coloring is closer.
/// Returns the list of violated conditions (empty when valid).
std::vector<std::string> verify_certificate(const Graph& g, const VillainyCertificate& cert);

}  // namespace villainy

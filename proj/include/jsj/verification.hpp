#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jsj/assembler.hpp"
#include "jsj/graph.hpp"
#include "jsj/triangulation.hpp"

namespace jsj {

struct Check {
  std::string name;
  bool passed = false;
  // On failure, a concrete description of what went wrong.
  std::string detail;
  nlohmann::json measures = nlohmann::json::object();
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  Check& add(std::string name, bool passed, std::string detail = {});
  void append(const VerificationReport& other);
  const Check* find(const std::string& name) const;

  // One line per check: "PASS name  key=value ..." plus detail on failure.
  std::string text() const;
  // {"passed": bool, "checks": [{"name", "passed", "detail", "measures"}]}
  nlohmann::json json() const;
};

// Closed, orientable, Euler characteristic zero, every vertex link a sphere
// and no edge identified with itself in reverse.
VerificationReport check_closed_manifold(const Triangulation& t);

// Contracts each block range of the dual graph to a node and each layered
// range to an arc, then compares the result with g, arcs counted with
// multiplicity. Also requires connected blocks and doubled-path chains.
// Throws StructureError if the metadata ranges do not partition the table.
VerificationReport check_dual_structure(const Multigraph& g, const Triangulation& t,
                                        const AssemblyMetadata& meta);

// Re-derives the recorded quantities: block sizes against degrees, gluing
// distances, flip certificates, the size bound and the delta formula.
VerificationReport check_metadata(const Multigraph& g, const Triangulation& t, const AssemblyMetadata& meta);

// Asserts tw(g) <= 18(tw_ub(dual)+1) and pw(g) <= 4(3 pw_ub(dual)+1); reports
// tw_ub(dual)/(maxdeg·tw(g)) and the pathwidth analogue.
VerificationReport check_width_inequalities(const Multigraph& g, const Triangulation& t,
                                            const AssemblyMetadata& meta);

// All of the above.
VerificationReport verify_assembly(const Multigraph& g, const Triangulation& t, const AssemblyMetadata& meta);

// Random subdivisions of small graphs must satisfy pw(G') <= pw(G)+2 and
// tw(G') <= max(tw(G), 3), with exact widths on both sides.
VerificationReport subdivision_lemma_suite(std::uint64_t seed, int trials);

// Widths of complete binary trees and grids, plus full checks on a few
// small assembled instances from those families.
VerificationReport corollary_family_suite();

}  // namespace jsj

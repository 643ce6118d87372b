#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "coarsetw/cores.hpp"
#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/qi.hpp"
#include "coarsetw/quotient.hpp"
#include "coarsetw/reduce.hpp"
#include "coarsetw/widthcert.hpp"

namespace coarsetw {

struct PipelineOptions {
  int max_vertices = 2000;
  std::optional<std::uint64_t> birth_order_seed;
  // Contract subset bags before running. Off by default: dropping redundant
  // bags can relocate the root and reshape the first core, so it is a rescue
  // for degenerate inputs rather than a blanket step.
  bool normalize = false;
};

// Everything produced while handling one connected component.
struct ComponentRun {
  SplitInstance input;
  ReductionRecord reduction;
  BallCoverCert reduced_cert;
  CoreForest forest;
  JGraph j;
  Decomposition j_decomposition;
  QuotientH quotient;
  Decomposition h_decomposition;
  ClaimReport claims;         // "1".."12"
  QiCertificate qi_reduced;   // psi on the reduced component
  QiCertificate qi_original;  // composed constants on the input component
};

struct PipelineResult {
  ReductionRecord reduction;      // input graph -> disjoint union of reductions
  Graph h;                        // combined quotient, vertex ids are core ids
  Decomposition h_decomposition;  // pseudo-tree, combined over fresh node ids
  std::map<int, int> psi;         // vertex of g -> vertex of h
  long long L = 0;                // constants on the reduced graph
  long long C = 0;
  long long L_original = 0;  // composed through the r-fold reduction
  long long C_original = 0;
  ClaimReport claims;             // merged over components
  QiCertificate qi_reduced;       // combined reduced graph -> h
  QiCertificate qi_original;      // input graph -> h
  std::vector<ComponentRun> components;
  std::vector<ExploratoryEntry> exploratory;  // least C per L on a small grid
  nlohmann::json certificate;
};

// Runs the whole construction: split into components, then per component
// reduce to r = 1, build cores, build the layered graph and its width
// certificate, contract to the quotient, and verify psi at (2k+2, 2k-1) on
// the reduced graph and at (r(2k+2), r(2k-1)) on the input. The combined
// quotient is the disjoint union; the combined map is re-verified, not
// assumed. Throws CheckFailure with a structured locus when any claim or
// validator fails, InputError on malformed input or when the vertex count
// exceeds options.max_vertices.
PipelineResult run_pipeline(const Graph& g, const Decomposition& d, const BallCoverCert& cert,
                            const PipelineOptions& options = {});

}  // namespace coarsetw

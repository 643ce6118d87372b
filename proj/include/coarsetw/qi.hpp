#pragma once

#include <map>
#include <string>

#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

struct QiConditionResult {
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

struct QiReport {
  QiConditionResult forward;   // dist_H(f(u), f(v)) <= L * dist_G(u, v) + C
  QiConditionResult backward;  // dist_G(u, v) <= L * dist_H(f(u), f(v)) + C
  QiConditionResult dense;     // every H vertex within C of the image
  bool ok() const { return forward.pass && backward.pass && dense.pass; }
  std::string summary() const;
};

struct QiCertificate {
  std::map<int, int> map;  // total on V(G), into V(H)
  long long L = 1;
  long long C = 0;
  QiReport report;
  bool ok() const { return report.ok(); }
};

// Checks the three conditions by exhaustive breadth-first search. Both
// distance conditions only constrain pairs whose respective distance is
// finite. Requires a total map into V(h), L >= 1 and C >= 0.
QiCertificate verify_qi(const Graph& g, const Graph& h, const std::map<int, int>& map,
                        long long L, long long C);

// For each L on a grid, the least C making verify_qi pass; infinite needs
// cannot arise when every condition already holds for some pair (L, C).
struct ExploratoryEntry {
  long long L;
  long long C;
};
std::vector<ExploratoryEntry> exploratory_constants(const Graph& g, const Graph& h,
                                                    const std::map<int, int>& map,
                                                    long long max_L);

struct ConverseResult {
  Decomposition decomposition;  // Tree mode, over the tree of hd
  BallCoverCert cert;
};

// Pulls a pseudo-tree decomposition of h back through a certified
// (L, C)-quasi-isometry: each bag collects the vertices mapping within
// L + C of one of its members, covered by per-member sets of diameter at
// most 2L(L+C) + C. Verifies the map first and validates the output.
ConverseResult converse_decomposition(const Graph& g, const Graph& h, const Decomposition& hd,
                                      const std::map<int, int>& map, long long L, long long C);

}  // namespace coarsetw

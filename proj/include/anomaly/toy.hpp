#pragma once

#include "anomaly/gluing.hpp"

namespace anomaly {

struct InvalidTransfer : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CutMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A boundary point carries a chart space C^{2r} with the standard metric.
// Dual points flip the sign of the conjugation.
struct PointObject {
  Eigen::Index rank = 1;
  bool dual = false;
};

struct ToyObject {
  std::vector<PointObject> points;
  Eigen::Index dim() const;
  Eigen::Index offset(Eigen::Index point) const;
};

Mat point_conjugation(Eigen::Index rank);  // [[0, -iI],[-iI, 0]]
Mat chart_transfer(const Mat& u);          // diag(u, conj u)
RSpace object_space(const ToyObject& y);

struct EdgeEnd {
  bool on_out = false;  // endpoint lies on the target-side boundary
  Eigen::Index point = 0;
};

// Oriented strand: the boundary value x at `from` propagates to
// chart_transfer(u) x at `to` over `sites` lattice sites.
struct ToyEdge {
  EdgeEnd from, to;
  Mat u;
  Eigen::Index sites = 1;
};

struct ToyCircle {
  Mat holonomy;
  Eigen::Index sites = 1;
};

// A bordism from `in` to `out`; its boundary relation sits in W_out + -W_in.
struct ToyBordism {
  ToyObject in, out;
  std::vector<ToyEdge> edges;
  std::vector<ToyCircle> circles;
};

void validate_bordism(const ToyBordism& x);  // throws InvalidTransfer

struct ToyBoundary {
  LagrangianRelation l;
  // harmonic spaces of the closed parts: per circle an orthonormal basis in
  // the lattice metric (columns have euclidean norm 1/sqrt(sites))
  std::vector<Mat> circle_kernels;
  std::vector<Eigen::Index> circle_sites;
};

ToyBoundary boundary_lagrangian(const ToyBordism& x, const Tol& tol);

struct TwistValue {
  ToyBoundary boundary;
  FockModule fock;
};

TwistValue twist(const ToyBordism& x, const Tol& tol);

struct InterfaceCrossing {
  Eigen::Index interface = 0;  // between pieces[i] and pieces[i+1]
  Eigen::Index point = 0;
  Mat transport;  // r x r, from the basepoint value to the value here
};

struct LoopRecord {
  Eigen::Index rank = 1;
  Eigen::Index sites = 0;
  Mat holonomy;  // at the basepoint
  std::vector<InterfaceCrossing> crossings;  // traversal order, basepoint first
};

struct ChainAnalysis {
  std::vector<ToyEdge> merged;    // open strands, addressed in the outer boundaries
  std::vector<LoopRecord> loops;  // strands closed by the gluing
};

// pieces[0] is the target-side piece; interface i joins pieces[i].in with
// pieces[i+1].out.  Throws InvalidTransfer on any mismatch.
ChainAnalysis analyze_chain(const std::vector<const ToyBordism*>& pieces);

struct GluedBordism {
  ToyBordism glued;
  std::vector<LoopRecord> formed;
};

GluedBordism glue_bordisms(const ToyBordism& x0, const ToyBordism& x1);

// orthonormal basis of the fixed space of a loop in the lattice metric
Mat loop_kernel_basis(const LoopRecord& loop, double rank_tol);

// boundary values of the kernel basis at the crossings of one interface
Mat restriction_values(const LoopRecord& loop, const Mat& kernel_basis,
                       Eigen::Index interface, const ToyObject& z);

struct TauResult {
  GluedBordism glued;
  GlueResult glue;  // k_basis holds the restriction columns
  double det_factor = 1.0;
  Eigen::Index h_dim = 0;
};

// The cut is presented as the pair (x0, x1); throws CutMismatch unless
// glue_bordisms(x0, x1) reproduces x.
TauResult tau(const ToyBordism& x, const ToyBordism& x0, const ToyBordism& x1,
              const Tol& tol);

struct TransversalityReport {
  double intersection_residual = 0.0;  // L0 meet L1 vs K
  double restriction_residual = 0.0;   // K vs restriction image of the fixed spaces
  double sum_residual = 0.0;           // L0 + L1 vs complement of conj K
  Eigen::Index dim_k = 0;
  bool pass = false;
};

TransversalityReport cobordism_transversality_check(const ToyBordism& x0,
                                                    const ToyBordism& x1, const Tol& tol);

struct ToyCoherenceReport {
  double path_difference = 0.0;
  double path_scale = 0.0;
  double span_residual = 0.0;  // restriction spans vs the chain k-spaces
  double negative_control_residual = 0.0;
  double det_ratio = 1.0;  // mismatch of the two normalizations
  Eigen::Index n02 = 0, nr = 0, n13 = 0;
  double det_right = 1.0, det_left = 1.0;
  bool pass = false;
};

ToyCoherenceReport toy_coherence_check(const ToyBordism& x01, const ToyBordism& x12,
                                       const ToyBordism& x23, const Tol& tol);

}  // namespace anomaly

#pragma once

#include "anomaly/clifford.hpp"

namespace anomaly {

struct GluingDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompositionNotLagrangian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Mat kron(const Mat& a, const Mat& b);

// Graded tensor product of the Fock factors of two composable relations,
// divided by the relations identifying the two middle actions.  The model
// is the orthogonal complement of the relation span inside the full tensor,
// with the orthogonal projection as quotient map.  Relation span and outer
// actions are generated by the odd operators
//   rel(v)  = act01(0,-v) (x) id + grading01 (x) act12(v,0),  v in the middle
//   outer(w0, w2) = act01(w0,0) (x) id + grading01 (x) act12(0,w2).
struct TensorOverClifford {
  LagrangianRelation l01, l12;
  FockModule f01, f12;
  Subspace reduced;  // frame inside the full tensor, dim = full / 2^{mid}

  Eigen::Index full_dim() const { return f01.dim() * f12.dim(); }
  Eigen::Index reduced_dim() const { return reduced.dim(); }

  Mat relation_op(const Vec& v__mid) const;
  Mat outer_op_full(const Vec& w0, const Vec& w2) const;
  // outer action compressed to the reduced model
  Mat outer_op(const Vec& w0, const Vec& w2) const;
  // residual of invariance of the reduced model under an outer operator
  double invariance_residual(const Mat& op_full) const;

  Vec to_reduced(const Vec& full) const { return reduced.frame.adjoint() * full; }
  Vec representative(const Vec& red) const { return reduced.frame * red; }
};

TensorOverClifford tensor_over_clifford(const LagrangianRelation& l01,
                                        const LagrangianRelation& l12, const Tol& tol);

// Reduced image of (vacuum . words) (x) vacuum, words acting on the right
// of the first factor through the middle space.
Vec generator_image(const TensorOverClifford& tc, const std::vector<Vec>& words);

// Module map out of the exterior algebra of source_l (a Lagrangian of the
// composed ambient) sending a basis subset to the ordered product of its
// frame vectors applied to the generator.  Returns reduced_dim x 2^k.
Mat alpha_from_generator(const TensorOverClifford& tc, const Subspace& source_l,
                         const Vec& gen_reduced);

struct GlueResult {
  CompositionResult comp;
  TensorOverClifford tensor;
  Mat k_basis;    // orthonormal basis of K used for the generator words
  Vec generator;  // reduced coordinates
  Mat alpha;
  FockModule f02;
};

GlueResult glue_iso(const LagrangianRelation& l01, const LagrangianRelation& l12,
                    const Tol& tol);

struct GlueReport {
  Eigen::Index reduced_dim = 0;
  Eigen::Index expected_reduced_dim = 0;
  double sigma_min = 0.0;           // smallest singular value of alpha
  double intertwine_residual = 0.0;
  double generator_annihilation_residual = 0.0;  // conj(l02)-action on generator
  double subtop_residual = 0.0;     // proper subproducts of the K words vanish
  double vacuum_norm = 0.0;         // |pi(vac (x) vac)|
  double generator_norm = 0.0;
  double invariance_residual = 0.0;
  Eigen::Index pf_dim = 0;
  bool pass = false;
};

GlueReport verify_glue(const GlueResult& g, const Tol& tol);

// K-type subspaces of a chain of three relations and the composites used
// to compare the two ways through the chain.
struct ChainSpaces {
  LagrangianRelation l01, l12, l23;
  LagrangianRelation l02, l13, l03;
  CompositionResult comp02, comp13, comp03;  // comp03 composes l02 with l23
  CompositionResult comp03_via13;            // composes l01 with l13
  Subspace k012, k013, k023, k123;
  Subspace c1;  // orthocomplement of k012 inside k013
  Subspace c2;  // orthocomplement of k123 inside k023
  bool inclusions_ok = false;
  bool associativity_ok = false;
};

ChainSpaces k_spaces(const LagrangianRelation& l01, const LagrangianRelation& l12,
                     const LagrangianRelation& l23, const Tol& tol);

// rho0: c1 -> c2 read off from l12 as the graph of an isomorphism between
// the complements; rho extends by the identity on k012 and k123.
struct DevelopmentMap {
  Mat rho0;           // dim c2 x dim c1, in the orthonormal frames
  cxd det_rho0 = 1.0;
  double det_factor = 1.0;  // det(rho^* rho) in ambient-restricted metrics
};

DevelopmentMap development_map(const ChainSpaces& ch, const Tol& tol);

// max residual of (rho0^* z) . vac = vac . z over an orthonormal basis z of c2
double swap_check(const ChainSpaces& ch, const DevelopmentMap& dev, const Tol& tol);

// Shared machinery for comparing the two quotient identifications of a
// chain: both paths land in the reduced model of the triple tensor.
struct CoherenceEngine {
  ChainSpaces ch;
  TensorOverClifford tc0113, tc1223, tc0223, tc0112;
  FockModule f23;       // third factor alone (for parities)
  Subspace reduced3;    // relation complement in the triple tensor

  // (id (x) alpha123) o (alpha013 (x) id) with given generator words
  Mat path_right(const std::vector<Vec>& words013, const std::vector<Vec>& words123) const;
  // (alpha012 (x) id) o (alpha023 (x) id) with the passing line of the given
  // parity crossing the third factor
  Mat path_left(const std::vector<Vec>& words023, const std::vector<Vec>& words012,
                int line_parity) const;
};

CoherenceEngine make_coherence_engine(const LagrangianRelation& l01,
                                      const LagrangianRelation& l12,
                                      const LagrangianRelation& l23, const Tol& tol);

struct CoherenceReport {
  double det_factor = 1.0;
  double path_difference = 0.0;           // with the normalization applied
  double negative_control_residual = 0.0; // with the normalization removed
  double path_scale = 0.0;                // max |entry| of the reference path
  double swap_residual = 0.0;
  Eigen::Index dim_k012 = 0, dim_k123 = 0, dim_c = 0;
  bool pass = false;
};

CoherenceReport coherence_check(const LagrangianRelation& l01, const LagrangianRelation& l12,
                                const LagrangianRelation& l23, const Tol& tol);

}  // namespace anomaly

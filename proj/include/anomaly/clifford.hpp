#pragma once

#include "anomaly/lagrangian.hpp"

#include <cstdint>
#include <functional>

namespace anomaly {

// Exterior algebra of a Lagrangian l inside w (dim w = 2k), carrying the
// Clifford action of w determined by the relation v u + u v = b(v, u).
// Basis: subsets of the frame columns ordered by (popcount, bitmask); a
// subset is the wedge of its frame vectors in ascending column order.
struct FockModule {
  RSpace w;
  Subspace l;
  Eigen::Index k = 0;

  std::vector<std::uint32_t> basis;      // index -> bitmask
  std::vector<Eigen::Index> index_of;    // bitmask -> index
  std::vector<Mat> wedge;                // creation by frame column j
  std::vector<Mat> insert;               // annihilation by frame column j
  Mat grading;                           // diag((-1)^popcount)

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  int parity(Eigen::Index idx) const;    // 0 even, 1 odd
  Vec vacuum() const;

  // Action of the ambient vector v: wedge by P_l v plus insertion by
  // conj(P_{conj l} v).  Linear in v.
  Mat generator_action(const Vec& v) const;
};

FockModule make_fock(const RSpace& w, const Subspace& l, const Tol& tol);

// Bimodule structure on the exterior algebra of a relation Lagrangian:
// the left factor acts by its inclusion, the right factor acts on the
// opposite side with the parity sign.
Mat left_act(const FockModule& f, const LagrangianRelation& rel, const Vec& w_left_vec);
Mat right_act(const FockModule& f, const LagrangianRelation& rel, const Vec& w_right_vec);

// A module over the Clifford algebra of some structured space, presented by
// the action matrices of ambient vectors.
struct ModuleRep {
  Eigen::Index dim = 0;
  std::function<Mat(const Vec&)> act;
};

ModuleRep fock_module_rep(const FockModule& f);

// Joint kernel of the actions of conj(l-frame) vectors: the space of
// vectors annihilated by the conjugate of l.
Subspace pfaffian_line(const RSpace& w, const Subspace& l, const ModuleRep& m,
                       double rank_tol);

// Module map from the exterior algebra of l determined by a cyclic vector:
// a subset maps to the ordered product of its frame vectors applied to m0.
// Returns dim(m) x 2^k.
Mat hom_from_pfaffian(const Subspace& l, const ModuleRep& m, const Vec& m0);

// Creation/annihilation pair on the exterior algebra of the reference
// Lagrangian of the doubled space of a v_dim-dimensional Hermitian space.
struct CarOperators {
  Eigen::Index v_dim = 0;
  RSpace doubled;
  FockModule fock;

  Mat annihilate(const Vec& v) const;  // linear in v
  Mat create(const Vec& v) const;      // antilinear in v
};

CarOperators car_operators(Eigen::Index v_dim, const Tol& tol);

}  // namespace anomaly

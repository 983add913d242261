#pragma once

#include "anomaly/toy.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace anomaly {

using Rng = std::mt19937_64;

// independent stream per case, derived from the master seed
Rng case_rng(std::uint64_t master_seed, std::uint64_t case_index);

Mat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
Mat random_unitary(Rng& rng, Eigen::Index n);  // exponential of a random skew-hermitian
Mat random_symmetric_unitary(Rng& rng, Eigen::Index n);
RSpace random_rspace(Rng& rng, Eigen::Index dim);

// random point of the lagrangian family: a conjugation-compatible unitary
// applied to the reference lagrangian
Subspace random_lagrangian(Rng& rng, const RSpace& w);
LagrangianRelation random_relation(Rng& rng, const RSpace& w0, const RSpace& w1);

// block join of two relations on the direct sums of their factors
LagrangianRelation direct_sum_relation(const LagrangianRelation& a, const LagrangianRelation& b);

struct RelationPair {
  LagrangianRelation l01, l12;
};

RelationPair random_relation_pair(Rng& rng, Eigen::Index d0, Eigen::Index d1, Eigen::Index d2);

// pair whose composition has a two-sided null space of dimension db / 2,
// carried by a lagrangian of a middle block shared between the two relations
RelationPair forced_k_pair(Rng& rng, Eigen::Index d0, Eigen::Index da, Eigen::Index db,
                           Eigen::Index d2);

struct RelationTriple {
  LagrangianRelation l01, l12, l23;
};

RelationTriple direct_sum_triple(const RelationTriple& a, const RelationTriple& b);

// invertible matrix satisfying the graph admissibility identity between two
// structured spaces of equal dimension; generically not unitary
Mat random_graph_map(Rng& rng, const RSpace& w0, const RSpace& w1);

// chain of invertible graphs on spaces of one dimension; every null space
// vanishes
RelationTriple random_graph_triple(Rng& rng, Eigen::Index dim, const Tol& tol);

// chain with null spaces of dimension db/2 and dd/2 at the two interfaces,
// carried by shared middle blocks; the development complements stay zero
RelationTriple forced_k_triple(Rng& rng, Eigen::Index d0, Eigen::Index da, Eigen::Index db,
                               Eigen::Index dc, Eigen::Index dd, Eigen::Index d3);

// outer spaces are zero; the middle graph rotates r isotropic planes with the
// given eigenvalues, so the development factor is prod |lambda_j|^2
RelationTriple rotation_chain(const std::vector<cxd>& lambdas, const Tol& tol);

// --- toy instances ---

struct CutCircle {
  ToyBordism whole;  // closed: one circle
  ToyBordism x0, x1;  // whole = x0 glued to x1, cut at arc_units.size() points
};

// circle split into alternating arcs; arc j carries arc_units[j] over
// arc_sites[j] sites; even arcs sit in x0, odd arcs in x1
CutCircle cut_circle(const std::vector<Mat>& arc_units,
                     const std::vector<Eigen::Index>& arc_sites);
CutCircle random_cut_circle(Rng& rng, Eigen::Index rank, Eigen::Index cuts,
                            Eigen::Index total_sites);

struct ToyTripleSpec {
  Eigen::Index rank = 1;
  int n02 = 0;        // loops confined to the first two pieces
  int nr = 0;         // loops through both interfaces
  int n13 = 0;        // loops confined to the last two pieces
  int intervals = 0;  // open strands through the whole chain
  int outer_arcs01 = 0, outer_arcs23 = 0;  // arcs confined to an outer boundary
  Eigen::Index max_sites = 4;
};

struct ToyTriple {
  ToyBordism x01, x12, x23;
};

ToyTriple toy_triple(Rng& rng, const ToyTripleSpec& spec);

}  // namespace anomaly

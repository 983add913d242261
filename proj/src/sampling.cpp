#include "anomaly/sampling.hpp"

#include <Eigen/Eigenvalues>

namespace anomaly {

Rng case_rng(std::uint64_t master_seed, std::uint64_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  return Rng(seq);
}

Mat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cxd(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  return m;
}

namespace {

Mat exp_skew(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(cxd(0.0, -1.0) * a));
  Vec phases(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    phases(i) = std::exp(cxd(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Mat random_unitary(Rng& rng, Eigen::Index n) {
  if (n == 0) return Mat(0, 0);
  Mat m = random_matrix(rng, n, n);
  return exp_skew(Mat(0.5 * (m - m.adjoint())));
}

Mat random_symmetric_unitary(Rng& rng, Eigen::Index n) {
  Mat u = random_unitary(rng, n);
  return u * u.transpose();
}

RSpace random_rspace(Rng& rng, Eigen::Index dim) {
  return make_rspace(random_symmetric_unitary(rng, dim));
}

Subspace random_lagrangian(Rng& rng, const RSpace& w) {
  Subspace ref = reference_lagrangian(w);
  if (w.dim == 0) return ref;
  Mat m = random_matrix(rng, w.dim, w.dim);
  Mat a0 = 0.5 * (m - m.adjoint());
  Mat a = 0.5 * (a0 + w.conj_matrix * a0.conjugate() * w.conj_matrix.adjoint());
  return Subspace{w.dim, exp_skew(a) * ref.frame};
}

LagrangianRelation random_relation(Rng& rng, const RSpace& w0, const RSpace& w1) {
  RSpace ambient = direct_sum(w0, opposite(w1));
  return LagrangianRelation{w0, w1, random_lagrangian(rng, ambient)};
}

LagrangianRelation direct_sum_relation(const LagrangianRelation& a, const LagrangianRelation& b) {
  Eigen::Index a0 = a.w_left.dim, b0 = b.w_left.dim;
  Eigen::Index a1 = a.w_right.dim, b1 = b.w_right.dim;
  Eigen::Index na = a.space.dim(), nb = b.space.dim();
  Mat cols = Mat::Zero(a0 + b0 + a1 + b1, na + nb);
  cols.block(0, 0, a0, na) = a.space.frame.topRows(a0);
  cols.block(a0 + b0, 0, a1, na) = a.space.frame.bottomRows(a1);
  cols.block(a0, na, b0, nb) = b.space.frame.topRows(b0);
  cols.block(a0 + b0 + a1, na, b1, nb) = b.space.frame.bottomRows(b1);
  return LagrangianRelation{direct_sum(a.w_left, b.w_left), direct_sum(a.w_right, b.w_right),
                            Subspace{a0 + b0 + a1 + b1, cols}};
}

RelationPair random_relation_pair(Rng& rng, Eigen::Index d0, Eigen::Index d1, Eigen::Index d2) {
  RSpace w0 = random_rspace(rng, d0), w1 = random_rspace(rng, d1), w2 = random_rspace(rng, d2);
  return RelationPair{random_relation(rng, w0, w1), random_relation(rng, w1, w2)};
}

namespace {

RSpace zero_space() { return make_rspace(Mat(0, 0)); }

LagrangianRelation into_block(const RSpace& wb, const Subspace& lb) {
  return LagrangianRelation{zero_space(), wb, lb};
}

LagrangianRelation out_of_block(const RSpace& wb, const Subspace& lb) {
  return LagrangianRelation{wb, zero_space(), lb};
}

}  // namespace

RelationPair forced_k_pair(Rng& rng, Eigen::Index d0, Eigen::Index da, Eigen::Index db,
                           Eigen::Index d2) {
  RSpace w0 = random_rspace(rng, d0), wa = random_rspace(rng, da);
  RSpace wb = random_rspace(rng, db), w2 = random_rspace(rng, d2);
  Subspace lb = random_lagrangian(rng, wb);
  RelationPair p;
  p.l01 = direct_sum_relation(random_relation(rng, w0, wa), into_block(wb, lb));
  p.l12 = direct_sum_relation(random_relation(rng, wa, w2), out_of_block(wb, lb));
  return p;
}

RelationTriple direct_sum_triple(const RelationTriple& a, const RelationTriple& b) {
  return RelationTriple{direct_sum_relation(a.l01, b.l01), direct_sum_relation(a.l12, b.l12),
                        direct_sum_relation(a.l23, b.l23)};
}

Mat random_graph_map(Rng& rng, const RSpace& w0, const RSpace& w1) {
  if (w0.dim != w1.dim) throw std::invalid_argument("random_graph_map: dimensions differ");
  Eigen::Index d = w0.dim;
  // in the real-point frames the admissible maps are the complex orthogonal
  // matrices; a cayley transform of a random skew-symmetric matrix gives one
  Mat r = random_matrix(rng, d, d);
  Mat s = 0.25 * (r - r.transpose());
  Mat id = Mat::Identity(d, d);
  Mat m = (id - s) * (id + s).inverse();
  return real_points(w1) * m * real_points(w0).adjoint();
}

RelationTriple random_graph_triple(Rng& rng, Eigen::Index dim, const Tol& tol) {
  RSpace w0 = random_rspace(rng, dim), w1 = random_rspace(rng, dim);
  RSpace w2 = random_rspace(rng, dim), w3 = random_rspace(rng, dim);
  RelationTriple t;
  t.l01 = graph_lagrangian(w0, w1, random_graph_map(rng, w0, w1), tol);
  t.l12 = graph_lagrangian(w1, w2, random_graph_map(rng, w1, w2), tol);
  t.l23 = graph_lagrangian(w2, w3, random_graph_map(rng, w2, w3), tol);
  return t;
}

RelationTriple forced_k_triple(Rng& rng, Eigen::Index d0, Eigen::Index da, Eigen::Index db,
                               Eigen::Index dc, Eigen::Index dd, Eigen::Index d3) {
  RSpace w0 = random_rspace(rng, d0), wa = random_rspace(rng, da);
  RSpace wb = random_rspace(rng, db), wc = random_rspace(rng, dc);
  RSpace wd = random_rspace(rng, dd), w3 = random_rspace(rng, d3);
  Subspace lb = random_lagrangian(rng, wb);
  Subspace ld = random_lagrangian(rng, wd);
  RelationTriple t;
  t.l01 = direct_sum_relation(random_relation(rng, w0, wa), into_block(wb, lb));
  t.l12 = direct_sum_relation(
      direct_sum_relation(random_relation(rng, wa, wc), out_of_block(wb, lb)),
      into_block(wd, ld));
  t.l23 = direct_sum_relation(random_relation(rng, wc, w3), out_of_block(wd, ld));
  return t;
}

RelationTriple rotation_chain(const std::vector<cxd>& lambdas, const Tol& tol) {
  Eigen::Index r = static_cast<Eigen::Index>(lambdas.size());
  RSpace w = make_rspace(Mat::Identity(2 * r, 2 * r));
  Mat frame = Mat::Zero(2 * r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    frame(j, j) = 1.0 / std::sqrt(2.0);
    frame(r + j, j) = cxd(0.0, 1.0) / std::sqrt(2.0);
  }
  Subspace l{2 * r, frame};
  Mat q = Mat::Zero(2 * r, 2 * r);
  for (Eigen::Index j = 0; j < r; ++j) {
    cxd a = 0.5 * (lambdas[static_cast<std::size_t>(j)] +
                   1.0 / lambdas[static_cast<std::size_t>(j)]);
    cxd b = (lambdas[static_cast<std::size_t>(j)] -
             1.0 / lambdas[static_cast<std::size_t>(j)]) /
            cxd(0.0, 2.0);
    q(j, j) = a;
    q(j, r + j) = b;
    q(r + j, j) = -b;
    q(r + j, r + j) = a;
  }
  RelationTriple t;
  t.l01 = LagrangianRelation{zero_space(), w, l};
  t.l12 = graph_lagrangian(w, w, q, tol);
  t.l23 = LagrangianRelation{w, zero_space(), l};
  return t;
}

CutCircle cut_circle(const std::vector<Mat>& arc_units,
                     const std::vector<Eigen::Index>& arc_sites) {
  Eigen::Index c = static_cast<Eigen::Index>(arc_units.size());
  if (c < 2 || c % 2 != 0 || arc_sites.size() != arc_units.size())
    throw std::invalid_argument("cut_circle: need an even number of arcs");
  Eigen::Index rank = arc_units.front().rows();
  ToyObject z;
  for (Eigen::Index p = 0; p < c; ++p) z.points.push_back(PointObject{rank, p % 2 != 0});
  CutCircle cc;
  cc.x0.in = z;
  cc.x1.out = z;
  Mat holo = Mat::Identity(rank, rank);
  Eigen::Index total = 0;
  for (Eigen::Index p = 0; p < c; ++p) {
    const Mat& u = arc_units[static_cast<std::size_t>(p)];
    Eigen::Index s = arc_sites[static_cast<std::size_t>(p)];
    EdgeEnd from{p % 2 != 0, p}, to{p % 2 != 0, (p + 1) % c};
    (p % 2 == 0 ? cc.x0 : cc.x1).edges.push_back(ToyEdge{from, to, u, s});
    holo = u * holo;
    total += s;
  }
  cc.whole.circles.push_back(ToyCircle{holo, total});
  return cc;
}

CutCircle random_cut_circle(Rng& rng, Eigen::Index rank, Eigen::Index cuts,
                            Eigen::Index total_sites) {
  if (total_sites < cuts) throw std::invalid_argument("random_cut_circle: too few sites");
  std::vector<Mat> units;
  std::vector<Eigen::Index> sites(static_cast<std::size_t>(cuts), 1);
  Eigen::Index left = total_sites - cuts;
  std::uniform_int_distribution<Eigen::Index> pick(0, cuts - 1);
  while (left-- > 0) sites[static_cast<std::size_t>(pick(rng))] += 1;
  for (Eigen::Index p = 0; p < cuts; ++p) units.push_back(random_unitary(rng, rank));
  // half the circles are flat, so the harmonic space and its determinant
  // factor come into play; the rest keep an empty fixed space
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    Mat prod = Mat::Identity(rank, rank);
    for (Eigen::Index p = 0; p < cuts - 1; ++p) prod = units[static_cast<std::size_t>(p)] * prod;
    units.back() = prod.adjoint();
  }
  return cut_circle(units, sites);
}

namespace {

struct TripleBuilder {
  ToyTriple t;
  Eigen::Index rank;
  Rng* rng;
  Eigen::Index max_sites;

  Eigen::Index add_point(ToyObject& obj, bool dual) {
    obj.points.push_back(PointObject{rank, dual});
    return static_cast<Eigen::Index>(obj.points.size()) - 1;
  }
  ToyEdge edge_u(EdgeEnd from, EdgeEnd to, Mat u) {
    std::uniform_int_distribution<Eigen::Index> pick(1, max_sites);
    return ToyEdge{from, to, std::move(u), pick(*rng)};
  }
  ToyEdge edge(EdgeEnd from, EdgeEnd to) { return edge_u(from, to, random_unitary(*rng, rank)); }
  // Half the loops close up flat (trivial holonomy), so their harmonic
  // sections survive and actually feed letters into the gluing words; the
  // other half keep a generic holonomy with an empty fixed space.
  Mat closing(const std::vector<Mat>& path) {
    if (std::uniform_int_distribution<int>(0, 1)(*rng) == 0) return random_unitary(*rng, rank);
    Mat prod = Mat::Identity(rank, rank);
    for (const Mat& u : path) prod = u * prod;
    return prod.adjoint();
  }

  void loop02() {
    Eigen::Index a = add_point(t.x01.in, false), b = add_point(t.x01.in, true);
    Mat u = random_unitary(*rng, rank);
    t.x01.edges.push_back(edge_u({false, a}, {false, b}, u));
    t.x12.edges.push_back(edge_u({true, b}, {true, a}, closing({u})));
  }
  void loop13() {
    Eigen::Index a = add_point(t.x12.in, false), b = add_point(t.x12.in, true);
    Mat u = random_unitary(*rng, rank);
    t.x12.edges.push_back(edge_u({false, a}, {false, b}, u));
    t.x23.edges.push_back(edge_u({true, b}, {true, a}, closing({u})));
  }
  void loop_r() {
    Eigen::Index p0 = add_point(t.x01.in, false), p1 = add_point(t.x01.in, true);
    Eigen::Index q0 = add_point(t.x12.in, false), q1 = add_point(t.x12.in, true);
    Mat ua = random_unitary(*rng, rank), uc = random_unitary(*rng, rank);
    Mat ud = random_unitary(*rng, rank);
    t.x01.edges.push_back(edge_u({false, p0}, {false, p1}, ua));
    t.x12.edges.push_back(edge_u({false, q0}, {true, p0}, closing({ua, uc, ud})));
    t.x12.edges.push_back(edge_u({true, p1}, {false, q1}, uc));
    t.x23.edges.push_back(edge_u({true, q1}, {true, q0}, ud));
  }
  void interval() {
    Eigen::Index o = add_point(t.x01.out, false), m1 = add_point(t.x01.in, false);
    Eigen::Index m2 = add_point(t.x12.in, false), i3 = add_point(t.x23.in, false);
    t.x01.edges.push_back(edge({false, m1}, {true, o}));
    t.x12.edges.push_back(edge({false, m2}, {true, m1}));
    t.x23.edges.push_back(edge({false, i3}, {true, m2}));
  }
  void outer01() {
    Eigen::Index a = add_point(t.x01.out, true), b = add_point(t.x01.out, false);
    t.x01.edges.push_back(edge({true, a}, {true, b}));
  }
  void outer23() {
    Eigen::Index a = add_point(t.x23.in, false), b = add_point(t.x23.in, true);
    t.x23.edges.push_back(edge({false, a}, {false, b}));
  }
};

}  // namespace

ToyTriple toy_triple(Rng& rng, const ToyTripleSpec& spec) {
  TripleBuilder b;
  b.rank = spec.rank;
  b.rng = &rng;
  b.max_sites = spec.max_sites;
  for (int i = 0; i < spec.n02; ++i) b.loop02();
  for (int i = 0; i < spec.nr; ++i) b.loop_r();
  for (int i = 0; i < spec.n13; ++i) b.loop13();
  for (int i = 0; i < spec.intervals; ++i) b.interval();
  for (int i = 0; i < spec.outer_arcs01; ++i) b.outer01();
  for (int i = 0; i < spec.outer_arcs23; ++i) b.outer23();
  b.t.x12.out = b.t.x01.in;
  b.t.x23.out = b.t.x12.in;
  return b.t;
}

}  // namespace anomaly

#include "anomaly/toy.hpp"

#include <algorithm>
#include <tuple>

namespace anomaly {

Eigen::Index ToyObject::dim() const {
  Eigen::Index d = 0;
  for (const PointObject& p : points) d += 2 * p.rank;
  return d;
}

Eigen::Index ToyObject::offset(Eigen::Index point) const {
  Eigen::Index d = 0;
  for (Eigen::Index i = 0; i < point; ++i) d += 2 * points[static_cast<std::size_t>(i)].rank;
  return d;
}

Mat point_conjugation(Eigen::Index rank) {
  Mat c = Mat::Zero(2 * rank, 2 * rank);
  c.topRightCorner(rank, rank) = cxd(0, -1) * Mat::Identity(rank, rank);
  c.bottomLeftCorner(rank, rank) = cxd(0, -1) * Mat::Identity(rank, rank);
  return c;
}

Mat chart_transfer(const Mat& u) {
  Eigen::Index r = u.rows();
  Mat q = Mat::Zero(2 * r, 2 * r);
  q.topLeftCorner(r, r) = u;
  q.bottomRightCorner(r, r) = u.conjugate();
  return q;
}

RSpace object_space(const ToyObject& y) {
  Mat c = Mat::Zero(y.dim(), y.dim());
  Eigen::Index off = 0;
  for (const PointObject& p : y.points) {
    Mat cp = point_conjugation(p.rank);
    c.block(off, off, 2 * p.rank, 2 * p.rank) = p.dual ? Mat(-cp) : cp;
    off += 2 * p.rank;
  }
  return make_rspace(c);
}

namespace {

// s = -1 endpoints emit a strand, s = +1 endpoints absorb one
int end_sign(bool on_out, bool dual) { return (on_out ? 1 : -1) * (dual ? -1 : 1); }

const ToyObject& side_object(const ToyBordism& x, bool on_out) { return on_out ? x.out : x.in; }

const PointObject& end_point(const ToyBordism& x, const EdgeEnd& e) {
  const ToyObject& obj = side_object(x, e.on_out);
  if (e.point < 0 || e.point >= static_cast<Eigen::Index>(obj.points.size()))
    throw InvalidTransfer("edge endpoint out of range");
  return obj.points[static_cast<std::size_t>(e.point)];
}

void check_unitary(const Mat& u, Eigen::Index rank, const char* what) {
  if (u.rows() != rank || u.cols() != rank) throw InvalidTransfer(std::string(what) + " has wrong size");
  if (max_abs(Mat(u.adjoint() * u - Mat::Identity(rank, rank))) > 1e-12)
    throw InvalidTransfer(std::string(what) + " is not unitary");
}

Eigen::Index block_offset(const ToyBordism& x, const EdgeEnd& e) {
  return e.on_out ? x.out.offset(e.point) : x.out.dim() + x.in.offset(e.point);
}

// Fixed space of a unitary transfer.  The singular values of t - id live on
// an O(1) scale, so the cut is absolute: a relative cut would discard the
// whole fixed space when a reassembled trivial holonomy is off by rounding.
Mat transfer_fixed_frame(const Mat& t, double rank_tol) {
  Eigen::Index d = t.rows();
  Eigen::JacobiSVD<Mat> svd(Mat(t - Mat::Identity(d, d)), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol) ++rank;
  return svd.matrixV().rightCols(d - rank);
}

}  // namespace

void validate_bordism(const ToyBordism& x) {
  for (const PointObject& p : x.out.points)
    if (p.rank < 1) throw InvalidTransfer("point rank must be positive");
  for (const PointObject& p : x.in.points)
    if (p.rank < 1) throw InvalidTransfer("point rank must be positive");
  std::vector<int> seen_out(x.out.points.size(), 0), seen_in(x.in.points.size(), 0);
  for (const ToyEdge& e : x.edges) {
    const PointObject& pf = end_point(x, e.from);
    const PointObject& pt = end_point(x, e.to);
    if (pf.rank != pt.rank) throw InvalidTransfer("edge endpoints have different ranks");
    check_unitary(e.u, pf.rank, "transfer");
    if (e.sites < 1) throw InvalidTransfer("edge needs at least one site");
    if (end_sign(e.from.on_out, pf.dual) != -1)
      throw InvalidTransfer("edge starts at an absorbing endpoint");
    if (end_sign(e.to.on_out, pt.dual) != 1)
      throw InvalidTransfer("edge ends at an emitting endpoint");
    (e.from.on_out ? seen_out : seen_in)[static_cast<std::size_t>(e.from.point)] += 1;
    (e.to.on_out ? seen_out : seen_in)[static_cast<std::size_t>(e.to.point)] += 1;
  }
  for (int s : seen_out)
    if (s != 1) throw InvalidTransfer("target boundary point not covered exactly once");
  for (int s : seen_in)
    if (s != 1) throw InvalidTransfer("source boundary point not covered exactly once");
  for (const ToyCircle& c : x.circles) {
    check_unitary(c.holonomy, c.holonomy.rows(), "holonomy");
    if (c.holonomy.rows() < 1) throw InvalidTransfer("circle rank must be positive");
    if (c.sites < 1) throw InvalidTransfer("circle needs at least one site");
  }
}

ToyBoundary boundary_lagrangian(const ToyBordism& x, const Tol& tol) {
  validate_bordism(x);
  RSpace wout = object_space(x.out), win = object_space(x.in);
  Eigen::Index amb = wout.dim + win.dim;
  Eigen::Index ncols = 0;
  for (const ToyEdge& e : x.edges) ncols += 2 * e.u.rows();
  Mat cols = Mat::Zero(amb, ncols);
  Eigen::Index c = 0;
  for (const ToyEdge& e : x.edges) {
    Eigen::Index r = e.u.rows();
    cols.block(block_offset(x, e.from), c, 2 * r, 2 * r) = Mat::Identity(2 * r, 2 * r);
    cols.block(block_offset(x, e.to), c, 2 * r, 2 * r) = chart_transfer(e.u);
    c += 2 * r;
  }
  ToyBoundary b;
  b.l = LagrangianRelation{wout, win, orthonormalize(cols, tol.rank_tol)};
  if (!is_lagrangian(relation_ambient(b.l), b.l.space, tol).pass)
    throw InvalidTransfer("boundary relation is not lagrangian");
  for (const ToyCircle& circ : x.circles) {
    Mat ker = transfer_fixed_frame(chart_transfer(circ.holonomy), tol.rank_tol);
    b.circle_kernels.push_back(ker / std::sqrt(static_cast<double>(circ.sites)));
    b.circle_sites.push_back(circ.sites);
  }
  return b;
}

TwistValue twist(const ToyBordism& x, const Tol& tol) {
  TwistValue t;
  t.boundary = boundary_lagrangian(x, tol);
  t.fock = make_fock(relation_ambient(t.boundary.l), t.boundary.l.space, tol);
  return t;
}

namespace {

struct Slot {
  Eigen::Index piece = -1, edge = -1;
  bool at_to = false;
};

struct Location {
  bool outer = false;
  bool outer_out = false;   // valid when outer
  Eigen::Index interface = -1;  // valid when not outer
  Eigen::Index point = 0;
};

Location locate(Eigen::Index n_pieces, Eigen::Index piece, const EdgeEnd& end) {
  Location loc;
  loc.point = end.point;
  if (end.on_out) {
    if (piece == 0)
      loc.outer = loc.outer_out = true;
    else
      loc.interface = piece - 1;
  } else {
    if (piece == n_pieces - 1)
      loc.outer = true;
    else
      loc.interface = piece;
  }
  return loc;
}

}  // namespace

ChainAnalysis analyze_chain(const std::vector<const ToyBordism*>& pieces) {
  if (pieces.empty()) throw std::invalid_argument("analyze_chain: no pieces");
  const Eigen::Index np = static_cast<Eigen::Index>(pieces.size());
  for (const ToyBordism* p : pieces) validate_bordism(*p);
  for (Eigen::Index i = 0; i + 1 < np; ++i) {
    const auto& a = pieces[static_cast<std::size_t>(i)]->in.points;
    const auto& b = pieces[static_cast<std::size_t>(i + 1)]->out.points;
    bool ok = a.size() == b.size();
    for (std::size_t j = 0; ok && j < a.size(); ++j)
      ok = a[j].rank == b[j].rank && a[j].dual == b[j].dual;
    if (!ok) throw InvalidTransfer("analyze_chain: interface mismatch");
  }

  std::vector<std::vector<std::array<Slot, 2>>> iface(static_cast<std::size_t>(np - 1));
  for (Eigen::Index j = 0; j + 1 < np; ++j)
    iface[static_cast<std::size_t>(j)].resize(pieces[static_cast<std::size_t>(j)]->in.points.size());
  std::vector<Slot> outer_out(pieces.front()->out.points.size());
  std::vector<Slot> outer_in(pieces.back()->in.points.size());

  for (Eigen::Index pi = 0; pi < np; ++pi) {
    const ToyBordism& x = *pieces[static_cast<std::size_t>(pi)];
    for (Eigen::Index ei = 0; ei < static_cast<Eigen::Index>(x.edges.size()); ++ei) {
      for (bool at_to : {false, true}) {
        const EdgeEnd& end = at_to ? x.edges[static_cast<std::size_t>(ei)].to
                                   : x.edges[static_cast<std::size_t>(ei)].from;
        Location loc = locate(np, pi, end);
        Slot slot{pi, ei, at_to};
        if (loc.outer)
          (loc.outer_out ? outer_out : outer_in)[static_cast<std::size_t>(loc.point)] = slot;
        else
          iface[static_cast<std::size_t>(loc.interface)][static_cast<std::size_t>(loc.point)]
               [end.on_out ? 1 : 0] = slot;
      }
    }
  }

  std::vector<std::vector<char>> visited(static_cast<std::size_t>(np));
  for (Eigen::Index pi = 0; pi < np; ++pi)
    visited[static_cast<std::size_t>(pi)].assign(pieces[static_cast<std::size_t>(pi)]->edges.size(), 0);

  // walk the strand starting at the from-end of (pi, ei); on_cross returns
  // true to stop at that interface arrival; otherwise stops on outer arrival
  auto walk = [&](Eigen::Index pi, Eigen::Index ei, auto&& on_edge, auto&& on_cross) -> Location {
    while (true) {
      visited[static_cast<std::size_t>(pi)][static_cast<std::size_t>(ei)] = 1;
      const ToyEdge& e = pieces[static_cast<std::size_t>(pi)]->edges[static_cast<std::size_t>(ei)];
      on_edge(e);
      Location loc = locate(np, pi, e.to);
      if (loc.outer) return loc;
      if (on_cross(loc)) return loc;
      const auto& pair =
          iface[static_cast<std::size_t>(loc.interface)][static_cast<std::size_t>(loc.point)];
      Slot next = pair[e.to.on_out ? 0 : 1];
      if (next.piece < 0 || next.at_to)
        throw InvalidTransfer("analyze_chain: interface flow mismatch");
      pi = next.piece;
      ei = next.edge;
    }
  };

  ChainAnalysis out;

  auto start_chain = [&](const Slot& s, EdgeEnd start_address) {
    if (s.piece < 0 || s.at_to) return;  // strand ends here; handled from its start
    const ToyEdge& first =
        pieces[static_cast<std::size_t>(s.piece)]->edges[static_cast<std::size_t>(s.edge)];
    Eigen::Index r = first.u.rows();
    Mat u = Mat::Identity(r, r);
    Eigen::Index sites = 0;
    Location fin = walk(
        s.piece, s.edge,
        [&](const ToyEdge& e) {
          u = e.u * u;
          sites += e.sites;
        },
        [](const Location&) { return false; });
    out.merged.push_back(ToyEdge{start_address, EdgeEnd{fin.outer_out, fin.point}, u, sites});
  };
  for (std::size_t p = 0; p < outer_out.size(); ++p)
    start_chain(outer_out[p], EdgeEnd{true, static_cast<Eigen::Index>(p)});
  for (std::size_t p = 0; p < outer_in.size(); ++p)
    start_chain(outer_in[p], EdgeEnd{false, static_cast<Eigen::Index>(p)});

  for (Eigen::Index pi = 0; pi < np; ++pi) {
    const ToyBordism& x = *pieces[static_cast<std::size_t>(pi)];
    for (Eigen::Index ei = 0; ei < static_cast<Eigen::Index>(x.edges.size()); ++ei) {
      if (visited[static_cast<std::size_t>(pi)][static_cast<std::size_t>(ei)]) continue;
      const ToyEdge& e0 = x.edges[static_cast<std::size_t>(ei)];
      Location start = locate(np, pi, e0.from);
      if (start.outer) throw InvalidTransfer("analyze_chain: dangling strand");
      Eigen::Index r = e0.u.rows();
      Mat u = Mat::Identity(r, r);
      Eigen::Index sites = 0;
      std::vector<InterfaceCrossing> raw;
      walk(
          pi, ei,
          [&](const ToyEdge& e) {
            u = e.u * u;
            sites += e.sites;
          },
          [&](const Location& loc) {
            raw.push_back({loc.interface, loc.point, u});
            return loc.interface == start.interface && loc.point == start.point;
          });
      std::size_t b = 0;
      for (std::size_t j = 1; j < raw.size(); ++j)
        if (std::tuple(raw[j].interface, raw[j].point) < std::tuple(raw[b].interface, raw[b].point))
          b = j;
      Mat cb_inv = raw[b].transport.adjoint();
      LoopRecord rec;
      rec.rank = r;
      rec.sites = sites;
      rec.holonomy = raw[b].transport * raw.back().transport * cb_inv;
      for (std::size_t t = 0; t < raw.size(); ++t) {
        const InterfaceCrossing& cr = raw[(b + t) % raw.size()];
        rec.crossings.push_back({cr.interface, cr.point, cr.transport * cb_inv});
      }
      out.loops.push_back(std::move(rec));
    }
  }
  std::stable_sort(out.loops.begin(), out.loops.end(), [](const LoopRecord& a, const LoopRecord& b) {
    return std::tuple(a.crossings.front().interface, a.crossings.front().point) <
           std::tuple(b.crossings.front().interface, b.crossings.front().point);
  });
  return out;
}

GluedBordism glue_bordisms(const ToyBordism& x0, const ToyBordism& x1) {
  ChainAnalysis an = analyze_chain({&x0, &x1});
  GluedBordism g;
  g.glued.out = x0.out;
  g.glued.in = x1.in;
  g.glued.edges = an.merged;
  g.glued.circles = x0.circles;
  g.glued.circles.insert(g.glued.circles.end(), x1.circles.begin(), x1.circles.end());
  for (const LoopRecord& loop : an.loops)
    g.glued.circles.push_back(ToyCircle{loop.holonomy, loop.sites});
  g.formed = an.loops;
  return g;
}

Mat loop_kernel_basis(const LoopRecord& loop, double rank_tol) {
  Mat ker = transfer_fixed_frame(chart_transfer(loop.holonomy), rank_tol);
  return ker / std::sqrt(static_cast<double>(loop.sites));
}

Mat restriction_values(const LoopRecord& loop, const Mat& kernel_basis,
                       Eigen::Index interface, const ToyObject& z) {
  Mat out = Mat::Zero(z.dim(), kernel_basis.cols());
  for (const InterfaceCrossing& cr : loop.crossings)
    if (cr.interface == interface)
      out.block(z.offset(cr.point), 0, 2 * loop.rank, kernel_basis.cols()) =
          chart_transfer(cr.transport) * kernel_basis;
  return out;
}

namespace {

bool same_points(const ToyObject& a, const ToyObject& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (a.points[i].rank != b.points[i].rank || a.points[i].dual != b.points[i].dual) return false;
  return true;
}

Mat stack_restrictions(const std::vector<LoopRecord>& loops, Eigen::Index interface,
                       const ToyObject& z, double rank_tol) {
  Mat out(z.dim(), 0);
  for (const LoopRecord& loop : loops) {
    Mat kb = loop_kernel_basis(loop, rank_tol);
    Mat rv = restriction_values(loop, kb, interface, z);
    Mat grown(out.rows(), out.cols() + rv.cols());
    grown << out, rv;
    out = std::move(grown);
  }
  return out;
}

}  // namespace

TauResult tau(const ToyBordism& x, const ToyBordism& x0, const ToyBordism& x1, const Tol& tol) {
  validate_bordism(x);
  TauResult res;
  res.glued = glue_bordisms(x0, x1);
  const ToyBordism& gx = res.glued.glued;
  double slack = 100.0 * tol.residual_tol;

  if (!same_points(x.out, gx.out) || !same_points(x.in, gx.in))
    throw CutMismatch("tau: boundary objects differ");
  ToyBoundary bx = boundary_lagrangian(x, tol);
  ToyBoundary bg = boundary_lagrangian(gx, tol);
  if (!subspace_equal(bx.l.space, bg.l.space, slack))
    throw CutMismatch("tau: boundary relations differ");
  if (x.circles.size() != gx.circles.size()) throw CutMismatch("tau: circle counts differ");
  auto circle_keys = [](const ToyBordism& b) {
    std::vector<std::tuple<Eigen::Index, Eigen::Index, double, double>> keys;
    for (const ToyCircle& c : b.circles)
      keys.emplace_back(c.holonomy.rows(), c.sites, c.holonomy.trace().real(),
                        c.holonomy.trace().imag());
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  auto ka = circle_keys(x), kb = circle_keys(gx);
  for (std::size_t i = 0; i < ka.size(); ++i) {
    bool ok = std::get<0>(ka[i]) == std::get<0>(kb[i]) && std::get<1>(ka[i]) == std::get<1>(kb[i]) &&
              std::abs(std::get<2>(ka[i]) - std::get<2>(kb[i])) <= 1e-9 &&
              std::abs(std::get<3>(ka[i]) - std::get<3>(kb[i])) <= 1e-9;
    if (!ok) throw CutMismatch("tau: circle data differs");
  }

  ToyBoundary b0 = boundary_lagrangian(x0, tol);
  ToyBoundary b1 = boundary_lagrangian(x1, tol);
  GlueResult g;
  g.comp = compose(b0.l, b1.l, tol);
  if (!g.comp.composed_report.pass)
    throw CompositionNotLagrangian("tau: composite fails the lagrangian test");
  g.tensor = tensor_over_clifford(b0.l, b1.l, tol);

  const ToyObject& z = x0.in;
  Mat rmat = stack_restrictions(res.glued.formed, 0, z, tol.rank_tol);
  res.h_dim = rmat.cols();
  if (res.h_dim > 0) {
    SvdResult sg = svd_thin(rmat);
    if (sg.sv(sg.sv.size() - 1) <= tol.rank_tol * std::max(1.0, sg.sv(0)))
      throw GluingDegenerate("tau: restriction map is singular");
    res.det_factor = Mat(rmat.adjoint() * rmat).determinant().real();
  }
  g.k_basis = rmat;
  std::vector<Vec> words;
  for (Eigen::Index j = 0; j < rmat.cols(); ++j) words.push_back(rmat.col(j));
  g.generator = generator_image(g.tensor, words) / res.det_factor;
  if (g.generator.norm() <= tol.residual_tol)
    throw GluingDegenerate("tau: generator image vanishes");
  g.f02 = make_fock(relation_ambient(g.comp.composed), g.comp.composed.space, tol);
  g.alpha = alpha_from_generator(g.tensor, g.comp.composed.space, g.generator);
  res.glue = std::move(g);
  return res;
}

TransversalityReport cobordism_transversality_check(const ToyBordism& x0, const ToyBordism& x1,
                                                    const Tol& tol) {
  if (!x0.out.points.empty() || !x1.in.points.empty())
    throw std::invalid_argument("cobordism_transversality_check: double must be closed");
  GluedBordism g = glue_bordisms(x0, x1);
  ToyBoundary b0 = boundary_lagrangian(x0, tol);
  ToyBoundary b1 = boundary_lagrangian(x1, tol);
  CompositionResult comp = compose(b0.l, b1.l, tol);

  TransversalityReport rep;
  rep.dim_k = comp.k_space.dim();
  Subspace inter = intersect(b0.l.space, b1.l.space, tol.rank_tol);
  rep.intersection_residual = projector_distance(inter, comp.k_space);
  const ToyObject& z = x0.in;
  Subspace rspan = orthonormalize(stack_restrictions(g.formed, 0, z, tol.rank_tol), tol.rank_tol);
  rep.restriction_residual = projector_distance(rspan, comp.k_space);
  RSpace wz = object_space(z);
  Subspace sum = subspace_sum(b0.l.space, b1.l.space, tol.rank_tol);
  Subspace target =
      orthogonal_complement(conjugate_subspace(wz, comp.k_space), tol.rank_tol);
  rep.sum_residual = projector_distance(sum, target);
  rep.pass = rep.intersection_residual <= tol.residual_tol &&
             rep.restriction_residual <= tol.residual_tol &&
             rep.sum_residual <= tol.residual_tol;
  return rep;
}

ToyCoherenceReport toy_coherence_check(const ToyBordism& x01, const ToyBordism& x12,
                                       const ToyBordism& x23, const Tol& tol) {
  if (!x01.circles.empty() || !x12.circles.empty() || !x23.circles.empty())
    throw std::invalid_argument("toy_coherence_check: pieces must be circle-free");
  ChainAnalysis an = analyze_chain({&x01, &x12, &x23});

  std::vector<LoopRecord> g02, gr, g13;
  for (LoopRecord& loop : an.loops) {
    bool y1 = false, y2 = false;
    for (const InterfaceCrossing& cr : loop.crossings) (cr.interface == 0 ? y1 : y2) = true;
    (y1 && y2 ? gr : y1 ? g02 : g13).push_back(std::move(loop));
  }

  const ToyObject& y1 = x01.in;
  const ToyObject& y2 = x12.in;
  auto collect = [&](const std::vector<const std::vector<LoopRecord>*>& groups,
                     Eigen::Index interface, const ToyObject& z) {
    Mat out(z.dim(), 0);
    for (const auto* grp : groups) {
      Mat m = stack_restrictions(*grp, interface, z, tol.rank_tol);
      Mat grown(out.rows(), out.cols() + m.cols());
      grown << out, m;
      out = std::move(grown);
    }
    return out;
  };
  Mat w013 = collect({&g02, &gr}, 0, y1);
  Mat w123 = collect({&g13}, 1, y2);
  Mat w023 = collect({&gr, &g13}, 1, y2);
  Mat w012 = collect({&g02}, 0, y1);

  auto gram_det = [](const Mat& m) {
    return m.cols() == 0 ? 1.0 : Mat(m.adjoint() * m).determinant().real();
  };
  double d_m1 = gram_det(w013), d_13 = gram_det(w123);
  double d_02 = gram_det(w012), d_m2 = gram_det(w023);

  ToyBoundary b01 = boundary_lagrangian(x01, tol);
  ToyBoundary b12 = boundary_lagrangian(x12, tol);
  ToyBoundary b23 = boundary_lagrangian(x23, tol);
  CoherenceEngine eng = make_coherence_engine(b01.l, b12.l, b23.l, tol);

  ToyCoherenceReport rep;
  rep.n02 = w012.cols();
  rep.nr = w013.cols() - w012.cols();
  rep.n13 = w123.cols();
  double slack = 100.0 * tol.residual_tol;
  auto span_dist = [&](const Mat& cols, const Subspace& s) {
    return projector_distance(orthonormalize(cols, tol.rank_tol), s);
  };
  rep.span_residual = std::max({span_dist(w012, eng.ch.k012), span_dist(w013, eng.ch.k013),
                                span_dist(w123, eng.ch.k123), span_dist(w023, eng.ch.k023)});

  auto to_words = [](const Mat& m) {
    std::vector<Vec> w;
    for (Eigen::Index j = 0; j < m.cols(); ++j) w.push_back(m.col(j));
    return w;
  };
  Mat right_raw = eng.path_right(to_words(w013), to_words(w123));
  Mat left_raw = eng.path_left(to_words(w023), to_words(w012), static_cast<int>(rep.n02));
  double reorder = ((rep.n02 * (rep.nr + rep.n13)) % 2) ? -1.0 : 1.0;

  rep.det_right = d_m1 * d_13;
  rep.det_left = d_02 * d_m2;
  Mat right = right_raw / rep.det_right;
  Mat left = (reorder / rep.det_left) * left_raw;
  rep.path_difference = max_abs(left - right);
  rep.path_scale = max_abs(right);
  rep.negative_control_residual = max_abs(Mat(reorder * left_raw - right_raw));
  rep.det_ratio = rep.det_left / rep.det_right;

  double coherence_tol = 10.0 * tol.residual_tol;
  rep.pass = rep.path_difference <= coherence_tol && rep.span_residual <= slack;
  if (std::abs(rep.det_ratio - 1.0) > 1e-6)
    rep.pass = rep.pass && rep.negative_control_residual >=
                               0.5 * std::abs(rep.det_ratio - 1.0) * max_abs(right_raw);
  return rep;
}

}  // namespace anomaly

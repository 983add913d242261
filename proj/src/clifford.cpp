#include "anomaly/clifford.hpp"

#include <bit>

namespace anomaly {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// sign of moving frame vector j past the occupied slots below it
double slot_sign(std::uint32_t mask, Eigen::Index j) {
  std::uint32_t below = mask & ((1u << j) - 1u);
  return (popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

int FockModule::parity(Eigen::Index idx) const {
  return popcount(basis[static_cast<std::size_t>(idx)]) % 2;
}

Vec FockModule::vacuum() const {
  Vec v = Vec::Zero(dim());
  v(0) = 1.0;
  return v;
}

Mat FockModule::generator_action(const Vec& v) const {
  if (v.size() != w.dim) throw std::invalid_argument("generator_action: wrong ambient size");
  Vec p_coeff = l.frame.adjoint() * v;           // coords of P_l v
  Vec p = l.frame * p_coeff;
  Vec q = w.conjugate(v - p);                    // in l again
  Vec q_coeff = l.frame.adjoint() * q;
  Mat op = Mat::Zero(dim(), dim());
  for (Eigen::Index j = 0; j < k; ++j) {
    if (std::abs(p_coeff(j)) > 0.0) op += p_coeff(j) * wedge[static_cast<std::size_t>(j)];
    if (std::abs(q_coeff(j)) > 0.0)
      op += std::conj(q_coeff(j)) * insert[static_cast<std::size_t>(j)];
  }
  return op;
}

FockModule make_fock(const RSpace& w, const Subspace& l, const Tol& tol) {
  IsLagrangianReport rep = is_lagrangian(w, l, tol);
  if (!rep.pass) throw std::invalid_argument("make_fock: subspace is not Lagrangian");
  FockModule f;
  f.w = w;
  f.l = l;
  f.k = l.dim();
  if (f.k > 12) throw std::invalid_argument("make_fock: rank too large");
  const Eigen::Index d = Eigen::Index(1) << f.k;

  f.basis.reserve(static_cast<std::size_t>(d));
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d); ++m) f.basis.push_back(m);
  std::stable_sort(f.basis.begin(), f.basis.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  f.index_of.assign(static_cast<std::size_t>(d), 0);
  for (Eigen::Index i = 0; i < d; ++i) f.index_of[f.basis[static_cast<std::size_t>(i)]] = i;

  f.grading = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    f.grading(i, i) = (popcount(f.basis[static_cast<std::size_t>(i)]) % 2 == 0) ? 1.0 : -1.0;

  for (Eigen::Index j = 0; j < f.k; ++j) {
    Mat cr = Mat::Zero(d, d);
    Mat an = Mat::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      std::uint32_t m = f.basis[static_cast<std::size_t>(b)];
      if (!(m >> j & 1u)) {
        Eigen::Index t = f.index_of[m | (1u << j)];
        cr(t, b) = slot_sign(m, j);
      } else {
        Eigen::Index t = f.index_of[m & ~(1u << j)];
        an(t, b) = slot_sign(m, j);
      }
    }
    f.wedge.push_back(std::move(cr));
    f.insert.push_back(std::move(an));
  }
  return f;
}

Mat left_act(const FockModule& f, const LagrangianRelation& rel, const Vec& w_left_vec) {
  Vec v = Vec::Zero(f.w.dim);
  v.topRows(rel.w_left.dim) = w_left_vec;
  return f.generator_action(v);
}

Mat right_act(const FockModule& f, const LagrangianRelation& rel, const Vec& w_right_vec) {
  Vec v = Vec::Zero(f.w.dim);
  v.bottomRows(rel.w_right.dim) = w_right_vec;
  // x . w = (-1)^|x| (0, w) . x : grading first, then the generator
  return f.generator_action(v) * f.grading;
}

ModuleRep fock_module_rep(const FockModule& f) {
  ModuleRep m;
  m.dim = f.dim();
  m.act = [&f](const Vec& v) { return f.generator_action(v); };
  return m;
}

Subspace pfaffian_line(const RSpace& w, const Subspace& l, const ModuleRep& m,
                       double rank_tol) {
  const Eigen::Index kk = l.dim();
  if (kk == 0) return full_subspace(m.dim);
  Mat stacked(m.dim * kk, m.dim);
  for (Eigen::Index j = 0; j < kk; ++j)
    stacked.middleRows(m.dim * j, m.dim) = m.act(w.conjugate(l.frame.col(j)));
  return kernel(stacked, rank_tol);
}

Mat hom_from_pfaffian(const Subspace& l, const ModuleRep& m, const Vec& m0) {
  const Eigen::Index kk = l.dim();
  const Eigen::Index d = Eigen::Index(1) << kk;
  std::vector<Mat> act(static_cast<std::size_t>(kk));
  for (Eigen::Index j = 0; j < kk; ++j) act[static_cast<std::size_t>(j)] = m.act(l.frame.col(j));

  // basis ordering must match FockModule: (popcount, bitmask)
  std::vector<std::uint32_t> order;
  order.reserve(static_cast<std::size_t>(d));
  for (std::uint32_t mm = 0; mm < static_cast<std::uint32_t>(d); ++mm) order.push_back(mm);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  Mat out(m.dim, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    std::uint32_t mask = order[static_cast<std::size_t>(c)];
    Vec v = m0;
    // apply highest set bit first so the lowest index ends up outermost
    for (Eigen::Index j = kk - 1; j >= 0; --j)
      if (mask >> j & 1u) v = act[static_cast<std::size_t>(j)] * v;
    out.col(c) = v;
  }
  return out;
}

Mat CarOperators::annihilate(const Vec& v) const {
  Vec amb = Vec::Zero(2 * v_dim);
  amb.topRows(v_dim) = v;
  return fock.generator_action(amb);
}

Mat CarOperators::create(const Vec& v) const {
  Vec amb = Vec::Zero(2 * v_dim);
  amb.bottomRows(v_dim) = v.conjugate();
  return fock.generator_action(amb);
}

CarOperators car_operators(Eigen::Index v_dim, const Tol& tol) {
  CarOperators c;
  c.v_dim = v_dim;
  c.doubled = flip_space(v_dim);
  c.fock = make_fock(c.doubled, reference_lagrangian(c.doubled), tol);
  return c;
}

}  // namespace anomaly

#include "silting/ar.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace silting {

MinPresentation min_presentation(const Representation& x) {
  MinPresentation mp;
  ProjCover c0 = projective_cover(x);
  ModuleMap inc;
  Representation syz = kernel_rep(c0.proj, x, c0.onto, &inc);
  ProjCover c1 = projective_cover(syz);
  // d = inclusion . cover(syz): P1 -> P0
  ModuleMap d = compose(inc, c1.onto);
  mp.d = ProjMap::from_module_map(x.alg, c1.vertices, c0.vertices, d);
  mp.cover = c0.onto;
  mp.p1 = c1.proj;
  mp.p0 = c0.proj;
  return mp;
}

Representation tau(const Representation& x) {
  if (x.is_zero()) return zero_rep(x.alg);
  MinPresentation mp = min_presentation(x);
  if (mp.p1.is_zero()) return zero_rep(x.alg);  // projective
  ModuleMap nf = nakayama_map(mp.d);
  Representation nu1 = injective_sum(x.alg, mp.d.dom);
  Representation nu0 = injective_sum(x.alg, mp.d.cod);
  return kernel_rep(nu1, nu0, nf, nullptr);
}

Representation tau_inv(const Representation& x) {
  if (x.is_zero()) return zero_rep(x.alg);
  Representation d = dual_rep(x);
  Representation td = tau(d);
  if (td.is_zero()) return zero_rep(x.alg);
  Representation back = dual_rep(td);
  if (back.alg != x.alg)
    throw std::logic_error("opposite algebra round trip lost identity");
  return back;
}

namespace {

// the unique scalar making f - lambda id nilpotent (split local End)
Fp local_character(const Representation& y, const ModuleMap& f) {
  std::uint32_t p = Fp::modulus();
  for (std::uint32_t lv = 0; lv < p; ++lv) {
    Fp lambda(static_cast<long long>(lv));
    ModuleMap s = add(f, scale(-lambda, identity_map(y)));
    ModuleMap pw = s;
    int steps = 0;
    while (!pw.is_zero() && steps < 2 + y.total_dim()) {
      pw = compose(pw, pw);
      ++steps;
    }
    if (pw.is_zero()) return lambda;
  }
  throw std::runtime_error(
      "endomorphism ring is not split local over the prime field");
}

}  // namespace

AlmostSplit almost_split_sequence(const Representation& y) {
  if (y.is_zero()) throw std::invalid_argument("zero module");
  if (!is_indecomposable(y))
    throw std::invalid_argument("module is not indecomposable");
  MinPresentation mp = min_presentation(y);
  if (mp.p1.is_zero()) throw std::invalid_argument("module is projective");

  Representation z = tau(y);
  ModuleMap iota;
  Representation omega = kernel_rep(mp.p0, y, mp.cover, &iota);

  // Ext^1(y, z) = Hom(omega, z) / restrictions of Hom(P0, z)
  auto hom_oz = hom_basis(omega, z);
  if (hom_oz.empty())
    throw std::logic_error("vanishing Ext^1(Y, tau Y) for non-projective Y");
  Mat hom_mat(flatten_map(hom_oz[0]).size(),
              static_cast<Index>(hom_oz.size()));
  for (std::size_t i = 0; i < hom_oz.size(); ++i)
    hom_mat.col(static_cast<Index>(i)) = flatten_map(hom_oz[i]);
  auto hom_p0z = hom_basis(mp.p0, z);
  Mat restr(hom_mat.rows(), static_cast<Index>(hom_p0z.size()));
  for (std::size_t i = 0; i < hom_p0z.size(); ++i)
    restr.col(static_cast<Index>(i)) = flatten_map(compose(hom_p0z[i], iota));
  Mat sub = column_space<Fp>(restr);
  // class representatives: extend sub by hom basis columns
  Mat reps(hom_mat.rows(), 0);
  {
    Mat span = sub;
    for (Index j = 0; j < hom_mat.cols(); ++j) {
      Mat cand = hstack(span, Mat(hom_mat.col(j)));
      if (rank<Fp>(cand) > span.cols()) {
        span = cand;
        reps = hstack(reps, Mat(hom_mat.col(j)));
      }
    }
  }
  if (reps.cols() == 0)
    throw std::logic_error("Ext^1(Y, tau Y) = 0 for non-projective Y");
  Mat class_basis = hstack(sub, reps);
  auto class_coords = [&](const ModuleMap& g) {
    auto c = solve<Fp>(class_basis, flatten_map(g));
    if (!c) throw std::logic_error("extension class outside the hom space");
    return Vec(c->tail(reps.cols()));
  };

  // End(y) acts on classes through lifts to the presentation
  EndAlgebra endy = end_algebra(y);
  auto p0_basis = hom_basis(mp.p0, mp.p0);
  Mat p0_mat(flatten_map(identity_map(mp.p0)).size(),
             static_cast<Index>(p0_basis.size()));
  for (std::size_t i = 0; i < p0_basis.size(); ++i)
    p0_mat.col(static_cast<Index>(i)) = flatten_map(p0_basis[i]);
  auto lift_endo = [&](const ModuleMap& phi) {
    // solve pi . psi = phi . pi over psi in End(P0)
    Mat sys(flatten_map(compose(phi, mp.cover)).size(),
            static_cast<Index>(p0_basis.size()));
    for (std::size_t i = 0; i < p0_basis.size(); ++i)
      sys.col(static_cast<Index>(i)) =
          flatten_map(compose(mp.cover, p0_basis[i]));
    auto c = solve<Fp>(sys, flatten_map(compose(phi, mp.cover)));
    if (!c) throw std::logic_error("projective lifting failed");
    ModuleMap psi = zero_map(mp.p0, mp.p0);
    for (std::size_t i = 0; i < p0_basis.size(); ++i)
      if ((*c)(static_cast<Index>(i)) != Fp(0))
        psi = add(psi, scale((*c)(static_cast<Index>(i)), p0_basis[i]));
    return psi;
  };
  auto restrict_to_omega = [&](const ModuleMap& psi) {
    // solve iota . rho = psi . iota
    ModuleMap target = compose(psi, iota);
    ModuleMap rho;
    for (std::size_t v = 0; v < omega.dims.size(); ++v) {
      auto s = solve_matrix<Fp>(iota.blocks[v], target.blocks[v]);
      if (!s) throw std::logic_error("endomorphism does not preserve syzygy");
      rho.blocks.push_back(*s);
    }
    return rho;
  };

  // radical generators of End(y) act; socle = common kernel
  Mat socle_sys(0, reps.cols());
  for (const auto& f : endy.basis) {
    Fp lambda = local_character(y, f);
    ModuleMap shifted = add(f, scale(-lambda, identity_map(y)));
    if (shifted.is_zero()) continue;
    ModuleMap rho = restrict_to_omega(lift_endo(shifted));
    Mat act(reps.cols(), reps.cols());
    for (Index j = 0; j < reps.cols(); ++j) {
      ModuleMap gj = unflatten_map(omega, z, Vec(reps.col(j)));
      act.col(j) = class_coords(compose(gj, rho));
    }
    socle_sys = vstack(socle_sys, act);
  }
  Vec cls;
  if (socle_sys.rows() == 0) {
    cls = unit_vec(reps.cols(), 0);
  } else {
    Mat soc = kernel_basis<Fp>(socle_sys);
    if (soc.cols() == 0)
      throw std::logic_error("socle of Ext^1(Y, tau Y) vanished");
    cls = soc.col(0);
  }
  ModuleMap g = unflatten_map(omega, z, Vec(reps * cls));

  // pushout of iota along g
  Representation d = direct_sum(z, mp.p0);
  std::vector<Mat> w(d.dims.size());
  for (std::size_t v = 0; v < d.dims.size(); ++v)
    w[v] = vstack(g.blocks[v], Mat(-iota.blocks[v]));
  ModuleMap proj, section;
  Representation middle = quotient_rep(d, w, &proj, &section);

  AlmostSplit seq;
  seq.start = z;
  seq.end = y;
  seq.middle = middle;
  // left: z -> middle
  seq.left.blocks.clear();
  for (std::size_t v = 0; v < d.dims.size(); ++v) {
    Mat inc = Mat::Zero(d.dims[v], z.dims[v]);
    inc.block(0, 0, z.dims[v], z.dims[v]) =
        Mat::Identity(z.dims[v], z.dims[v]);
    seq.left.blocks.push_back(proj.blocks[v] * inc);
  }
  // right: middle -> y via (0, cover) on representatives
  seq.right.blocks.clear();
  for (std::size_t v = 0; v < d.dims.size(); ++v) {
    Mat on_d = Mat::Zero(y.dims[v], d.dims[v]);
    on_d.block(0, z.dims[v], y.dims[v], mp.p0.dims[v]) = mp.cover.blocks[v];
    seq.right.blocks.push_back(on_d * section.blocks[v]);
  }
  if (!is_module_map(z, middle, seq.left) ||
      !is_module_map(middle, y, seq.right))
    throw std::logic_error("almost split maps are not module maps");
  if (middle.total_dim() != z.total_dim() + y.total_dim())
    throw std::logic_error("almost split sequence is not exact");
  if (!compose(seq.right, seq.left).is_zero())
    throw std::logic_error("almost split composite is nonzero");
  if (is_isomorphic(middle, direct_sum(z, y)))
    throw std::logic_error("candidate almost split sequence splits");
  seq.middle_parts = decompose(middle);
  return seq;
}

int IndecCatalog::find(const Representation& x) const {
  for (int i = 0; i < size(); ++i) {
    if (modules[static_cast<std::size_t>(i)].dims != x.dims) continue;
    if (is_isomorphic_indec(modules[static_cast<std::size_t>(i)], x)) return i;
  }
  return -1;
}

IndecCatalog enumerate_indecomposables(AlgebraPtr alg, int bound) {
  IndecCatalog cat;
  cat.alg = alg;
  cat.bound = bound;
  bool overflow = false;
  std::deque<int> todo;

  auto fits = [&](const Representation& x) {
    for (int d : x.dims)
      if (d > bound) return false;
    return true;
  };
  auto add = [&](const Representation& x) {
    if (x.is_zero()) return;
    if (!fits(x)) {
      overflow = true;
      return;
    }
    if (cat.find(x) >= 0) return;
    cat.modules.push_back(x);
    todo.push_back(cat.size() - 1);
  };

  for (int v = 0; v < alg->num_vertices(); ++v) add(simple_rep(alg, v));
  for (int v = 0; v < alg->num_vertices(); ++v) add(projective_rep(alg, v));
  for (int v = 0; v < alg->num_vertices(); ++v) add(injective_rep(alg, v));

  while (!todo.empty()) {
    int i = todo.front();
    todo.pop_front();
    Representation x = cat.modules[static_cast<std::size_t>(i)];
    if (!is_projective(x)) {
      add(tau(x));
      AlmostSplit seq = almost_split_sequence(x);
      for (const auto& part : seq.middle_parts) add(part);
    }
    if (!is_injective(x)) add(tau_inv(x));
  }

  cat.complete = !overflow;

  // canonical order: total dimension, then dimension vector, then the
  // radical-layer string
  std::vector<int> order(cat.modules.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Representation& xa = cat.modules[static_cast<std::size_t>(a)];
    const Representation& xb = cat.modules[static_cast<std::size_t>(b)];
    if (xa.total_dim() != xb.total_dim())
      return xa.total_dim() < xb.total_dim();
    if (xa.dims != xb.dims) return xa.dims < xb.dims;
    return stack_notation(xa) < stack_notation(xb);
  });
  std::vector<Representation> sorted;
  for (int i : order) sorted.push_back(cat.modules[static_cast<std::size_t>(i)]);
  cat.modules = std::move(sorted);

  for (int i = 0; i < cat.size(); ++i) {
    const Representation& x = cat.modules[static_cast<std::size_t>(i)];
    cat.projective.push_back(is_projective(x));
    cat.injective.push_back(is_injective(x));
    if (cat.projective.back()) {
      cat.tau_of.push_back(-1);
    } else {
      cat.tau_of.push_back(cat.find(tau(x)));
    }
  }
  return cat;
}

namespace {

// determinant of an integer matrix by fraction-free elimination
long long int_det(std::vector<std::vector<long long>> m) {
  std::size_t n = m.size();
  long long prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

RepType hereditary_type(const BoundQuiverAlgebra& alg) {
  if (!alg.is_hereditary()) return RepType::Unknown;
  int n = alg.num_vertices();
  // symmetrized Euler form: 2 I - (adjacency + adjacency^T)
  std::vector<std::vector<long long>> g(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) g[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 2;
  for (const auto& a : alg.quiver().arrows) {
    g[static_cast<std::size_t>(a.src)][static_cast<std::size_t>(a.tgt)] -= 1;
    g[static_cast<std::size_t>(a.tgt)][static_cast<std::size_t>(a.src)] -= 1;
  }
  // positive definite iff all leading principal minors are positive
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<long long>> sub(
        static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (int_det(std::move(sub)) <= 0) return RepType::Infinite;
  }
  return RepType::Finite;
}

}  // namespace silting

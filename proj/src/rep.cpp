#include "silting/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace silting {

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::vector<Index> Representation::vertex_offsets() const {
  std::vector<Index> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v)
    off[v + 1] = off[v] + dims[v];
  return off;
}

void Representation::validate() const {
  const Quiver& q = alg->quiver();
  if (static_cast<int>(dims.size()) != q.num_vertices())
    throw std::invalid_argument("wrong number of vertex dimensions");
  if (static_cast<int>(maps.size()) != q.num_arrows())
    throw std::invalid_argument("wrong number of arrow maps");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    const Mat& m = maps[static_cast<std::size_t>(a)];
    if (m.rows() != dims[static_cast<std::size_t>(ar.tgt)] ||
        m.cols() != dims[static_cast<std::size_t>(ar.src)])
      throw std::invalid_argument("arrow map has wrong shape: " + ar.name);
  }
  for (const auto& rel : alg->relations()) {
    int s = rel.front().second.source;
    int t = rel.front().second.target(q);
    Mat acc = Mat::Zero(dims[static_cast<std::size_t>(t)],
                        dims[static_cast<std::size_t>(s)]);
    for (const auto& [c, p] : rel) acc += c * path_action(p);
    if (!silting::is_zero(acc))
      throw std::invalid_argument("representation violates a relation");
  }
}

Mat Representation::path_action(const Path& p) const {
  const Quiver& q = alg->quiver();
  int at = p.source;
  Mat m = Mat::Identity(dims[static_cast<std::size_t>(at)],
                        dims[static_cast<std::size_t>(at)]);
  for (int a : p.word) {
    m = maps[static_cast<std::size_t>(a)] * m;
    at = q.arrows[static_cast<std::size_t>(a)].tgt;
  }
  return m;
}

Mat Representation::element_action(const Vec& x) const {
  auto off = vertex_offsets();
  int n = total_dim();
  Mat act = Mat::Zero(n, n);
  for (int k = 0; k < alg->dim(); ++k) {
    if (x(k) == Fp(0)) continue;
    const Path& p = alg->basis()[static_cast<std::size_t>(k)];
    int s = p.source, t = alg->basis_target(k);
    Mat pa = path_action(p);
    act.block(off[static_cast<std::size_t>(t)], off[static_cast<std::size_t>(s)],
              pa.rows(), pa.cols()) += x(k) * pa;
  }
  return act;
}

std::vector<Mat> Representation::basis_actions() const {
  std::vector<Mat> acts;
  acts.reserve(static_cast<std::size_t>(alg->dim()));
  for (int k = 0; k < alg->dim(); ++k)
    acts.push_back(element_action(unit_vec(alg->dim(), k)));
  return acts;
}

std::string Representation::dim_string() const {
  std::string s = "(";
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(dims[v]);
  }
  return s + ")";
}

Representation zero_rep(AlgebraPtr alg) {
  Representation x;
  x.alg = alg;
  x.dims.assign(static_cast<std::size_t>(alg->num_vertices()), 0);
  for (int a = 0; a < alg->num_arrows(); ++a)
    x.maps.emplace_back(Mat::Zero(0, 0));
  return x;
}

Representation simple_rep(AlgebraPtr alg, int v) {
  Representation x = zero_rep(alg);
  x.dims[static_cast<std::size_t>(v)] = 1;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[static_cast<std::size_t>(a)];
    x.maps[static_cast<std::size_t>(a)] =
        Mat::Zero(x.dims[static_cast<std::size_t>(ar.tgt)],
                  x.dims[static_cast<std::size_t>(ar.src)]);
  }
  return x;
}

std::vector<int> proj_slot_basis(const BoundQuiverAlgebra& alg, int v, int w) {
  return alg.basis_with_source_target(v, w);
}

std::vector<int> inj_slot_basis(const BoundQuiverAlgebra& alg, int v, int w) {
  return alg.basis_with_source_target(w, v);
}

Representation projective_rep(AlgebraPtr alg, int v) {
  const Quiver& q = alg->quiver();
  Representation x;
  x.alg = alg;
  x.dims.resize(static_cast<std::size_t>(q.num_vertices()));
  std::vector<std::vector<int>> slots(
      static_cast<std::size_t>(q.num_vertices()));
  for (int w = 0; w < q.num_vertices(); ++w) {
    slots[static_cast<std::size_t>(w)] = proj_slot_basis(*alg, v, w);
    x.dims[static_cast<std::size_t>(w)] =
        static_cast<int>(slots[static_cast<std::size_t>(w)].size());
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    const auto& src = slots[static_cast<std::size_t>(ar.src)];
    const auto& tgt = slots[static_cast<std::size_t>(ar.tgt)];
    Mat m = Mat::Zero(static_cast<Index>(tgt.size()),
                      static_cast<Index>(src.size()));
    int ab = alg->arrow_basis_index(a);
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [k, coef] : alg->product(src[c], ab)) {
        auto it = std::find(tgt.begin(), tgt.end(), k);
        if (it == tgt.end())
          throw std::logic_error("projective slot bookkeeping broken");
        m(static_cast<Index>(it - tgt.begin()), static_cast<Index>(c)) = coef;
      }
    x.maps.push_back(std::move(m));
  }
  return x;
}

Representation injective_rep(AlgebraPtr alg, int v) {
  const Quiver& q = alg->quiver();
  Representation x;
  x.alg = alg;
  x.dims.resize(static_cast<std::size_t>(q.num_vertices()));
  std::vector<std::vector<int>> slots(
      static_cast<std::size_t>(q.num_vertices()));
  for (int w = 0; w < q.num_vertices(); ++w) {
    slots[static_cast<std::size_t>(w)] = inj_slot_basis(*alg, v, w);
    x.dims[static_cast<std::size_t>(w)] =
        static_cast<int>(slots[static_cast<std::size_t>(w)].size());
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    const auto& src = slots[static_cast<std::size_t>(ar.src)];  // paths src~>v
    const auto& tgt = slots[static_cast<std::size_t>(ar.tgt)];  // paths tgt~>v
    // (phi . a)(m) = phi(a m): transpose of left multiplication by a
    Mat l = Mat::Zero(static_cast<Index>(src.size()),
                      static_cast<Index>(tgt.size()));
    int ab = alg->arrow_basis_index(a);
    for (std::size_t c = 0; c < tgt.size(); ++c)
      for (const auto& [k, coef] : alg->product(ab, tgt[c])) {
        auto it = std::find(src.begin(), src.end(), k);
        if (it == src.end())
          throw std::logic_error("injective slot bookkeeping broken");
        l(static_cast<Index>(it - src.begin()), static_cast<Index>(c)) = coef;
      }
    x.maps.push_back(l.transpose());
  }
  return x;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  Representation s;
  s.alg = x.alg;
  s.dims.resize(x.dims.size());
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    s.dims[v] = x.dims[v] + y.dims[v];
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const Arrow& ar = x.alg->quiver().arrows[static_cast<std::size_t>(a)];
    Mat m = Mat::Zero(s.dims[static_cast<std::size_t>(ar.tgt)],
                      s.dims[static_cast<std::size_t>(ar.src)]);
    const Mat& mx = x.maps[static_cast<std::size_t>(a)];
    const Mat& my = y.maps[static_cast<std::size_t>(a)];
    m.block(0, 0, mx.rows(), mx.cols()) = mx;
    m.block(mx.rows(), mx.cols(), my.rows(), my.cols()) = my;
    s.maps.push_back(std::move(m));
  }
  return s;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum needs an algebra");
  Representation s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s = direct_sum(s, parts[i]);
  return s;
}

Representation algebra_as_module(AlgebraPtr alg) {
  std::vector<Representation> ps;
  for (int v = 0; v < alg->num_vertices(); ++v)
    ps.push_back(projective_rep(alg, v));
  return direct_sum(ps);
}

bool ModuleMap::is_zero() const {
  for (const Mat& b : blocks)
    if (!silting::is_zero(b)) return false;
  return true;
}

ModuleMap zero_map(const Representation& x, const Representation& y) {
  ModuleMap f;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    f.blocks.emplace_back(Mat::Zero(y.dims[v], x.dims[v]));
  return f;
}

ModuleMap identity_map(const Representation& x) {
  ModuleMap f;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    f.blocks.emplace_back(Mat::Identity(x.dims[v], x.dims[v]));
  return f;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] += g.blocks[v];
  return h;
}

ModuleMap scale(Fp c, const ModuleMap& f) {
  ModuleMap h = f;
  for (auto& b : h.blocks) b *= c;
  return h;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  h.blocks.reserve(f.blocks.size());
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks.emplace_back(f.blocks[v] * g.blocks[v]);
  return h;
}

bool is_module_map(const Representation& x, const Representation& y,
                   const ModuleMap& f) {
  const Quiver& q = x.alg->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    Mat lhs = f.blocks[static_cast<std::size_t>(ar.tgt)] *
              x.maps[static_cast<std::size_t>(a)];
    Mat rhs = y.maps[static_cast<std::size_t>(a)] *
              f.blocks[static_cast<std::size_t>(ar.src)];
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_invertible_map(const ModuleMap& f) {
  for (const Mat& b : f.blocks)
    if (!is_invertible(b)) return false;
  return true;
}

ModuleMap inverse_map(const ModuleMap& f) {
  ModuleMap g;
  for (const Mat& b : f.blocks) {
    auto inv = inverse<Fp>(b);
    if (!inv) throw std::invalid_argument("map not invertible");
    g.blocks.push_back(*inv);
  }
  return g;
}

Vec flatten_map(const ModuleMap& f) {
  Index total = 0;
  for (const Mat& b : f.blocks) total += b.rows() * b.cols();
  Vec v(total);
  Index at = 0;
  for (const Mat& b : f.blocks) {
    Vec fb = flatten(b);
    v.segment(at, fb.size()) = fb;
    at += fb.size();
  }
  return v;
}

ModuleMap unflatten_map(const Representation& x, const Representation& y,
                        const Vec& coords) {
  ModuleMap f;
  Index at = 0;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    Index r = y.dims[v], c = x.dims[v];
    f.blocks.push_back(unflatten(Vec(coords.segment(at, r * c)), r, c));
    at += r * c;
  }
  return f;
}

std::vector<ModuleMap> hom_basis(const Representation& x,
                                 const Representation& y) {
  const Quiver& q = x.alg->quiver();
  auto xo = x.vertex_offsets();
  std::vector<Index> uoff(x.dims.size() + 1, 0);
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    uoff[v + 1] = uoff[v] + static_cast<Index>(y.dims[v]) * x.dims[v];
  Index unknowns = uoff.back();
  Index rows = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    rows += static_cast<Index>(y.dims[static_cast<std::size_t>(ar.tgt)]) *
            x.dims[static_cast<std::size_t>(ar.src)];
  }
  Mat sys = Mat::Zero(rows, unknowns);
  Index at = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    Index s = ar.src, t = ar.tgt;
    Index ys = y.dims[static_cast<std::size_t>(s)],
          yt = y.dims[static_cast<std::size_t>(t)];
    Index xs = x.dims[static_cast<std::size_t>(s)],
          xt = x.dims[static_cast<std::size_t>(t)];
    const Mat& xa = x.maps[static_cast<std::size_t>(a)];
    const Mat& ya = y.maps[static_cast<std::size_t>(a)];
    // condition f_t X_a - Y_a f_s = 0, entries (i, j): i < yt, j < xs
    for (Index j = 0; j < xs; ++j)
      for (Index i = 0; i < yt; ++i) {
        Index row = at + j * yt + i;
        // f_t contribution: sum_k f_t(i,k) xa(k,j)
        for (Index k = 0; k < xt; ++k)
          sys(row, uoff[static_cast<std::size_t>(t)] + k * yt + i) += xa(k, j);
        // -Y_a f_s: sum_k ya(i,k) f_s(k,j)
        for (Index k = 0; k < ys; ++k)
          sys(row, uoff[static_cast<std::size_t>(s)] + j * ys + k) -= ya(i, k);
      }
    at += yt * xs;
  }
  (void)xo;
  Mat kb = kernel_basis<Fp>(sys);
  std::vector<ModuleMap> out;
  out.reserve(static_cast<std::size_t>(kb.cols()));
  for (Index c = 0; c < kb.cols(); ++c)
    out.push_back(unflatten_map(x, y, Vec(kb.col(c))));
  return out;
}

Index hom_dim(const Representation& x, const Representation& y) {
  return static_cast<Index>(hom_basis(x, y).size());
}

Representation sub_rep(const Representation& x, std::vector<Mat> spans,
                       ModuleMap* inclusion) {
  const Quiver& q = x.alg->quiver();
  for (std::size_t v = 0; v < spans.size(); ++v)
    spans[v] = column_space<Fp>(spans[v]);
  Representation s;
  s.alg = x.alg;
  s.dims.resize(x.dims.size());
  for (std::size_t v = 0; v < spans.size(); ++v)
    s.dims[v] = static_cast<int>(spans[v].cols());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    Mat img = x.maps[static_cast<std::size_t>(a)] *
              spans[static_cast<std::size_t>(ar.src)];
    auto coords = solve_matrix<Fp>(spans[static_cast<std::size_t>(ar.tgt)], img);
    if (!coords)
      throw std::invalid_argument("spans are not arrow-invariant");
    s.maps.push_back(*coords);
  }
  if (inclusion) {
    inclusion->blocks.clear();
    for (std::size_t v = 0; v < spans.size(); ++v)
      inclusion->blocks.push_back(spans[v]);
  }
  return s;
}

Representation quotient_rep(const Representation& x,
                            const std::vector<Mat>& spans, ModuleMap* proj,
                            ModuleMap* out_section) {
  const Quiver& q = x.alg->quiver();
  std::vector<Mat> projm(x.dims.size()), section(x.dims.size());
  Representation r;
  r.alg = x.alg;
  r.dims.resize(x.dims.size());
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    Mat s = column_space<Fp>(spans[v]);
    Index n = x.dims[v];
    Mat full = s;
    std::vector<Index> chosen;
    for (Index i = 0; i < n && full.cols() < n; ++i) {
      Mat cand = hstack(full, Mat(unit_vec(n, i)));
      if (rank<Fp>(cand) > full.cols()) {
        full = cand;
        chosen.push_back(i);
      }
    }
    Index qd = n - s.cols();
    auto inv = inverse<Fp>(full);
    if (!inv) throw std::logic_error("quotient basis not full rank");
    projm[v] = inv->bottomRows(qd);
    Mat sec(n, qd);
    for (Index j = 0; j < qd; ++j)
      sec.col(j) = unit_vec(n, chosen[static_cast<std::size_t>(j)]);
    section[v] = sec;
    r.dims[v] = static_cast<int>(qd);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    r.maps.push_back(projm[static_cast<std::size_t>(ar.tgt)] *
                     x.maps[static_cast<std::size_t>(a)] *
                     section[static_cast<std::size_t>(ar.src)]);
  }
  if (proj) proj->blocks = projm;
  if (out_section) out_section->blocks = section;
  return r;
}

std::vector<Mat> kernel_spaces(const Representation& x, const Representation& y,
                               const ModuleMap& f) {
  (void)y;
  std::vector<Mat> ks;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    ks.push_back(kernel_basis<Fp>(f.blocks[v]));
  return ks;
}

std::vector<Mat> image_spaces(const Representation& x, const Representation& y,
                              const ModuleMap& f) {
  (void)x;
  (void)y;
  std::vector<Mat> is;
  for (const Mat& b : f.blocks) is.push_back(column_space<Fp>(b));
  return is;
}

Representation kernel_rep(const Representation& x, const Representation& y,
                          const ModuleMap& f, ModuleMap* inclusion) {
  return sub_rep(x, kernel_spaces(x, y, f), inclusion);
}

Representation image_rep(const Representation& x, const Representation& y,
                         const ModuleMap& f, ModuleMap* inclusion) {
  return sub_rep(y, image_spaces(x, y, f), inclusion);
}

Representation cokernel_rep(const Representation& x, const Representation& y,
                            const ModuleMap& f, ModuleMap* projection) {
  return quotient_rep(y, image_spaces(x, y, f), projection);
}

Representation radical_rep(const Representation& x, ModuleMap* inclusion) {
  const Quiver& q = x.alg->quiver();
  std::vector<Mat> spans;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    spans.emplace_back(Mat(x.dims[v], 0));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    spans[static_cast<std::size_t>(ar.tgt)] =
        hstack(spans[static_cast<std::size_t>(ar.tgt)],
               x.maps[static_cast<std::size_t>(a)]);
  }
  return sub_rep(x, spans, inclusion);
}

Representation top_rep(const Representation& x, ModuleMap* projection) {
  const Quiver& q = x.alg->quiver();
  std::vector<Mat> spans;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    spans.emplace_back(Mat(x.dims[v], 0));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    spans[static_cast<std::size_t>(ar.tgt)] =
        hstack(spans[static_cast<std::size_t>(ar.tgt)],
               x.maps[static_cast<std::size_t>(a)]);
  }
  return quotient_rep(x, spans, projection);
}

Representation socle_rep(const Representation& x, ModuleMap* inclusion) {
  const Quiver& q = x.alg->quiver();
  std::vector<Mat> spans(x.dims.size());
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    Mat stacked(0, x.dims[v]);
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      if (ar.src == static_cast<int>(v))
        stacked = vstack(stacked, x.maps[static_cast<std::size_t>(a)]);
    }
    spans[v] = kernel_basis<Fp>(stacked);
  }
  return sub_rep(x, spans, inclusion);
}

Representation dual_rep(const Representation& x) {
  Representation d;
  d.alg = x.alg->opposite();
  d.dims = x.dims;
  d.maps.resize(x.maps.size());
  for (std::size_t a = 0; a < x.maps.size(); ++a)
    d.maps[a] = x.maps[a].transpose();
  return d;
}

ModuleMap dual_map(const Representation& x, const Representation& y,
                   const ModuleMap& f) {
  (void)x;
  (void)y;
  ModuleMap g;
  for (const Mat& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

std::vector<Mat> trace_spaces(const Representation& m,
                              const Representation& x) {
  auto homs = hom_basis(m, x);
  std::vector<Mat> spans;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    spans.emplace_back(Mat(x.dims[v], 0));
  for (const auto& f : homs)
    for (std::size_t v = 0; v < x.dims.size(); ++v)
      spans[v] = hstack(spans[v], f.blocks[v]);
  for (auto& s : spans) s = column_space<Fp>(s);
  return spans;
}

Representation trace_in(const Representation& m, const Representation& x,
                        ModuleMap* inclusion) {
  return sub_rep(x, trace_spaces(m, x), inclusion);
}

ProjCover projective_cover(const Representation& x) {
  const Quiver& q = x.alg->quiver();
  // generators: complement of the radical at each vertex
  Representation rad = radical_rep(x, nullptr);
  const std::vector<Mat> radspans = [&] {
    std::vector<Mat> spans;
    for (std::size_t v = 0; v < x.dims.size(); ++v)
      spans.emplace_back(Mat(x.dims[v], 0));
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      spans[static_cast<std::size_t>(ar.tgt)] =
          hstack(spans[static_cast<std::size_t>(ar.tgt)],
                 x.maps[static_cast<std::size_t>(a)]);
    }
    for (auto& s : spans) s = column_space<Fp>(s);
    return spans;
  }();
  (void)rad;
  ProjCover cover;
  std::vector<Vec> gens;        // generator columns in X
  std::vector<int> gen_vertex;  // their vertices
  for (int v = 0; v < q.num_vertices(); ++v) {
    Mat full = radspans[static_cast<std::size_t>(v)];
    for (Index i = 0; i < x.dims[static_cast<std::size_t>(v)]; ++i) {
      Mat cand = hstack(full, Mat(unit_vec(x.dims[static_cast<std::size_t>(v)], i)));
      if (rank<Fp>(cand) > full.cols()) {
        full = cand;
        gens.push_back(unit_vec(x.dims[static_cast<std::size_t>(v)], i));
        gen_vertex.push_back(v);
      }
    }
  }
  cover.vertices = gen_vertex;
  std::vector<Representation> summands;
  for (int v : gen_vertex) summands.push_back(projective_rep(x.alg, v));
  cover.proj = summands.empty() ? zero_rep(x.alg) : direct_sum(summands);

  // map: generator e_v of each P(v) -> chosen generator of X, extended by
  // the right action along basis paths
  ModuleMap f = zero_map(cover.proj, x);
  std::vector<Index> col_at(x.dims.size(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int v = gen_vertex[g];
    for (int w = 0; w < q.num_vertices(); ++w) {
      auto slots = proj_slot_basis(*x.alg, v, w);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const Path& p = x.alg->basis()[static_cast<std::size_t>(slots[s])];
        Vec img = x.path_action(p) * gens[g];
        f.blocks[static_cast<std::size_t>(w)].col(
            col_at[static_cast<std::size_t>(w)] + static_cast<Index>(s)) = img;
      }
      col_at[static_cast<std::size_t>(w)] += static_cast<Index>(slots.size());
    }
  }
  cover.onto = f;
  return cover;
}

bool is_projective(const Representation& x) {
  if (x.is_zero()) return true;
  ProjCover c = projective_cover(x);
  return c.proj.total_dim() == x.total_dim();
}

bool is_injective(const Representation& x) { return is_projective(dual_rep(x)); }

Representation ProjMap::dom_rep() const {
  std::vector<Representation> parts;
  for (int v : dom) parts.push_back(projective_rep(alg, v));
  return parts.empty() ? zero_rep(alg) : direct_sum(parts);
}

Representation ProjMap::cod_rep() const {
  std::vector<Representation> parts;
  for (int v : cod) parts.push_back(projective_rep(alg, v));
  return parts.empty() ? zero_rep(alg) : direct_sum(parts);
}

ModuleMap ProjMap::to_module_map() const {
  Representation d = dom_rep(), c = cod_rep();
  ModuleMap f = zero_map(d, c);
  const Quiver& q = alg->quiver();
  for (int w = 0; w < q.num_vertices(); ++w) {
    Index col0 = 0;
    for (std::size_t cc = 0; cc < dom.size(); ++cc) {
      auto dslots = proj_slot_basis(*alg, dom[cc], w);
      Index row0 = 0;
      for (std::size_t rr = 0; rr < cod.size(); ++rr) {
        auto cslots = proj_slot_basis(*alg, cod[rr], w);
        const Vec& a = entry[rr][cc];
        for (std::size_t j = 0; j < dslots.size(); ++j) {
          // a * basis path
          for (int k = 0; k < alg->dim(); ++k) {
            if (a(k) == Fp(0)) continue;
            for (const auto& [t, coef] : alg->product(k, dslots[j])) {
              auto it = std::find(cslots.begin(), cslots.end(), t);
              if (it == cslots.end())
                throw std::logic_error("projective map slot mismatch");
              f.blocks[static_cast<std::size_t>(w)](
                  row0 + static_cast<Index>(it - cslots.begin()),
                  col0 + static_cast<Index>(j)) += a(k) * coef;
            }
          }
        }
        row0 += static_cast<Index>(cslots.size());
      }
      col0 += static_cast<Index>(dslots.size());
    }
  }
  return f;
}

ProjMap ProjMap::from_module_map(AlgebraPtr alg, std::vector<int> dom,
                                 std::vector<int> cod, const ModuleMap& f) {
  ProjMap pm;
  pm.alg = alg;
  pm.dom = dom;
  pm.cod = cod;
  pm.entry.assign(cod.size(), std::vector<Vec>(dom.size()));
  // generator of dom summand c sits at vertex dom[c]; find its column
  for (std::size_t c = 0; c < dom.size(); ++c) {
    int v = dom[c];
    auto vslots = proj_slot_basis(*alg, v, v);
    Index gen_slot = -1;
    for (std::size_t s = 0; s < vslots.size(); ++s)
      if (vslots[s] == alg->trivial_basis_index(v))
        gen_slot = static_cast<Index>(s);
    if (gen_slot < 0) throw std::logic_error("trivial path missing from slots");
    Index col = 0;
    for (std::size_t cc = 0; cc < c; ++cc)
      col += static_cast<Index>(proj_slot_basis(*alg, dom[cc], v).size());
    col += gen_slot;
    Vec img = f.blocks[static_cast<std::size_t>(v)].col(col);
    // split img over cod summands; coordinates are algebra elements of
    // e_{cod_r} A e_v
    Index row = 0;
    for (std::size_t r = 0; r < cod.size(); ++r) {
      auto cslots = proj_slot_basis(*alg, cod[r], v);
      Vec a = Vec::Zero(alg->dim());
      for (std::size_t s = 0; s < cslots.size(); ++s)
        a(cslots[s]) = img(row + static_cast<Index>(s));
      pm.entry[r][c] = a;
      row += static_cast<Index>(cslots.size());
    }
  }
  return pm;
}

Representation injective_sum(AlgebraPtr alg, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(injective_rep(alg, v));
  return parts.empty() ? zero_rep(alg) : direct_sum(parts);
}

ModuleMap nakayama_map(const ProjMap& f) {
  AlgebraPtr alg = f.alg;
  const Quiver& q = alg->quiver();
  Representation d = injective_sum(alg, f.dom), c = injective_sum(alg, f.cod);
  ModuleMap out = zero_map(d, c);
  for (int w = 0; w < q.num_vertices(); ++w) {
    Index col0 = 0;
    for (std::size_t cc = 0; cc < f.dom.size(); ++cc) {
      auto dslots = inj_slot_basis(*alg, f.dom[cc], w);  // paths w ~> dom[cc]
      Index row0 = 0;
      for (std::size_t rr = 0; rr < f.cod.size(); ++rr) {
        auto cslots = inj_slot_basis(*alg, f.cod[rr], w);  // paths w ~> cod[rr]
        const Vec& a = f.entry[rr][cc];
        // block = transpose of right multiplication by a:
        // e_w A e_{cod_r} -> e_w A e_{dom_c}
        Mat rm = Mat::Zero(static_cast<Index>(dslots.size()),
                           static_cast<Index>(cslots.size()));
        for (std::size_t j = 0; j < cslots.size(); ++j) {
          for (int k = 0; k < alg->dim(); ++k) {
            if (a(k) == Fp(0)) continue;
            for (const auto& [t, coef] : alg->product(cslots[j], k)) {
              auto it = std::find(dslots.begin(), dslots.end(), t);
              if (it == dslots.end())
                throw std::logic_error("nakayama slot mismatch");
              rm(static_cast<Index>(it - dslots.begin()),
                 static_cast<Index>(j)) += a(k) * coef;
            }
          }
        }
        out.blocks[static_cast<std::size_t>(w)].block(
            row0, col0, static_cast<Index>(cslots.size()),
            static_cast<Index>(dslots.size())) = rm.transpose();
        row0 += static_cast<Index>(cslots.size());
      }
      col0 += static_cast<Index>(dslots.size());
    }
  }
  return out;
}

Representation conjugate(const Representation& x,
                         const std::vector<Mat>& base_change) {
  const Quiver& q = x.alg->quiver();
  Representation y = x;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    auto invs = inverse<Fp>(base_change[static_cast<std::size_t>(ar.src)]);
    if (!invs) throw std::invalid_argument("base change not invertible");
    y.maps[static_cast<std::size_t>(a)] =
        base_change[static_cast<std::size_t>(ar.tgt)] *
        x.maps[static_cast<std::size_t>(a)] * *invs;
  }
  return y;
}

std::string stack_notation(const Representation& x) {
  if (x.is_zero()) return "0";
  const Quiver& q = x.alg->quiver();
  std::vector<std::string> layers;
  Representation cur = x;
  while (!cur.is_zero()) {
    Representation t = top_rep(cur, nullptr);
    std::string layer;
    for (int v = 0; v < q.num_vertices(); ++v)
      for (int i = 0; i < t.dims[static_cast<std::size_t>(v)]; ++i) {
        if (!layer.empty()) layer += " ";
        layer += q.vertex_names[static_cast<std::size_t>(v)];
      }
    layers.push_back(layer);
    cur = radical_rep(cur, nullptr);
  }
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) out += "/";
    out += layers[i];
  }
  return out;
}

}  // namespace silting

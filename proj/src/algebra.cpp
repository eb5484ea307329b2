#include "silting/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace silting {

namespace {

struct ClassKey {
  int s, t;
  bool operator<(const ClassKey& o) const {
    return s != o.s ? s < o.s : t < o.t;
  }
};

// Paths of one parallel class ordered length-lex DESCENDING: position 0 is
// the largest path, so the leading term of an echelon row is its first
// nonzero coordinate.
struct ParallelClass {
  std::vector<Path> paths;            // descending order
  std::map<std::vector<int>, int> pos_by_word;
  Mat echelon;                        // rows: independent ideal elements, RREF
  std::vector<Index> leading;         // leading coordinate of each row
  std::vector<bool> is_leading_path;  // per position

  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < leading.size(); ++r) {
      Index lc = leading[r];
      if (v(lc) != Fp(0)) v -= v(lc) * echelon.row(static_cast<Index>(r)).transpose();
    }
    return v;
  }
};

}  // namespace

Vec BoundQuiverAlgebra::one() const {
  Vec v = Vec::Zero(dim());
  for (int i = 0; i < num_vertices(); ++i) v(i) = Fp(1);
  return v;
}

Vec BoundQuiverAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec r = Vec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) == Fp(0)) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j) == Fp(0)) continue;
      for (const auto& [k, c] : product(i, j)) r(k) += x(i) * y(j) * c;
    }
  }
  return r;
}

Vec BoundQuiverAlgebra::path_vector(const Path& p) const {
  if (!p.composable_in(quiver_))
    throw std::invalid_argument("path not composable in quiver");
  Vec v = idempotent(p.source);
  for (int a : p.word) {
    Vec r = Vec::Zero(dim());
    int ab = arrow_basis_index(a);
    for (int i = 0; i < dim(); ++i) {
      if (v(i) == Fp(0)) continue;
      for (const auto& [k, c] : product(i, ab)) r(k) += v(i) * c;
    }
    v = r;
  }
  return v;
}

Vec BoundQuiverAlgebra::lincomb_vector(const LinComb& c) const {
  Vec v = Vec::Zero(dim());
  for (const auto& [coef, p] : c) v += coef * path_vector(p);
  return v;
}

std::vector<int> BoundQuiverAlgebra::basis_with_source_target(int s,
                                                              int t) const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (basis_source(k) == s && basis_target(k) == t) out.push_back(k);
  return out;
}

Mat BoundQuiverAlgebra::radical_span() const {
  std::vector<int> idx;
  for (int k = 0; k < dim(); ++k)
    if (basis_[static_cast<std::size_t>(k)].length() >= 1) idx.push_back(k);
  Mat m(dim(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j)
    m.col(static_cast<Index>(j)) = unit_vec(dim(), idx[j]);
  return m;
}

AbstractAlgebra BoundQuiverAlgebra::to_abstract() const {
  Index n = dim();
  std::vector<Mat> mult(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Mat m = Mat::Zero(n, n);
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : product(static_cast<int>(i), static_cast<int>(j)))
        m(k, j) = c;
    mult[static_cast<std::size_t>(i)] = m;
  }
  return AbstractAlgebra(std::move(mult), one());
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  if (opposite_cache_) return opposite_cache_;
  Quiver oq = quiver_.opposite();
  std::vector<LinComb> orels;
  for (const auto& rel : relations_) {
    LinComb rc;
    for (const auto& [coef, p] : rel) {
      Path rp;
      rp.source = p.target(quiver_);
      rp.word.assign(p.word.rbegin(), p.word.rend());
      rc.emplace_back(coef, rp);
    }
    orels.push_back(rc);
  }
  AlgebraPtr op = build(std::move(oq), std::move(orels));
  op->opposite_cache_ = self_.lock();  // double opposite returns the original
  opposite_cache_ = op;
  return op;
}

AlgebraPtr BoundQuiverAlgebra::build(Quiver q, std::vector<LinComb> relations,
                                     int length_cap) {
  q.validate();
  int margin = 0;
  for (auto& rel : relations) {
    LinComb cleaned;
    for (auto& [coef, p] : rel) {
      if (coef == Fp(0)) continue;
      if (!p.composable_in(q))
        throw std::invalid_argument("relation path not composable");
      if (p.length() < 2)
        throw std::invalid_argument(
            "relation terms must be paths of length >= 2");
      cleaned.emplace_back(coef, p);
    }
    if (cleaned.empty())
      throw std::invalid_argument("relation reduces to the zero combination");
    int s = cleaned.front().second.source;
    int t = cleaned.front().second.target(q);
    for (auto& [coef, p] : cleaned)
      if (p.source != s || p.target(q) != t)
        throw std::invalid_argument("relation terms must be parallel paths");
    for (auto& [coef, p] : cleaned) margin = std::max(margin, p.length());
    rel = cleaned;
  }
  margin = std::max(margin, 2);

  // enumerate paths by length
  std::vector<std::vector<Path>> by_len;
  by_len.emplace_back();
  for (int v = 0; v < q.num_vertices(); ++v)
    by_len[0].push_back(Path{v, {}});

  std::map<ClassKey, ParallelClass> classes;
  auto add_path = [&](const Path& p) {
    ClassKey k{p.source, Path(p).target(q)};
    auto& cls = classes[k];
    cls.paths.push_back(p);
  };
  for (const Path& p : by_len[0]) add_path(p);

  std::size_t total_paths = by_len[0].size();
  int stable_level = -1;  // first length at which every path is leading

  auto rebuild_class_structs = [&]() {
    for (auto& [key, cls] : classes) {
      std::sort(cls.paths.begin(), cls.paths.end(),
                [](const Path& a, const Path& b) { return b < a; });  // desc
      cls.pos_by_word.clear();
      for (std::size_t i = 0; i < cls.paths.size(); ++i)
        cls.pos_by_word[cls.paths[i].word] = static_cast<int>(i);
    }
  };

  auto echelonize_ideal = [&](int max_len) {
    // spanning vectors u * g * v per class, then RREF
    std::map<ClassKey, std::vector<Vec>> spans;
    for (const auto& rel : relations) {
      int rs = rel.front().second.source;
      int rt = rel.front().second.target(q);
      int rmax = 0;
      for (const auto& [c, p] : rel) rmax = std::max(rmax, p.length());
      for (const auto& lv : by_len)
        for (const Path& u : lv) {
          if (u.target(q) != rs) continue;
          for (const auto& rv : by_len)
            for (const Path& v : rv) {
              if (v.source != rt) continue;
              if (u.length() + rmax + v.length() > max_len) continue;
              ClassKey key{u.source, v.target(q)};
              auto& cls = classes[key];
              Vec vec = Vec::Zero(static_cast<Index>(cls.paths.size()));
              for (const auto& [c, p] : rel) {
                Path w = concat(concat(u, p), v);
                auto it = cls.pos_by_word.find(w.word);
                if (it == cls.pos_by_word.end())
                  continue;  // beyond enumerated window; safe: only used
                             // when the full product fits
                vec(it->second) += c;
              }
              spans[key].push_back(vec);
            }
        }
    }
    for (auto& [key, cls] : classes) {
      cls.leading.clear();
      cls.is_leading_path.assign(cls.paths.size(), false);
      auto it = spans.find(key);
      if (it == spans.end() || it->second.empty()) {
        cls.echelon = Mat(0, static_cast<Index>(cls.paths.size()));
        continue;
      }
      Mat m(static_cast<Index>(it->second.size()),
            static_cast<Index>(cls.paths.size()));
      for (std::size_t r = 0; r < it->second.size(); ++r)
        m.row(static_cast<Index>(r)) = it->second[r].transpose();
      Echelon<Fp> e = row_echelon<Fp>(m);
      cls.echelon = e.reduced.topRows(e.rank);
      cls.leading = e.pivots;
      for (Index lc : e.pivots)
        cls.is_leading_path[static_cast<std::size_t>(lc)] = true;
    }
  };

  // grow the path window until a whole length level dies
  for (int len = 1; len <= length_cap; ++len) {
    std::vector<Path> next;
    for (const Path& p : by_len.back()) {
      int tv = p.target(q);
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[static_cast<std::size_t>(a)].src == tv) {
          Path np = p;
          np.word.push_back(a);
          next.push_back(np);
        }
    }
    if (next.empty()) {
      stable_level = len;
      break;
    }
    total_paths += next.size();
    if (total_paths > static_cast<std::size_t>(kDefaultPathCountCap))
      throw std::invalid_argument(
          "path count exploded; ideal not admissible within caps");
    for (const Path& p : next) add_path(p);
    by_len.push_back(std::move(next));

    if (!relations.empty() && len >= 2) {
      rebuild_class_structs();
      echelonize_ideal(len);
      // find the lowest level n <= len - margin where all paths are leading
      for (int n = 2; n <= len - margin; ++n) {
        bool all_leading = true;
        for (const Path& p : by_len[static_cast<std::size_t>(n)]) {
          ClassKey key{p.source, Path(p).target(q)};
          const auto& cls = classes[key];
          int pos = cls.pos_by_word.at(p.word);
          if (!cls.is_leading_path[static_cast<std::size_t>(pos)]) {
            all_leading = false;
            break;
          }
        }
        if (all_leading) {
          stable_level = n;
          break;
        }
      }
      if (stable_level >= 0) break;
    }
  }
  if (stable_level < 0)
    throw std::invalid_argument(
        "quotient not finite dimensional within length cap (non-admissible "
        "ideal or unbounded path algebra)");

  // A basis path has length < stable_level.  Ensure the echelon window covers
  // products of two basis paths plus the relation margin, so normal forms of
  // products are exact.
  int need = 2 * std::max(0, stable_level - 1) + margin;
  if (!relations.empty()) {
    for (int len = static_cast<int>(by_len.size()); len <= need; ++len) {
      std::vector<Path> next;
      for (const Path& p : by_len.back()) {
        int tv = p.target(q);
        for (int a = 0; a < q.num_arrows(); ++a)
          if (q.arrows[static_cast<std::size_t>(a)].src == tv) {
            Path np = p;
            np.word.push_back(a);
            next.push_back(np);
          }
      }
      if (next.empty()) break;
      total_paths += next.size();
      if (total_paths > static_cast<std::size_t>(kDefaultPathCountCap))
        throw std::invalid_argument(
            "path count exploded; ideal not admissible within caps");
      for (const Path& p : next) add_path(p);
      by_len.push_back(std::move(next));
    }
    rebuild_class_structs();
    echelonize_ideal(static_cast<int>(by_len.size()) - 1);
  } else {
    rebuild_class_structs();
  }

  auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
  alg->quiver_ = q;
  alg->relations_ = relations;

  // basis: non-leading paths of length < stable_level, ordered length-lex asc
  for (int len = 0; len < stable_level && len < static_cast<int>(by_len.size());
       ++len)
    for (const Path& p : by_len[static_cast<std::size_t>(len)]) {
      ClassKey key{p.source, Path(p).target(q)};
      const auto& cls = classes.at(key);
      int pos = cls.pos_by_word.at(p.word);
      if (!cls.is_leading_path.empty() &&
          cls.is_leading_path[static_cast<std::size_t>(pos)])
        continue;
      alg->basis_.push_back(p);
    }
  std::sort(alg->basis_.begin(), alg->basis_.end());
  for (const Path& p : alg->basis_)
    alg->basis_target_.push_back(Path(p).target(q));

  alg->arrow_basis_index_.assign(static_cast<std::size_t>(q.num_arrows()), -1);
  for (int k = 0; k < alg->dim(); ++k) {
    const Path& p = alg->basis_[static_cast<std::size_t>(k)];
    if (p.length() == 1)
      alg->arrow_basis_index_[static_cast<std::size_t>(p.word[0])] = k;
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    if (alg->arrow_basis_index_[static_cast<std::size_t>(a)] < 0)
      throw std::logic_error("arrow missing from basis (ideal not admissible)");

  // position of each basis path inside its class, for product reduction
  std::map<std::vector<int>, int> basis_index_by_word_src;
  for (int k = 0; k < alg->dim(); ++k) {
    std::vector<int> key = alg->basis_[static_cast<std::size_t>(k)].word;
    key.push_back(alg->basis_[static_cast<std::size_t>(k)].source + 1000000);
    basis_index_by_word_src[key] = k;
  }
  auto basis_index_of = [&](const Path& p) {
    std::vector<int> key = p.word;
    key.push_back(p.source + 1000000);
    auto it = basis_index_by_word_src.find(key);
    return it == basis_index_by_word_src.end() ? -1 : it->second;
  };

  // structure constants
  std::size_t n = alg->basis_.size();
  alg->table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path& a = alg->basis_[i];
      const Path& b = alg->basis_[j];
      if (Path(a).target(q) != b.source) continue;
      Path w = concat(a, b);
      ClassKey key{w.source, Path(w).target(q)};
      const auto& cls = classes.at(key);
      auto posit = cls.pos_by_word.find(w.word);
      if (posit == cls.pos_by_word.end())
        throw std::logic_error("product path outside computed window");
      Vec v = Vec::Zero(static_cast<Index>(cls.paths.size()));
      v(posit->second) = Fp(1);
      v = cls.reduce(v);
      std::vector<std::pair<int, Fp>> entry;
      for (Index t = 0; t < v.size(); ++t)
        if (v(t) != Fp(0)) {
          int bi = basis_index_of(cls.paths[static_cast<std::size_t>(t)]);
          if (bi < 0)
            throw std::logic_error(
                "normal form hit a non-basis path; ideal normalization "
                "incomplete");
          entry.emplace_back(bi, v(t));
        }
      alg->table_[i * n + j] = std::move(entry);
    }

  AlgebraPtr out = alg;
  alg->self_ = out;
  return out;
}

AlgebraPtr BoundQuiverAlgebra::from_components(
    Quiver q, std::vector<LinComb> relations, std::vector<Path> basis,
    std::vector<std::vector<std::pair<int, Fp>>> table) {
  q.validate();
  auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
  alg->quiver_ = q;
  alg->relations_ = std::move(relations);
  alg->basis_ = std::move(basis);
  alg->table_ = std::move(table);
  if (alg->table_.size() != alg->basis_.size() * alg->basis_.size())
    throw std::invalid_argument("product table has wrong size");
  for (int v = 0; v < q.num_vertices(); ++v) {
    const Path& p = alg->basis_[static_cast<std::size_t>(v)];
    if (p.length() != 0 || p.source != v)
      throw std::invalid_argument("trivial paths must lead the basis");
  }
  for (const Path& p : alg->basis_) {
    if (!p.composable_in(q))
      throw std::invalid_argument("basis path not composable");
    alg->basis_target_.push_back(Path(p).target(q));
  }
  alg->arrow_basis_index_.assign(static_cast<std::size_t>(q.num_arrows()), -1);
  for (int k = 0; k < alg->dim(); ++k) {
    const Path& p = alg->basis_[static_cast<std::size_t>(k)];
    if (p.length() == 1)
      alg->arrow_basis_index_[static_cast<std::size_t>(p.word[0])] = k;
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    if (alg->arrow_basis_index_[static_cast<std::size_t>(a)] < 0)
      throw std::invalid_argument("arrow missing from basis");
  AbstractAlgebra check = alg->to_abstract();
  if (!check.is_unital() || !check.is_associative())
    throw std::invalid_argument("product table is not an associative unital algebra");
  AlgebraPtr out = alg;
  alg->self_ = out;
  return out;
}

std::string BoundQuiverAlgebra::describe() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : quiver_.vertex_names) os << " " << v;
  os << "\narrows:";
  for (const auto& a : quiver_.arrows)
    os << " " << a.name << ":"
       << quiver_.vertex_names[static_cast<std::size_t>(a.src)] << "->"
       << quiver_.vertex_names[static_cast<std::size_t>(a.tgt)];
  os << "\nrelations:";
  if (relations_.empty()) os << " none";
  for (const auto& r : relations_) os << " [" << lincomb_display(r, quiver_) << "]";
  os << "\ndimension: " << dim();
  return os.str();
}

AlgebraPtr path_algebra(Quiver q) {
  return BoundQuiverAlgebra::build(std::move(q), {});
}

LinComb monomial_relation(const Quiver& q,
                          const std::vector<std::string>& arrow_names) {
  Path p;
  p.word.reserve(arrow_names.size());
  for (const auto& nm : arrow_names) {
    int a = q.arrow_index(nm);
    if (a < 0) throw std::invalid_argument("unknown arrow: " + nm);
    p.word.push_back(a);
  }
  if (p.word.empty()) throw std::invalid_argument("empty relation path");
  p.source = q.arrows[static_cast<std::size_t>(p.word[0])].src;
  if (!p.composable_in(q))
    throw std::invalid_argument("relation arrows not composable");
  return {{Fp(1), p}};
}

}  // namespace silting

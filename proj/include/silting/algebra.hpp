#pragma once

// Bound quiver algebras kQ/I over F_p: finite path basis, normal forms and
// structure constants.  The ideal is handled as a deterministic linear
// normal form on each parallel-path space: paths are ordered length-lex,
// ideal elements are echelonized, and the basis is the set of non-leading
// paths.  Construction fails (honestly) if the quotient is not visibly
// finite dimensional within the length cap.

#include <memory>
#include <string>
#include <vector>

#include "silting/abstract.hpp"
#include "silting/quiver.hpp"

namespace silting {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra {
 public:
  static constexpr int kDefaultLengthCap = 24;
  static constexpr int kDefaultPathCountCap = 200000;

  static AlgebraPtr build(Quiver q, std::vector<LinComb> relations,
                          int length_cap = kDefaultLengthCap);

  // Assemble from an explicit path basis and product table (used when the
  // structure constants are inherited from an ambient algebra, as in
  // quiverization).  Basis must list the trivial paths first, in vertex
  // order, and contain every arrow; the table is validated.
  static AlgebraPtr from_components(
      Quiver q, std::vector<LinComb> relations, std::vector<Path> basis,
      std::vector<std::vector<std::pair<int, Fp>>> table);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<LinComb>& relations() const { return relations_; }
  bool is_hereditary() const { return relations_.empty(); }

  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_arrows() const { return quiver_.num_arrows(); }

  const std::vector<Path>& basis() const { return basis_; }
  int basis_source(int k) const { return basis_[static_cast<std::size_t>(k)].source; }
  int basis_target(int k) const { return basis_target_[static_cast<std::size_t>(k)]; }

  // basis index of e_v is v; basis index of arrow a
  int trivial_basis_index(int v) const { return v; }
  int arrow_basis_index(int a) const { return arrow_basis_index_[static_cast<std::size_t>(a)]; }

  const std::vector<std::pair<int, Fp>>& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * basis_.size() +
                  static_cast<std::size_t>(j)];
  }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec idempotent(int v) const { return unit_vec(dim(), v); }
  Vec one() const;
  Vec path_vector(const Path& p) const;    // normal form; zero if p in ideal
  Vec lincomb_vector(const LinComb& c) const;

  // basis indices with given source/target vertex
  std::vector<int> basis_with_source_target(int s, int t) const;

  Mat radical_span() const;  // columns: basis paths of length >= 1

  AbstractAlgebra to_abstract() const;
  AlgebraPtr opposite() const;  // cached; arrows reversed, relations reversed

  std::string describe() const;

 private:
  BoundQuiverAlgebra() = default;
  Quiver quiver_;
  std::vector<LinComb> relations_;
  std::vector<Path> basis_;
  std::vector<int> basis_target_;
  std::vector<int> arrow_basis_index_;
  std::vector<std::vector<std::pair<int, Fp>>> table_;
  mutable std::shared_ptr<const BoundQuiverAlgebra> opposite_cache_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> self_;
};

// Convenience builders used across tests and fixtures.
AlgebraPtr path_algebra(Quiver q);
LinComb monomial_relation(const Quiver& q, const std::vector<std::string>& arrow_names);

}  // namespace silting

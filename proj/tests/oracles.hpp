#pragma once

// Test-only oracles, kept independent of the knitting/translate machinery
// they certify: exhaustive enumeration of representations per dimension
// vector with isomorphism deduplication.

#include <vector>

#include "silting/decompose.hpp"
#include "silting/rep.hpp"

namespace silting::testing {

// all indecomposables with every vertex dimension <= bound, by brute force
inline std::vector<Representation> brute_force_indecomposables(
    AlgebraPtr alg, int bound) {
  const Quiver& q = alg->quiver();
  int nv = q.num_vertices();
  std::vector<Representation> found;

  std::vector<int> dims(static_cast<std::size_t>(nv), 0);
  auto next_dims = [&]() {
    for (int v = 0; v < nv; ++v) {
      if (dims[static_cast<std::size_t>(v)] < bound) {
        ++dims[static_cast<std::size_t>(v)];
        for (int w = 0; w < v; ++w) dims[static_cast<std::size_t>(w)] = 0;
        return true;
      }
    }
    return false;
  };

  while (next_dims()) {
    // entry odometer over all arrow matrices
    std::vector<std::pair<int, std::pair<Index, Index>>> slots;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      for (Index i = 0; i < dims[static_cast<std::size_t>(ar.tgt)]; ++i)
        for (Index j = 0; j < dims[static_cast<std::size_t>(ar.src)]; ++j)
          slots.push_back({a, {i, j}});
    }
    std::uint64_t p = Fp::modulus();
    double log_total = static_cast<double>(slots.size()) *
                       std::log2(static_cast<double>(p));
    if (log_total > 26.0)
      throw std::runtime_error("brute force bound too large");
    std::uint64_t total = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) total *= p;

    Representation x;
    x.alg = alg;
    x.dims = dims;
    x.maps.clear();
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      x.maps.emplace_back(Mat::Zero(dims[static_cast<std::size_t>(ar.tgt)],
                                    dims[static_cast<std::size_t>(ar.src)]));
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (const auto& [a, ij] : slots) {
        x.maps[static_cast<std::size_t>(a)](ij.first, ij.second) =
            Fp(static_cast<long long>(c % p));
        c /= p;
      }
      bool ok = true;
      for (const auto& rel : alg->relations()) {
        int s = rel.front().second.source;
        int t = rel.front().second.target(q);
        Mat acc = Mat::Zero(dims[static_cast<std::size_t>(t)],
                            dims[static_cast<std::size_t>(s)]);
        for (const auto& [cf, pt] : rel) acc += cf * x.path_action(pt);
        if (!is_zero(acc)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!is_indecomposable(x)) continue;
      bool seen = false;
      for (const auto& y : found)
        if (y.dims == x.dims && is_isomorphic_indec(y, x)) {
          seen = true;
          break;
        }
      if (!seen) found.push_back(x);
    }
  }
  return found;
}

}  // namespace silting::testing

#pragma once

// Resolutions, Ext spaces, homological dimensions, add-M approximations.
// Dimensions are reported up to a configurable bound with an explicit
// ">= bound" verdict, never silently truncated.

#include <string>
#include <vector>

#include "silting/ar.hpp"
#include "silting/quiverize.hpp"
#include "silting/rep.hpp"

namespace silting {

struct Dim {
  int value = 0;
  bool exact = true;  // false: the true dimension is >= value

  std::string str() const {
    return exact ? std::to_string(value) : (">=" + std::to_string(value));
  }
  friend bool operator==(const Dim& a, const Dim& b) {
    return a.value == b.value && a.exact == b.exact;
  }
};

inline Dim exact_dim(int v) { return Dim{v, true}; }
inline Dim at_least(int v) { return Dim{v, false}; }

constexpr int kDefaultDimBound = 8;

struct ProjResolution {
  Representation target;
  std::vector<Representation> terms;        // P0, P1, ...
  std::vector<std::vector<int>> vertices;   // summand vertices per term
  std::vector<ProjMap> differentials;       // d_i : P_i -> P_{i-1}, i >= 1
  ModuleMap augmentation;                   // P0 -> X
  bool truncated = false;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

ProjResolution min_proj_resolution(const Representation& x, int max_len);

Index ext_dim(const Representation& x, const Representation& y, int i);

Dim proj_dim(const Representation& x, int bound = kDefaultDimBound);
Dim inj_dim(const Representation& x, int bound = kDefaultDimBound);
Dim global_dim(AlgebraPtr alg, int bound = kDefaultDimBound);

struct AddApproximation {
  std::vector<int> part_indices;  // which parts appear, with multiplicity
  Representation source;
  ModuleMap map;  // source -> x, right add-M approximation, right minimal
};

AddApproximation right_add_approximation(
    const std::vector<Representation>& m_parts, const Representation& x);

struct AddMResolution {
  std::vector<Representation> terms;  // M_0, M_1, ...
  Dim length;
  bool hom_exactness_verified = false;
};

// least n with an add-M resolution 0 -> M_n -> ... -> M_0 -> X -> 0 staying
// exact under Hom(M, -); requires add(m_parts) to contain the projectives
AddMResolution add_m_resolution(const std::vector<Representation>& m_parts,
                                const Representation& x,
                                int bound = kDefaultDimBound);

// gl.dim End(sum of parts) computed through the basic reduct of End
struct EndGlobalDim {
  Quiverized presentation;
  Dim gldim;
};
EndGlobalDim gldim_end(const std::vector<Representation>& parts,
                       int bound = kDefaultDimBound);
EndGlobalDim gldim_end(const Representation& m, int bound = kDefaultDimBound);

}  // namespace silting

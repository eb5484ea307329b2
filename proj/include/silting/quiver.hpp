#pragma once

#include <string>
#include <vector>

#include "silting/linalg.hpp"

namespace silting {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertex_names;  // position = vertex id
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;
  bool has_relations_possible() const { return !arrows.empty(); }
  void validate() const;  // unique names, endpoints in range

  Quiver opposite() const;
};

// A path is a source vertex plus a word of composable arrow indices, read
// left to right: {v, {a, b}} is "start at v, follow a, then b".  An empty
// word is the trivial path e_v.
struct Path {
  int source = 0;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  int target(const Quiver& q) const {
    return word.empty() ? source : q.arrows[static_cast<std::size_t>(word.back())].tgt;
  }
  bool composable_in(const Quiver& q) const;
  std::string display(const Quiver& q) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.word == b.word;
  }
  // length-lex order; total on paths of one quiver
  friend bool operator<(const Path& a, const Path& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.source != b.source) return a.source < b.source;
    return a.word < b.word;
  }
};

Path concat(const Path& a, const Path& b);  // requires target(a) == source(b)

// F_p-linear combination of parallel paths.
using PathTerm = std::pair<Fp, Path>;
using LinComb = std::vector<PathTerm>;

std::string lincomb_display(const LinComb& c, const Quiver& q);

}  // namespace silting

#include "silting/quiver.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace silting {

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertex_names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertex_names)
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate vertex id: " + v);
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (!aseen.insert(a.name).second)
      throw std::invalid_argument("duplicate arrow name: " + a.name);
    if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 ||
        a.tgt >= num_vertices())
      throw std::invalid_argument("arrow endpoint out of range: " + a.name);
  }
}

Quiver Quiver::opposite() const {
  Quiver op = *this;
  for (auto& a : op.arrows) std::swap(a.src, a.tgt);
  return op;
}

bool Path::composable_in(const Quiver& q) const {
  int at = source;
  for (int a : word) {
    if (a < 0 || a >= q.num_arrows()) return false;
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    if (ar.src != at) return false;
    at = ar.tgt;
  }
  return true;
}

std::string Path::display(const Quiver& q) const {
  if (word.empty())
    return "e" + q.vertex_names[static_cast<std::size_t>(source)];
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[static_cast<std::size_t>(word[i])].name;
  }
  return s;
}

Path concat(const Path& a, const Path& b) {
  Path p = a;
  p.word.insert(p.word.end(), b.word.begin(), b.word.end());
  return p;
}

std::string lincomb_display(const LinComb& c, const Quiver& q) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [coef, path] : c) {
    if (!first) os << " + ";
    first = false;
    if (coef != Fp(1)) os << coef.value() << " ";
    os << path.display(q);
  }
  return os.str();
}

}  // namespace silting

#include "silting/report.hpp"

#include <algorithm>

namespace silting {

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    rows.push_back(row);
  }
  return rows;
}

Json rep_to_json(const Representation& x) {
  Json j;
  j["name"] = stack_notation(x);
  Json dims = Json::object();
  const Quiver& q = x.alg->quiver();
  for (int v = 0; v < q.num_vertices(); ++v)
    dims[q.vertex_names[static_cast<std::size_t>(v)]] =
        x.dims[static_cast<std::size_t>(v)];
  j["dims"] = dims;
  Json maps = Json::object();
  for (int a = 0; a < q.num_arrows(); ++a)
    maps[q.arrows[static_cast<std::size_t>(a)].name] =
        matrix_to_json(x.maps[static_cast<std::size_t>(a)]);
  j["maps"] = maps;
  return j;
}

Json catalog_to_json(const IndecCatalog& cat) {
  Json j;
  j["algebra_dimension"] = cat.alg->dim();
  j["bound"] = cat.bound;
  j["complete"] = cat.complete;
  Json mods = Json::array();
  for (int i = 0; i < cat.size(); ++i) {
    Json m = rep_to_json(cat.modules[static_cast<std::size_t>(i)]);
    m["tau_of"] = cat.tau_of[static_cast<std::size_t>(i)] >= 0
                      ? Json(stack_notation(cat.modules[static_cast<std::size_t>(
                            cat.tau_of[static_cast<std::size_t>(i)])]))
                      : Json(nullptr);
    m["is_projective"] = static_cast<bool>(cat.projective[static_cast<std::size_t>(i)]);
    m["is_injective"] = static_cast<bool>(cat.injective[static_cast<std::size_t>(i)]);
    mods.push_back(m);
  }
  j["modules"] = mods;
  return j;
}

std::vector<std::string> stack_names(const IndecCatalog& cat,
                                     const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx)
    out.push_back(stack_notation(cat.modules[static_cast<std::size_t>(i)]));
  std::sort(out.begin(), out.end());
  return out;
}

Json torsion_to_json(const TorsionPairReport& rep, const IndecCatalog& cat) {
  Json j;
  j["torsion"] = stack_names(cat, rep.torsion);
  j["torsion_free"] = stack_names(cat, rep.torsion_free);
  j["unassigned"] = stack_names(cat, rep.unassigned);
  j["split"] = rep.split;
  return j;
}

Json dim_to_json(const Dim& d) {
  Json j;
  j["value"] = d.value;
  j["exact"] = d.exact;
  return j;
}

Json repdim_to_json(const RepDimReport& rep) {
  Json j;
  switch (rep.finiteness.kind) {
    case Finiteness::Finite:
      j["finiteness"] = "finite";
      j["indecomposables"] = rep.finiteness.count;
      break;
    case Finiteness::Infinite:
      j["finiteness"] = "infinite";
      break;
    default:
      j["finiteness"] = "unknown";
      j["bound"] = rep.finiteness.bound;
  }
  j["finiteness_reason"] = rep.finiteness.reason;
  j["rep_dim"] = dim_to_json(rep.value);
  j["rep_dim_display"] = rep.value.str();
  j["reasoning"] = rep.reasoning;
  return j;
}

Json resolution_to_json(const ProjResolution& res) {
  Json j;
  j["target"] = stack_notation(res.target);
  j["truncated"] = res.truncated;
  Json terms = Json::array();
  const Quiver* q = res.target.alg ? &res.target.alg->quiver() : nullptr;
  for (const auto& vs : res.vertices) {
    Json t = Json::array();
    for (int v : vs)
      t.push_back(q ? q->vertex_names[static_cast<std::size_t>(v)]
                    : std::to_string(v));
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace silting

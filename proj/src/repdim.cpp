#include "silting/repdim.hpp"

#include <algorithm>
#include <stdexcept>

namespace silting {

Finiteness is_rep_finite(AlgebraPtr alg, int bound) {
  Finiteness f;
  f.bound = bound;
  if (alg->is_hereditary()) {
    RepType t = hereditary_type(*alg);
    if (t == RepType::Infinite) {
      f.kind = Finiteness::Infinite;
      f.reason = "hereditary with non positive definite form";
      return f;
    }
    // positive definite: finite, enumerate with a bound that cannot clip
    IndecCatalog cat = enumerate_indecomposables(alg, std::max(bound, 8));
    if (!cat.complete)
      throw std::logic_error("Dynkin enumeration did not stabilize");
    f.kind = Finiteness::Finite;
    f.count = cat.size();
    f.reason = "hereditary with positive definite form";
    return f;
  }
  IndecCatalog cat = enumerate_indecomposables(alg, bound);
  if (cat.complete) {
    f.kind = Finiteness::Finite;
    f.count = cat.size();
    f.reason = "translate closure stabilized";
  } else {
    f.kind = Finiteness::Unknown;
    f.reason = "closure exceeded the dimension bound";
  }
  return f;
}

RepDimReport rep_dim(AlgebraPtr alg, int bound) {
  RepDimReport rep;
  rep.finiteness = is_rep_finite(alg, bound);
  bool semisimple = alg->radical_span().cols() == 0;
  if (semisimple) {
    rep.value = exact_dim(0);
    rep.reasoning = "semisimple: gl.dim End(A) = 0";
    return rep;
  }
  if (rep.finiteness.kind == Finiteness::Finite) {
    IndecCatalog cat = enumerate_indecomposables(alg, std::max(bound, 8));
    EndGlobalDim cert = gldim_end(cat.modules);
    if (!(cert.gldim == exact_dim(2)))
      throw std::logic_error(
          "additive generator certificate is not 2 on a representation-"
          "finite non-semisimple algebra");
    rep.value = exact_dim(2);
    rep.reasoning =
        "representation-finite, certified by gl.dim End(additive generator)";
    return rep;
  }
  if (rep.finiteness.kind == Finiteness::Infinite && alg->is_hereditary()) {
    rep.value = exact_dim(3);
    rep.reasoning =
        "representation-infinite hereditary: at least 3, at most 3";
    return rep;
  }
  if (rep.finiteness.kind == Finiteness::Infinite) {
    rep.value = at_least(3);
    rep.reasoning = "representation-infinite: no upper bound computed";
    return rep;
  }
  rep.value = at_least(2);
  rep.reasoning = "finiteness unknown at the bound";
  return rep;
}

AuslanderReport auslander_generator(const IndecCatalog& cat, int dim_bound,
                                    int max_candidates) {
  if (!cat.complete)
    throw std::invalid_argument("representation-infinite input");
  // forced part: all projectives and injectives
  std::vector<int> forced, free_idx;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat.projective[static_cast<std::size_t>(i)] ||
        cat.injective[static_cast<std::size_t>(i)])
      forced.push_back(i);
    else
      free_idx.push_back(i);
  }
  bool semisimple = cat.alg->radical_span().cols() == 0;
  AuslanderReport best;
  int evaluated = 0;
  std::uint64_t total = 1ull << free_idx.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (evaluated >= max_candidates) break;
    std::vector<int> idx = forced;
    for (std::size_t j = 0; j < free_idx.size(); ++j)
      if (mask & (1ull << j)) idx.push_back(free_idx[j]);
    std::sort(idx.begin(), idx.end());
    std::vector<Representation> parts;
    for (int i : idx) parts.push_back(cat.modules[static_cast<std::size_t>(i)]);
    EndGlobalDim g = gldim_end(parts, dim_bound);
    ++evaluated;
    best.table.emplace_back(idx, g.gldim);
    bool better = best.indices.empty();
    if (!better && g.gldim.exact &&
        (!best.gldim.exact || g.gldim.value < best.gldim.value))
      better = true;
    if (better) {
      best.indices = idx;
      best.gldim = g.gldim;
    }
    if (best.gldim.exact && best.gldim.value <= (semisimple ? 0 : 2)) break;
  }
  // order candidates by summand count for the report
  std::stable_sort(best.table.begin(), best.table.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() < b.first.size();
                   });
  return best;
}

namespace {

std::optional<RouteVerdict> separating_or_null(const SiltingContext& ctx,
                                               const IndecCatalog* cat) {
  try {
    return is_separating(ctx, cat && cat->complete ? cat : nullptr);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

TheoremOutcome verify_main_theorem(const SiltingContext& ctx,
                                   const IndecCatalog* cat) {
  TheoremOutcome out;
  RepDimReport ra = rep_dim(ctx.p.d.alg);
  RepDimReport rb = rep_dim(ctx.qb.algebra);
  out.repdim_a = ra.value;
  out.repdim_b = rb.value;
  if (!is_silting(ctx.p)) {
    out.verdict = Verdict::Inapplicable;
    out.detail = "not silting";
    return out;
  }
  auto sep = separating_or_null(ctx, cat);
  if (!sep) {
    out.verdict = Verdict::Inapplicable;
    out.detail = "separating undecidable";
    return out;
  }
  if (!sep->value) {
    out.verdict = Verdict::Inapplicable;
    out.detail = "separating fails";
    return out;
  }
  CheckResult idr = check_id_restriction(ctx, cat);
  if (idr.verdict != Verdict::Pass) {
    out.verdict = Verdict::Inapplicable;
    out.detail = "id-restriction fails: " + idr.detail;
    return out;
  }
  if (!ra.value.exact || !rb.value.exact) {
    out.verdict = Verdict::Inapplicable;
    out.detail = "rep.dim not exactly computable at the bound";
    return out;
  }
  out.verdict = ra.value.value == rb.value.value ? Verdict::Pass : Verdict::Fail;
  out.detail = "rep.dim A = " + ra.value.str() +
               ", rep.dim B = " + rb.value.str();
  return out;
}

TheoremOutcome verify_h0_endo_repdim(const SiltingContext& ctx,
                                     const IndecCatalog* cat) {
  TheoremOutcome out;
  auto sep = separating_or_null(ctx, cat);
  RouteVerdict spl;
  try {
    spl = is_splitting(ctx, cat && cat->complete ? cat : nullptr);
  } catch (const std::exception&) {
    out.detail = "splitting undecidable";
    return out;
  }
  if (!sep || !sep->value || !spl.value) {
    out.detail = "needs splitting and separating";
    return out;
  }
  Representation h = h0(ctx.p);
  if (h.is_zero()) {
    out.verdict = Verdict::Pass;
    out.detail = "H^0 = 0: both sides live over the zero ring";
    return out;
  }
  Mat ann = annihilator(h);
  QuotientPresentation qp = quotient_algebra(ctx.p.d.alg, ann);
  RepDimReport quotient_side = rep_dim(qp.presented.algebra);
  EndGlobalDim endo = gldim_end(h);
  RepDimReport endo_side = rep_dim(endo.presentation.algebra);
  out.repdim_a = quotient_side.value;
  out.repdim_b = endo_side.value;
  if (!quotient_side.value.exact || !endo_side.value.exact) {
    out.detail = "rep.dim not exactly computable";
    return out;
  }
  out.verdict = quotient_side.value.value == endo_side.value.value
                    ? Verdict::Pass
                    : Verdict::Fail;
  out.detail = "rep.dim End(H^0) = " + endo_side.value.str() +
               ", rep.dim A/ann = " + quotient_side.value.str();
  return out;
}

TheoremOutcome verify_hereditary_transfer(const SiltingContext& ctx,
                                          const IndecCatalog* cat) {
  TheoremOutcome out;
  if (!ctx.p.d.alg->is_hereditary()) {
    out.detail = "base algebra not hereditary";
    return out;
  }
  auto sep = separating_or_null(ctx, cat);
  if (!sep || !sep->value) {
    out.detail = "not separating";
    return out;
  }
  RepDimReport rb = rep_dim(ctx.qb.algebra);
  out.repdim_b = rb.value;
  if (!rb.value.exact) {
    out.detail = "rep.dim B not computable";
    return out;
  }
  bool bound_ok = rb.value.value <= 3;
  Finiteness fa = is_rep_finite(ctx.p.d.alg);
  bool transfer_ok = true;
  if (fa.kind == Finiteness::Finite) {
    Finiteness fb = is_rep_finite(ctx.qb.algebra);
    transfer_ok = fb.kind == Finiteness::Finite;
  }
  out.verdict = bound_ok && transfer_ok ? Verdict::Pass : Verdict::Fail;
  out.detail = "rep.dim B = " + rb.value.str();
  return out;
}

TheoremOutcome verify_tilting_repdim(const Representation& t,
                                     const IndecCatalog& cat) {
  TheoremOutcome out;
  if (!is_tilting_module(t)) {
    out.detail = "not a tilting module";
    return out;
  }
  SiltingContext ctx = make_silting_context(proj_presentation(t));
  RouteVerdict sep = is_separating(ctx, &cat);
  RouteVerdict spl = is_splitting(ctx, &cat);
  if (!sep.value || !spl.value) {
    out.detail = "tilting module not separating and splitting";
    return out;
  }
  RepDimReport ra = rep_dim(cat.alg);
  EndGlobalDim endo = gldim_end(t);
  RepDimReport rb = rep_dim(endo.presentation.algebra);
  out.repdim_a = ra.value;
  out.repdim_b = rb.value;
  if (!ra.value.exact || !rb.value.exact) {
    out.detail = "rep.dim not exactly computable";
    return out;
  }
  out.verdict =
      ra.value.value == rb.value.value ? Verdict::Pass : Verdict::Fail;
  out.detail =
      "rep.dim A = " + ra.value.str() + ", rep.dim End(T) = " + rb.value.str();
  return out;
}

}  // namespace silting

// The homotopy category of bounded complexes: coordinates for graded spaces
// of degreewise maps, minimization by Gaussian elimination (cancelling
// invertible semisimple entries of the differentials until everything left is
// radical), hom-spaces modulo homotopy, null-homotopy solvers and homotopy
// inverses.  All solvers reduce to exact rational linear algebra.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weightcat/complex.hpp"
#include "weightcat/errors.hpp"
#include "weightcat/morphism.hpp"

namespace weightcat {

// ---------------------------------------------------------------------------
// Coordinates for graded map spaces.
//
// A "graded map of shift k" from X to Y is a family of morphisms
// X^i -> Y^{i+k} with no compatibility imposed.  Chain maps are the shift-0
// families commuting with d; homotopies are shift-(-1) families.

struct GradedMapSpace {
  int shift = 0;
  std::vector<int> degrees;              // degrees i with X^i != 0 and Y^{i+shift} != 0
  std::vector<HomBasis> bases;           // hom basis of Hom(X^i, Y^{i+shift})
  std::vector<std::size_t> offsets;      // block offset per degree
  std::size_t dim = 0;
};

inline GradedMapSpace graded_map_space(const CategorySpec& spec, const Complex& x,
                                       const Complex& y, int shift) {
  GradedMapSpace sp;
  sp.shift = shift;
  for (const auto& [i, xc] : x.comp) {
    if (xc.is_zero() || y.at(i + shift).is_zero()) continue;
    HomBasis hb = hom_basis(spec, xc, y.at(i + shift));
    if (hb.dim() == 0) continue;
    sp.degrees.push_back(i);
    sp.offsets.push_back(sp.dim);
    sp.dim += hb.dim();
    sp.bases.push_back(std::move(hb));
  }
  return sp;
}

// Column-vector coordinates of a degreewise family (zero outside sp.degrees).
inline Mat graded_coords(const CategorySpec& spec, const GradedMapSpace& sp,
                         const std::map<int, Mor>& comps) {
  Mat v((std::size_t)sp.dim, 1);
  for (std::size_t k = 0; k < sp.degrees.size(); ++k) {
    auto it = comps.find(sp.degrees[k]);
    if (it == comps.end() || it->second.is_zero()) continue;
    Mat c = coords(spec, it->second);
    for (std::size_t j = 0; j < c.rows(); ++j) v.at(sp.offsets[k] + j, 0) = c.at(j, 0);
  }
  return v;
}

inline std::map<int, Mor> graded_from_coords(const CategorySpec& spec,
                                             const GradedMapSpace& sp, const Complex& x,
                                             const Complex& y, const Mat& v) {
  if (v.rows() != sp.dim || v.cols() != 1)
    throw ShapeError("graded_from_coords: wrong coordinate count");
  std::map<int, Mor> comps;
  for (std::size_t k = 0; k < sp.degrees.size(); ++k) {
    const int i = sp.degrees[k];
    const std::size_t d = sp.bases[k].dim();
    Mat block((std::size_t)d, 1);
    for (std::size_t j = 0; j < d; ++j) block.at(j, 0) = v.at(sp.offsets[k] + j, 0);
    Mor m = mor_from_coords(spec, x.at(i), y.at(i + sp.shift), block);
    if (!m.is_zero()) comps[i] = std::move(m);
  }
  return comps;
}

inline Mat chain_map_coords(const CategorySpec& spec, const GradedMapSpace& sp,
                            const ChainMap& f) {
  return graded_coords(spec, sp, f.comp);
}

inline ChainMap chain_map_from_coords(const CategorySpec& spec, const GradedMapSpace& sp,
                                      const Complex& x, const Complex& y, const Mat& v) {
  return ChainMap{x, y, graded_from_coords(spec, sp, x, y, v)};
}

inline Homotopy homotopy_from_coords(const CategorySpec& spec, const GradedMapSpace& sp,
                                     const Complex& x, const Complex& y, const Mat& v) {
  return Homotopy{x, y, graded_from_coords(spec, sp, x, y, v)};
}

// ---------------------------------------------------------------------------
// The two structural linear operators.

// Matrix of f |-> (i |-> d_Y f^i - f^{i+1} d_X), from the shift-0 space into
// the shift-(+1) space.  Chain maps = kernel.
inline Mat chain_condition_matrix(const CategorySpec& spec, const Complex& x,
                                  const Complex& y, const GradedMapSpace& maps,
                                  const GradedMapSpace& defects) {
  Mat out((std::size_t)defects.dim, (std::size_t)maps.dim);
  std::size_t col = 0;
  for (std::size_t k = 0; k < maps.degrees.size(); ++k) {
    const int i = maps.degrees[k];
    for (const Mor& u : maps.bases[k].mors) {
      std::map<int, Mor> defect;
      Mor a = compose(y.d(i), u);            // lives at condition degree i
      if (!a.is_zero()) defect[i] = std::move(a);
      Mor b = compose(u, x.d(i - 1));        // u as f^{i}, constraining degree i-1
      if (!b.is_zero()) defect[i - 1] = -b;
      Mat v = graded_coords(spec, defects, defect);
      for (std::size_t r = 0; r < defects.dim; ++r) out.at(r, col) = v.at(r, 0);
      ++col;
    }
  }
  return out;
}

// Matrix of h |-> d h + h d, from the shift-(-1) space into the shift-0 space.
inline Mat homotopy_operator_matrix(const CategorySpec& spec, const Complex& x,
                                    const Complex& y, const GradedMapSpace& htpy,
                                    const GradedMapSpace& maps) {
  Mat out((std::size_t)maps.dim, (std::size_t)htpy.dim);
  std::size_t col = 0;
  for (std::size_t k = 0; k < htpy.degrees.size(); ++k) {
    const int i = htpy.degrees[k];  // h-component X^i -> Y^{i-1}
    for (const Mor& u : htpy.bases[k].mors) {
      std::map<int, Mor> image;
      Mor a = compose(y.d(i - 1), u);  // contributes to degree i
      if (!a.is_zero()) image[i] = std::move(a);
      Mor b = compose(u, x.d(i - 1));  // contributes to degree i-1
      if (!b.is_zero()) image[i - 1] = std::move(b);
      Mat v = graded_coords(spec, maps, image);
      for (std::size_t r = 0; r < maps.dim; ++r) out.at(r, col) = v.at(r, 0);
      ++col;
    }
  }
  return out;
}

// Basis of the space of all chain maps X -> Y (no homotopy quotient).
inline std::vector<ChainMap> chain_map_basis(const CategorySpec& spec, const Complex& x,
                                             const Complex& y) {
  GradedMapSpace maps = graded_map_space(spec, x, y, 0);
  GradedMapSpace defects = graded_map_space(spec, x, y, 1);
  Mat cond = chain_condition_matrix(spec, x, y, maps, defects);
  std::vector<ChainMap> out;
  for (const Mat& v : mat_kernel(cond))
    out.push_back(chain_map_from_coords(spec, maps, x, y, v));
  return out;
}

// ---------------------------------------------------------------------------
// Hom modulo homotopy.

struct KbHom {
  Complex x, y;
  GradedMapSpace space;             // shift-0 component space
  std::size_t chain_dim = 0;        // dim of the space of chain maps
  std::size_t boundary_dim = 0;     // dim of the null-homotopic subspace
  std::vector<ChainMap> reps;       // representatives of a homotopy-class basis
  std::vector<Mat> rep_coords;

  std::size_t dim() const { return reps.size(); }
};

inline KbHom kb_hom(const CategorySpec& spec, const Complex& x, const Complex& y) {
  KbHom r;
  r.x = x;
  r.y = y;
  r.space = graded_map_space(spec, x, y, 0);
  GradedMapSpace defects = graded_map_space(spec, x, y, 1);
  GradedMapSpace htpy = graded_map_space(spec, x, y, -1);

  Mat cond = chain_condition_matrix(spec, x, y, r.space, defects);
  std::vector<Mat> z = mat_kernel(cond);
  r.chain_dim = z.size();

  Mat bop = homotopy_operator_matrix(spec, x, y, htpy, r.space);
  SpanBuilder span(r.space.dim);
  for (std::size_t j = 0; j < bop.cols(); ++j) span.add(bop.col(j));
  r.boundary_dim = span.rank();

  for (const Mat& v : z)
    if (span.add(v)) {
      r.reps.push_back(chain_map_from_coords(spec, r.space, x, y, v));
      r.rep_coords.push_back(v);
    }
  return r;
}

inline std::size_t kb_hom_dim(const CategorySpec& spec, const Complex& x, const Complex& y) {
  return kb_hom(spec, x, y).dim();
}

// Solves d h + h d = f.  Presence of a solution == f is zero in K^b.
inline std::optional<Homotopy> is_null_homotopic(const CategorySpec& spec,
                                                 const ChainMap& f) {
  GradedMapSpace maps = graded_map_space(spec, f.src, f.tgt, 0);
  GradedMapSpace htpy = graded_map_space(spec, f.src, f.tgt, -1);
  Mat bop = homotopy_operator_matrix(spec, f.src, f.tgt, htpy, maps);
  auto sol = solve_linear(bop, chain_map_coords(spec, maps, f));
  if (!sol) return std::nullopt;
  return homotopy_from_coords(spec, htpy, f.src, f.tgt, *sol);
}

inline bool chain_maps_homotopic(const CategorySpec& spec, const ChainMap& f,
                                 const ChainMap& g) {
  return is_null_homotopic(spec, f - g).has_value();
}

// A two-sided inverse of f up to homotopy, when one exists: solves
//   g chain map,  g o f - id = d h1 + h1 d,  f o g - id = d h2 + h2 d
// as one joint linear system in (g, h1, h2).
inline std::optional<ChainMap> homotopy_inverse(const CategorySpec& spec, const ChainMap& f) {
  const Complex& x = f.src;
  const Complex& y = f.tgt;
  GradedMapSpace g_space = graded_map_space(spec, y, x, 0);
  GradedMapSpace g_def = graded_map_space(spec, y, x, 1);
  GradedMapSpace xx = graded_map_space(spec, x, x, 0);
  GradedMapSpace yy = graded_map_space(spec, y, y, 0);
  GradedMapSpace hx = graded_map_space(spec, x, x, -1);
  GradedMapSpace hy = graded_map_space(spec, y, y, -1);

  // Columns: [g | h1 | h2].  Rows: chain condition on g, then the two
  // composite-vs-identity conditions.
  Mat cond_g = chain_condition_matrix(spec, y, x, g_space, g_def);

  // g |-> g o f in End-coordinates of X, and g |-> f o g in End of Y.
  Mat gf((std::size_t)xx.dim, (std::size_t)g_space.dim);
  Mat fg((std::size_t)yy.dim, (std::size_t)g_space.dim);
  std::size_t col = 0;
  for (std::size_t k = 0; k < g_space.degrees.size(); ++k) {
    const int i = g_space.degrees[k];
    for (const Mor& u : g_space.bases[k].mors) {
      std::map<int, Mor> a, b;
      Mor m1 = compose(u, f.at(i));
      if (!m1.is_zero()) a[i] = std::move(m1);
      Mor m2 = compose(f.at(i), u);
      if (!m2.is_zero()) b[i] = std::move(m2);
      Mat va = graded_coords(spec, xx, a);
      Mat vb = graded_coords(spec, yy, b);
      for (std::size_t r = 0; r < xx.dim; ++r) gf.at(r, col) = va.at(r, 0);
      for (std::size_t r = 0; r < yy.dim; ++r) fg.at(r, col) = vb.at(r, 0);
      ++col;
    }
  }

  Mat bx = homotopy_operator_matrix(spec, x, x, hx, xx);
  Mat by = homotopy_operator_matrix(spec, y, y, hy, yy);

  const std::size_t cols = g_space.dim + hx.dim + hy.dim;
  const std::size_t rows = g_def.dim + xx.dim + yy.dim;
  Mat lhs(rows, cols);
  Mat rhs(rows, 1);
  auto put = [&](const Mat& block, std::size_t r0, std::size_t c0, bool negate) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        lhs.at(r0 + r, c0 + c) = negate ? -block.at(r, c) : block.at(r, c);
  };
  put(cond_g, 0, 0, false);
  put(gf, g_def.dim, 0, false);
  put(bx, g_def.dim, g_space.dim, true);
  put(fg, g_def.dim + xx.dim, 0, false);
  put(by, g_def.dim + xx.dim, g_space.dim + hx.dim, true);

  Mat idx = chain_map_coords(spec, xx, chain_identity(x));
  Mat idy = chain_map_coords(spec, yy, chain_identity(y));
  for (std::size_t r = 0; r < xx.dim; ++r) rhs.at(g_def.dim + r, 0) = idx.at(r, 0);
  for (std::size_t r = 0; r < yy.dim; ++r) rhs.at(g_def.dim + xx.dim + r, 0) = idy.at(r, 0);

  auto sol = solve_linear(lhs, rhs);
  if (!sol) return std::nullopt;
  Mat gv((std::size_t)g_space.dim, 1);
  for (std::size_t r = 0; r < g_space.dim; ++r) gv.at(r, 0) = sol->at(r, 0);
  return chain_map_from_coords(spec, g_space, y, x, gv);
}

inline bool is_homotopy_equivalence(const CategorySpec& spec, const ChainMap& f) {
  return homotopy_inverse(spec, f).has_value();
}

// ---------------------------------------------------------------------------
// Minimization.

inline bool is_minimal(const Complex& x) {
  for (const auto& [_, d] : x.diff)
    if (!d.ss_is_zero()) return false;
  return true;
}

struct MinimizeResult {
  Complex m;          // the minimal model: all differentials radical
  ChainMap to_min;    // F : X -> M
  ChainMap from_min;  // G : M -> X, with F o G = id_M exactly
  Homotopy h;         // id_X - G o F = d h + h d
};

namespace detail {

// g o h o f degreewise: (g h f)^i = g^{i-1} o h^i o f^i.
inline Homotopy conjugate_homotopy(const ChainMap& g, const Homotopy& h, const ChainMap& f) {
  Homotopy r{f.src, g.tgt, {}};
  for (int i : support_union(f.src, g.tgt))
    r.set(i, compose(g.at(i - 1), compose(h.at(i), f.at(i))));
  return r;
}

inline Homotopy homotopy_sum(const Homotopy& a, const Homotopy& b) {
  Homotopy r{a.src, a.tgt, {}};
  for (int i : support_union(a.src, a.tgt)) r.set(i, a.at(i) + b.at(i));
  return r;
}

}  // namespace detail

// Gaussian elimination on the differentials: repeatedly cancels a pair of
// matching-simple copies joined by an invertible (nonzero scalar) semisimple
// entry, updating the neighbouring differentials by the Schur complement,
// until every differential is radical.  Returns the homotopy equivalence.
inline MinimizeResult minimize(const CategorySpec& spec, const Complex& input) {
  Complex x = input;
  x.prune();

  MinimizeResult res;
  res.to_min = chain_identity(x);
  res.from_min = chain_identity(x);
  res.h = homotopy_zero(x, x);

  Complex cur = x;
  for (;;) {
    // Locate a pivot: degrees ascending, simples in declaration order,
    // positions row-major.
    int pdeg = 0;
    std::string psimple;
    std::size_t prow = 0, pcol = 0;
    bool found = false;
    for (const auto& [i, d] : cur.diff) {
      for (const auto& simple : spec.simples) {
        Mat blk = d.ss_block(simple.name);
        for (std::size_t r = 0; r < blk.rows() && !found; ++r)
          for (std::size_t c = 0; c < blk.cols() && !found; ++c)
            if (!blk.at(r, c).is_zero()) {
              pdeg = i;
              psimple = simple.name;
              prow = r;
              pcol = c;
              found = true;
            }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;

    const Obj ci = cur.at(pdeg), ci1 = cur.at(pdeg + 1);
    Sel u_sel{{psimple, {(int)pcol}}};
    Sel v_sel{{psimple, {(int)prow}}};
    Sel a_sel = sel_complement(ci, u_sel);
    Sel b_sel = sel_complement(ci1, v_sel);
    const Obj a_obj = obj_of_sel(a_sel), b_obj = obj_of_sel(b_sel);

    const Mor d = cur.d(pdeg);
    Mor u = mor_restrict(d, v_sel, u_sel);
    Mor bb = mor_restrict(d, v_sel, a_sel);
    Mor cc = mor_restrict(d, b_sel, u_sel);
    Mor ee = mor_restrict(d, b_sel, a_sel);
    Mor uinv = *mor_inverse(u);

    // The reduced complex.
    Complex next = cur;
    next.comp.erase(pdeg);
    next.comp.erase(pdeg + 1);
    if (!a_obj.is_zero()) next.comp[pdeg] = a_obj;
    if (!b_obj.is_zero()) next.comp[pdeg + 1] = b_obj;
    next.diff.erase(pdeg);
    Mor dnew = ee - compose(cc, compose(uinv, bb));
    if (!dnew.is_zero()) next.diff[pdeg] = std::move(dnew);
    // Restrict the neighbours.
    next.diff.erase(pdeg - 1);
    if (!cur.d(pdeg - 1).is_zero()) {
      Mor prev = compose(mor_sel_proj(ci, a_sel), cur.d(pdeg - 1));
      if (!prev.is_zero()) next.diff[pdeg - 1] = std::move(prev);
    }
    next.diff.erase(pdeg + 1);
    if (!cur.d(pdeg + 1).is_zero()) {
      Mor post = compose(cur.d(pdeg + 1), mor_sel_incl(ci1, b_sel));
      if (!post.is_zero()) next.diff[pdeg + 1] = std::move(post);
    }
    next.prune();

    // Step equivalence data.
    ChainMap fstep = chain_zero(cur, next);
    ChainMap gstep = chain_zero(next, cur);
    for (const auto& [i, c] : next.comp) {
      if (i == pdeg || i == pdeg + 1 || c.is_zero()) continue;
      fstep.set(i, mor_identity(c));
      gstep.set(i, mor_identity(c));
    }
    // F at the cancelled degrees: [0, id] and [-c u^{-1}, id].
    fstep.set(pdeg, mor_sel_proj(ci, a_sel));
    fstep.set(pdeg + 1, mor_sel_proj(ci1, b_sel) -
                            compose(cc, compose(uinv, mor_sel_proj(ci1, v_sel))));
    // G at the cancelled degrees: [-u^{-1} b; id] and [0; id].
    gstep.set(pdeg, mor_sel_incl(ci, a_sel) -
                        compose(mor_sel_incl(ci, u_sel), compose(uinv, bb)));
    gstep.set(pdeg + 1, mor_sel_incl(ci1, b_sel));
    // The contraction homotopy: only at pdeg + 1, value [[u^{-1}, 0], [0, 0]].
    Homotopy hstep = homotopy_zero(cur, cur);
    hstep.set(pdeg + 1,
              compose(mor_sel_incl(ci, u_sel), compose(uinv, mor_sel_proj(ci1, v_sel))));

    // Accumulate: F := Fstep o F, G := G o Gstep, H := H + G_prev Hstep F_prev.
    res.h = detail::homotopy_sum(
        res.h, detail::conjugate_homotopy(res.from_min, hstep, res.to_min));
    res.to_min = chain_compose(fstep, res.to_min);
    res.from_min = chain_compose(res.from_min, gstep);
    cur = std::move(next);
  }

  res.m = cur;
  return res;
}

}  // namespace weightcat

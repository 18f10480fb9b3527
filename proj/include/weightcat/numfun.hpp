// The numerical functors on the homotopy category.  Two quotients of the
// homotopy category of bounded complexes are modeled side by side:
//
//   * the graded semisimplification: objects become graded multiplicity
//     vectors, morphisms become degree-preserving semisimple blocks (the
//     nilpotent data is forgotten after transport to minimal models);
//   * the quotient by the numerical ideal of homotopy classes, handled
//     implicitly through coset arithmetic (no standalone category is built).
//
// Alongside the functors live the trace on homotopy classes, the numerical
// ideal they induce, and the verification routines for exactness of the
// graded functor on cones, its fullness gap, the affine obstruction analysis
// for morphisms of truncation triangles, kernel nilpotency with its recursive
// bound, conservativity comparisons, and compatibility with tensor products.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weightcat/complex.hpp"
#include "weightcat/homotopy_cat.hpp"
#include "weightcat/ideals.hpp"
#include "weightcat/tensor.hpp"
#include "weightcat/weights.hpp"

namespace weightcat {

// ---------------------------------------------------------------------------
// Trace on homotopy classes.

// Alternating sum of the degreewise categorical traces.  Invariant under
// adding null-homotopic maps: the two occurrences of each tr(h o d) term
// carry opposite signs and cancel in pairs.
inline Scalar kb_trace(const CategorySpec& spec, const ChainMap& f) {
  if (!(f.src == f.tgt)) throw ShapeError("kb_trace of a non-endomorphism");
  Scalar t;
  for (const auto& [i, m] : f.comp) {
    const Scalar c = trace(spec, m);
    if (i % 2 == 0)
      t += c;
    else
      t += Scalar(-1) * c;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Class coordinates and the numerical ideal of homotopy classes.

// Coordinates of the homotopy class of f in the representative basis of h:
// solve  [reps | boundaries] * v = coords(f)  and keep the rep part.
inline Mat kb_class_coords(const CategorySpec& spec, const KbHom& h, const ChainMap& f) {
  if (!(f.src == h.x) || !(f.tgt == h.y))
    throw ShapeError("kb_class_coords: morphism endpoints do not match the hom space");
  Mat lhs((std::size_t)h.space.dim, 0);
  for (const Mat& v : h.rep_coords) lhs = Mat::hcat(lhs, v);
  GradedMapSpace htpy = graded_map_space(spec, h.x, h.y, -1);
  Mat bop = homotopy_operator_matrix(spec, h.x, h.y, htpy, h.space);
  lhs = Mat::hcat(lhs, bop);
  Mat rhs = chain_map_coords(spec, h.space, f);
  auto sol = solve_linear(lhs, rhs);
  if (!sol) throw ShapeError("kb_class_coords: input is not a chain map of this hom space");
  Mat out(h.reps.size(), 1);
  for (std::size_t r = 0; r < h.reps.size(); ++r) out.at(r, 0) = sol->at(r, 0);
  return out;
}

// Rebuilds a chain map from class coordinates (a representative of the class).
inline ChainMap kb_class_rep(const KbHom& h, const Mat& v) {
  if (v.rows() != h.reps.size() || v.cols() != 1)
    throw ShapeError("kb_class_rep: coordinate shape mismatch");
  ChainMap f = chain_zero(h.x, h.y);
  for (std::size_t r = 0; r < h.reps.size(); ++r) {
    const Scalar c = v.at(r, 0);
    if (!c.is_zero()) f = f + c * h.reps[r];
  }
  return f;
}

// Hom classes together with the numerical subspace and coset data.
struct QuotientHom {
  Complex source, target;
  KbHom hom;                         // basis of homotopy classes
  std::vector<Mat> n_coords;         // class coordinates spanning the numerical part
  std::vector<ChainMap> n_basis;     // matching chain-map representatives
  std::vector<ChainMap> coset_reps;  // classes completing the span to all of hom

  std::size_t quotient_dim() const { return hom.dim() - n_coords.size(); }
};

// The numerical ideal of Hom(X, Y) in the homotopy category: classes f with
// kb_trace(g o f) = 0 for every class g: Y -> X.  Computed as the left kernel
// of the trace pairing on class bases; well defined because the trace kills
// null-homotopic maps.
inline QuotientHom kb_numerical_ideal(const CategorySpec& spec, const Complex& x,
                                      const Complex& y) {
  QuotientHom q;
  q.source = x;
  q.target = y;
  q.hom = kb_hom(spec, x, y);
  KbHom back = kb_hom(spec, y, x);
  Mat gram(q.hom.dim(), back.dim());
  for (std::size_t i = 0; i < q.hom.dim(); ++i)
    for (std::size_t j = 0; j < back.dim(); ++j)
      gram.at(i, j) = kb_trace(spec, chain_compose(back.reps[j], q.hom.reps[i]));
  for (Mat& v : bilinear_radical(gram)) {
    q.n_basis.push_back(kb_class_rep(q.hom, v));
    q.n_coords.push_back(std::move(v));
  }
  SpanBuilder span(q.hom.dim());
  for (const Mat& v : q.n_coords) span.add(v);
  for (std::size_t i = 0; i < q.hom.dim(); ++i) {
    Mat e(q.hom.dim(), 1);
    e.at(i, 0) = Scalar(1);
    if (span.add(e)) q.coset_reps.push_back(q.hom.reps[i]);
  }
  return q;
}

inline bool kb_numerical_contains(const CategorySpec& spec, const QuotientHom& q,
                                  const ChainMap& f) {
  return in_span(kb_class_coords(spec, q.hom, f), q.n_coords);
}

// ---------------------------------------------------------------------------
// The graded semisimplified category.

struct GradedNumObject {
  std::map<int, Obj> comp;  // zero entries omitted

  Obj at(int i) const {
    auto it = comp.find(i);
    return it == comp.end() ? Obj{} : it->second;
  }
  bool is_zero() const { return comp.empty(); }

  friend bool operator==(const GradedNumObject& a, const GradedNumObject& b) {
    return a.comp == b.comp;
  }
  friend bool operator!=(const GradedNumObject& a, const GradedNumObject& b) {
    return !(a == b);
  }

  std::string str() const {
    if (comp.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : comp) {
      if (!out.empty()) out += "; ";
      out += std::to_string(i) + ": " + c.str();
    }
    return out;
  }
};

inline GradedNumObject graded_shift(const GradedNumObject& x, int n) {
  GradedNumObject r;
  for (const auto& [i, c] : x.comp) r.comp[i - n] = c;
  return r;
}

inline GradedNumObject graded_sum(const GradedNumObject& a, const GradedNumObject& b) {
  GradedNumObject r = a;
  for (const auto& [i, c] : b.comp) {
    Obj t = r.at(i) + c;
    if (!t.is_zero()) r.comp[i] = t;
  }
  return r;
}

// Degree-preserving semisimple-block morphisms between graded objects.
struct GradedNumMor {
  GradedNumObject src, tgt;
  std::map<int, Mor> comp;  // each entry purely semisimple; zero entries omitted

  Mor at(int i) const {
    auto it = comp.find(i);
    return it == comp.end() ? mor_zero(src.at(i), tgt.at(i)) : it->second;
  }
  GradedNumMor& set(int i, const Mor& m) {
    Mor s = quotient_num(m);
    if (!s.is_zero()) comp[i] = std::move(s);
    return *this;
  }
  bool is_zero() const {
    for (const auto& [i, m] : comp) {
      (void)i;
      if (!m.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const GradedNumMor& a, const GradedNumMor& b) {
    if (a.src != b.src || a.tgt != b.tgt) return false;
    std::set<int> degs;
    for (const auto& [i, m] : a.comp) degs.insert(i);
    for (const auto& [i, m] : b.comp) degs.insert(i);
    for (int i : degs)
      if (!(a.at(i) == b.at(i))) return false;
    return true;
  }
  friend bool operator!=(const GradedNumMor& a, const GradedNumMor& b) { return !(a == b); }
};

inline GradedNumMor graded_num_zero(const GradedNumObject& x, const GradedNumObject& y) {
  return {x, y, {}};
}

inline GradedNumMor graded_num_identity(const GradedNumObject& x) {
  GradedNumMor r{x, x, {}};
  for (const auto& [i, c] : x.comp) r.set(i, mor_identity(c));
  return r;
}

inline GradedNumMor graded_num_compose(const GradedNumMor& g, const GradedNumMor& f) {
  if (!(f.tgt == g.src)) throw ShapeError("graded_num_compose: endpoint mismatch");
  GradedNumMor r{f.src, g.tgt, {}};
  std::set<int> degs;
  for (const auto& [i, m] : f.comp) degs.insert(i);
  for (const auto& [i, m] : g.comp) degs.insert(i);
  for (int i : degs) r.set(i, compose(g.at(i), f.at(i)));
  return r;
}

inline GradedNumMor graded_num_shift_mor(const GradedNumMor& f, int n) {
  GradedNumMor r{graded_shift(f.src, n), graded_shift(f.tgt, n), {}};
  for (const auto& [i, m] : f.comp) r.comp[i - n] = m;
  return r;
}

// Invertibility in the graded category: matching components degreewise, each
// an invertible semisimple block matrix.
inline bool graded_num_invertible(const GradedNumMor& f) {
  std::set<int> degs;
  for (const auto& [i, c] : f.src.comp) degs.insert(i);
  for (const auto& [i, c] : f.tgt.comp) degs.insert(i);
  for (int i : degs) {
    if (f.src.at(i) != f.tgt.at(i)) return false;
    if (!mor_invertible(f.at(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The graded functor.

// Objects: the degreewise components of the minimal model.  The minimal
// differentials are radical, hence die in the semisimplification, so no
// differential data survives.
inline GradedNumObject pi_obj(const CategorySpec& spec, const Complex& x) {
  GradedNumObject g;
  Complex m = minimize(spec, x).m;
  for (const auto& [i, c] : m.comp)
    if (!c.is_zero()) g.comp[i] = c;
  return g;
}

// Morphisms: transport to minimal models, keep the degreewise semisimple
// parts.  Homotopic inputs agree because a conjugated null homotopy lands in
// the radical when the differentials do.
inline GradedNumMor pi_mor(const CategorySpec& spec, const ChainMap& f) {
  MinimizeResult rx = minimize(spec, f.src);
  MinimizeResult ry = minimize(spec, f.tgt);
  ChainMap fm = chain_compose(ry.to_min, chain_compose(f, rx.from_min));
  GradedNumMor g;
  for (const auto& [i, c] : rx.m.comp)
    if (!c.is_zero()) g.src.comp[i] = c;
  for (const auto& [i, c] : ry.m.comp)
    if (!c.is_zero()) g.tgt.comp[i] = c;
  for (const auto& [i, m] : fm.comp) {
    (void)m;
    g.set(i, fm.at(i));
  }
  return g;
}

namespace detail {

// Independent recursive construction of the graded functor on morphisms:
// peel off the top-degree slice of both minimal models via weight
// truncation, extend the morphism across the truncations, and recurse.
inline GradedNumMor pi_rec(const CategorySpec& spec, const ChainMap& fm) {
  const Complex& x = fm.src;
  const Complex& y = fm.tgt;
  GradedNumMor out;
  for (const auto& [i, c] : x.comp) out.src.comp[i] = c;
  for (const auto& [i, c] : y.comp) out.tgt.comp[i] = c;
  if (x.is_zero() || y.is_zero()) return out;

  const bool x_single = x.lo() == x.hi();
  const bool y_single = y.lo() == y.hi();
  if (x_single && y_single) {
    if (x.lo() == y.lo()) out.set(x.lo(), fm.at(x.lo()));
    return out;  // cross-degree components do not survive the grading
  }

  // Cut at the lowest weight present (= the highest chain degree).
  const int b = std::min(-x.hi(), -y.hi());
  WeightDecomposition dx = weight_truncate(spec, x, b);
  WeightDecomposition dy = weight_truncate(spec, y, b);
  auto [flow, fhigh] = extend_to_truncation(spec, fm, dx, dy);
  GradedNumMor plow = pi_rec(spec, flow);
  GradedNumMor phigh = pi_rec(spec, fhigh);
  for (const auto& [i, m] : plow.comp) out.set(i, m);
  for (const auto& [i, m] : phigh.comp) out.set(i, m);
  return out;
}

}  // namespace detail

// The same functor computed through the truncation recursion; used to
// cross-check pi_mor's direct definition.
inline GradedNumMor pi_mor_via_truncation(const CategorySpec& spec, const ChainMap& f) {
  MinimizeResult rx = minimize(spec, f.src);
  MinimizeResult ry = minimize(spec, f.tgt);
  ChainMap fm = chain_compose(ry.to_min, chain_compose(f, rx.from_min));
  return detail::pi_rec(spec, fm);
}

// ---------------------------------------------------------------------------
// Coordinates on graded hom-spaces.

namespace detail {

struct GradedHomLayout {
  struct Block {
    int degree;
    std::string simple;
    std::size_t rows = 0, cols = 0, offset = 0;
  };
  std::vector<Block> blocks;
  std::size_t dim = 0;
};

inline GradedHomLayout graded_hom_layout(const CategorySpec& spec, const GradedNumObject& x,
                                         const GradedNumObject& y) {
  GradedHomLayout L;
  std::set<int> degs;
  for (const auto& [i, c] : x.comp) degs.insert(i);
  for (const auto& [i, c] : y.comp) degs.insert(i);
  for (int i : degs) {
    for (const auto& s : spec.simples) {
      const std::size_t rows = (std::size_t)y.at(i).mult_of(s.name);
      const std::size_t cols = (std::size_t)x.at(i).mult_of(s.name);
      if (rows == 0 || cols == 0) continue;
      L.blocks.push_back({i, s.name, rows, cols, L.dim});
      L.dim += rows * cols;
    }
  }
  return L;
}

inline Mat graded_num_coords(const GradedHomLayout& L, const GradedNumMor& f) {
  Mat v(L.dim, 1);
  for (const auto& b : L.blocks) {
    Mat blk = f.at(b.degree).ss_block(b.simple);
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c)
        v.at(b.offset + r * b.cols + c, 0) = blk.at(r, c);
  }
  return v;
}

inline GradedNumMor graded_num_from_coords(const GradedHomLayout& L, const GradedNumObject& x,
                                           const GradedNumObject& y, const Mat& v) {
  if (v.rows() != L.dim || v.cols() != 1)
    throw ShapeError("graded_num_from_coords: coordinate shape mismatch");
  GradedNumMor f = graded_num_zero(x, y);
  std::map<int, Mor> acc;
  for (const auto& b : L.blocks) {
    auto it = acc.find(b.degree);
    if (it == acc.end()) it = acc.emplace(b.degree, mor_zero(x.at(b.degree), y.at(b.degree))).first;
    Mat blk((std::size_t)b.rows, (std::size_t)b.cols);
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c)
        blk.at(r, c) = v.at(b.offset + r * b.cols + c, 0);
    it->second.set_ss(b.simple, std::move(blk));
  }
  for (auto& [i, m] : acc) f.set(i, m);
  return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exactness of the graded functor on cones.

struct LesReport {
  bool ok = true;
  int nodes_checked = 0;
  std::vector<std::string> failures;
};

namespace detail {

// Exactness at a node: incoming image equals outgoing kernel, checked by
// "composite is zero" plus the rank identity rank(in) + rank(out) = dim.
inline bool node_exact(const Mat& in, const Mat& out) {
  if (!(out * in).is_zero()) return false;
  return mat_rank(in) + mat_rank(out) == in.rows();
}

}  // namespace detail

// Applies the graded functor to the triangle on f and its cone, and checks
// that the resulting sequence is exact at every degree.  Each degree and
// simple contributes an independent strand (one weight stratum of the
// minimal models), so the verification walks the strata one at a time.
// All three triangle maps are transported through the same minimal models
// (the connecting map through the shift of the source transports), so
// consecutive maps are expressed in a common basis at every node.
inline LesReport verify_les(const CategorySpec& spec, const ChainMap& f) {
  LesReport rep;
  Triangle t = make_cone(f);
  MinimizeResult ra = minimize(spec, f.src);
  MinimizeResult rb = minimize(spec, f.tgt);
  MinimizeResult rc = minimize(spec, t.cone);
  ChainMap fm = chain_compose(rb.to_min, chain_compose(f, ra.from_min));
  ChainMap im = chain_compose(rc.to_min, chain_compose(t.incl, rb.from_min));
  ChainMap pm =
      chain_compose(chain_shift(ra.to_min, 1), chain_compose(t.proj, rc.from_min));

  std::set<int> degs;
  for (const auto& [i, c] : ra.m.comp) degs.insert(i);
  for (const auto& [i, c] : rb.m.comp) degs.insert(i);
  for (const auto& [i, c] : rc.m.comp) degs.insert(i);
  if (degs.empty()) return rep;
  const int lo = *degs.begin() - 1, hi = *degs.rbegin() + 1;

  auto check = [&](const std::string& where, int i, const std::string& s, const Mat& in,
                   const Mat& out) {
    ++rep.nodes_checked;
    if (!detail::node_exact(in, out)) {
      rep.ok = false;
      rep.failures.push_back("not exact at " + where + " degree " + std::to_string(i) +
                             " simple " + s);
    }
  };

  for (int i = lo; i <= hi; ++i) {
    for (const auto& s : spec.simples) {
      // source node: entered by the previous connecting map, left by f
      check("source", i, s.name, pm.at(i - 1).ss_block(s.name),
            fm.at(i).ss_block(s.name));
      // middle node: entered by f, left by the cone inclusion
      check("middle", i, s.name, fm.at(i).ss_block(s.name),
            im.at(i).ss_block(s.name));
      // cone node: entered by the inclusion, left by the connecting map
      check("cone", i, s.name, im.at(i).ss_block(s.name),
            pm.at(i).ss_block(s.name));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fullness gap.

struct FullnessReport {
  std::size_t image_dim = 0;
  std::size_t target_dim = 0;
  std::optional<GradedNumMor> witness;  // a class outside the image, when proper

  bool full() const { return image_dim == target_dim; }
};

// Pushes a basis of hom classes through the graded functor and compares the
// span with the graded hom-space; returns a witness outside the image when
// the inclusion is proper.
inline FullnessReport fullness_gap(const CategorySpec& spec, const Complex& x,
                                   const Complex& y) {
  FullnessReport r;
  GradedNumObject px = pi_obj(spec, x), py = pi_obj(spec, y);
  detail::GradedHomLayout L = detail::graded_hom_layout(spec, px, py);
  r.target_dim = L.dim;
  KbHom h = kb_hom(spec, x, y);
  SpanBuilder span(L.dim);
  for (const ChainMap& rep : h.reps)
    span.add(detail::graded_num_coords(L, pi_mor(spec, rep)));
  r.image_dim = span.rank();
  if (r.image_dim < r.target_dim) {
    for (std::size_t k = 0; k < L.dim; ++k) {
      Mat e(L.dim, 1);
      e.at(k, 0) = Scalar(1);
      if (!span.contains(e)) {
        r.witness = detail::graded_num_from_coords(L, px, py, e);
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Obstruction analysis across the truncation triangle.

struct ObstructionReport {
  int b = 0;                         // truncation cutoff used
  bool family_exists = false;        // some morphism of triangles extends f
  std::size_t family_dim = 0;        // affine dimension of the extension family
  bool low_meets_numerical = false;  // some extension has numerical low part
  bool high_meets_numerical = false;
  bool obstructed = false;           // extensions exist, neither end ever numerical
};

// Parametrizes every extension of a numerical endomorphism class to a
// morphism of the truncation triangle (low and high endomorphisms making all
// three squares commute up to homotopy) as an affine family, then asks
// whether the family ever meets the numerical ideal on either end.
inline ObstructionReport triangulated_obstruction(const CategorySpec& spec,
                                                  const ChainMap& f) {
  if (!(f.src == f.tgt))
    throw ShapeError("triangulated_obstruction needs an endomorphism class");
  QuotientHom qx = kb_numerical_ideal(spec, f.src, f.src);
  if (!kb_numerical_contains(spec, qx, f))
    throw FNotNumerical("the obstruction analysis needs a numerical class");

  ObstructionReport rep;
  WeightWindow w = weight_window(spec, f.src);
  if (w.empty) {
    rep.family_exists = true;  // the zero extension
    rep.low_meets_numerical = rep.high_meets_numerical = true;
    return rep;
  }
  rep.b = w.a;
  WeightDecomposition dec = weight_truncate(spec, f.src, rep.b);
  ChainMap fm = chain_compose(dec.to_min, chain_compose(f, dec.from_min));
  const Complex& L = dec.low;
  const Complex& H = dec.high;
  const Complex& M = dec.minimal;
  Complex L1 = complex_shift(L, 1);

  QuotientHom qL = kb_numerical_ideal(spec, L, L);
  QuotientHom qH = kb_numerical_ideal(spec, H, H);
  const GradedMapSpace& sL = qL.hom.space;
  const GradedMapSpace& sH = qH.hom.space;
  GradedMapSpace dL = graded_map_space(spec, L, L, 1);
  GradedMapSpace dH = graded_map_space(spec, H, H, 1);
  GradedMapSpace sqA = graded_map_space(spec, L, M, 0);
  GradedMapSpace hA = graded_map_space(spec, L, M, -1);
  GradedMapSpace sqB = graded_map_space(spec, M, H, 0);
  GradedMapSpace hB = graded_map_space(spec, M, H, -1);
  GradedMapSpace sqC = graded_map_space(spec, H, L1, 0);
  GradedMapSpace hC = graded_map_space(spec, H, L1, -1);

  Mat condL = chain_condition_matrix(spec, L, L, sL, dL);
  Mat condH = chain_condition_matrix(spec, H, H, sH, dH);

  // Columns of the three square conditions over the low/high unknowns.
  Mat a_flow(sqA.dim, sL.dim), c_flow(sqC.dim, sL.dim);
  {
    std::size_t col = 0;
    for (std::size_t k = 0; k < sL.degrees.size(); ++k) {
      const int i = sL.degrees[k];
      for (const Mor& u : sL.bases[k].mors) {
        std::map<int, Mor> m1, m2;
        Mor v1 = compose(dec.incl.at(i), u);
        if (!v1.is_zero()) m1[i] = std::move(v1);
        Mor v2 = compose(u, dec.delta.at(i - 1));  // shifted-low component
        if (!v2.is_zero()) m2[i - 1] = std::move(v2);
        Mat c1 = graded_coords(spec, sqA, m1);
        Mat c2 = graded_coords(spec, sqC, m2);
        for (std::size_t r = 0; r < sqA.dim; ++r) a_flow.at(r, col) = c1.at(r, 0);
        for (std::size_t r = 0; r < sqC.dim; ++r) c_flow.at(r, col) = c2.at(r, 0);
        ++col;
      }
    }
  }
  Mat b_high(sqB.dim, sH.dim), c_high(sqC.dim, sH.dim);
  {
    std::size_t col = 0;
    for (std::size_t k = 0; k < sH.degrees.size(); ++k) {
      const int i = sH.degrees[k];
      for (const Mor& u : sH.bases[k].mors) {
        std::map<int, Mor> m1, m2;
        Mor v1 = compose(u, dec.proj.at(i));
        if (!v1.is_zero()) m1[i] = std::move(v1);
        Mor v2 = compose(dec.delta.at(i), u);
        if (!v2.is_zero()) m2[i] = std::move(v2);
        Mat c1 = graded_coords(spec, sqB, m1);
        Mat c2 = graded_coords(spec, sqC, m2);
        for (std::size_t r = 0; r < sqB.dim; ++r) b_high.at(r, col) = c1.at(r, 0);
        for (std::size_t r = 0; r < sqC.dim; ++r) c_high.at(r, col) = c2.at(r, 0);
        ++col;
      }
    }
  }
  Mat hopA = homotopy_operator_matrix(spec, L, M, hA, sqA);
  Mat hopB = homotopy_operator_matrix(spec, M, H, hB, sqB);
  Mat hopC = homotopy_operator_matrix(spec, H, L1, hC, sqC);
  Mat rA = graded_coords(spec, sqA, chain_compose(fm, dec.incl).comp);
  Mat rB = graded_coords(spec, sqB, chain_compose(dec.proj, fm).comp);

  const std::size_t rows = dL.dim + dH.dim + sqA.dim + sqB.dim + sqC.dim;
  const std::size_t cols = sL.dim + sH.dim + hA.dim + hB.dim + hC.dim;
  Mat lhs(rows, cols), rhs(rows, 1);
  auto put = [&](const Mat& m, std::size_t r0, std::size_t c0, bool neg) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        lhs.at(r0 + r, c0 + c) = neg ? -m.at(r, c) : m.at(r, c);
  };
  const std::size_t col_high = sL.dim;
  const std::size_t col_hA = col_high + sH.dim;
  const std::size_t col_hB = col_hA + hA.dim;
  const std::size_t col_hC = col_hB + hB.dim;
  std::size_t row = 0;
  put(condL, row, 0, false);
  row += dL.dim;
  put(condH, row, col_high, false);
  row += dH.dim;
  put(a_flow, row, 0, false);
  put(hopA, row, col_hA, true);
  for (std::size_t r = 0; r < sqA.dim; ++r) rhs.at(row + r, 0) = rA.at(r, 0);
  row += sqA.dim;
  put(b_high, row, col_high, false);
  put(hopB, row, col_hB, true);
  for (std::size_t r = 0; r < sqB.dim; ++r) rhs.at(row + r, 0) = rB.at(r, 0);
  row += sqB.dim;
  put(c_high, row, col_high, false);
  put(c_flow, row, 0, true);
  put(hopC, row, col_hC, true);

  auto sol = solve_linear(lhs, rhs);
  if (!sol) return rep;  // no extension at all; nothing to obstruct
  rep.family_exists = true;
  std::vector<Mat> kernel = mat_kernel(lhs);

  auto slice = [](const Mat& v, std::size_t from, std::size_t count) {
    Mat out(count, 1);
    for (std::size_t r = 0; r < count; ++r) out.at(r, 0) = v.at(from + r, 0);
    return out;
  };
  {
    std::vector<Mat> dirs;
    for (const Mat& k : kernel) dirs.push_back(slice(k, 0, sL.dim + sH.dim));
    rep.family_dim = span_dim(dirs);
  }

  // The numerical subspace on each end, in graded-map coordinates, enlarged
  // by the boundaries so membership is a statement about classes.
  auto numerical_subspace = [&](const QuotientHom& q, const Complex& a) {
    std::vector<Mat> sub;
    for (const ChainMap& nm : q.n_basis)
      sub.push_back(chain_map_coords(spec, q.hom.space, nm));
    GradedMapSpace htpy = graded_map_space(spec, a, a, -1);
    Mat bop = homotopy_operator_matrix(spec, a, a, htpy, q.hom.space);
    for (std::size_t j = 0; j < bop.cols(); ++j) sub.push_back(bop.col(j));
    return sub;
  };
  {
    std::vector<Mat> dirs;
    for (const Mat& k : kernel) dirs.push_back(slice(k, 0, sL.dim));
    rep.low_meets_numerical =
        affine_meets_subspace(slice(*sol, 0, sL.dim), dirs, numerical_subspace(qL, L));
  }
  {
    std::vector<Mat> dirs;
    for (const Mat& k : kernel) dirs.push_back(slice(k, col_high, sH.dim));
    rep.high_meets_numerical = affine_meets_subspace(slice(*sol, col_high, sH.dim), dirs,
                                                     numerical_subspace(qH, H));
  }
  rep.obstructed =
      rep.family_exists && !rep.low_meets_numerical && !rep.high_meets_numerical;
  return rep;
}

// ---------------------------------------------------------------------------
// Nilpotency of the kernel of the graded functor.

struct KerNilpotencyReport {
  int n_x = 1;
  bool verified = false;
  std::size_t kernel_dim = 0;
  int bound = 8;
};

namespace detail {

// Recursive bound: a pure slice inherits the nilpotency order of the
// ambient square-zero composition rule (cross-checked against the computed
// index of its own numerical ideal); a longer complex doubles the worse of
// its two truncation pieces.
inline int ker_nilpotency_bound(const CategorySpec& spec, const Complex& m, int bound) {
  if (m.is_zero()) return 1;
  if (m.lo() == m.hi()) {
    const Obj o = m.at(m.lo());
    const int idx = nilpotency_index(spec, o, numerical_ideal(spec, o, o), bound).value_or(bound);
    return idx > 2 ? idx : 2;
  }
  const int b = -m.hi();
  WeightDecomposition d = weight_truncate(spec, m, b);
  const int nl = ker_nilpotency_bound(spec, d.low, bound);
  const int nh = ker_nilpotency_bound(spec, d.high, bound);
  return 2 * (nl > nh ? nl : nh);
}

}  // namespace detail

// Computes the recursive nilpotency bound for {f : graded functor kills f}
// inside the class endomorphism algebra, then verifies by brute force that
// all products of that length vanish: spans of k-fold products of a kernel
// basis are grown until the bound, and the final span must be empty.
inline KerNilpotencyReport ker_pi_nilpotency(const CategorySpec& spec, const Complex& x,
                                             int bound = 8) {
  KerNilpotencyReport rep;
  rep.bound = bound;
  Complex m = minimize(spec, x).m;
  rep.n_x = detail::ker_nilpotency_bound(spec, m, bound);
  if (m.is_zero()) {
    rep.verified = true;
    return rep;
  }

  KbHom h = kb_hom(spec, m, m);
  GradedNumObject pm = pi_obj(spec, m);
  detail::GradedHomLayout L = detail::graded_hom_layout(spec, pm, pm);
  Mat p(L.dim, h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Mat c = detail::graded_num_coords(L, pi_mor(spec, h.reps[j]));
    for (std::size_t r = 0; r < L.dim; ++r) p.at(r, j) = c.at(r, 0);
  }
  std::vector<ChainMap> kernel_basis;
  for (const Mat& v : mat_kernel(p)) kernel_basis.push_back(kb_class_rep(h, v));
  rep.kernel_dim = kernel_basis.size();

  std::vector<ChainMap> power = kernel_basis;
  for (int n = 2; n <= rep.n_x && !power.empty(); ++n) {
    std::vector<ChainMap> next;
    std::vector<Mat> next_coords;
    for (const ChainMap& a : kernel_basis)
      for (const ChainMap& b : power) {
        ChainMap prod = chain_compose(a, b);
        Mat c = kb_class_coords(spec, h, prod);
        if (c.is_zero() || in_span(c, next_coords)) continue;
        next.push_back(std::move(prod));
        next_coords.push_back(std::move(c));
      }
    power = std::move(next);
  }
  rep.verified = power.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Conservativity comparison.

struct ConservativityReport {
  bool invertible_homotopy = false;  // invertible as a homotopy class
  bool invertible_graded = false;    // image under the graded functor invertible
  bool invertible_mod_numerical = false;  // invertible modulo the numerical ideal
};

// Decides invertibility in the homotopy category, in the graded quotient,
// and modulo the numerical ideal (a linear solve for a two-sided inverse
// with numerical slack on both sides).
inline ConservativityReport conservativity_check(const CategorySpec& spec,
                                                 const ChainMap& f) {
  ConservativityReport rep;
  rep.invertible_homotopy = is_homotopy_equivalence(spec, f);
  rep.invertible_graded = graded_num_invertible(pi_mor(spec, f));

  QuotientHom qx = kb_numerical_ideal(spec, f.src, f.src);
  QuotientHom qy = kb_numerical_ideal(spec, f.tgt, f.tgt);
  KbHom back = kb_hom(spec, f.tgt, f.src);
  const std::size_t ng = back.dim();
  const std::size_t nx = qx.hom.dim(), ny = qy.hom.dim();
  Mat gf(nx, ng), fg(ny, ng);
  for (std::size_t j = 0; j < ng; ++j) {
    Mat cx = kb_class_coords(spec, qx.hom, chain_compose(back.reps[j], f));
    Mat cy = kb_class_coords(spec, qy.hom, chain_compose(f, back.reps[j]));
    for (std::size_t r = 0; r < nx; ++r) gf.at(r, j) = cx.at(r, 0);
    for (std::size_t r = 0; r < ny; ++r) fg.at(r, j) = cy.at(r, 0);
  }
  const std::size_t cols = ng + qx.n_coords.size() + qy.n_coords.size();
  Mat lhs(nx + ny, cols), rhs(nx + ny, 1);
  for (std::size_t r = 0; r < nx; ++r)
    for (std::size_t c = 0; c < ng; ++c) lhs.at(r, c) = gf.at(r, c);
  for (std::size_t r = 0; r < ny; ++r)
    for (std::size_t c = 0; c < ng; ++c) lhs.at(nx + r, c) = fg.at(r, c);
  for (std::size_t k = 0; k < qx.n_coords.size(); ++k)
    for (std::size_t r = 0; r < nx; ++r) lhs.at(r, ng + k) = -qx.n_coords[k].at(r, 0);
  for (std::size_t k = 0; k < qy.n_coords.size(); ++k)
    for (std::size_t r = 0; r < ny; ++r)
      lhs.at(nx + r, ng + qx.n_coords.size() + k) = -qy.n_coords[k].at(r, 0);
  Mat idx = kb_class_coords(spec, qx.hom, chain_identity(f.src));
  Mat idy = kb_class_coords(spec, qy.hom, chain_identity(f.tgt));
  for (std::size_t r = 0; r < nx; ++r) rhs.at(r, 0) = idx.at(r, 0);
  for (std::size_t r = 0; r < ny; ++r) rhs.at(nx + r, 0) = idy.at(r, 0);
  rep.invertible_mod_numerical = solve_linear(lhs, rhs).has_value();
  return rep;
}

// ---------------------------------------------------------------------------
// Idempotent endomorphism analysis.

struct IdempotentEndoReport {
  bool powers_return = false;   // f^n homotopic to f for every n up to the bound
  bool nonzero = false;         // f is not null-homotopic
  bool numerical = false;       // f lies in the numerical ideal of classes
  bool degenerate_zero = false; // the zero class: powers_return holds vacuously
  int bound = 8;
};

inline IdempotentEndoReport idempotent_endo_check(const CategorySpec& spec,
                                                  const ChainMap& f, int bound = 8) {
  if (!(f.src == f.tgt))
    throw ShapeError("idempotent_endo_check needs an endomorphism class");
  IdempotentEndoReport rep;
  rep.bound = bound;
  rep.powers_return = true;
  ChainMap power = f;
  for (int n = 2; n <= bound; ++n) {
    power = chain_compose(f, power);
    if (!chain_maps_homotopic(spec, power, f)) {
      rep.powers_return = false;
      break;
    }
  }
  auto null_h = is_null_homotopic(spec, f);
  rep.nonzero = !null_h.has_value();
  rep.degenerate_zero = null_h.has_value();
  rep.numerical = kb_numerical_contains(spec, kb_numerical_ideal(spec, f.src, f.src), f);
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor compatibility of the graded functor.

struct PiTensorReport {
  bool objects_match = false;    // graded object of the product = product of graded objects
  bool morphisms_match = false;  // same for the morphism components
  bool symmetry_match = false;   // the braiding descends to the signed graded braiding
};

inline GradedNumObject graded_tensor_obj(const CategorySpec& spec, const GradedNumObject& a,
                                         const GradedNumObject& b) {
  GradedNumObject r;
  for (const auto& [i, ca] : a.comp)
    for (const auto& [j, cb] : b.comp) {
      Obj t = tensor_obj(spec, ca, cb);
      if (t.is_zero()) continue;
      Obj cur = r.at(i + j) + t;
      r.comp[i + j] = cur;
    }
  return r;
}

// Verifies that the graded functor is monoidal on the given pair of classes:
// objects multiply degreewise through the fusion table, morphism components
// multiply blockwise, and the braiding descends to the graded braiding with
// the alternating sign on odd-odd degree pairs.
inline PiTensorReport pi_tensor_check(const CategorySpec& spec, const ChainMap& f,
                                      const ChainMap& g) {
  PiTensorReport rep;
  MinimizeResult fsrc = minimize(spec, f.src), ftgt = minimize(spec, f.tgt);
  MinimizeResult gsrc = minimize(spec, g.src), gtgt = minimize(spec, g.tgt);
  ChainMap fm = chain_compose(ftgt.to_min, chain_compose(f, fsrc.from_min));
  ChainMap gm = chain_compose(gtgt.to_min, chain_compose(g, gsrc.from_min));

  // Objects. The minimal model of a product has the same graded components
  // as the product of the minimal models.
  rep.objects_match =
      pi_obj(spec, tensor_complex(spec, f.src, g.src)) ==
          graded_tensor_obj(spec, pi_obj(spec, f.src), pi_obj(spec, g.src)) &&
      pi_obj(spec, tensor_complex(spec, f.tgt, g.tgt)) ==
          graded_tensor_obj(spec, pi_obj(spec, f.tgt), pi_obj(spec, g.tgt));

  // Morphisms. The product of minimal models is minimal, so the graded image
  // of the product map is its degreewise semisimple part; assemble the
  // blockwise product of the graded images through the same index tables.
  TensorComplexIndex ix_src, ix_tgt;
  Complex tsrc = tensor_complex(spec, fsrc.m, gsrc.m, &ix_src);
  Complex ttgt = tensor_complex(spec, ftgt.m, gtgt.m, &ix_tgt);
  ChainMap tmor = tensor_chain_map(spec, fm, gm);
  GradedNumMor lhs = pi_mor(spec, tmor);
  GradedNumMor rhs;
  for (const auto& [i, c] : tsrc.comp) rhs.src.comp[i] = c;
  for (const auto& [i, c] : ttgt.comp) rhs.tgt.comp[i] = c;
  for (const auto& [n, ps] : ix_src.pairs) {
    Mor acc = mor_zero(tsrc.at(n), ttgt.at(n));
    for (const auto& [i, j] : ps) {
      // A block whose target component vanishes contributes nothing and has
      // no slot in the target index.
      if (ix_tgt.slot.find({i, j}) == ix_tgt.slot.end()) continue;
      Mor part = tensor_mor(spec, quotient_num(fm.at(i)), quotient_num(gm.at(j)));
      acc = acc + compose(ix_tgt.incl(n, i, j), compose(part, ix_src.proj(n, i, j)));
    }
    rhs.set(n, acc);
  }
  rep.morphisms_match = lhs == rhs;

  // Symmetry. The braiding between the minimal models maps product to
  // swapped product; its graded image must equal the blockwise semisimple
  // braiding with the degree-parity sign.
  TensorComplexIndex ix_swap;
  Complex tswap = tensor_complex(spec, gsrc.m, fsrc.m, &ix_swap);
  ChainMap br = braiding_chain(spec, fsrc.m, gsrc.m);
  GradedNumMor plhs = pi_mor(spec, br);
  GradedNumMor prhs;
  for (const auto& [i, c] : tsrc.comp) prhs.src.comp[i] = c;
  for (const auto& [i, c] : tswap.comp) prhs.tgt.comp[i] = c;
  for (const auto& [n, ps] : ix_src.pairs) {
    Mor acc = mor_zero(tsrc.at(n), tswap.at(n));
    for (const auto& [i, j] : ps) {
      Mor part = quotient_num(braiding_mor(spec, fsrc.m.at(i), gsrc.m.at(j)));
      const Scalar sign(((i % 2 != 0) && (j % 2 != 0)) ? -1 : 1);
      acc = acc + sign * compose(ix_swap.incl(n, j, i), compose(part, ix_src.proj(n, i, j)));
    }
    prhs.set(n, acc);
  }
  rep.symmetry_match = plhs == prhs;
  return rep;
}

}  // namespace weightcat

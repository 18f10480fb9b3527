#pragma once
// Morphisms of the thickened category and their algebra.
//
// A morphism X -> Y has a semisimple part (one matrix per simple S, acting
// between the S-isotypic copies) and a nilpotent part (for each bimodule
// entry S -> S' and each of its basis vectors, a matrix of coefficients).
// Composition follows the square-zero rule
//     (s, n) o (s', n') = (s s', s n' + n s'),
// so products of two nilpotent parts vanish identically.
//
// The file also provides ordered hom-space bases (deterministic: simples in
// declaration order, matrix positions row-major, semisimple units before
// nilpotent units), coordinates with respect to them, sub-object selections,
// direct sums, and the two trace computations.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weightcat/category.hpp"
#include "weightcat/errors.hpp"
#include "weightcat/matrix.hpp"

namespace weightcat {

struct Mor {
  Obj src, tgt;
  // Semisimple blocks, keyed by simple name; missing key = zero block.
  std::map<std::string, Mat> ss;
  // Nilpotent blocks, keyed by (source simple, target simple); the vector has
  // one matrix per bimodule basis vector and is stored at full length.
  std::map<std::pair<std::string, std::string>, std::vector<Mat>> nil;

  Mat ss_block(const std::string& s) const {
    auto it = ss.find(s);
    if (it != ss.end()) return it->second;
    return Mat::zero((std::size_t)tgt.mult_of(s), (std::size_t)src.mult_of(s));
  }

  Mat nil_block(const std::string& s, const std::string& t, std::size_t k) const {
    auto it = nil.find({s, t});
    if (it != nil.end() && k < it->second.size()) return it->second[k];
    return Mat::zero((std::size_t)tgt.mult_of(t), (std::size_t)src.mult_of(s));
  }

  void set_ss(const std::string& s, Mat block) {
    if (block.rows() != (std::size_t)tgt.mult_of(s) ||
        block.cols() != (std::size_t)src.mult_of(s))
      throw ShapeError("set_ss: block shape does not match multiplicities");
    if (block.is_zero())
      ss.erase(s);
    else
      ss[s] = std::move(block);
  }

  void set_nil(const CategorySpec& spec, const std::string& s, const std::string& t,
               std::size_t k, Mat block) {
    const int dim = spec.bimodule_dim(s, t);
    if ((int)k >= dim) throw ShapeError("set_nil: basis index out of range");
    if (block.rows() != (std::size_t)tgt.mult_of(t) ||
        block.cols() != (std::size_t)src.mult_of(s))
      throw ShapeError("set_nil: block shape does not match multiplicities");
    auto& vec = nil[{s, t}];
    if (vec.empty())
      for (int i = 0; i < dim; ++i)
        vec.push_back(Mat::zero((std::size_t)tgt.mult_of(t), (std::size_t)src.mult_of(s)));
    vec[k] = std::move(block);
    prune();
  }

  bool is_zero() const { return ss.empty() && nil.empty(); }
  bool is_ss_only() const { return nil.empty(); }
  // With pruned storage, an empty ss map means the semisimple part vanishes,
  // i.e. the morphism is purely nilpotent (radical, in this model).
  bool ss_is_zero() const { return ss.empty(); }

  // Drops stored blocks that are entirely zero, keeping the representation
  // canonical so that operator== is structural equality of morphisms.
  void prune() {
    for (auto it = ss.begin(); it != ss.end();)
      it = it->second.is_zero() ? ss.erase(it) : std::next(it);
    for (auto it = nil.begin(); it != nil.end();) {
      bool all_zero = true;
      for (const auto& m : it->second) all_zero = all_zero && m.is_zero();
      it = all_zero ? nil.erase(it) : std::next(it);
    }
  }

  friend bool operator==(const Mor& a, const Mor& b) {
    return a.src == b.src && a.tgt == b.tgt && a.ss == b.ss && a.nil == b.nil;
  }
  friend bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }
};

inline Mor mor_zero(const Obj& src, const Obj& tgt) {
  Mor f;
  f.src = src;
  f.tgt = tgt;
  return f;
}

inline Mor mor_identity(const Obj& x) {
  Mor f = mor_zero(x, x);
  for (const auto& [s, m] : x.mult) f.ss[s] = Mat::identity((std::size_t)m);
  return f;
}

inline Mor mor_scalar(const Obj& x, const Scalar& c) {
  Mor f = mor_zero(x, x);
  if (c.is_zero()) return f;
  for (const auto& [s, m] : x.mult) f.ss[s] = c * Mat::identity((std::size_t)m);
  return f;
}

namespace detail {
inline std::set<std::string> simple_keys(const Mor& a, const Mor& b) {
  std::set<std::string> keys;
  for (const auto& [s, _] : a.ss) keys.insert(s);
  for (const auto& [s, _] : b.ss) keys.insert(s);
  return keys;
}
inline std::set<std::pair<std::string, std::string>> nil_keys(const Mor& a, const Mor& b) {
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [k, _] : a.nil) keys.insert(k);
  for (const auto& [k, _] : b.nil) keys.insert(k);
  return keys;
}
}  // namespace detail

inline Mor operator+(const Mor& a, const Mor& b) {
  if (a.src != b.src || a.tgt != b.tgt) throw ShapeError("morphism add: objects differ");
  Mor r = mor_zero(a.src, a.tgt);
  for (const auto& s : detail::simple_keys(a, b)) {
    Mat m = a.ss_block(s) + b.ss_block(s);
    if (!m.is_zero()) r.ss[s] = std::move(m);
  }
  for (const auto& key : detail::nil_keys(a, b)) {
    auto ita = a.nil.find(key), itb = b.nil.find(key);
    std::size_t n = std::max(ita == a.nil.end() ? 0 : ita->second.size(),
                             itb == b.nil.end() ? 0 : itb->second.size());
    std::vector<Mat> out;
    bool all_zero = true;
    for (std::size_t k = 0; k < n; ++k) {
      Mat m = a.nil_block(key.first, key.second, k) + b.nil_block(key.first, key.second, k);
      all_zero = all_zero && m.is_zero();
      out.push_back(std::move(m));
    }
    if (!all_zero) r.nil[key] = std::move(out);
  }
  return r;
}

inline Mor operator*(const Scalar& c, const Mor& a) {
  Mor r = mor_zero(a.src, a.tgt);
  if (c.is_zero()) return r;
  for (const auto& [s, m] : a.ss) r.ss[s] = c * m;
  for (const auto& [key, vec] : a.nil) {
    std::vector<Mat> out;
    for (const auto& m : vec) out.push_back(c * m);
    r.nil[key] = std::move(out);
  }
  return r;
}

inline Mor operator-(const Mor& a) { return Scalar(-1) * a; }
inline Mor operator-(const Mor& a, const Mor& b) { return a + (-b); }

// g after f, with the square-zero composition rule.
inline Mor compose(const Mor& g, const Mor& f) {
  if (f.tgt != g.src) throw ShapeError("compose: middle objects differ");
  Mor r = mor_zero(f.src, g.tgt);
  for (const auto& s : detail::simple_keys(g, f)) {
    Mat m = g.ss_block(s) * f.ss_block(s);
    if (!m.is_zero()) r.ss[s] = std::move(m);
  }
  for (const auto& key : detail::nil_keys(g, f)) {
    const auto& [s, t] = key;
    auto itg = g.nil.find(key), itf = f.nil.find(key);
    std::size_t n = std::max(itg == g.nil.end() ? 0 : itg->second.size(),
                             itf == f.nil.end() ? 0 : itf->second.size());
    Mat gt = g.ss_block(t), fs = f.ss_block(s);
    std::vector<Mat> out;
    bool all_zero = true;
    for (std::size_t k = 0; k < n; ++k) {
      Mat m = gt * f.nil_block(s, t, k) + g.nil_block(s, t, k) * fs;
      all_zero = all_zero && m.is_zero();
      out.push_back(std::move(m));
    }
    if (!all_zero) r.nil[key] = std::move(out);
  }
  return r;
}

// A morphism is invertible iff all semisimple blocks are square and
// invertible (the nilpotent part never obstructs, by the geometric series
// that the square-zero rule truncates after one step).
inline bool mor_invertible(const Mor& f) {
  for (const auto& [s, m] : f.src.mult)
    if (f.tgt.mult_of(s) != m) return false;
  for (const auto& [s, m] : f.tgt.mult)
    if (f.src.mult_of(s) != m) return false;
  for (const auto& [s, m] : f.src.mult) {
    (void)m;
    if (!mat_inverse(f.ss_block(s)).has_value()) return false;
  }
  return true;
}

inline std::optional<Mor> mor_inverse(const Mor& f) {
  if (!mor_invertible(f)) return std::nullopt;
  std::map<std::string, Mat> inv_ss;
  for (const auto& [s, m] : f.src.mult) {
    (void)m;
    inv_ss[s] = *mat_inverse(f.ss_block(s));
  }
  Mor r = mor_zero(f.tgt, f.src);
  for (const auto& [s, m] : inv_ss)
    if (!m.is_zero()) r.ss[s] = m;
  // (s + n)^{-1} = s^{-1} - s^{-1} n s^{-1} under the square-zero rule.
  for (const auto& [key, vec] : f.nil) {
    const auto& [s, t] = key;
    Mat ls = inv_ss.count(t) ? inv_ss[t]
                             : Mat::zero((std::size_t)f.src.mult_of(t),
                                         (std::size_t)f.tgt.mult_of(t));
    Mat rs = inv_ss.count(s) ? inv_ss[s]
                             : Mat::zero((std::size_t)f.src.mult_of(s),
                                         (std::size_t)f.tgt.mult_of(s));
    std::vector<Mat> out;
    bool all_zero = true;
    for (const auto& m : vec) {
      Mat x = -(ls * m * rs);
      all_zero = all_zero && x.is_zero();
      out.push_back(std::move(x));
    }
    if (!all_zero) r.nil[key] = std::move(out);
  }
  return r;
}

// Categorical trace: the parity-signed sum of the traces of the semisimple
// blocks.  Nilpotent parts are traceless by construction.
inline Scalar trace(const CategorySpec& spec, const Mor& f) {
  if (f.src != f.tgt) throw ShapeError("trace of a non-endomorphism");
  Scalar t;
  for (const auto& [s, m] : f.ss) {
    (void)m;
    t += Scalar(spec.sdim(s)) * f.ss_block(s).trace();
  }
  return t;
}

// The same scalar computed through the rigidity data: each simple's loop
// ev o (f (x) id) o coev contributes its coefficient product, which the
// validator pins to the superdimension.  Requires dual data for every simple
// in the support.
inline Scalar trace_via_duality(const CategorySpec& spec, const Mor& f) {
  if (f.src != f.tgt) throw ShapeError("trace of a non-endomorphism");
  Scalar t;
  for (const auto& [s, m] : f.src.mult) {
    (void)m;
    const DualEntry* d = spec.find_dual(s);
    if (!d) throw MissingDuals("no dual data for '" + s + "'");
    t += d->coev * d->ev * f.ss_block(s).trace();
  }
  return t;
}

// The semisimplification functor on morphisms: forget the nilpotent part.
inline Mor quotient_num(const Mor& f) {
  Mor r = f;
  r.nil.clear();
  return r;
}

// ---------------------------------------------------------------------------
// Ordered hom-space bases.

struct BasisDesc {
  bool is_nil = false;
  std::string s;  // source simple (equals t for semisimple units)
  std::string t;  // target simple
  int k = -1;     // bimodule basis index (nil units only)
  int r = 0;      // row (target copy)
  int c = 0;      // column (source copy)
};

struct HomBasis {
  Obj src, tgt;
  std::vector<Mor> mors;
  std::vector<BasisDesc> desc;

  std::size_t dim() const { return desc.size(); }
};

// Enumerates the unit morphisms of Hom(X, Y) in a fixed deterministic order:
// first the semisimple matrix units (simples in declaration order, positions
// row-major), then the nilpotent matrix units (source simple outer, target
// simple inner, declaration order; then basis vector; then positions).
inline HomBasis hom_basis(const CategorySpec& spec, const Obj& x, const Obj& y) {
  HomBasis hb;
  hb.src = x;
  hb.tgt = y;
  for (const auto& simple : spec.simples) {
    const std::string& s = simple.name;
    const int mx = x.mult_of(s), my = y.mult_of(s);
    for (int r = 0; r < my; ++r)
      for (int c = 0; c < mx; ++c) {
        Mor u = mor_zero(x, y);
        Mat block = Mat::zero((std::size_t)my, (std::size_t)mx);
        block.at((std::size_t)r, (std::size_t)c) = Scalar(1);
        u.ss[s] = std::move(block);
        hb.mors.push_back(std::move(u));
        hb.desc.push_back({false, s, s, -1, r, c});
      }
  }
  for (const auto& src_simple : spec.simples)
    for (const auto& tgt_simple : spec.simples) {
      const std::string& s = src_simple.name;
      const std::string& t = tgt_simple.name;
      const int dim = spec.bimodule_dim(s, t);
      if (dim == 0) continue;
      const int mx = x.mult_of(s), my = y.mult_of(t);
      if (mx == 0 || my == 0) continue;
      for (int k = 0; k < dim; ++k)
        for (int r = 0; r < my; ++r)
          for (int c = 0; c < mx; ++c) {
            Mor u = mor_zero(x, y);
            std::vector<Mat> vec;
            for (int kk = 0; kk < dim; ++kk)
              vec.push_back(Mat::zero((std::size_t)my, (std::size_t)mx));
            vec[(std::size_t)k].at((std::size_t)r, (std::size_t)c) = Scalar(1);
            u.nil[{s, t}] = std::move(vec);
            hb.mors.push_back(std::move(u));
            hb.desc.push_back({true, s, t, k, r, c});
          }
    }
  return hb;
}

inline std::vector<Mor> hom_space(const CategorySpec& spec, const Obj& x, const Obj& y) {
  return hom_basis(spec, x, y).mors;
}

inline std::size_t hom_dim(const CategorySpec& spec, const Obj& x, const Obj& y) {
  std::size_t d = 0;
  for (const auto& simple : spec.simples)
    d += (std::size_t)x.mult_of(simple.name) * (std::size_t)y.mult_of(simple.name);
  for (const auto& s : spec.simples)
    for (const auto& t : spec.simples)
      d += (std::size_t)spec.bimodule_dim(s.name, t.name) *
           (std::size_t)x.mult_of(s.name) * (std::size_t)y.mult_of(t.name);
  return d;
}

// Coordinates of f in the hom_basis order, as a column vector.
inline Mat coords(const CategorySpec& spec, const Mor& f) {
  std::vector<Scalar> entries;
  for (const auto& simple : spec.simples) {
    const std::string& s = simple.name;
    const int mx = f.src.mult_of(s), my = f.tgt.mult_of(s);
    if (mx == 0 || my == 0) continue;
    Mat block = f.ss_block(s);
    for (int r = 0; r < my; ++r)
      for (int c = 0; c < mx; ++c) entries.push_back(block.at((std::size_t)r, (std::size_t)c));
  }
  for (const auto& src_simple : spec.simples)
    for (const auto& tgt_simple : spec.simples) {
      const std::string& s = src_simple.name;
      const std::string& t = tgt_simple.name;
      const int dim = spec.bimodule_dim(s, t);
      if (dim == 0) continue;
      const int mx = f.src.mult_of(s), my = f.tgt.mult_of(t);
      if (mx == 0 || my == 0) continue;
      for (int k = 0; k < dim; ++k) {
        Mat block = f.nil_block(s, t, (std::size_t)k);
        for (int r = 0; r < my; ++r)
          for (int c = 0; c < mx; ++c)
            entries.push_back(block.at((std::size_t)r, (std::size_t)c));
      }
    }
  const std::size_t n = entries.size();
  return Mat(n, 1, std::move(entries));
}

inline Mor mor_from_coords(const CategorySpec& spec, const Obj& x, const Obj& y,
                           const Mat& v) {
  HomBasis hb = hom_basis(spec, x, y);
  if (v.rows() != hb.dim() || v.cols() != 1)
    throw ShapeError("mor_from_coords: wrong coordinate count");
  Mor f = mor_zero(x, y);
  for (std::size_t i = 0; i < hb.dim(); ++i) {
    const Scalar& ci = v.at(i, 0);
    if (ci.is_zero()) continue;
    f = f + ci * hb.mors[i];
  }
  return f;
}

// ---------------------------------------------------------------------------
// Sub-object selections (choices of isotypic copies) and direct sums.

// For each simple, the selected copy indices in increasing order.
using Sel = std::map<std::string, std::vector<int>>;

inline Obj obj_of_sel(const Sel& sel) {
  Obj x;
  for (const auto& [s, idx] : sel)
    if (!idx.empty()) x.mult[s] = (int)idx.size();
  return x;
}

inline Sel full_sel(const Obj& x) {
  Sel sel;
  for (const auto& [s, m] : x.mult) {
    std::vector<int> idx((std::size_t)m);
    for (int i = 0; i < m; ++i) idx[(std::size_t)i] = i;
    sel[s] = std::move(idx);
  }
  return sel;
}

inline Sel sel_complement(const Obj& x, const Sel& sel) {
  Sel out;
  for (const auto& [s, m] : x.mult) {
    std::set<int> chosen;
    auto it = sel.find(s);
    if (it != sel.end()) chosen.insert(it->second.begin(), it->second.end());
    std::vector<int> rest;
    for (int i = 0; i < m; ++i)
      if (!chosen.count(i)) rest.push_back(i);
    if (!rest.empty()) out[s] = std::move(rest);
  }
  return out;
}

namespace detail {
inline std::vector<int> sel_indices(const Sel& sel, const std::string& s) {
  auto it = sel.find(s);
  return it == sel.end() ? std::vector<int>{} : it->second;
}
inline Mat submatrix(const Mat& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  Mat r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.at(i, j) = m.at((std::size_t)rows[i], (std::size_t)cols[j]);
  return r;
}
}  // namespace detail

// The block of f between the selected source and target copies.
inline Mor mor_restrict(const Mor& f, const Sel& tgt_sel, const Sel& src_sel) {
  Mor r = mor_zero(obj_of_sel(src_sel), obj_of_sel(tgt_sel));
  for (const auto& [s, block] : f.ss) {
    Mat sub = detail::submatrix(block, detail::sel_indices(tgt_sel, s),
                                detail::sel_indices(src_sel, s));
    if (!sub.is_zero()) r.ss[s] = std::move(sub);
  }
  for (const auto& [key, vec] : f.nil) {
    const auto& [s, t] = key;
    auto rows = detail::sel_indices(tgt_sel, t);
    auto cols = detail::sel_indices(src_sel, s);
    std::vector<Mat> out;
    bool all_zero = true;
    for (const auto& m : vec) {
      Mat sub = detail::submatrix(m, rows, cols);
      all_zero = all_zero && sub.is_zero();
      out.push_back(std::move(sub));
    }
    if (!all_zero) r.nil[key] = std::move(out);
  }
  return r;
}

// Inclusion of the selected copies as a morphism obj_of_sel(sel) -> x.
inline Mor mor_sel_incl(const Obj& x, const Sel& sel) {
  Obj sub = obj_of_sel(sel);
  Mor f = mor_zero(sub, x);
  for (const auto& [s, idx] : sel) {
    if (idx.empty()) continue;
    Mat block = Mat::zero((std::size_t)x.mult_of(s), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      block.at((std::size_t)idx[j], j) = Scalar(1);
    f.ss[s] = std::move(block);
  }
  return f;
}

// Projection onto the selected copies as a morphism x -> obj_of_sel(sel).
inline Mor mor_sel_proj(const Obj& x, const Sel& sel) {
  Obj sub = obj_of_sel(sel);
  Mor f = mor_zero(x, sub);
  for (const auto& [s, idx] : sel) {
    if (idx.empty()) continue;
    Mat block = Mat::zero(idx.size(), (std::size_t)x.mult_of(s));
    for (std::size_t j = 0; j < idx.size(); ++j)
      block.at(j, (std::size_t)idx[j]) = Scalar(1);
    f.ss[s] = std::move(block);
  }
  return f;
}

// In a direct sum A + B the copies of A come first within every simple.
inline Sel dsum_first_sel(const Obj& a, const Obj& b) {
  (void)b;
  return full_sel(a);
}
inline Sel dsum_second_sel(const Obj& a, const Obj& b) {
  Sel sel;
  for (const auto& [s, m] : b.mult) {
    const int off = a.mult_of(s);
    std::vector<int> idx((std::size_t)m);
    for (int i = 0; i < m; ++i) idx[(std::size_t)i] = off + i;
    sel[s] = std::move(idx);
  }
  return sel;
}

inline Mor incl_first(const Obj& a, const Obj& b) {
  return mor_sel_incl(a + b, dsum_first_sel(a, b));
}
inline Mor incl_second(const Obj& a, const Obj& b) {
  return mor_sel_incl(a + b, dsum_second_sel(a, b));
}
inline Mor proj_first(const Obj& a, const Obj& b) {
  return mor_sel_proj(a + b, dsum_first_sel(a, b));
}
inline Mor proj_second(const Obj& a, const Obj& b) {
  return mor_sel_proj(a + b, dsum_second_sel(a, b));
}

// Assembles (A1 + A2) -> (B1 + B2) from four blocks
//   f11: A1->B1,  f12: A2->B1,  f21: A1->B2,  f22: A2->B2.
inline Mor mor_blocks2(const Mor& f11, const Mor& f12, const Mor& f21, const Mor& f22) {
  const Obj a1 = f11.src, a2 = f12.src, b1 = f11.tgt, b2 = f21.tgt;
  if (f21.src != a1 || f22.src != a2 || f12.tgt != b1 || f22.tgt != b2)
    throw ShapeError("mor_blocks2: inconsistent block shapes");
  Mor r = compose(incl_first(b1, b2), compose(f11, proj_first(a1, a2)));
  r = r + compose(incl_first(b1, b2), compose(f12, proj_second(a1, a2)));
  r = r + compose(incl_second(b1, b2), compose(f21, proj_first(a1, a2)));
  r = r + compose(incl_second(b1, b2), compose(f22, proj_second(a1, a2)));
  return r;
}

inline Mor mor_dsum(const Mor& f, const Mor& g) {
  return mor_blocks2(f, mor_zero(g.src, f.tgt), mor_zero(f.src, g.tgt), g);
}

}  // namespace weightcat

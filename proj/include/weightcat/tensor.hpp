#pragma once
// Tensor products of objects and morphisms, the braiding, and the
// symmetrizer / antisymmetrizer projectors.
//
// tensor_expand records provenance: which (source-copy, source-copy, fusion
// summand) triple each isotypic copy of the product came from, in a canonical
// scan order.  All morphism-level tensor operations are expressed against
// that record, so repeated expansions of the same pair agree positionally.
//
// Nilpotent parts only tensor against identity-like data in this model:
// tensoring a bimodule vector with the unit transports it unchanged, and
// when every candidate target space is zero-dimensional the transport is
// zero.  Any other case would need transport tables the model does not
// declare, and raises MissingTransport instead of guessing.  The product of
// two nilpotent parts lies in the square of the numerical ideal, which is
// zero here.

#include <cstdlib>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "weightcat/category.hpp"
#include "weightcat/errors.hpp"
#include "weightcat/morphism.hpp"

namespace weightcat {

struct TensorInstance {
  std::string s1;  // left simple
  int i1 = 0;      // left copy index
  std::string s2;  // right simple
  int i2 = 0;      // right copy index
  int k = 0;       // index into the fusion summand list of (s1, s2)
  std::string out;  // the summand simple
  int pos = 0;      // copy index of `out` in the product object
};

struct TensorExpansion {
  Obj obj;
  std::vector<TensorInstance> instances;
  // (s1, i1, s2, i2, k) -> position within the `out` copies.
  std::map<std::tuple<std::string, int, std::string, int, int>, int> pos_of;

  int position(const std::string& s1, int i1, const std::string& s2, int i2, int k) const {
    auto it = pos_of.find({s1, i1, s2, i2, k});
    if (it == pos_of.end()) throw ShapeError("tensor expansion: unknown instance");
    return it->second;
  }
};

// Expands X (x) Y into isotypic copies.  Scan order: left simple and copy
// (declaration order, ascending), then right simple and copy, then fusion
// summand index; positions are assigned per output simple in that order.
inline TensorExpansion tensor_expand(const CategorySpec& spec, const Obj& x, const Obj& y) {
  TensorExpansion ex;
  std::map<std::string, int> next_pos;
  for (const auto& ls : spec.simples) {
    const int mx = x.mult_of(ls.name);
    if (mx == 0) continue;
    for (int i1 = 0; i1 < mx; ++i1)
      for (const auto& rs : spec.simples) {
        const int my = y.mult_of(rs.name);
        if (my == 0) continue;
        for (int i2 = 0; i2 < my; ++i2) {
          const FusionEntry& row = spec.fusion_of(ls.name, rs.name);
          for (int k = 0; k < (int)row.summands.size(); ++k) {
            const std::string& out = row.summands[(std::size_t)k];
            TensorInstance inst{ls.name, i1, rs.name, i2, k, out, next_pos[out]++};
            ex.pos_of[{inst.s1, inst.i1, inst.s2, inst.i2, inst.k}] = inst.pos;
            ex.instances.push_back(std::move(inst));
          }
        }
      }
  }
  for (const auto& [s, n] : next_pos)
    if (n > 0) ex.obj.mult[s] = n;
  return ex;
}

inline Obj tensor_obj(const CategorySpec& spec, const Obj& x, const Obj& y) {
  return tensor_expand(spec, x, y).obj;
}

namespace detail {

// Transport of a bimodule basis vector v in V(s, u) across "tensor with the
// identity of w on the right": determines, for each summand pair, which
// bimodule vector it maps to (same vector when w is the unit) or certifies
// the transport is zero.  Returns pairs (summand index in fusion(s,w),
// summand index in fusion(u,w), bimodule basis index) with coefficient 1.
struct NilTransport {
  // (k_src, k_tgt, basis index in V(out_src, out_tgt))
  std::vector<std::tuple<int, int, int>> terms;
};

inline NilTransport transport_right(const CategorySpec& spec, const std::string& s,
                                    const std::string& u, int basis_k,
                                    const std::string& w) {
  NilTransport tr;
  if (w == spec.unit) {
    // fusion(s, unit) = [s], fusion(u, unit) = [u]: the vector rides along.
    tr.terms.push_back({0, 0, basis_k});
    return tr;
  }
  const FusionEntry& src_row = spec.fusion_of(s, w);
  const FusionEntry& tgt_row = spec.fusion_of(u, w);
  for (const auto& ts : src_row.summands)
    for (const auto& tt : tgt_row.summands)
      if (spec.bimodule_dim(ts, tt) > 0)
        throw MissingTransport("tensoring bimodule vector " +
                               spec.bimodule_names(s, u)[(std::size_t)basis_k] +
                               " with id of '" + w + "'");
  return tr;  // every target space is zero: transport is zero
}

inline NilTransport transport_left(const CategorySpec& spec, const std::string& s,
                                   const std::string& u, int basis_k,
                                   const std::string& w) {
  NilTransport tr;
  if (w == spec.unit) {
    tr.terms.push_back({0, 0, basis_k});
    return tr;
  }
  const FusionEntry& src_row = spec.fusion_of(w, s);
  const FusionEntry& tgt_row = spec.fusion_of(w, u);
  for (const auto& ts : src_row.summands)
    for (const auto& tt : tgt_row.summands)
      if (spec.bimodule_dim(ts, tt) > 0)
        throw MissingTransport("tensoring id of '" + w + "' with bimodule vector " +
                               spec.bimodule_names(s, u)[(std::size_t)basis_k]);
  return tr;
}

}  // namespace detail

// f (x) g on the canonical expansions of the source and target products.
inline Mor tensor_mor(const CategorySpec& spec, const Mor& f, const Mor& g) {
  TensorExpansion src = tensor_expand(spec, f.src, g.src);
  TensorExpansion tgt = tensor_expand(spec, f.tgt, g.tgt);
  Mor r = mor_zero(src.obj, tgt.obj);

  auto add_ss = [&](const std::string& simple, int row, int col, const Scalar& val) {
    if (val.is_zero()) return;
    auto it = r.ss.find(simple);
    if (it == r.ss.end()) {
      it = r.ss.emplace(simple, Mat::zero((std::size_t)tgt.obj.mult_of(simple),
                                          (std::size_t)src.obj.mult_of(simple)))
               .first;
    }
    it->second.at((std::size_t)row, (std::size_t)col) += val;
  };
  auto add_nil = [&](const std::string& so, const std::string& to, int k, int row, int col,
                     const Scalar& val) {
    if (val.is_zero()) return;
    auto key = std::make_pair(so, to);
    auto it = r.nil.find(key);
    if (it == r.nil.end()) {
      std::vector<Mat> vec;
      for (int kk = 0; kk < spec.bimodule_dim(so, to); ++kk)
        vec.push_back(Mat::zero((std::size_t)tgt.obj.mult_of(to),
                                (std::size_t)src.obj.mult_of(so)));
      it = r.nil.emplace(key, std::move(vec)).first;
    }
    it->second[(std::size_t)k].at((std::size_t)row, (std::size_t)col) += val;
  };

  for (const TensorInstance& inst : src.instances) {
    // Semisimple (x) semisimple: stays within the same fusion row and
    // summand index, with the product of the two matrix entries.
    {
      Mat fb = f.ss_block(inst.s1), gb = g.ss_block(inst.s2);
      for (std::size_t r1 = 0; r1 < fb.rows(); ++r1) {
        const Scalar& fe = fb.at(r1, (std::size_t)inst.i1);
        if (fe.is_zero()) continue;
        for (std::size_t r2 = 0; r2 < gb.rows(); ++r2) {
          const Scalar& ge = gb.at(r2, (std::size_t)inst.i2);
          if (ge.is_zero()) continue;
          int tpos = tgt.position(inst.s1, (int)r1, inst.s2, (int)r2, inst.k);
          add_ss(inst.out, tpos, inst.pos, fe * ge);
        }
      }
    }
    // Nil part of f (x) semisimple part of g.
    for (const auto& [key, vec] : f.nil) {
      const auto& [s, u] = key;
      if (s != inst.s1) continue;
      Mat gb = g.ss_block(inst.s2);
      for (int k = 0; k < (int)vec.size(); ++k) {
        const Mat& nb = vec[(std::size_t)k];
        bool column_zero = true;
        for (std::size_t r1 = 0; r1 < nb.rows() && column_zero; ++r1)
          column_zero = nb.at(r1, (std::size_t)inst.i1).is_zero();
        if (column_zero) continue;
        detail::NilTransport tr = detail::transport_right(spec, s, u, k, inst.s2);
        for (const auto& [k_src, k_tgt, basis_idx] : tr.terms) {
          if (k_src != inst.k) continue;
          const FusionEntry& tgt_row = spec.fusion_of(u, inst.s2);
          const std::string& out_t = tgt_row.summands[(std::size_t)k_tgt];
          for (std::size_t r1 = 0; r1 < nb.rows(); ++r1) {
            const Scalar& fe = nb.at(r1, (std::size_t)inst.i1);
            if (fe.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < gb.rows(); ++r2) {
              const Scalar& ge = gb.at(r2, (std::size_t)inst.i2);
              if (ge.is_zero()) continue;
              int tpos = tgt.position(u, (int)r1, inst.s2, (int)r2, k_tgt);
              add_nil(inst.out, out_t, basis_idx, tpos, inst.pos, fe * ge);
            }
          }
        }
      }
    }
    // Semisimple part of f (x) nil part of g.
    for (const auto& [key, vec] : g.nil) {
      const auto& [s, u] = key;
      if (s != inst.s2) continue;
      Mat fb = f.ss_block(inst.s1);
      for (int k = 0; k < (int)vec.size(); ++k) {
        const Mat& nb = vec[(std::size_t)k];
        bool column_zero = true;
        for (std::size_t r2 = 0; r2 < nb.rows() && column_zero; ++r2)
          column_zero = nb.at(r2, (std::size_t)inst.i2).is_zero();
        if (column_zero) continue;
        detail::NilTransport tr = detail::transport_left(spec, s, u, k, inst.s1);
        for (const auto& [k_src, k_tgt, basis_idx] : tr.terms) {
          if (k_src != inst.k) continue;
          const FusionEntry& tgt_row = spec.fusion_of(inst.s1, u);
          const std::string& out_t = tgt_row.summands[(std::size_t)k_tgt];
          for (std::size_t r1 = 0; r1 < fb.rows(); ++r1) {
            const Scalar& fe = fb.at(r1, (std::size_t)inst.i1);
            if (fe.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < nb.rows(); ++r2) {
              const Scalar& ge = nb.at(r2, (std::size_t)inst.i2);
              if (ge.is_zero()) continue;
              int tpos = tgt.position(inst.s1, (int)r1, u, (int)r2, k_tgt);
              add_nil(inst.out, out_t, basis_idx, tpos, inst.pos, fe * ge);
            }
          }
        }
      }
    }
    // Nil (x) nil lands in the square of the numerical ideal: zero.
  }
  r.prune();
  return r;
}

// The braiding c_{X,Y}: X (x) Y -> Y (x) X, assembled per instance from the
// declared symmetry matrices of the fusion table.
inline Mor braiding_mor(const CategorySpec& spec, const Obj& x, const Obj& y) {
  TensorExpansion src = tensor_expand(spec, x, y);
  TensorExpansion tgt = tensor_expand(spec, y, x);
  Mor r = mor_zero(src.obj, tgt.obj);
  for (const TensorInstance& inst : src.instances) {
    const FusionEntry& row = spec.fusion_of(inst.s1, inst.s2);
    const FusionEntry& swapped = spec.fusion_of(inst.s2, inst.s1);
    for (int l = 0; l < (int)swapped.summands.size(); ++l) {
      const Scalar& coeff = row.symmetry.at((std::size_t)l, (std::size_t)inst.k);
      if (coeff.is_zero()) continue;
      int tpos = tgt.position(inst.s2, inst.i2, inst.s1, inst.i1, l);
      auto it = r.ss.find(inst.out);
      if (it == r.ss.end())
        it = r.ss.emplace(inst.out, Mat::zero((std::size_t)tgt.obj.mult_of(inst.out),
                                              (std::size_t)src.obj.mult_of(inst.out)))
                 .first;
      it->second.at((std::size_t)tpos, (std::size_t)inst.pos) += coeff;
    }
  }
  r.prune();
  return r;
}

enum class PowerKind { Sym, Wedge };

namespace detail {

// n-th tensor power of a unit-multiple object: the product is unit^(m^n) and
// the symmetric group permutes coordinate words.  Returns the projector
// matrix on the word basis (words enumerated with the leftmost factor most
// significant).
inline Mat word_projector(int m, int n, PowerKind kind) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= (std::size_t)m;
  // Enumerate permutations of {0..n-1} with their signs.
  std::vector<int> perm((std::size_t)n);
  for (int i = 0; i < n; ++i) perm[(std::size_t)i] = i;
  Mat acc = Mat::zero(dim, dim);
  std::int64_t count = 0;
  auto apply = [&](const std::vector<int>& p, int sign) {
    for (std::size_t w = 0; w < dim; ++w) {
      // Decode word, permute factors, re-encode.
      std::vector<int> letters((std::size_t)n);
      std::size_t tmp = w;
      for (int i = n - 1; i >= 0; --i) {
        letters[(std::size_t)i] = (int)(tmp % (std::size_t)m);
        tmp /= (std::size_t)m;
      }
      std::size_t out = 0;
      for (int i = 0; i < n; ++i) out = out * (std::size_t)m + (std::size_t)letters[(std::size_t)p[(std::size_t)i]];
      acc.at(out, w) += Scalar(kind == PowerKind::Wedge ? sign : 1);
    }
    ++count;
  };
  // Heap's algorithm with sign tracking.
  std::vector<int> c((std::size_t)n, 0);
  int sign = 1;
  apply(perm, sign);
  int i = 0;
  while (i < n) {
    if (c[(std::size_t)i] < i) {
      if (i % 2 == 0)
        std::swap(perm[0], perm[(std::size_t)i]);
      else
        std::swap(perm[(std::size_t)c[(std::size_t)i]], perm[(std::size_t)i]);
      sign = -sign;
      apply(perm, sign);
      ++c[(std::size_t)i];
      i = 0;
    } else {
      c[(std::size_t)i] = 0;
      ++i;
    }
  }
  return Scalar::fraction(1, count) * acc;
}

}  // namespace detail

// The symmetrizer (kind = Sym) or antisymmetrizer (kind = Wedge) projector on
// the n-th tensor power of X.  Supported regimes: n = 1 (identity), n = 2
// (via the braiding), and arbitrary n for unit-multiple objects (where the
// permutation action is explicit).  Anything else would need fusion rows the
// model does not declare.
inline Mor sym_projector(const CategorySpec& spec, const Obj& x, int n, PowerKind kind) {
  if (n < 1) throw ShapeError("sym_projector: power must be >= 1");
  if (n == 1) return mor_identity(x);
  if (n == 2) {
    Obj xx = tensor_obj(spec, x, x);
    Mor c = braiding_mor(spec, x, x);
    Mor half_id = Scalar::fraction(1, 2) * mor_identity(xx);
    Mor half_c = Scalar::fraction(kind == PowerKind::Sym ? 1 : -1, 2) * c;
    return half_id + half_c;
  }
  // Higher powers: only when X is a multiple of the unit.
  int m = x.mult_of(spec.unit);
  if (x.total() != m)
    throw FusionIncomplete("power " + std::to_string(n) +
                           " of a non-unit object needs undeclared fusion rows");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= (std::size_t)m;
  Obj power = Obj::of(spec.unit, (int)dim);
  Mor p = mor_zero(power, power);
  Mat proj = detail::word_projector(m, n, kind);
  if (!proj.is_zero()) p.ss[spec.unit] = std::move(proj);
  return p;
}

}  // namespace weightcat

#pragma once
// Tensor-ideal machinery on the base category:
//
//  * numerical_ideal(X, Y): the left kernel of the trace pairing
//    Hom(X,Y) x Hom(Y,X) -> F, (f, g) -> trace(g o f).  The Gram matrix is
//    assembled from the matrix-unit structure of the hom bases (products of
//    unit morphisms are unit morphisms or zero), which the unit tests verify
//    against literal trace(compose(...)) computations.
//
//  * radical(X, Y): the categorical Jacobson radical, computed by a genuinely
//    different route so the two can be compared: the kernel of the trace form
//    of the left-regular representation of End(X + Y) (the characteristic-0
//    criterion), restricted to the Hom(X, Y) block.  This route never looks
//    at superdimensions.
//
//  * a definitional battery for radical membership (id - g o f invertible)
//    and an explicit non-membership witness construction.
//
//  * nilpotency index of an ideal by span growth, idempotent lifting by one
//    Newton step, Kimura profiles with symmetric/alternating power ranks.

#include <cstdint>
#include <optional>
#include <vector>

#include "weightcat/category.hpp"
#include "weightcat/errors.hpp"
#include "weightcat/matrix.hpp"
#include "weightcat/morphism.hpp"

namespace weightcat {

struct IdealSubspace {
  Obj src, tgt;
  std::vector<Mor> basis;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

// Converts kernel coordinate vectors into morphisms.
inline IdealSubspace ideal_from_kernel(const CategorySpec& spec, const Obj& x, const Obj& y,
                                       const std::vector<Mat>& kernel) {
  IdealSubspace ideal;
  ideal.src = x;
  ideal.tgt = y;
  for (const Mat& v : kernel) ideal.basis.push_back(mor_from_coords(spec, x, y, v));
  return ideal;
}

}  // namespace detail

// The numerical ideal of Hom(X, Y): all f with trace(g o f) = 0 for every g.
// Gram[i][j] = trace(g_j o f_i); for unit-morphism bases this is the
// superdimension of the shared simple when the units are mutually transposed,
// and zero otherwise.
inline IdealSubspace numerical_ideal(const CategorySpec& spec, const Obj& x, const Obj& y) {
  HomBasis fb = hom_basis(spec, x, y);
  HomBasis gb = hom_basis(spec, y, x);
  Mat gram((std::size_t)fb.dim(), (std::size_t)gb.dim());
  for (std::size_t i = 0; i < fb.dim(); ++i) {
    const BasisDesc& f = fb.desc[i];
    if (f.is_nil) continue;  // nilpotent units are traceless in any product
    for (std::size_t j = 0; j < gb.dim(); ++j) {
      const BasisDesc& g = gb.desc[j];
      if (g.is_nil || g.s != f.s) continue;
      if (g.c == f.r && g.r == f.c) gram.at(i, j) = Scalar(spec.sdim(f.s));
    }
  }
  return detail::ideal_from_kernel(spec, x, y, bilinear_radical(gram));
}

// The radical of Hom(X, Y) via the regular-representation trace form of
// A = End(X + Y).  For unit-morphism bases u, v the product u o v is again a
// unit morphism or zero; its left-multiplication operator has nonzero trace
// only when the product is a diagonal semisimple unit E^S_dd, and then the
// trace counts the basis elements of A fixed by it:
//   count(S) = m_S(X+Y) + sum_T dim V(T, S) * m_T(X+Y).
inline IdealSubspace radical(const CategorySpec& spec, const Obj& x, const Obj& y) {
  const Obj z = x + y;
  // Fixed-element count for a diagonal unit on the simple S.
  auto count_for = [&](const std::string& s) -> std::int64_t {
    std::int64_t n = z.mult_of(s);
    for (const auto& t : spec.simples)
      n += (std::int64_t)spec.bimodule_dim(t.name, s) * z.mult_of(t.name);
    return n;
  };
  HomBasis fb = hom_basis(spec, x, y);
  HomBasis gb = hom_basis(spec, y, x);
  Mat gram((std::size_t)fb.dim(), (std::size_t)gb.dim());
  for (std::size_t i = 0; i < fb.dim(); ++i) {
    const BasisDesc& f = fb.desc[i];
    if (f.is_nil) continue;  // u o v nilpotent => nilpotent left multiplication
    for (std::size_t j = 0; j < gb.dim(); ++j) {
      const BasisDesc& g = gb.desc[j];
      if (g.is_nil || g.s != f.s) continue;
      // u o v = E^S(f.r, g.c) when f's source copy equals v's target copy;
      // diagonal exactly when f.r == g.c.
      if (f.c == g.r && f.r == g.c) gram.at(i, j) = Scalar(count_for(f.s));
    }
  }
  return detail::ideal_from_kernel(spec, x, y, bilinear_radical(gram));
}

inline bool same_ideal(const CategorySpec& spec, const IdealSubspace& a,
                       const IdealSubspace& b) {
  if (a.src != b.src || a.tgt != b.tgt) return false;
  std::vector<Mat> ca, cb;
  for (const Mor& m : a.basis) ca.push_back(coords(spec, m));
  for (const Mor& m : b.basis) cb.push_back(coords(spec, m));
  return same_span(ca, cb);
}

inline bool ideal_contains(const CategorySpec& spec, const IdealSubspace& ideal,
                           const Mor& f) {
  if (f.src != ideal.src || f.tgt != ideal.tgt) return false;
  std::vector<Mat> basis;
  for (const Mor& m : ideal.basis) basis.push_back(coords(spec, m));
  return in_span(coords(spec, f), basis);
}

// Definitional check of radical membership against a finite battery of test
// morphisms g: every id - g o f (and id - f o g) must be invertible.
inline bool radical_member_battery(const Mor& f, const std::vector<Mor>& tests) {
  for (const Mor& g : tests) {
    Mor gf = compose(g, f);
    if (!mor_invertible(mor_identity(f.src) - gf)) return false;
    Mor fg = compose(f, g);
    if (!mor_invertible(mor_identity(f.tgt) - fg)) return false;
  }
  return true;
}

// Explicit witness that f is NOT in the radical: a g with id - g o f
// singular.  Exists precisely when f has a nonzero semisimple entry; then
// g = a^{-1} E^S_{c,r} makes g o f a rank-one projection-like map with
// eigenvalue 1.
inline std::optional<Mor> radical_nonmember_witness(const Mor& f) {
  for (const auto& [s, block] : f.ss)
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) {
        const Scalar& a = block.at(r, c);
        if (a.is_zero()) continue;
        Mor g = mor_zero(f.tgt, f.src);
        Mat gb = Mat::zero(block.cols(), block.rows());
        gb.at(c, r) = a.reciprocal();
        g.ss[s] = std::move(gb);
        return g;
      }
  return std::nullopt;
}

// Smallest n (within the bound) such that every product of n elements of the
// ideal vanishes; nullopt when no such n <= bound exists.  The zero ideal has
// index 1.
inline std::optional<int> nilpotency_index(const CategorySpec& spec, const Obj& x,
                                           const IdealSubspace& ideal, int bound = 8) {
  if (ideal.src != x || ideal.tgt != x)
    throw ShapeError("nilpotency_index needs an ideal of End(X)");
  std::vector<Mor> span = ideal.basis;
  for (int n = 1; n <= bound; ++n) {
    if (span.empty()) return n;
    // Products of (n+1) elements: ideal basis composed with the current span,
    // pruned to an independent set to keep growth linear.
    std::vector<Mor> next;
    std::vector<Mat> next_coords;
    for (const Mor& a : ideal.basis)
      for (const Mor& b : span) {
        Mor p = compose(a, b);
        if (p.is_zero()) continue;
        Mat v = coords(spec, p);
        if (in_span(v, next_coords)) continue;
        next.push_back(std::move(p));
        next_coords.push_back(std::move(v));
      }
    span = std::move(next);
  }
  return std::nullopt;
}

// Lifts a morphism that is idempotent modulo the nilpotent part to an exact
// idempotent.  One Newton step e' = 3e^2 - 2e^3 suffices under the
// square-zero rule; the result is verified before returning.
inline Mor lift_idempotent(const CategorySpec& spec, const Obj& x, const Mor& e_bar) {
  (void)spec;
  if (e_bar.src != x || e_bar.tgt != x) throw ShapeError("lift_idempotent: not an End(X) element");
  Mor q = quotient_num(e_bar);
  if (compose(q, q) != q)
    throw NotIdempotentModN("semisimple part fails e*e = e");
  Mor e2 = compose(e_bar, e_bar);
  Mor e3 = compose(e2, e_bar);
  Mor lifted = Scalar(3) * e2 - Scalar(2) * e3;
  if (compose(lifted, lifted) != lifted)
    throw Error("idempotent lift failed to converge in one step");
  if (quotient_num(lifted) != q)
    throw Error("idempotent lift drifted modulo the nilpotent part");
  return lifted;
}

// A splitting of an exact idempotent e on X: an object Y with morphisms
// incl: Y -> X and proj: X -> Y such that proj o incl = id_Y and
// incl o proj = e, both exactly.
struct IdempotentSplitting {
  Obj part;
  Mor incl;
  Mor proj;
};

// Splits an exact idempotent.  The image object has, per simple, the rank of
// the semisimple block; the correction by the invertible proj0 o e o incl0
// (identity plus nilpotent) makes incl o proj reproduce e on the nose, not
// just up to the numerical ideal.
inline IdempotentSplitting split_idempotent(const CategorySpec& spec, const Obj& x,
                                            const Mor& e) {
  (void)spec;
  if (e.src != x || e.tgt != x) throw ShapeError("split_idempotent: not an End(X) element");
  if (compose(e, e) != e) throw NotIdempotentModN("split_idempotent needs an exact idempotent");

  // Pure semisimple inclusion/projection of the image: per simple, a basis
  // of the column space of the block (the pivot columns, deterministically),
  // and the matching left inverse through the rational Gram matrix.
  Obj part;
  Mor incl0 = mor_zero(part, x);  // shapes fixed after part is known
  Mor proj0 = mor_zero(x, part);
  std::map<std::string, Mat> c_blocks, p_blocks;
  for (const auto& [s, m] : x.mult) {
    Mat block = e.ss_block(s);
    Mat reduced = block;
    std::vector<std::size_t> pivots = rref_in_place(reduced);
    if (pivots.empty()) continue;
    Mat c(block.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
      for (std::size_t i = 0; i < block.rows(); ++i) c.at(i, j) = block.at(i, pivots[j]);
    // Left inverse P with P C = id and C P = block: P = (C^T C)^{-1} C^T e_S.
    Mat gram = c.transpose() * c;
    Mat p = *mat_inverse(gram) * c.transpose() * block;
    part.mult[s] = (int)pivots.size();
    c_blocks[s] = std::move(c);
    p_blocks[s] = std::move(p);
    (void)m;
  }
  incl0 = mor_zero(part, x);
  proj0 = mor_zero(x, part);
  for (auto& [s, c] : c_blocks) incl0.ss[s] = c;
  for (auto& [s, p] : p_blocks) proj0.ss[s] = p;

  Mor i = compose(e, incl0);
  Mor p1 = compose(proj0, e);
  Mor mu = compose(p1, i);  // identity plus nilpotent, hence invertible
  auto mu_inv = mor_inverse(mu);
  if (!mu_inv) throw Error("split_idempotent: correction factor not invertible");
  Mor p = compose(*mu_inv, p1);

  IdempotentSplitting out{part, i, p};
  if (compose(p, i) != mor_identity(part) || compose(i, p) != e)
    throw Error("split_idempotent: verification failed");
  return out;
}

// ---------------------------------------------------------------------------
// Kimura profiles.

struct KimuraProfile {
  std::int64_t even_rank = 0;
  std::int64_t odd_rank = 0;
  bool is_even = false;
  bool is_odd = false;
  bool is_finite_dimensional = true;
};

inline KimuraProfile kimura_profile(const CategorySpec& spec, const Obj& x) {
  KimuraProfile p;
  for (const auto& [s, m] : x.mult) {
    const SimpleObject& simple = spec.simple(s);
    if (simple.parity == Parity::Even)
      p.even_rank += (std::int64_t)simple.rank * m;
    else
      p.odd_rank += (std::int64_t)simple.rank * m;
  }
  p.is_even = (p.odd_rank == 0);
  p.is_odd = (p.even_rank == 0);
  p.is_finite_dimensional = true;  // every object here is even + odd
  return p;
}

namespace detail {
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  // Generalized binomial: n may be negative; products stay tiny at desk scale.
  std::int64_t num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}
}  // namespace detail

// Rank of the n-th symmetric power of X after semisimplification: with even
// rank p and odd rank q this is the super-dimension count
//   sum_{a+b=n} C(p+a-1, a) * C(q, b).
inline std::int64_t sym_power_rank(const CategorySpec& spec, const Obj& x, int n) {
  KimuraProfile pr = kimura_profile(spec, x);
  std::int64_t total = 0;
  for (int b = 0; b <= n; ++b) {
    int a = n - b;
    std::int64_t even_part = (pr.even_rank == 0)
                                 ? (a == 0 ? 1 : 0)
                                 : detail::binom(pr.even_rank + a - 1, a);
    total += even_part * detail::binom(pr.odd_rank, b);
  }
  return total;
}

// Rank of the n-th alternating power: sum_{a+b=n} C(p, a) * C(q+b-1, b).
inline std::int64_t wedge_power_rank(const CategorySpec& spec, const Obj& x, int n) {
  KimuraProfile pr = kimura_profile(spec, x);
  std::int64_t total = 0;
  for (int a = 0; a <= n; ++a) {
    int b = n - a;
    std::int64_t odd_part = (pr.odd_rank == 0)
                                ? (b == 0 ? 1 : 0)
                                : detail::binom(pr.odd_rank + b - 1, b);
    total += detail::binom(pr.even_rank, a) * odd_part;
  }
  return total;
}

}  // namespace weightcat

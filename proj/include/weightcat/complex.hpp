// Bounded cochain complexes over the base category, together with chain maps,
// chain homotopies, shifts, mapping cones, direct sums and tensor-product
// total complexes.  Conventions used throughout:
//   - differentials raise degree by one, d^{i+1} o d^i = 0;
//   - shift: X[n]^i = X^{i+n}, d_{X[n]} = (-1)^n d_X (reindexed);
//   - cone(f: X -> Y)^n = X^{n+1} (+) Y^n with
//       d = [[-d_X, 0], [f, d_Y]] (indices shifted on the X column),
//     with canonical maps Y -> cone(f) -> X[1].

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weightcat/errors.hpp"
#include "weightcat/morphism.hpp"
#include "weightcat/tensor.hpp"

namespace weightcat {

// ---------------------------------------------------------------------------
// Complexes.

struct Complex {
  std::map<int, Obj> comp;   // degree -> component (zero entries omitted)
  std::map<int, Mor> diff;   // degree i -> morphism comp[i] -> comp[i+1]

  Obj at(int i) const {
    auto it = comp.find(i);
    return it == comp.end() ? Obj{} : it->second;
  }
  Mor d(int i) const {
    auto it = diff.find(i);
    return it == diff.end() ? mor_zero(at(i), at(i + 1)) : it->second;
  }
  bool is_zero() const {
    for (const auto& [_, x] : comp)
      if (!x.is_zero()) return false;
    return true;
  }
  // Support bounds; only meaningful when the complex is nonzero.
  int lo() const {
    for (const auto& [i, x] : comp)
      if (!x.is_zero()) return i;
    throw ShapeError("lo() of a zero complex");
  }
  int hi() const {
    int h = 0;
    bool seen = false;
    for (const auto& [i, x] : comp)
      if (!x.is_zero()) h = i, seen = true;
    if (!seen) throw ShapeError("hi() of a zero complex");
    return h;
  }

  // Drops zero components and zero differentials.
  Complex& prune() {
    for (auto it = comp.begin(); it != comp.end();)
      it = it->second.is_zero() ? comp.erase(it) : std::next(it);
    for (auto it = diff.begin(); it != diff.end();)
      it = it->second.is_zero() ? diff.erase(it) : std::next(it);
    return *this;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    Complex x = a, y = b;
    x.prune();
    y.prune();
    if (x.comp != y.comp) return false;
    if (x.diff.size() != y.diff.size()) return false;
    for (const auto& [i, m] : x.diff) {
      auto it = y.diff.find(i);
      if (it == y.diff.end() || !(it->second == m)) return false;
    }
    return true;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  std::string str() const {
    if (Complex(*this).prune().comp.empty()) return "0";
    std::string out = "{";
    bool first = true;
    for (const auto& [i, x] : comp) {
      if (x.is_zero()) continue;
      if (!first) out += ", ";
      out += std::to_string(i) + ": " + x.str();
      first = false;
    }
    return out + "}";
  }
};

// One object placed in one degree with zero differential.
inline Complex complex_pure(const Obj& x, int degree) {
  Complex c;
  if (!x.is_zero()) c.comp[degree] = x;
  return c;
}

// Checks component/differential shape agreement and d o d = 0.
inline void validate_complex(const Complex& x) {
  for (const auto& [i, d] : x.diff) {
    if (d.src != x.at(i) || d.tgt != x.at(i + 1))
      throw ShapeError("complex differential at degree " + std::to_string(i) +
                       " has mismatched endpoints");
    if (!compose(x.d(i + 1), d).is_zero())
      throw ShapeError("complex differential does not square to zero at degree " +
                       std::to_string(i));
  }
}

inline Complex complex_shift(const Complex& x, int n) {
  Complex r;
  for (const auto& [i, c] : x.comp) r.comp[i - n] = c;
  const Scalar sign((n % 2 == 0) ? 1 : -1);
  for (const auto& [i, d] : x.diff) {
    Mor m = sign * d;
    if (!m.is_zero()) r.diff[i - n] = std::move(m);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Chain maps and chain homotopies.

struct ChainMap {
  Complex src, tgt;
  std::map<int, Mor> comp;  // degree -> component (zero entries may be omitted)

  Mor at(int i) const {
    auto it = comp.find(i);
    return it == comp.end() ? mor_zero(src.at(i), tgt.at(i)) : it->second;
  }
  bool is_zero() const {
    for (const auto& [_, m] : comp)
      if (!m.is_zero()) return false;
    return true;
  }
  ChainMap& prune() {
    for (auto it = comp.begin(); it != comp.end();)
      it = it->second.is_zero() ? comp.erase(it) : std::next(it);
    return *this;
  }
  ChainMap& set(int i, Mor m) {
    if (!m.is_zero()) comp[i] = std::move(m);
    return *this;
  }

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    if (a.src != b.src || a.tgt != b.tgt) return false;
    std::map<int, Mor> x = a.comp, y = b.comp;
    for (auto it = x.begin(); it != x.end();)
      it = it->second.is_zero() ? x.erase(it) : std::next(it);
    for (auto it = y.begin(); it != y.end();)
      it = it->second.is_zero() ? y.erase(it) : std::next(it);
    if (x.size() != y.size()) return false;
    for (const auto& [i, m] : x) {
      auto it = y.find(i);
      if (it == y.end() || !(it->second == m)) return false;
    }
    return true;
  }
  friend bool operator!=(const ChainMap& a, const ChainMap& b) { return !(a == b); }
};

inline ChainMap chain_zero(const Complex& x, const Complex& y) { return {x, y, {}}; }

inline ChainMap chain_identity(const Complex& x) {
  ChainMap f{x, x, {}};
  for (const auto& [i, c] : x.comp)
    if (!c.is_zero()) f.comp[i] = mor_identity(c);
  return f;
}

// Degrees where either of the two complexes has a component.
inline std::vector<int> support_union(const Complex& x, const Complex& y) {
  std::map<int, bool> degs;
  for (const auto& [i, c] : x.comp)
    if (!c.is_zero()) degs[i] = true;
  for (const auto& [i, c] : y.comp)
    if (!c.is_zero()) degs[i] = true;
  std::vector<int> out;
  for (const auto& [i, _] : degs) out.push_back(i);
  return out;
}

// Does f commute with the differentials degreewise?
inline bool chain_commutes(const ChainMap& f) {
  for (int i : support_union(f.src, f.tgt))
    for (int j : {i - 1, i})
      if (!(compose(f.tgt.d(j), f.at(j)) == compose(f.at(j + 1), f.src.d(j))))
        return false;
  return true;
}

inline void validate_chain_map(const ChainMap& f) {
  for (const auto& [i, m] : f.comp)
    if (m.src != f.src.at(i) || m.tgt != f.tgt.at(i))
      throw ShapeError("chain map component at degree " + std::to_string(i) +
                       " has mismatched endpoints");
  if (!chain_commutes(f)) throw ShapeError("chain map does not commute with differentials");
}

inline ChainMap chain_compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.tgt == g.src)) throw ShapeError("chain_compose: endpoint mismatch");
  ChainMap r{f.src, g.tgt, {}};
  for (int i : support_union(f.src, g.tgt)) r.set(i, compose(g.at(i), f.at(i)));
  return r;
}

inline ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.src == b.src) || !(a.tgt == b.tgt)) throw ShapeError("chain map sum mismatch");
  ChainMap r{a.src, a.tgt, {}};
  for (int i : support_union(a.src, a.tgt)) r.set(i, a.at(i) + b.at(i));
  return r;
}

inline ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  if (!(a.src == b.src) || !(a.tgt == b.tgt)) throw ShapeError("chain map difference mismatch");
  ChainMap r{a.src, a.tgt, {}};
  for (int i : support_union(a.src, a.tgt)) r.set(i, a.at(i) - b.at(i));
  return r;
}

inline ChainMap operator*(const Scalar& c, const ChainMap& f) {
  ChainMap r{f.src, f.tgt, {}};
  for (const auto& [i, m] : f.comp) r.set(i, c * m);
  return r;
}

// f[n] : X[n] -> Y[n]; components reindexed, no signs.
inline ChainMap chain_shift(const ChainMap& f, int n) {
  ChainMap r{complex_shift(f.src, n), complex_shift(f.tgt, n), {}};
  for (const auto& [i, m] : f.comp) r.comp[i - n] = m;
  return r;
}

// A chain homotopy: components h^i : X^i -> Y^{i-1}.
struct Homotopy {
  Complex src, tgt;
  std::map<int, Mor> comp;

  Mor at(int i) const {
    auto it = comp.find(i);
    return it == comp.end() ? mor_zero(src.at(i), tgt.at(i - 1)) : it->second;
  }
  Homotopy& set(int i, Mor m) {
    if (!m.is_zero()) comp[i] = std::move(m);
    return *this;
  }
};

inline Homotopy homotopy_zero(const Complex& x, const Complex& y) { return {x, y, {}}; }

// The chain map d o h + h o d trivialized by h.
inline ChainMap dh_plus_hd(const Homotopy& h) {
  ChainMap r{h.src, h.tgt, {}};
  for (int i : support_union(h.src, h.tgt))
    r.set(i, compose(h.tgt.d(i - 1), h.at(i)) + compose(h.at(i + 1), h.src.d(i)));
  return r;
}

inline void validate_homotopy(const Homotopy& h, const ChainMap& target) {
  for (const auto& [i, m] : h.comp)
    if (m.src != h.src.at(i) || m.tgt != h.tgt.at(i - 1))
      throw ShapeError("homotopy component at degree " + std::to_string(i) +
                       " has mismatched endpoints");
  if (!(dh_plus_hd(h) == target)) throw ShapeError("homotopy does not trivialize its target");
}

// ---------------------------------------------------------------------------
// Multi-part direct sums of objects: each part's copies sit at consecutive
// indices within every simple, parts in list order.

inline std::vector<Sel> sum_sels(const std::vector<Obj>& parts) {
  std::map<std::string, int> offset;
  std::vector<Sel> sels;
  sels.reserve(parts.size());
  for (const Obj& p : parts) {
    Sel sel;
    for (const auto& [s, m] : p.mult) {
      std::vector<int> idx((std::size_t)m);
      for (int i = 0; i < m; ++i) idx[(std::size_t)i] = offset[s] + i;
      offset[s] += m;
      sel[s] = std::move(idx);
    }
    sels.push_back(std::move(sel));
  }
  return sels;
}

inline Obj obj_sum(const std::vector<Obj>& parts) {
  Obj t;
  for (const Obj& p : parts) t = t + p;
  return t;
}

// ---------------------------------------------------------------------------
// Mapping cones.

// X --f--> Y --incl--> cone --proj--> X[1], with the standard differential.
struct Triangle {
  ChainMap f;
  Complex cone;
  ChainMap incl;  // Y -> cone
  ChainMap proj;  // cone -> X[1]
};

inline Triangle make_cone(const ChainMap& f) {
  const Complex& x = f.src;
  const Complex& y = f.tgt;
  Triangle t;
  t.f = f;

  // Components: cone^n = X^{n+1} (+) Y^n (X-part listed first).
  std::map<int, bool> degs;
  for (const auto& [i, c] : x.comp)
    if (!c.is_zero()) degs[i - 1] = true;
  for (const auto& [i, c] : y.comp)
    if (!c.is_zero()) degs[i] = true;
  for (const auto& [n, _] : degs) {
    Obj cn = x.at(n + 1) + y.at(n);
    if (!cn.is_zero()) t.cone.comp[n] = cn;
  }

  auto part_sels = [&](int n) { return sum_sels({x.at(n + 1), y.at(n)}); };

  for (const auto& [n, cn] : t.cone.comp) {
    Obj cn1 = t.cone.at(n + 1);
    if (cn1.is_zero()) continue;
    auto src_sels = part_sels(n);
    auto tgt_sels = part_sels(n + 1);
    Mor projx = mor_sel_proj(cn, src_sels[0]);
    Mor projy = mor_sel_proj(cn, src_sels[1]);
    Mor inclx = mor_sel_incl(cn1, tgt_sels[0]);
    Mor incly = mor_sel_incl(cn1, tgt_sels[1]);
    Mor d = compose(inclx, compose(Scalar(-1) * x.d(n + 1), projx)) +
            compose(incly, compose(f.at(n + 1), projx)) +
            compose(incly, compose(y.d(n), projy));
    if (!d.is_zero()) t.cone.diff[n] = std::move(d);
  }

  t.incl = chain_zero(y, t.cone);
  for (const auto& [n, c] : y.comp) {
    if (c.is_zero()) continue;
    t.incl.set(n, mor_sel_incl(t.cone.at(n), part_sels(n)[1]));
  }

  Complex x1 = complex_shift(x, 1);
  t.proj = chain_zero(t.cone, x1);
  for (const auto& [n, cn] : t.cone.comp) {
    if (x1.at(n).is_zero()) continue;
    t.proj.set(n, mor_sel_proj(cn, part_sels(n)[0]));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Direct sums of complexes.

struct ComplexSum {
  Complex sum;
  ChainMap i1, i2;  // inclusions of the two parts
  ChainMap p1, p2;  // projections onto the two parts
};

inline ComplexSum complex_dsum(const Complex& x, const Complex& y) {
  ComplexSum r;
  for (int n : support_union(x, y)) {
    Obj c = x.at(n) + y.at(n);
    if (!c.is_zero()) r.sum.comp[n] = c;
  }
  for (int n : support_union(x, y)) {
    Mor d = mor_dsum(x.d(n), y.d(n));
    if (!d.is_zero()) r.sum.diff[n] = std::move(d);
  }
  r.i1 = chain_zero(x, r.sum);
  r.i2 = chain_zero(y, r.sum);
  r.p1 = chain_zero(r.sum, x);
  r.p2 = chain_zero(r.sum, y);
  for (int n : support_union(x, y)) {
    r.i1.set(n, incl_first(x.at(n), y.at(n)));
    r.i2.set(n, incl_second(x.at(n), y.at(n)));
    r.p1.set(n, proj_first(x.at(n), y.at(n)));
    r.p2.set(n, proj_second(x.at(n), y.at(n)));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensor product of complexes (total complex with Koszul signs).

// Index of the (i, j)-summand blocks inside each total degree: for degree n,
// the pairs (i, j), i + j = n, with X^i and Y^j nonzero, sorted by i.
struct TensorComplexIndex {
  Complex total;
  std::map<int, std::vector<std::pair<int, int>>> pairs;     // n -> [(i, j)]
  std::map<int, std::vector<Sel>> sels;                      // n -> part sels
  std::map<std::pair<int, int>, std::size_t> slot;           // (i, j) -> index

  Mor incl(int n, int i, int j) const {
    return mor_sel_incl(total.at(n), sels.at(n)[slot.at({i, j})]);
  }
  Mor proj(int n, int i, int j) const {
    return mor_sel_proj(total.at(n), sels.at(n)[slot.at({i, j})]);
  }
};

inline TensorComplexIndex tensor_complex_index(const CategorySpec& spec, const Complex& x,
                                               const Complex& y) {
  TensorComplexIndex idx;
  for (const auto& [i, xc] : x.comp) {
    if (xc.is_zero()) continue;
    for (const auto& [j, yc] : y.comp) {
      if (yc.is_zero()) continue;
      idx.pairs[i + j].push_back({i, j});
    }
  }
  for (auto& [n, ps] : idx.pairs) {
    std::vector<Obj> parts;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      parts.push_back(tensor_obj(spec, x.at(ps[k].first), y.at(ps[k].second)));
      idx.slot[ps[k]] = k;
    }
    idx.sels[n] = sum_sels(parts);
    Obj tot = obj_sum(parts);
    if (!tot.is_zero()) idx.total.comp[n] = tot;
  }
  return idx;
}

// d(x (x) y) = dx (x) y + (-1)^i x (x) dy on the (i, j) block.
inline Complex tensor_complex(const CategorySpec& spec, const Complex& x, const Complex& y,
                              TensorComplexIndex* out_index = nullptr) {
  TensorComplexIndex idx = tensor_complex_index(spec, x, y);
  for (const auto& [n, ps] : idx.pairs) {
    if (idx.total.at(n + 1).is_zero()) continue;
    Mor d = mor_zero(idx.total.at(n), idx.total.at(n + 1));
    for (const auto& [i, j] : ps) {
      Mor from = idx.proj(n, i, j);
      if (!x.at(i + 1).is_zero() && !y.at(j).is_zero()) {
        Mor step = tensor_mor(spec, x.d(i), mor_identity(y.at(j)));
        d = d + compose(idx.incl(n + 1, i + 1, j), compose(step, from));
      }
      if (!x.at(i).is_zero() && !y.at(j + 1).is_zero()) {
        const Scalar sign((i % 2 == 0) ? 1 : -1);
        Mor step = sign * tensor_mor(spec, mor_identity(x.at(i)), y.d(j));
        d = d + compose(idx.incl(n + 1, i, j + 1), compose(step, from));
      }
    }
    if (!d.is_zero()) idx.total.diff[n] = std::move(d);
  }
  if (out_index) *out_index = idx;
  return idx.total;
}

// (f (x) g) on total complexes, for degree-preserving chain maps (no signs).
inline ChainMap tensor_chain_map(const CategorySpec& spec, const ChainMap& f,
                                 const ChainMap& g) {
  TensorComplexIndex si;
  Complex src = tensor_complex(spec, f.src, g.src, &si);
  TensorComplexIndex ti;
  Complex tgt = tensor_complex(spec, f.tgt, g.tgt, &ti);
  ChainMap r = chain_zero(src, tgt);
  for (const auto& [n, ps] : si.pairs) {
    if (tgt.at(n).is_zero()) continue;
    Mor m = mor_zero(src.at(n), tgt.at(n));
    for (const auto& [i, j] : ps) {
      if (f.tgt.at(i).is_zero() || g.tgt.at(j).is_zero()) continue;
      Mor block = tensor_mor(spec, f.at(i), g.at(j));
      m = m + compose(ti.incl(n, i, j), compose(block, si.proj(n, i, j)));
    }
    r.set(n, std::move(m));
  }
  return r;
}

// The symmetry X (x) Y -> Y (x) X with the sign (-1)^{ij} on the (i, j) block.
inline ChainMap braiding_chain(const CategorySpec& spec, const Complex& x, const Complex& y) {
  TensorComplexIndex si;
  Complex src = tensor_complex(spec, x, y, &si);
  TensorComplexIndex ti;
  Complex tgt = tensor_complex(spec, y, x, &ti);
  ChainMap r = chain_zero(src, tgt);
  for (const auto& [n, ps] : si.pairs) {
    Mor m = mor_zero(src.at(n), tgt.at(n));
    for (const auto& [i, j] : ps) {
      const Scalar sign((i * j) % 2 == 0 ? 1 : -1);
      Mor block = sign * braiding_mor(spec, x.at(i), y.at(j));
      m = m + compose(ti.incl(n, j, i), compose(block, si.proj(n, i, j)));
    }
    r.set(n, std::move(m));
  }
  return r;
}

}  // namespace weightcat

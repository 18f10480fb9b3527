#pragma once
// The base category model: a semisimple Q-linear tensor category presented by
// a finite list of simple objects with fusion data, thickened by a square-zero
// bimodule of "numerical" morphisms, plus optional dual (rigidity) data.
//
// A CategorySpec is pure data; validate_spec checks every structural
// invariant and returns a report rather than throwing, so the CLI can show
// users everything that is wrong at once.  Objects are multiplicity vectors
// over the simples.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weightcat/errors.hpp"
#include "weightcat/matrix.hpp"
#include "weightcat/rational.hpp"

namespace weightcat {

enum class Parity { Even, Odd };

inline std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct SimpleObject {
  std::string name;
  Parity parity = Parity::Even;
  int rank = 1;

  // Signed dimension: rank for even simples, -rank for odd ones.
  std::int64_t superdim() const { return parity == Parity::Even ? rank : -rank; }

  friend bool operator==(const SimpleObject& a, const SimpleObject& b) {
    return a.name == b.name && a.parity == b.parity && a.rank == b.rank;
  }
};

// One row of the fusion table: the ordered decomposition of a tensor product
// of two simples, together with the signed permutation matrix expressing the
// symmetry (swap) map in the chosen decomposition bases.
struct FusionEntry {
  std::vector<std::string> summands;
  Mat symmetry;  // size summands x summands of the *swapped* product

  friend bool operator==(const FusionEntry& a, const FusionEntry& b) {
    return a.summands == b.summands && a.symmetry == b.symmetry;
  }
};

// The space of numerical morphisms S -> S' between two simples: its
// dimension and a name per basis vector (names are globally unique so
// serialized morphisms can refer to them directly).
struct BimoduleEntry {
  int dim = 0;
  std::vector<std::string> basis_names;

  friend bool operator==(const BimoduleEntry& a, const BimoduleEntry& b) {
    return a.dim == b.dim && a.basis_names == b.basis_names;
  }
};

// Rigidity data for one simple: its dual, the rank-one even simple through
// which evaluation factors (the "twist"), and the coefficients of the
// coevaluation and evaluation maps in that factorization.  Their product must
// equal the superdimension.
struct DualEntry {
  std::string dual;
  std::string unit_summand;
  Scalar coev;
  Scalar ev;

  friend bool operator==(const DualEntry& a, const DualEntry& b) {
    return a.dual == b.dual && a.unit_summand == b.unit_summand && a.coev == b.coev &&
           a.ev == b.ev;
  }
};

struct CategorySpec {
  std::vector<SimpleObject> simples;
  std::string unit;
  std::map<std::pair<std::string, std::string>, FusionEntry> fusion;
  std::map<std::pair<std::string, std::string>, BimoduleEntry> bimodule;
  std::map<std::string, DualEntry> duals;

  friend bool operator==(const CategorySpec& a, const CategorySpec& b) {
    auto simples_eq = [&] {
      if (a.simples.size() != b.simples.size()) return false;
      for (std::size_t i = 0; i < a.simples.size(); ++i)
        if (!(a.simples[i] == b.simples[i])) return false;
      return true;
    };
    return simples_eq() && a.unit == b.unit && a.fusion == b.fusion &&
           a.bimodule == b.bimodule && a.duals == b.duals;
  }

  const SimpleObject* find_simple(const std::string& name) const {
    for (const auto& s : simples)
      if (s.name == name) return &s;
    return nullptr;
  }
  const SimpleObject& simple(const std::string& name) const {
    const SimpleObject* s = find_simple(name);
    if (!s) throw IncoherentSpec("unknown simple '" + name + "'");
    return *s;
  }
  std::int64_t sdim(const std::string& name) const { return simple(name).superdim(); }

  bool has_fusion(const std::string& a, const std::string& b) const {
    return fusion.count({a, b}) > 0;
  }
  const FusionEntry& fusion_of(const std::string& a, const std::string& b) const {
    auto it = fusion.find({a, b});
    if (it == fusion.end())
      throw FusionIncomplete("no fusion row for (" + a + ", " + b + ")");
    return it->second;
  }

  int bimodule_dim(const std::string& src, const std::string& tgt) const {
    auto it = bimodule.find({src, tgt});
    return it == bimodule.end() ? 0 : it->second.dim;
  }
  const std::vector<std::string>& bimodule_names(const std::string& src,
                                                 const std::string& tgt) const {
    static const std::vector<std::string> kEmpty;
    auto it = bimodule.find({src, tgt});
    return it == bimodule.end() ? kEmpty : it->second.basis_names;
  }

  const DualEntry* find_dual(const std::string& name) const {
    auto it = duals.find(name);
    return it == duals.end() ? nullptr : &it->second;
  }

  // Adds the forced unit fusion rows ((unit, S) -> [S] and (S, unit) -> [S]
  // with trivial symmetry) when absent, so model files may omit them.
  void ensure_unit_rows() {
    for (const auto& s : simples) {
      FusionEntry row{{s.name}, Mat::identity(1)};
      if (!fusion.count({unit, s.name})) fusion[{unit, s.name}] = row;
      if (!fusion.count({s.name, unit})) fusion[{s.name, unit}] = row;
    }
  }
};

// An object: a finitely supported multiplicity vector over the simples.
// The zero object is the empty map.
struct Obj {
  std::map<std::string, int> mult;

  static Obj of(const std::string& simple, int n = 1) {
    Obj x;
    if (n > 0) x.mult[simple] = n;
    return x;
  }

  int mult_of(const std::string& simple) const {
    auto it = mult.find(simple);
    return it == mult.end() ? 0 : it->second;
  }
  bool is_zero() const { return mult.empty(); }
  int total() const {
    int t = 0;
    for (const auto& [_, m] : mult) t += m;
    return t;
  }

  friend Obj operator+(const Obj& a, const Obj& b) {  // direct sum
    Obj r = a;
    for (const auto& [s, m] : b.mult) {
      r.mult[s] += m;
      if (r.mult[s] == 0) r.mult.erase(s);
    }
    return r;
  }

  friend bool operator==(const Obj& a, const Obj& b) { return a.mult == b.mult; }
  friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }
  friend bool operator<(const Obj& a, const Obj& b) { return a.mult < b.mult; }

  std::string str() const {
    if (mult.empty()) return "0";
    std::string out;
    for (const auto& [s, m] : mult) {
      if (!out.empty()) out += "+";
      if (m != 1) out += std::to_string(m) + "*";
      out += s;
    }
    return out;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  // Named axiom groups with their pass/fail status, in check order.
  std::vector<std::pair<std::string, bool>> sections;

  void fail(const std::string& msg) {
    ok = false;
    problems.push_back(msg);
  }
};

// Full structural validation of a CategorySpec.  Returns a report listing
// every violated invariant, grouped into named axiom sections; an empty
// problem list means the model is coherent.
inline ValidationReport validate_spec(const CategorySpec& spec) {
  ValidationReport rep;
  std::size_t section_start = 0;
  auto close_section = [&](const std::string& name) {
    rep.sections.emplace_back(name, rep.problems.size() == section_start);
    section_start = rep.problems.size();
  };

  // --- unit axioms: simples well formed, unit even of rank 1, unit fusion
  // rows present and identity-shaped.
  std::set<std::string> names;
  for (const auto& s : spec.simples) {
    if (s.name.empty()) rep.fail("simple with empty name");
    if (!names.insert(s.name).second) rep.fail("duplicate simple name '" + s.name + "'");
    if (s.rank <= 0) rep.fail("simple '" + s.name + "' has non-positive rank");
  }
  const SimpleObject* unit = spec.find_simple(spec.unit);
  if (!unit) {
    rep.fail("unit '" + spec.unit + "' is not a declared simple");
  } else {
    if (unit->parity != Parity::Even) rep.fail("unit must be even");
    if (unit->rank != 1) rep.fail("unit must have rank 1");
  }
  for (const auto& s : spec.simples) {
    if (!spec.has_fusion(spec.unit, s.name))
      rep.fail("missing unit fusion row (" + spec.unit + ", " + s.name + ")");
    if (!spec.has_fusion(s.name, spec.unit))
      rep.fail("missing unit fusion row (" + s.name + ", " + spec.unit + ")");
  }
  if (unit) {
    for (const auto& [key, row] : spec.fusion) {
      const auto& [a, b] = key;
      if (a != spec.unit && b != spec.unit) continue;
      if (!spec.find_simple(a) || !spec.find_simple(b)) continue;
      const std::string other = (a == spec.unit) ? b : a;
      if (row.summands != std::vector<std::string>{other} || !row.symmetry.is_identity())
        rep.fail("fusion (" + a + ", " + b + ") must be the identity unit row [" + other +
                 "]");
    }
  }
  close_section("unit axioms");

  // --- fusion rank compatibility: all names known, superdimensions multiply.
  for (const auto& [key, row] : spec.fusion) {
    const auto& [a, b] = key;
    std::string where = "fusion (" + a + ", " + b + ")";
    if (!spec.find_simple(a) || !spec.find_simple(b)) {
      rep.fail(where + " references an unknown simple");
      continue;
    }
    bool bad_summand = false;
    for (const auto& t : row.summands)
      if (!spec.find_simple(t)) {
        rep.fail(where + " has unknown summand '" + t + "'");
        bad_summand = true;
      }
    if (bad_summand) continue;
    std::int64_t lhs = spec.sdim(a) * spec.sdim(b), rhs = 0;
    for (const auto& t : row.summands) rhs += spec.sdim(t);
    if (lhs != rhs)
      rep.fail(where + " superdimensions do not add up (" + std::to_string(lhs) + " vs " +
               std::to_string(rhs) + ")");
  }
  close_section("fusion rank compatibility");

  // --- symmetry involutivity: symmetry matrices are signed permutations
  // connecting equal simples, and the two swaps compose to the identity.
  for (const auto& [key, row] : spec.fusion) {
    const auto& [a, b] = key;
    std::string where = "fusion (" + a + ", " + b + ")";
    if (!spec.find_simple(a) || !spec.find_simple(b)) continue;
    bool known = true;
    for (const auto& t : row.summands) known = known && spec.find_simple(t);
    if (!known) continue;

    const std::size_t n = row.summands.size();
    if (row.symmetry.rows() != n || row.symmetry.cols() != n) {
      rep.fail(where + " symmetry matrix has wrong size");
      continue;
    }
    auto other_row = spec.fusion.find({b, a});
    if (other_row == spec.fusion.end()) {
      rep.fail(where + " has no swapped row (" + b + ", " + a + ")");
      continue;
    }
    const auto& swapped = other_row->second.summands;
    if (swapped.size() != n) {
      rep.fail(where + " and its swapped row have different lengths");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      int nonzero_in_row = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& e = row.symmetry.at(i, j);
        if (e.is_zero()) continue;
        ++nonzero_in_row;
        if (!(e == Scalar(1)) && !(e == Scalar(-1)))
          rep.fail(where + " symmetry entry is not 0 or +-1");
        if (swapped[i] != row.summands[j])
          rep.fail(where + " symmetry connects different simples ('" + row.summands[j] +
                   "' -> '" + swapped[i] + "')");
      }
      if (nonzero_in_row != 1) rep.fail(where + " symmetry is not a permutation");
    }
    if (other_row->second.symmetry.rows() == n &&
        other_row->second.symmetry.cols() == n &&
        !(other_row->second.symmetry * row.symmetry).is_identity())
      rep.fail(where + " symmetry is not involutive against (" + b + ", " + a + ")");
  }
  close_section("symmetry involutivity");

  // --- bimodule trace-zero: bimodule entries well formed with globally
  // unique basis names.  (Tracelessness itself holds by construction: the
  // trace formula never reads nilpotent blocks.)
  std::set<std::string> nil_names;
  for (const auto& [key, entry] : spec.bimodule) {
    const auto& [a, b] = key;
    std::string where = "bimodule (" + a + " -> " + b + ")";
    if (!spec.find_simple(a) || !spec.find_simple(b))
      rep.fail(where + " references an unknown simple");
    if (entry.dim < 0) rep.fail(where + " has negative dimension");
    if ((int)entry.basis_names.size() != entry.dim)
      rep.fail(where + " basis-name count differs from dim");
    for (const auto& n : entry.basis_names) {
      if (n.empty()) rep.fail(where + " has an empty basis name");
      if (!nil_names.insert(n).second)
        rep.fail("duplicate bimodule basis name '" + n + "'");
      if (names.count(n)) rep.fail("bimodule basis name '" + n + "' collides with a simple");
    }
  }
  close_section("bimodule trace-zero");

  // --- duals consistency: referenced simples exist, the twist is an even
  // rank-1 simple (and a declared summand of S (x) dual when that row is
  // covered), and coev * ev equals the superdimension — which is exactly the
  // statement that the duality trace of id_S matches the block formula.
  for (const auto& [name, d] : spec.duals) {
    std::string where = "dual data for '" + name + "'";
    const SimpleObject* s = spec.find_simple(name);
    if (!s || !spec.find_simple(d.dual)) {
      rep.fail(where + " references an unknown simple");
      continue;
    }
    const SimpleObject* tw = spec.find_simple(d.unit_summand);
    if (!tw || tw->parity != Parity::Even || tw->rank != 1) {
      rep.fail(where + ": twist '" + d.unit_summand + "' is not an even rank-1 simple");
      continue;
    }
    if (spec.has_fusion(name, d.dual)) {
      const auto& row = spec.fusion_of(name, d.dual);
      bool found = false;
      for (const auto& t : row.summands) found = found || (t == d.unit_summand);
      if (!found)
        rep.fail(where + ": twist '" + d.unit_summand + "' is not a summand of " + name +
                 " (x) " + d.dual);
    }
    if (d.coev * d.ev != Scalar(s->superdim()))
      rep.fail(where + ": coev * ev != superdimension");
  }
  close_section("duals consistency");

  return rep;
}

// The shipped model: the unit, an odd rank-2 simple h1 whose square fuses
// into an even rank-1 simple lef (symmetric part) and an even rank-3 simple
// sym2 (antisymmetric part), one numerical morphism alpha: one -> h1 and one
// beta: one -> lef, and dual data for one and h1.
inline CategorySpec builtin_ell() {
  CategorySpec spec;
  spec.simples = {
      {"one", Parity::Even, 1},
      {"h1", Parity::Odd, 2},
      {"lef", Parity::Even, 1},
      {"sym2", Parity::Even, 3},
  };
  spec.unit = "one";
  spec.ensure_unit_rows();
  // h1 (x) h1 = lef + sym2.  The swap acts by +1 on lef (the symmetric part
  // of an odd square has trace 1) and by -1 on sym2.
  FusionEntry h1h1;
  h1h1.summands = {"lef", "sym2"};
  h1h1.symmetry = Mat::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
  spec.fusion[{"h1", "h1"}] = h1h1;
  spec.bimodule[{"one", "h1"}] = BimoduleEntry{1, {"alpha"}};
  spec.bimodule[{"one", "lef"}] = BimoduleEntry{1, {"beta"}};
  spec.duals["one"] = DualEntry{"one", "one", Scalar(1), Scalar(1)};
  spec.duals["h1"] = DualEntry{"h1", "lef", Scalar(1), Scalar(-2)};
  return spec;
}

}  // namespace weightcat

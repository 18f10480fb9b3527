// Unit tests for the numerical functors: the trace on homotopy classes and
// the ideal it carves out, the graded semisimplification functor on objects
// and morphisms (with its truncation-recursion cross-check), exactness across
// cones, the fullness gap, the obstruction analysis on truncation triangles,
// kernel nilpotency, conservativity, idempotent analysis, and tensor
// compatibility.

#include <catch2/catch_amalgamated.hpp>

#include "weightcat/numfun.hpp"

using namespace weightcat;

namespace {

Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar::fraction(p, d); }

const CategorySpec& ell() {
  static CategorySpec spec = builtin_ell();
  return spec;
}

// The unique nil basis morphism one -> h1.
Mor alpha_mor() {
  Mor a = mor_zero(Obj::of("one"), Obj::of("h1"));
  a.set_nil(ell(), "one", "h1", 0, Mat::from_rows({{q(1)}}));
  return a;
}

// C: one in degree 0, h1 in degree 1, differential alpha.
Complex c_complex() {
  Complex c;
  c.comp[0] = Obj::of("one");
  c.comp[1] = Obj::of("h1");
  c.diff[0] = alpha_mor();
  return c;
}

Complex contractible_unit() {
  Complex c;
  c.comp[0] = Obj::of("one");
  c.comp[1] = Obj::of("one");
  c.diff[0] = mor_identity(Obj::of("one"));
  return c;
}

// A non-minimal presentation of C: one^2 -> one (+) h1.
Complex fat_c() {
  Complex x;
  x.comp[0] = Obj::of("one", 2);
  x.comp[1] = Obj::of("one") + Obj::of("h1");
  Mor d = mor_zero(x.comp[0], x.comp[1]);
  d.set_ss("one", Mat::from_rows({{q(1), q(0)}}));
  d.set_nil(ell(), "one", "h1", 0, Mat::from_rows({{q(0), q(1)}}));
  x.diff[0] = d;
  return x;
}

// X: one^2 in degree 0, h1^2 in degree 1, differential alpha (x) E12.
// Minimal; End classes form a five-parameter family.
Complex x_two() {
  Complex x;
  x.comp[0] = Obj::of("one", 2);
  x.comp[1] = Obj::of("h1", 2);
  Mor d = mor_zero(x.comp[0], x.comp[1]);
  d.set_nil(ell(), "one", "h1", 0, Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}}));
  x.diff[0] = d;
  return x;
}

// The E12 endomorphism of x_two in both degrees: a chain map whose class is
// numerical but whose graded image is nonzero.
ChainMap f_two() {
  Complex x = x_two();
  ChainMap f = chain_zero(x, x);
  Mor f0 = mor_zero(x.at(0), x.at(0));
  f0.set_ss("one", Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}}));
  Mor f1 = mor_zero(x.at(1), x.at(1));
  f1.set_ss("h1", Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}}));
  f.set(0, f0);
  f.set(1, f1);
  return f;
}

// X: (one (+) lef) in degrees 0 and 1, differential beta on the diagonal.
Complex x_split() {
  Complex x;
  Obj ol = Obj::of("one") + Obj::of("lef");
  x.comp[0] = ol;
  x.comp[1] = ol;
  Mor d = mor_zero(ol, ol);
  d.set_nil(ell(), "one", "lef", 0, Mat::from_rows({{q(1)}}));
  x.diff[0] = d;
  return x;
}

// The idempotent endomorphism of x_split: projection onto the one-summand in
// degree 0 and onto the lef-summand in degree 1.
ChainMap f_split() {
  Complex x = x_split();
  ChainMap f = chain_zero(x, x);
  Mor f0 = mor_zero(x.at(0), x.at(0));
  f0.set_ss("one", Mat::from_rows({{q(1)}}));
  Mor f1 = mor_zero(x.at(1), x.at(1));
  f1.set_ss("lef", Mat::from_rows({{q(1)}}));
  f.set(0, f0);
  f.set(1, f1);
  return f;
}

// A purely radical chain map between pure complexes: nonzero, dies under the
// graded functor.
ChainMap nil_only_map() {
  Complex u0 = complex_pure(Obj::of("one"), 0);
  Complex h10 = complex_pure(Obj::of("h1"), 0);
  ChainMap t = chain_zero(u0, h10);
  t.set(0, alpha_mor());
  return t;
}

GradedNumObject graded_c() {
  GradedNumObject g;
  g.comp[0] = Obj::of("one");
  g.comp[1] = Obj::of("h1");
  return g;
}

}  // namespace

TEST_CASE("trace on homotopy classes") {
  Complex c = c_complex();
  REQUIRE(kb_trace(ell(), chain_identity(c)) == q(3));

  Complex u0 = complex_pure(Obj::of("one"), 0);
  REQUIRE(kb_trace(ell(), chain_identity(u0)) == q(1));

  SECTION("odd shifts flip the sign") {
    Complex u1 = complex_pure(Obj::of("one"), 1);
    REQUIRE(kb_trace(ell(), chain_identity(u1)) == q(-1));
    REQUIRE(kb_trace(ell(), chain_identity(complex_shift(c, 1))) == q(-3));
    REQUIRE(kb_trace(ell(), chain_identity(complex_shift(c, 2))) == q(3));
  }

  SECTION("non-endomorphisms are rejected") {
    REQUIRE_THROWS_AS(kb_trace(ell(), chain_zero(u0, c)), ShapeError);
  }

  SECTION("invariance under homotopy equivalence and cyclicity") {
    MinimizeResult r = minimize(ell(), fat_c());
    REQUIRE(kb_trace(ell(), chain_identity(fat_c())) == q(3));
    // to_min o from_min = id_C and from_min o to_min ~ id_fat: both composites
    // have the common trace.
    REQUIRE(kb_trace(ell(), chain_compose(r.to_min, r.from_min)) == q(3));
    REQUIRE(kb_trace(ell(), chain_compose(r.from_min, r.to_min)) == q(3));
  }

  SECTION("contractible complexes have trace zero identities") {
    REQUIRE(kb_trace(ell(), chain_identity(contractible_unit())) == q(0));
  }
}

TEST_CASE("class coordinates in a hom space") {
  Complex c = c_complex();
  KbHom h = kb_hom(ell(), c, c);
  REQUIRE(h.dim() == 1);

  Mat ci = kb_class_coords(ell(), h, chain_identity(c));
  REQUIRE(ci.rows() == 1);
  REQUIRE_FALSE(ci.is_zero());

  SECTION("linearity and the zero class") {
    Mat c2 = kb_class_coords(ell(), h, q(2) * chain_identity(c));
    REQUIRE(c2 == q(2) * ci);
    REQUIRE(kb_class_coords(ell(), h, chain_zero(c, c)).is_zero());
  }

  SECTION("representatives rebuild the class") {
    ChainMap back = kb_class_rep(h, ci);
    REQUIRE(chain_maps_homotopic(ell(), back, chain_identity(c)));
  }

  SECTION("boundaries have zero class coordinates") {
    Complex k = contractible_unit();
    KbHom hk = kb_hom(ell(), k, k);
    REQUIRE(hk.dim() == 0);
    // The identity of a contractible complex is a boundary; its coordinate
    // vector in the (empty) class basis must still be computable.
    Mat z = kb_class_coords(ell(), hk, chain_identity(k));
    REQUIRE(z.rows() == 0);
  }

  SECTION("mismatched endpoints are rejected") {
    Complex u0 = complex_pure(Obj::of("one"), 0);
    REQUIRE_THROWS_AS(kb_class_coords(ell(), h, chain_identity(u0)), ShapeError);
  }
}

TEST_CASE("numerical ideal of homotopy classes") {
  SECTION("nondegenerate endomorphism algebras have no numerical part") {
    QuotientHom qc = kb_numerical_ideal(ell(), c_complex(), c_complex());
    REQUIRE(qc.hom.dim() == 1);
    REQUIRE(qc.n_coords.empty());
    REQUIRE(qc.quotient_dim() == 1);
    REQUIRE(qc.coset_reps.size() == 1);
    REQUIRE_FALSE(kb_numerical_contains(ell(), qc, chain_identity(c_complex())));
    REQUIRE(kb_numerical_contains(ell(), qc, chain_zero(c_complex(), c_complex())));

    Complex u0 = complex_pure(Obj::of("one"), 0);
    QuotientHom qu = kb_numerical_ideal(ell(), u0, u0);
    REQUIRE(qu.n_coords.empty());
    REQUIRE_FALSE(kb_numerical_contains(ell(), qu, chain_identity(u0)));
  }

  SECTION("the two-parameter trace radical of the doubled complex") {
    Complex x = x_two();
    REQUIRE_NOTHROW(validate_complex(x));
    ChainMap f = f_two();
    REQUIRE_NOTHROW(validate_chain_map(f));

    QuotientHom qx = kb_numerical_ideal(ell(), x, x);
    // Chain endomorphisms: upper-triangular pairs (A, B) with equal
    // diagonal corner, five parameters, no boundaries.
    REQUIRE(qx.hom.dim() == 5);
    REQUIRE(qx.hom.boundary_dim == 0);
    // Trace pairing a*a' + 3 d*d' + 2 e*e' on the diagonal parameters: the
    // radical is the two off-diagonal directions.
    REQUIRE(qx.n_coords.size() == 2);
    REQUIRE(qx.quotient_dim() == 3);
    REQUIRE(kb_numerical_contains(ell(), qx, f));
    REQUIRE_FALSE(kb_numerical_contains(ell(), qx, chain_identity(x)));
    // ... and the numerical part is not killed by the graded functor.
    REQUIRE_FALSE(pi_mor(ell(), f).is_zero());
  }

  SECTION("the projection class of the split complex is numerical") {
    QuotientHom qs = kb_numerical_ideal(ell(), x_split(), x_split());
    REQUIRE(qs.hom.dim() == 3);
    REQUIRE(qs.n_coords.size() == 1);
    REQUIRE(kb_numerical_contains(ell(), qs, f_split()));
    REQUIRE_FALSE(kb_numerical_contains(ell(), qs, chain_identity(x_split())));
  }
}

TEST_CASE("graded objects and the functor on objects") {
  REQUIRE(pi_obj(ell(), c_complex()) == graded_c());
  REQUIRE(pi_obj(ell(), fat_c()) == graded_c());
  REQUIRE(pi_obj(ell(), contractible_unit()).is_zero());
  REQUIRE(pi_obj(ell(), make_cone(chain_identity(c_complex())).cone).is_zero());

  SECTION("shifts renumber the grading") {
    GradedNumObject s = pi_obj(ell(), complex_shift(c_complex(), 2));
    REQUIRE(s == graded_shift(graded_c(), 2));
    REQUIRE(s.at(-2) == Obj::of("one"));
    REQUIRE(s.at(-1) == Obj::of("h1"));
    REQUIRE(s.at(0).is_zero());
  }

  SECTION("sums accumulate multiplicities") {
    GradedNumObject two = graded_sum(graded_c(), graded_c());
    REQUIRE(two.at(0) == Obj::of("one", 2));
    REQUIRE(two.at(1) == Obj::of("h1", 2));
    REQUIRE(graded_sum(GradedNumObject{}, graded_c()) == graded_c());
  }

  SECTION("string rendering") {
    REQUIRE(GradedNumObject{}.str() == "0");
    REQUIRE(graded_c().str() == "0: one; 1: h1");
  }
}

TEST_CASE("graded morphism arithmetic") {
  GradedNumObject g = graded_c();
  GradedNumMor id = graded_num_identity(g);
  REQUIRE(graded_num_compose(id, id) == id);
  REQUIRE(graded_num_invertible(id));
  REQUIRE(graded_num_zero(g, g).is_zero());
  REQUIRE_FALSE(graded_num_invertible(graded_num_zero(g, g)));

  SECTION("setting a component drops its radical part") {
    GradedNumMor m = graded_num_zero(g, g);
    Mor a = mor_identity(Obj::of("one"));
    m.set(0, a);
    REQUIRE(m.at(0) == a);
    GradedNumMor n = graded_num_zero(g, g);
    // A morphism with only radical content disappears.
    GradedNumObject src, tgt;
    src.comp[0] = Obj::of("one");
    tgt.comp[0] = Obj::of("h1");
    GradedNumMor r = graded_num_zero(src, tgt);
    r.set(0, alpha_mor());
    REQUIRE(r.is_zero());
    (void)n;
  }

  SECTION("coordinates round-trip through a layout") {
    detail::GradedHomLayout L = detail::graded_hom_layout(ell(), g, g);
    REQUIRE(L.dim == 2);
    Mat v = detail::graded_num_coords(L, id);
    REQUIRE(v == Mat::from_rows({{q(1)}, {q(1)}}));
    REQUIRE(detail::graded_num_from_coords(L, g, g, v) == id);
  }

  SECTION("composition requires matching endpoints") {
    GradedNumObject h;
    h.comp[0] = Obj::of("one");
    REQUIRE_THROWS_AS(graded_num_compose(graded_num_identity(h), id), ShapeError);
  }
}

TEST_CASE("the graded functor on morphisms") {
  Complex c = c_complex();
  REQUIRE(pi_mor(ell(), chain_identity(c)) == graded_num_identity(graded_c()));

  SECTION("functoriality through a homotopy equivalence") {
    MinimizeResult r = minimize(ell(), fat_c());
    GradedNumMor pf = pi_mor(ell(), r.to_min);
    GradedNumMor pg = pi_mor(ell(), r.from_min);
    REQUIRE(graded_num_compose(pf, pg) == graded_num_identity(graded_c()));
    REQUIRE(graded_num_compose(pg, pf) == graded_num_identity(pi_obj(ell(), fat_c())));
    REQUIRE(graded_num_invertible(pf));
  }

  SECTION("radical morphisms die") {
    ChainMap t = nil_only_map();
    REQUIRE_FALSE(t.is_zero());
    REQUIRE(pi_mor(ell(), t).is_zero());
    REQUIRE(pi_mor_via_truncation(ell(), t).is_zero());
  }

  SECTION("the doubled-complex endomorphism survives") {
    GradedNumMor p = pi_mor(ell(), f_two());
    REQUIRE_FALSE(p.is_zero());
    REQUIRE(p.at(0).ss_block("one") == Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}}));
    REQUIRE(p.at(1).ss_block("h1") == Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}}));
    REQUIRE_FALSE(graded_num_invertible(p));
  }

  SECTION("agreement with the truncation recursion") {
    MinimizeResult r = minimize(ell(), fat_c());
    std::vector<ChainMap> samples = {
        chain_identity(c),          r.to_min,     r.from_min,
        f_two(),                    f_split(),    nil_only_map(),
        chain_zero(c, c),           q(3) * chain_identity(c),
        chain_identity(complex_shift(c, 1)),
    };
    for (const ChainMap& f : samples) {
      INFO(f.src.str() + " -> " + f.tgt.str());
      REQUIRE(pi_mor(ell(), f) == pi_mor_via_truncation(ell(), f));
    }
    SplitMix64 rng(5);
    std::vector<Complex> objs = {c, fat_c(), x_two(), x_split(),
                                 complex_pure(Obj::of("h1"), 1)};
    for (const Complex& x : objs)
      for (const Complex& y : objs) {
        ChainMap f = detail::seeded_chain_map(ell(), x, y, rng);
        REQUIRE(pi_mor(ell(), f) == pi_mor_via_truncation(ell(), f));
      }
  }

  SECTION("degree-mismatched maps have zero graded image") {
    Complex u0 = complex_pure(Obj::of("one"), 0);
    REQUIRE_FALSE(graded_num_invertible(pi_mor(ell(), chain_zero(c, u0))));
  }
}

TEST_CASE("exactness across cones") {
  SECTION("the cone over the radical generator") {
    Complex a = complex_pure(Obj::of("one"), 1);
    Complex b = complex_pure(Obj::of("h1"), 1);
    ChainMap f = chain_zero(a, b);
    f.set(1, alpha_mor());
    REQUIRE(make_cone(f).cone == c_complex());
    LesReport rep = verify_les(ell(), f);
    REQUIRE(rep.ok);
    REQUIRE(rep.nodes_checked > 0);
    REQUIRE(rep.failures.empty());
  }

  SECTION("identity and zero maps") {
    Complex c = c_complex();
    REQUIRE(verify_les(ell(), chain_identity(c)).ok);
    REQUIRE(verify_les(ell(), chain_zero(c, c)).ok);
    REQUIRE(verify_les(ell(), chain_zero(c, x_two())).ok);
  }

  SECTION("the fixture endomorphisms") {
    REQUIRE(verify_les(ell(), f_two()).ok);
    REQUIRE(verify_les(ell(), f_split()).ok);
    REQUIRE(verify_les(ell(), nil_only_map()).ok);
  }

  SECTION("transports of a minimization") {
    MinimizeResult r = minimize(ell(), fat_c());
    REQUIRE(verify_les(ell(), r.to_min).ok);
    REQUIRE(verify_les(ell(), r.from_min).ok);
  }

  SECTION("seeded battery") {
    SplitMix64 rng(13);
    std::vector<Complex> objs = {c_complex(),
                                 fat_c(),
                                 x_two(),
                                 x_split(),
                                 contractible_unit(),
                                 complex_pure(Obj::of("one"), 0),
                                 complex_shift(c_complex(), -1)};
    for (const Complex& x : objs)
      for (const Complex& y : objs) {
        ChainMap f = detail::seeded_chain_map(ell(), x, y, rng);
        LesReport rep = verify_les(ell(), f);
        INFO(x.str() + " -> " + y.str());
        REQUIRE(rep.ok);
      }
  }
}

TEST_CASE("fullness gap") {
  Complex u0 = complex_pure(Obj::of("one"), 0);
  Complex c = c_complex();

  SECTION("pure endomorphisms are full") {
    FullnessReport r = fullness_gap(ell(), u0, u0);
    REQUIRE(r.full());
    REQUIRE(r.image_dim == 1);
    REQUIRE(r.target_dim == 1);
    REQUIRE_FALSE(r.witness.has_value());
  }

  SECTION("no class maps the unit into the cone, but a graded map exists") {
    REQUIRE(kb_hom_dim(ell(), u0, c) == 0);
    FullnessReport r = fullness_gap(ell(), u0, c);
    REQUIRE(r.image_dim == 0);
    REQUIRE(r.target_dim == 1);
    REQUIRE_FALSE(r.full());
    REQUIRE(r.witness.has_value());
    REQUIRE_FALSE(r.witness->is_zero());
    REQUIRE(r.witness->at(0).ss_block("one") == Mat::from_rows({{q(1)}}));
  }

  SECTION("cone endomorphisms hit only the diagonal") {
    FullnessReport r = fullness_gap(ell(), c, c);
    REQUIRE(r.image_dim == 1);
    REQUIRE(r.target_dim == 2);
    REQUIRE(r.witness.has_value());
  }

  SECTION("the doubled complex misses the three constrained directions") {
    FullnessReport r = fullness_gap(ell(), x_two(), x_two());
    REQUIRE(r.image_dim == 5);
    REQUIRE(r.target_dim == 8);
  }

  SECTION("contractible targets are vacuously full") {
    FullnessReport r = fullness_gap(ell(), contractible_unit(), contractible_unit());
    REQUIRE(r.full());
    REQUIRE(r.target_dim == 0);
  }
}

TEST_CASE("obstruction analysis on the truncation triangle") {
  SECTION("the numerical endomorphism of the doubled complex is obstructed") {
    ObstructionReport rep = triangulated_obstruction(ell(), f_two());
    REQUIRE(rep.b == -1);
    REQUIRE(rep.family_exists);
    REQUIRE(rep.family_dim == 0);
    REQUIRE_FALSE(rep.low_meets_numerical);
    REQUIRE_FALSE(rep.high_meets_numerical);
    REQUIRE(rep.obstructed);
  }

  SECTION("the zero class extends numerically") {
    Complex c = c_complex();
    ObstructionReport rep = triangulated_obstruction(ell(), chain_zero(c, c));
    REQUIRE(rep.family_exists);
    REQUIRE(rep.low_meets_numerical);
    REQUIRE_FALSE(rep.obstructed);
  }

  SECTION("pure complexes are never obstructed") {
    Complex u0 = complex_pure(Obj::of("one"), 0);
    ObstructionReport rep = triangulated_obstruction(ell(), chain_zero(u0, u0));
    REQUIRE(rep.family_exists);
    REQUIRE(rep.low_meets_numerical);
    REQUIRE_FALSE(rep.obstructed);
  }

  SECTION("non-numerical classes are rejected") {
    REQUIRE_THROWS_AS(triangulated_obstruction(ell(), chain_identity(c_complex())),
                      FNotNumerical);
    Complex u0 = complex_pure(Obj::of("one"), 0);
    REQUIRE_THROWS_AS(triangulated_obstruction(ell(), chain_zero(u0, c_complex())),
                      ShapeError);
  }

  SECTION("the split projection is obstructed with a two-parameter family") {
    // Boundaries on either side of the truncation are purely radical, so the
    // semisimple corners of any extension are forced: the identity on lef
    // below, the identity on one above.  Both have nondegenerate trace
    // pairings, so the family (free only in the two radical directions)
    // never meets the numerical ideal.
    ObstructionReport rep = triangulated_obstruction(ell(), f_split());
    REQUIRE(rep.family_exists);
    REQUIRE(rep.family_dim == 2);
    REQUIRE_FALSE(rep.low_meets_numerical);
    REQUIRE_FALSE(rep.high_meets_numerical);
    REQUIRE(rep.obstructed);
  }
}

TEST_CASE("nilpotency of the graded-functor kernel") {
  SECTION("pure complexes stop at the ambient square-zero order") {
    KerNilpotencyReport rep = ker_pi_nilpotency(ell(), complex_pure(Obj::of("one"), 0));
    REQUIRE(rep.n_x == 2);
    REQUIRE(rep.kernel_dim == 0);
    REQUIRE(rep.verified);
    REQUIRE(rep.bound == 8);
  }

  SECTION("a two-step complex doubles the pure bound") {
    KerNilpotencyReport rep = ker_pi_nilpotency(ell(), c_complex());
    REQUIRE(rep.n_x == 4);
    REQUIRE(rep.kernel_dim == 0);
    REQUIRE(rep.verified);
  }

  SECTION("the zero complex is immediately nilpotent") {
    KerNilpotencyReport rep =
        ker_pi_nilpotency(ell(), make_cone(chain_identity(c_complex())).cone);
    REQUIRE(rep.n_x == 1);
    REQUIRE(rep.verified);
  }

  SECTION("a genuinely nonzero kernel is still nilpotent") {
    Complex y = complex_pure(Obj::of("one") + Obj::of("h1"), 0);
    KerNilpotencyReport rep = ker_pi_nilpotency(ell(), y);
    REQUIRE(rep.n_x == 2);
    REQUIRE(rep.kernel_dim == 1);
    REQUIRE(rep.verified);
  }

  SECTION("the fixtures") {
    REQUIRE(ker_pi_nilpotency(ell(), x_two()).n_x == 4);
    REQUIRE(ker_pi_nilpotency(ell(), x_two()).verified);
    KerNilpotencyReport rep = ker_pi_nilpotency(ell(), x_split());
    REQUIRE(rep.n_x == 4);
    REQUIRE(rep.verified);
  }
}

TEST_CASE("conservativity comparison") {
  Complex c = c_complex();

  SECTION("identities are invertible everywhere") {
    ConservativityReport rep = conservativity_check(ell(), chain_identity(c));
    REQUIRE(rep.invertible_homotopy);
    REQUIRE(rep.invertible_graded);
    REQUIRE(rep.invertible_mod_numerical);
  }

  SECTION("homotopy equivalences are invertible everywhere") {
    MinimizeResult r = minimize(ell(), fat_c());
    ConservativityReport rep = conservativity_check(ell(), r.to_min);
    REQUIRE(rep.invertible_homotopy);
    REQUIRE(rep.invertible_graded);
    REQUIRE(rep.invertible_mod_numerical);
  }

  SECTION("a map invertible only modulo the numerical ideal") {
    ChainMap h = f_split() + q(-1) * chain_identity(x_split());
    ConservativityReport rep = conservativity_check(ell(), h);
    REQUIRE_FALSE(rep.invertible_homotopy);
    REQUIRE_FALSE(rep.invertible_graded);
    REQUIRE(rep.invertible_mod_numerical);
  }

  SECTION("the numerical nilpotent is invertible nowhere") {
    ConservativityReport rep = conservativity_check(ell(), f_two());
    REQUIRE_FALSE(rep.invertible_homotopy);
    REQUIRE_FALSE(rep.invertible_graded);
    REQUIRE_FALSE(rep.invertible_mod_numerical);
  }

  SECTION("graded invertibility forces homotopy invertibility") {
    // id + nilpotent: unipotent image under the graded functor.
    ChainMap u = chain_identity(x_two()) + f_two();
    ConservativityReport rep = conservativity_check(ell(), u);
    REQUIRE(rep.invertible_graded);
    REQUIRE(rep.invertible_homotopy);
    REQUIRE(rep.invertible_mod_numerical);
  }
}

TEST_CASE("idempotent endomorphism analysis") {
  SECTION("the split projection: idempotent, nonzero, numerical") {
    IdempotentEndoReport rep = idempotent_endo_check(ell(), f_split());
    REQUIRE(rep.powers_return);
    REQUIRE(rep.nonzero);
    REQUIRE(rep.numerical);
    REQUIRE_FALSE(rep.degenerate_zero);
    REQUIRE(rep.bound == 8);
  }

  SECTION("the zero class is the degenerate case") {
    Complex c = c_complex();
    IdempotentEndoReport rep = idempotent_endo_check(ell(), chain_zero(c, c));
    REQUIRE(rep.powers_return);
    REQUIRE_FALSE(rep.nonzero);
    REQUIRE(rep.degenerate_zero);
    REQUIRE(rep.numerical);
  }

  SECTION("identities are idempotent but not numerical") {
    Complex u0 = complex_pure(Obj::of("one"), 0);
    IdempotentEndoReport rep = idempotent_endo_check(ell(), chain_identity(u0));
    REQUIRE(rep.powers_return);
    REQUIRE(rep.nonzero);
    REQUIRE_FALSE(rep.numerical);
  }

  SECTION("square-zero maps are not idempotent") {
    IdempotentEndoReport rep = idempotent_endo_check(ell(), f_two());
    REQUIRE_FALSE(rep.powers_return);
    REQUIRE(rep.nonzero);
    REQUIRE(rep.numerical);
  }

  SECTION("non-endomorphisms are rejected") {
    Complex u0 = complex_pure(Obj::of("one"), 0);
    REQUIRE_THROWS_AS(idempotent_endo_check(ell(), chain_zero(u0, c_complex())),
                      ShapeError);
  }
}

TEST_CASE("tensor compatibility of the graded functor") {
  Complex c = c_complex();
  Complex u0 = complex_pure(Obj::of("one"), 0);

  SECTION("the cone squared") {
    PiTensorReport rep = pi_tensor_check(ell(), chain_identity(c), chain_identity(c));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("unit factors reduce to the identity") {
    PiTensorReport rep = pi_tensor_check(ell(), chain_identity(u0), chain_identity(c));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("a nontrivial endomorphism against the unit") {
    PiTensorReport rep = pi_tensor_check(ell(), f_two(), chain_identity(u0));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("odd against odd exercises the sign rule") {
    Complex h11 = complex_pure(Obj::of("h1"), 1);
    PiTensorReport rep =
        pi_tensor_check(ell(), chain_identity(h11), chain_identity(h11));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("the split complex against the unit") {
    PiTensorReport rep = pi_tensor_check(ell(), f_split(), chain_identity(u0));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("radical maps tensor to radical maps") {
    PiTensorReport rep = pi_tensor_check(ell(), nil_only_map(), chain_identity(c));
    REQUIRE(rep.objects_match);
    REQUIRE(rep.morphisms_match);
    REQUIRE(rep.symmetry_match);
  }

  SECTION("missing fusion rows surface as errors") {
    Complex l0 = complex_pure(Obj::of("lef"), 0);
    REQUIRE_THROWS_AS(
        pi_tensor_check(ell(), chain_identity(l0), chain_identity(l0)),
        FusionIncomplete);
  }
}

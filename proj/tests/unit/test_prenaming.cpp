#include <gtest/gtest.h>

#include <algorithm>

#include "testkit.hpp"

using namespace renlib;
using namespace renlib::testkit;

namespace {

std::vector<Var> vs(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

Cycle cyc(std::initializer_list<const char*> names) { return vs(names); }

}  // namespace

TEST(MakePrenaming, Validation) {
  const Prenaming a = mp("(z/y, u/z, x/x)");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(std::vector<Var>(a.core().begin(), a.core().end()), vs({"z", "u", "x"}));
  EXPECT_EQ(a(mv("z")), mv("y"));
  EXPECT_EQ(a(mv("w")), mv("w"));

  EXPECT_THROW(mp("(x/a)"), NotVariablePure);
  try {
    mp("(x/z, y/z)");
    FAIL();
  } catch (const NotInjective& e) {
    EXPECT_EQ(e.first(), mv("x"));
    EXPECT_EQ(e.second(), mv("y"));
  }
  // a passive pair blocks its variable as an image
  EXPECT_THROW(mp("(x/x, y/x)"), NotInjective);
}

TEST(IsRenaming, Examples) {
  EXPECT_TRUE(is_renaming(mp("(x/y, y/x)")));
  EXPECT_FALSE(is_renaming(mp("(z/y, u/z)")));
  EXPECT_TRUE(is_renaming(mp("(x/y, y/z, z/x)")));
  EXPECT_TRUE(is_renaming(epsoid(vs({"x", "y"}))));
  EXPECT_TRUE(is_renaming(Prenaming{}));
}

TEST(IsRenaming, AgreesWithCycleOracle) {
  Gen g(31);
  const auto u = Gen::universe(5);
  for (int i = 0; i < 500; ++i) {
    const Prenaming a = g.prenaming(u);
    // every core variable walks back to itself within |core| steps
    bool closed = true;
    for (const auto& x : a.core()) {
      Var cur = a(x);
      std::size_t k = 1;
      while (!(cur == x) && k <= a.size()) {
        cur = a(cur);
        ++k;
      }
      closed = closed && cur == x;
    }
    EXPECT_EQ(is_renaming(a), closed) << to_string(a);
  }
}

TEST(Cycles, Examples) {
  const auto cs = cycle_decomposition(closure(mp("(z/y, u/z, y/x, w1/w2)")));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(same_cycle(cs[0], cyc({"x", "u", "z", "y"})));
  EXPECT_TRUE(same_cycle(cs[1], cyc({"w1", "w2"})));
  EXPECT_EQ(to_string(cs), "{(z,y,x,u), (w1,w2)}");

  EXPECT_TRUE(cycle_decomposition(Prenaming{}).empty());
  const auto sw = cycle_decomposition(mp("(x/y, y/x)"));
  ASSERT_EQ(sw.size(), 1u);
  EXPECT_TRUE(same_cycle(sw[0], cyc({"x", "y"})));
  EXPECT_THROW(cycle_decomposition(mp("(z/y, u/z)")), NotARenaming);
  // passive pairs are fixpoints, not cycles
  EXPECT_TRUE(cycle_decomposition(epsoid(vs({"x"}))).empty());
}

TEST(Cycles, SameCycleIsRotation) {
  EXPECT_TRUE(same_cycle(cyc({"a1", "a2", "a3"}), cyc({"a3", "a1", "a2"})));
  EXPECT_FALSE(same_cycle(cyc({"a1", "a2", "a3"}), cyc({"a1", "a3", "a2"})));
  EXPECT_FALSE(same_cycle(cyc({"a1"}), cyc({"a1", "a2"})));
}

TEST(Closure, Fixtures) {
  EXPECT_EQ(closure(mp("(z/y, u/z, y/x, w1/w2)")), mp("(z/y, u/z, y/x, w1/w2, x/u, w2/w1)"));
  EXPECT_EQ(closure(mp("(z/y, u/z)")), mp("(z/y, u/z, y/u)"));
  EXPECT_EQ(closure(mp("(z/y, u/z, y/x)")), mp("(z/y, u/z, y/x, x/u)"));
  const Prenaming rho = mp("(x/y, y/z, z/x)");
  EXPECT_EQ(closure(rho), rho);
  EXPECT_EQ(closure(mp("(x/y, y/x, z/z)")), mp("(x/y, y/x)"));
  EXPECT_EQ(closure(epsoid(vs({"x"}))), Prenaming{});
}

TEST(Closure, NotMonotone) {
  const Prenaming big = mp("(z/y, u/z, y/x)");
  const Prenaming small = mp("(z/y, u/z)");
  // small is contained in big, yet closure(small) is not contained in closure(big)
  const Prenaming cs = closure(small), cb = closure(big);
  EXPECT_EQ(cs, mp("(z/y, u/z, y/u)"));
  EXPECT_NE(cs(mv("y")), cb(mv("y")));
}

TEST(Closure, NotCompositional) {
  const Prenaming a = mp("(z/y, u/z, y/x)");
  const Prenaming rho = mp("(x/y, y/x)");
  const Subst lhs = compose(rho.subst(), closure(a).subst());
  EXPECT_EQ(lhs, ms("(z/x, u/z, x/u)"));
  const Subst ra = compose(rho.subst(), a.subst());
  EXPECT_EQ(ra, ms("(z/x, u/z, x/y)"));
  const Prenaming rhs = closure(make_prenaming(ra));
  EXPECT_EQ(rhs, mp("(z/x, u/z, x/y, y/u)"));
  EXPECT_FALSE(pointwise_equal(lhs, rhs.subst()));
}

TEST(Closure, RelevantEmbeddingNotUnique) {
  const Prenaming a = mp("(z/y, u/z, y/x, w1/w2)");
  const auto v = relaxed_vars(a.subst());
  ASSERT_EQ(v.size(), 6u);

  // every permutation of v+(a) that agrees with a on its core
  std::vector<Var> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Var> perm = sorted;
  std::vector<Prenaming> embeddings;
  do {
    std::vector<Binding> bs;
    for (std::size_t i = 0; i < sorted.size(); ++i) bs.push_back({sorted[i], Term::variable(perm[i])});
    const Subst s(bs);
    bool agrees = true;
    for (const auto& x : a.core()) agrees = agrees && image_of(s, x) == Term::variable(a(x));
    if (agrees) embeddings.push_back(make_prenaming(unrelax(s)));
  } while (std::next_permutation(perm.begin(), perm.end()));

  EXPECT_EQ(embeddings.size(), 2u);
  const Prenaming paper_rho = mp("(z/y, u/z, y/x, w1/w2, x/w1, w2/u)");
  auto has = [&](const Prenaming& p) {
    return std::any_of(embeddings.begin(), embeddings.end(),
                       [&](const Prenaming& e) { return pointwise_equal(e.subst(), p.subst()); });
  };
  EXPECT_TRUE(has(closure(a)));
  EXPECT_TRUE(has(paper_rho));
  EXPECT_FALSE(pointwise_equal(closure(a).subst(), paper_rho.subst()));

  const auto rc = cycle_decomposition(paper_rho);
  ASSERT_EQ(rc.size(), 1u);
  EXPECT_TRUE(same_cycle(rc[0], cyc({"x", "w1", "w2", "u", "z", "y"})));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(mp("(z/y, u/z)")), mp("(y/z, z/u)"));
  const Prenaming e = epsoid(vs({"x", "y"}));
  EXPECT_EQ(inverse(e), e);
  const Prenaming sw = inverse(mp("(x/y, y/x)"));
  EXPECT_EQ(sw, mp("(y/x, x/y)"));
  EXPECT_TRUE(pointwise_equal(sw.subst(), ms("(x/y, y/x)")));
}

TEST(Noninj, Examples) {
  EXPECT_EQ(noninj(mp("(z/y, u/z)")), vs({"y"}));
  EXPECT_EQ(noninj(mp("(y/x)")), vs({"x"}));
  EXPECT_TRUE(noninj(mp("(x/y, y/z, z/x)")).empty());
  EXPECT_TRUE(in_indom(mp("(y/x)"), mv("y")));
  EXPECT_FALSE(in_indom(mp("(y/x)"), mv("x")));
  EXPECT_TRUE(in_indom(mp("(y/x)"), mv("q1")));
}

TEST(Safety, Examples) {
  EXPECT_TRUE(is_safe_for(mp("(v/w)"), mt("p(x)")));
  const Prenaming ab = extend(mp("(v/w)"), mp("(z/y, u/z, y/x)"));
  EXPECT_FALSE(is_safe_for(ab, mt("p(x)")));
  EXPECT_FALSE(is_safe_for(mp("(y/x)"), mt("p(x,f(y))")));
  const Term t = mt("p(z,u,x)");
  EXPECT_TRUE(is_safe_for(mp("(z/y, u/z, x/x)"), t));
}

TEST(Extend, Examples) {
  const ParseOptions o{VarStyle::Math, false, "<t>"};
  const Prenaming a = make_prenaming(parse_subst("(A/B)", o));
  const Prenaming l = make_prenaming(parse_subst("(u/v, C/D)", o));
  EXPECT_EQ(extend(a, l), make_prenaming(parse_subst("(A/B, u/v, C/D)", o)));

  const Prenaming fig = make_prenaming(parse_subst("(X/A, B/X)", o));
  try {
    extend(fig, make_prenaming(parse_subst("(S/S, B/C)", o)));
    FAIL();
  } catch (const OverlappingCores& e) {
    EXPECT_EQ(e.witness(), Var("B"));
  }
  try {
    extend(mp("(x/y)"), mp("(z/y)"));
    FAIL();
  } catch (const OverlappingRanges& e) {
    EXPECT_EQ(e.witness(), mv("y"));
  }
  EXPECT_NO_THROW(extend(mp("(x/y)"), epsoid(vs({"q1", "q2"}))));
}

TEST(Pren, Examples) {
  EXPECT_EQ(pren(mt("p(z,u,x)"), mt("p(y,z,x)")), mp("(z/y, u/z, x/x)"));
  EXPECT_EQ(pren(mt("f(x,g(y,x))"), mt("f(x,g(y,x))")), epsoid(vs({"x", "y"})));
  EXPECT_EQ(pren(mt("a"), mt("a")), Prenaming{});

  try {
    pren(mt("p(z,u,x)"), mt("p(y,y,x)"));
    FAIL();
  } catch (const PrenFailure& e) {
    EXPECT_EQ(e.kind(), PrenFailureKind::Alias);
    EXPECT_EQ(std::string(e.what()), "failure: alias (u=y conflicts z/y)");
    ASSERT_TRUE(e.conflict());
    EXPECT_EQ(e.conflict()->var, mv("z"));
  }
  try {
    pren(mt("x"), mt("f(y)"));
    FAIL();
  } catch (const PrenFailure& e) {
    EXPECT_EQ(e.kind(), PrenFailureKind::Instance);
  }
  try {
    pren(mt("f(x)"), mt("g(x)"));
    FAIL();
  } catch (const PrenFailure& e) {
    EXPECT_EQ(e.kind(), PrenFailureKind::Clash);
  }
  // the reverse alias: two images for one variable
  try {
    pren(mt("p(x,x)"), mt("p(y,z)"));
    FAIL();
  } catch (const PrenFailure& e) {
    EXPECT_EQ(e.kind(), PrenFailureKind::Alias);
  }
  EXPECT_THROW(pren(mt("f(a)"), mt("f(x)")), PrenFailure);
}

TEST(ApplyPren, Examples) {
  EXPECT_EQ(apply_pren(mp("(z/y, u/z, x/x)"), mt("p(z,u,x)")), mt("p(y,z,x)"));
  const Term t = mt("f(x,g(y))");
  EXPECT_EQ(apply_pren(epsoid(vs({"x", "y"})), t), t);
  try {
    apply_pren(mp("(y/x)"), mt("p(x,f(y))"));
    FAIL();
  } catch (const UnsafePrenaming& e) {
    EXPECT_EQ(e.witness(), mv("x"));
  }
}

TEST(SubstVariant, Examples) {
  const ParseOptions o{VarStyle::Math, false, "<t>"};
  const Prenaming b = make_prenaming(parse_subst("(A/B, u/v, C/D)", o));
  EXPECT_EQ(subst_variant(b, parse_subst("(u/A)", o)), parse_subst("(v/B)", o));
  EXPECT_EQ(subst_variant(Prenaming{}, ms("(x/f(y))")), ms("(x/f(y))"));
  EXPECT_THROW(subst_variant(mp("(y/x)"), ms("(x/a, y/b)")), UnsafePrenaming);
  // ordering follows the substitution
  EXPECT_EQ(subst_variant(mp("(x/u, y/v)"), ms("(y/a, x/b)")), ms("(v/a, u/b)"));
}

TEST(Property, ClosureEmbedding) {
  const Tally t = prop_closure_embedding(32, 1000);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.nontrivial, 300u);
}

TEST(Property, ClosureInverse) {
  const Tally t = prop_closure_inverse(33, 1000);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(Property, CyclesLemma) {
  const Tally t = prop_cycles_lemma(34, 1000);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.nontrivial, 100u);
  EXPECT_LT(t.nontrivial, 900u);
}

TEST(Property, PrenRoundtrip) {
  const Tally t = prop_pren_roundtrip(35, 1000);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.nontrivial, 200u);
}

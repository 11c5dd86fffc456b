#include <doctest.h>

#include <set>

#include "fsa/catalog.hpp"
#include "fsa/oracle.hpp"
#include "support.hpp"
#include "table.hpp"

using namespace fsa;
using fsa::test::gf;
using fsa::test::all_rows;
using fsa::test::dv;
using fsa::test::q;
using fsa::test::table_dims;

TEST_CASE("dimension vectors match the table for parameters up to 5") {
  const Field f = q();
  for (const auto& x : all_rows(5, f)) {
    CAPTURE(x.to_string());
    const LambdaModule m = build(x, f);
    CHECK(m.dim_vector() == table_dims(x));
    CHECK(declared_dim_vector(x) == table_dims(x));
  }
}

TEST_CASE("small representatives") {
  const Field f = q();
  const LambdaModule p00 = build(IndecDescriptor::postprojective(0, 0), f);
  CHECK(p00.dim_vector() == dv(1, 0, 0, 0, 0));
  for (int i = 1; i <= 4; ++i) CHECK(p00.map(i).rows() == 1);

  CHECK(build(IndecDescriptor::preinjective(0, 0), f) ==
        LambdaModule(ExactMatrix(f, {{1}}), ExactMatrix(f, {{1}}), ExactMatrix(f, {{1}}), ExactMatrix(f, {{1}})));

  const FieldElement lambda = FieldElement::parse(f, "7/2");
  const LambdaModule r = build(IndecDescriptor::homogeneous(1, lambda), f);
  CHECK(r.a() == ExactMatrix(f, {{1}, {0}}));
  CHECK(r.b() == ExactMatrix(f, {{0}, {1}}));
  CHECK(r.c() == ExactMatrix(f, {{1}, {1}}));
  CHECK(r.d().at(0, 0) == lambda);
  CHECK(r.d().at(1, 0).is_one());

  CHECK(build(IndecDescriptor::exceptional(0, 1, TubePoint::Zero), f).dim_vector() == dv(1, 0, 1, 0, 1));
}

TEST_CASE("representatives over a prime field match the rational ones") {
  for (const auto& x : all_rows(3, gf(7))) {
    if (x.family() == Family::RegularHomogeneous) continue;
    const LambdaModule a = build(x, q());
    const LambdaModule b = build(x, gf(7));
    CHECK(a.dim_vector() == b.dim_vector());
    for (int i = 1; i <= 4; ++i) CHECK(rank(a.map(i)) == rank(b.map(i)));
  }
}

TEST_CASE("descriptor validation") {
  const Field f = q();
  CHECK_THROWS_AS(IndecDescriptor::postprojective(0, 5), Error);
  CHECK_THROWS_AS(IndecDescriptor::preinjective(0, -1), Error);
  CHECK_THROWS_AS(IndecDescriptor::homogeneous(0, FieldElement(f, 2)), Error);
  CHECK_THROWS_AS(IndecDescriptor::exceptional(2, 1, TubePoint::Zero), Error);
  CHECK_THROWS_AS(IndecDescriptor::exceptional(0, 0, TubePoint::Zero), Error);
  try {
    (void)IndecDescriptor::homogeneous(2, FieldElement(f, 0));
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParams);
    CHECK(std::string(e.what()).find("R(0,4,0)") != std::string::npos);
  }
  try {
    (void)IndecDescriptor::homogeneous(3, FieldElement(gf(5), 6));
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("R(1,6,1)") != std::string::npos);
  }
}

TEST_CASE("descriptor parsing") {
  const Field f = q();
  CHECK(parse_descriptor("P(3,1)", f) == IndecDescriptor::postprojective(3, 1));
  CHECK(parse_descriptor(" I ( 4 , 0 ) ", f) == IndecDescriptor::preinjective(4, 0));
  CHECK(parse_descriptor("R(2,5)", f) == IndecDescriptor::homogeneous(2, FieldElement(f, 5)));
  CHECK(parse_descriptor("R(1,-1/2)", f) == IndecDescriptor::homogeneous(1, FieldElement::parse(f, "-1/2")));
  CHECK(parse_descriptor("R(0,3,inf)", f) == IndecDescriptor::exceptional(0, 3, TubePoint::Infinity));
  CHECK(parse_descriptor("R(1,4,oo)", f) == IndecDescriptor::exceptional(1, 4, TubePoint::Infinity));
  CHECK(parse_descriptor("R(1,4,∞)", f) == IndecDescriptor::exceptional(1, 4, TubePoint::Infinity));
  CHECK(parse_descriptor("R(1,2,1)", f) == IndecDescriptor::exceptional(1, 2, TubePoint::One));
  // lambda is read in the field: 9 = 2 in GF(7).
  CHECK(parse_descriptor("R(1,9)", gf(7)) == IndecDescriptor::homogeneous(1, FieldElement(gf(7), 2)));

  for (const char* bad : {"P(1)", "P(a,1)", "Q(1,1)", "P(1,5)", "R(2,0)", "R(2,1)", "R(2,inf)", "R(0,3,2)",
                          "R(2,3,0)", "R(0,0,1)", "P(-1,0)", "P(1,1", "", "R(1,8)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_descriptor(bad, gf(7)), Error);
  }
}

TEST_CASE("descriptor strings round-trip") {
  const Field f = gf();
  const EnumerationBounds b{3, 3, {FieldElement(f, 2), FieldElement(f, 5)}};
  for (const auto& x : enumerate(b)) CHECK(parse_descriptor(x.to_string(), f) == x);
}

TEST_CASE("parameters follow the table conventions") {
  CHECK(IndecDescriptor::postprojective(7, 2).parameter() == 3);
  CHECK(IndecDescriptor::postprojective(6, 2).parameter() == 3);
  CHECK(IndecDescriptor::postprojective(6, 0).parameter() == 6);
  CHECK(IndecDescriptor::exceptional(0, 5, TubePoint::Zero).parameter() == 3);
  CHECK(IndecDescriptor::exceptional(0, 6, TubePoint::Zero).parameter() == 3);
}

TEST_CASE("enumeration at minimal bounds lists every family once") {
  const auto got = enumerate(EnumerationBounds{0, 0, {}});
  std::set<std::string> names;
  for (const auto& x : got) names.insert(x.to_string());
  const std::set<std::string> expected{"P(0,0)", "P(0,1)", "P(0,2)", "P(0,3)", "P(0,4)", "P(1,1)",
                                       "P(1,2)", "P(1,3)", "P(1,4)", "I(0,0)", "I(0,1)", "I(0,2)",
                                       "I(0,3)", "I(0,4)", "I(1,1)", "I(1,2)", "I(1,3)", "I(1,4)"};
  CHECK(names == expected);
  CHECK(got.size() == expected.size());
}

TEST_CASE("enumeration is duplicate-free, buildable and monotone") {
  const Field f = gf();
  const std::vector<FieldElement> lambdas{FieldElement(f, 2), FieldElement(f, 5), FieldElement(f, 2),
                                          FieldElement(f, 0), FieldElement(f, 1)};
  const auto small = enumerate(EnumerationBounds{2, 2, lambdas});
  const auto big = enumerate(EnumerationBounds{3, 3, lambdas});
  std::set<std::string> seen;
  for (const auto& x : big) {
    CHECK(seen.insert(x.to_string()).second);
    CHECK(build(x, f).dim_vector() == declared_dim_vector(x));
    if (x.family() == Family::RegularHomogeneous) {
      CHECK_FALSE(x.lambda()->is_zero());
      CHECK_FALSE(x.lambda()->is_one());
    }
  }
  for (const auto& x : small) CHECK(seen.count(x.to_string()) == 1);
  CHECK(seen.count("R(3,2)") == 1);
  CHECK(seen.count("R(3,5)") == 1);
  CHECK(seen.count("R(1,6,inf)") == 1);
  CHECK(seen.count("P(7,4)") == 1);
  CHECK(seen.count("I(3,0)") == 1);
  CHECK(seen.count("P(9,1)") == 0);
}

TEST_CASE("cyclic shift identities for the P and I families") {
  const Field f = q();
  const VertexPermutation rho = VertexPermutation::rotation();
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m : {2 * n, 2 * n + 1}) {
      for (int i = 1; i <= 3; ++i) {
        CAPTURE(m);
        CAPTURE(i);
        CHECK(permute_vertices(build(IndecDescriptor::postprojective(m, i), f), rho) ==
              build(IndecDescriptor::postprojective(m, i + 1), f));
        CHECK(permute_vertices(build(IndecDescriptor::preinjective(m, i), f), rho) ==
              build(IndecDescriptor::preinjective(m, i + 1), f));
      }
    }
  }
}

TEST_CASE("exceptional relabelings map the base construction onto each tube") {
  const Field f = q();
  for (std::size_t l = 1; l <= 3; ++l) {
    const LambdaModule even = homogeneous_construction(l, FieldElement(f, 0));
    for (int s = 0; s <= 1; ++s) {
      for (TubePoint t : {TubePoint::Zero, TubePoint::One, TubePoint::Infinity}) {
        CHECK(permute_vertices(even, exceptional_relabeling(s, t)) ==
              build(IndecDescriptor::exceptional(s, 2 * l, t), f));
      }
    }
  }
}

TEST_CASE("postprojectives and preinjectives are bricks") {
  const Field f = gf();
  for (const auto& x : all_rows(3, f)) {
    if (x.is_regular()) continue;
    CAPTURE(x.to_string());
    const LambdaModule m = build(x, f);
    CHECK(hom_oracle(m, m) == 1);
  }
}

TEST_CASE("endomorphism dimensions of regular modules") {
  const Field f = gf();
  for (std::size_t l = 1; l <= 3; ++l) {
    const LambdaModule h = build(IndecDescriptor::homogeneous(l, FieldElement(f, 2)), f);
    CHECK(hom_oracle(h, h) == l);
    for (std::size_t m : {2 * l - 1, 2 * l}) {
      const LambdaModule e = build(IndecDescriptor::exceptional(1, m, TubePoint::Infinity), f);
      CHECK(hom_oracle(e, e) == (m + 1) / 2);
    }
  }
}

TEST_CASE("R(0,2l,0) is the homogeneous construction at lambda = 0") {
  for (std::size_t l = 1; l <= 4; ++l) {
    CHECK(build(IndecDescriptor::exceptional(0, 2 * l, TubePoint::Zero), q()) ==
          homogeneous_construction(l, FieldElement(q(), 0)));
  }
}

TEST_CASE("R(1,2l,1) has the hom vector of the construction at lambda = 1") {
  const Field f = gf();
  const auto targets = enumerate(EnumerationBounds{2, 3, {FieldElement(f, 2)}});
  for (std::size_t l = 1; l <= 3; ++l) {
    const LambdaModule x = build(IndecDescriptor::exceptional(1, 2 * l, TubePoint::One), f);
    const LambdaModule y = homogeneous_construction(l, FieldElement(f, 1));
    CHECK(x.dim_vector() == y.dim_vector());
    for (const auto& t : targets) {
      const LambdaModule z = build(t, f);
      CHECK(hom_oracle(x, z) == hom_oracle(y, z));
      CHECK(hom_oracle(z, x) == hom_oracle(z, y));
    }
  }
}

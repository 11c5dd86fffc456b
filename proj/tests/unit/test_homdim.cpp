#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fsa/catalog.hpp"
#include "fsa/homdim.hpp"
#include "fsa/oracle.hpp"
#include "patterns.hpp"
#include "support.hpp"

using namespace fsa;
using fsa::test::gf;
using fsa::test::pattern;
using fsa::test::q;
using fsa::test::Rows;

namespace {

IndecDescriptor P(std::size_t m, int i) { return IndecDescriptor::postprojective(m, i); }
IndecDescriptor I(std::size_t m, int i) { return IndecDescriptor::preinjective(m, i); }
IndecDescriptor R(int s, std::size_t m, TubePoint t) { return IndecDescriptor::exceptional(s, m, t); }

struct TableRow {
  IndecDescriptor desc;
  Rows head;
  Rows step;
  Rows link;
  BuilderKind kind;
};

// Every Z, Z' and W printed in the formula table, at a parameter where all
// three parts are used. Rows that print Z' = Z repeat the step pattern.
std::vector<TableRow> table_rows() {
  using K = BuilderKind;
  const TubePoint Z0 = TubePoint::Zero, Z1 = TubePoint::One, ZI = TubePoint::Infinity;
  return {
      {P(2, 0),
       {{"A", "0", "B", "0", "C", "D"}, {"0", "0", "0", "B", "0", "-D"}, {"0", "A", "0", "0", "-C", "0"}},
       {{"0", "-D", "0", "B"}, {"-C", "0", "A", "0"}},
       {{"C", "0"}, {"0", "D"}},
       K::LinkAboveClosed},
      {P(3, 1), {{"A", "0", "C", "D"}, {"0", "B", "0", "-D"}}, {{"A", "0", "C", "D"}, {"0", "B", "0", "-D"}},
       {{"-A"}}, K::LinkAboveClosed},
      {P(3, 2), {{"B", "0", "D", "A"}, {"0", "C", "0", "-A"}}, {{"B", "0", "D", "A"}, {"0", "C", "0", "-A"}},
       {{"-B"}}, K::LinkAboveClosed},
      {P(3, 3), {{"C", "0", "A", "B"}, {"0", "D", "0", "-B"}}, {{"C", "0", "A", "B"}, {"0", "D", "0", "-B"}},
       {{"-C"}}, K::LinkAboveClosed},
      {P(3, 4), {{"D", "0", "B", "C"}, {"0", "A", "0", "-C"}}, {{"D", "0", "B", "C"}, {"0", "A", "0", "-C"}},
       {{"-D"}}, K::LinkAboveClosed},
      {P(2, 1), {{"B", "C", "D"}}, {{"C", "A", "0", "0"}, {"-C", "0", "B", "D"}}, {{"-D"}}, K::LinkBelow},
      {P(2, 2), {{"C", "D", "A"}}, {{"D", "B", "0", "0"}, {"-D", "0", "C", "A"}}, {{"-A"}}, K::LinkBelow},
      {P(2, 3), {{"D", "A", "B"}}, {{"A", "C", "0", "0"}, {"-A", "0", "D", "B"}}, {{"-B"}}, K::LinkBelow},
      {P(2, 4), {{"A", "B", "C"}}, {{"B", "D", "0", "0"}, {"-B", "0", "A", "C"}}, {{"-C"}}, K::LinkBelow},
      {I(2, 0),
       {{"D", "C", "0", "0"}, {"0", "-C", "0", "B"}, {"-D", "0", "A", "0"}},
       {{"0", "-C", "0", "B"}, {"-D", "0", "A", "0"}},
       {{"D", "0"}, {"0", "C"}},
       K::LinkAbove},
      {I(3, 1), {{"A"}}, {{"C", "D", "0", "B"}, {"0", "-D", "A", "0"}}, {{"-C"}}, K::LinkAbove},
      {I(3, 2), {{"B"}}, {{"D", "A", "0", "C"}, {"0", "-A", "B", "0"}}, {{"-D"}}, K::LinkAbove},
      {I(3, 3), {{"C"}}, {{"A", "B", "0", "D"}, {"0", "-B", "C", "0"}}, {{"-A"}}, K::LinkAbove},
      {I(3, 4), {{"D"}}, {{"B", "C", "0", "A"}, {"0", "-C", "D", "0"}}, {{"-B"}}, K::LinkAbove},
      {I(4, 1), {{"B", "0", "D"}, {"0", "C", "-D"}}, {{"A", "B", "0", "D"}, {"0", "0", "C", "-D"}}, {{"-A"}},
       K::LinkAbove},
      {I(4, 2), {{"C", "0", "A"}, {"0", "D", "-A"}}, {{"B", "C", "0", "A"}, {"0", "0", "D", "-A"}}, {{"-B"}},
       K::LinkAbove},
      {I(4, 3), {{"D", "0", "B"}, {"0", "A", "-B"}}, {{"C", "D", "0", "B"}, {"0", "0", "A", "-B"}}, {{"-C"}},
       K::LinkAbove},
      {I(4, 4), {{"A", "0", "C"}, {"0", "B", "-C"}}, {{"D", "A", "0", "C"}, {"0", "0", "B", "-C"}}, {{"-D"}},
       K::LinkAbove},
      {R(0, 4, Z0), {{"D", "C", "B", "0"}, {"0", "-C", "0", "A"}}, {{"D", "C", "B", "0"}, {"0", "-C", "0", "A"}},
       {{"-D"}}, K::LinkAbove},
      {R(1, 4, Z0), {{"C", "D", "A", "0"}, {"0", "-D", "0", "B"}}, {{"C", "D", "A", "0"}, {"0", "-D", "0", "B"}},
       {{"-C"}}, K::LinkAbove},
      {R(0, 4, Z1), {{"B", "D", "A", "0"}, {"0", "-D", "0", "C"}}, {{"B", "D", "A", "0"}, {"0", "-D", "0", "C"}},
       {{"-B"}}, K::LinkAbove},
      {R(1, 4, Z1), {{"D", "B", "C", "0"}, {"0", "-B", "0", "A"}}, {{"D", "B", "C", "0"}, {"0", "-B", "0", "A"}},
       {{"-D"}}, K::LinkAbove},
      {R(0, 4, ZI), {{"D", "C", "A", "0"}, {"0", "-C", "0", "B"}}, {{"D", "C", "A", "0"}, {"0", "-C", "0", "B"}},
       {{"-D"}}, K::LinkAbove},
      {R(1, 4, ZI), {{"C", "D", "B", "0"}, {"0", "-D", "0", "A"}}, {{"C", "D", "B", "0"}, {"0", "-D", "0", "A"}},
       {{"-C"}}, K::LinkAbove},
      {R(0, 3, Z0), {{"A", "C"}}, {{"B", "D", "0", "A"}, {"0", "0", "C", "-A"}}, {{"-B"}}, K::LinkAbove},
      {R(1, 3, Z0), {{"B", "D"}}, {{"A", "C", "0", "B"}, {"0", "0", "D", "-B"}}, {{"-A"}}, K::LinkAbove},
      {R(0, 3, Z1), {{"C", "D"}}, {{"A", "B", "0", "C"}, {"0", "0", "D", "-C"}}, {{"-A"}}, K::LinkAbove},
      {R(1, 3, Z1), {{"A", "B"}}, {{"C", "D", "0", "A"}, {"0", "0", "B", "-A"}}, {{"-C"}}, K::LinkAbove},
      {R(0, 3, ZI), {{"B", "C"}}, {{"A", "D", "0", "B"}, {"0", "0", "C", "-B"}}, {{"-A"}}, K::LinkAbove},
      {R(1, 3, ZI), {{"A", "D"}}, {{"B", "C", "0", "A"}, {"0", "0", "D", "-A"}}, {{"-B"}}, K::LinkAbove},
  };
}

LambdaModule random_m(std::mt19937_64& rng, Field f = gf(), std::size_t max_dim = 4) {
  return random_module(f, test::random_dims(rng, max_dim), rng);
}

}  // namespace

TEST_CASE("golden matrix for P(1,0)") {
  const Field f = gf(101);
  const LambdaModule m = test::distinguishable(f);
  const ExactMatrix n1 = coeff_matrix(m, P(1, 0));
  CHECK(n1 == test::expand(test::golden_n1(), m));
  CHECK(coeff_spec(P(1, 0)).y_order == std::vector<std::size_t>{2, 1, 3});
}

TEST_CASE("golden matrix for P(2,0)") {
  const Field f = gf(101);
  const LambdaModule m = test::distinguishable(f);
  const ExactMatrix n2 = coeff_matrix(m, P(2, 0));
  CHECK(n2 == test::expand(test::golden_n2(), m));
  CHECK(coeff_spec(P(2, 0)).y_order == std::vector<std::size_t>{3, 2, 4, 1, 5});
  const ExactMatrix n1 = coeff_matrix(m, P(1, 0));
  CHECK(n2.block(0, 0, n1.rows(), n1.cols()) == n1);
}

TEST_CASE("golden matrix for P(0,1)") {
  const Field f = gf(101);
  const LambdaModule m = test::distinguishable(f);
  CHECK(coeff_matrix(m, P(0, 1)) == hstack({m.b(), m.c(), m.d()}));
}

TEST_CASE("coefficient patterns match the printed table after relabeling") {
  for (const auto& row : table_rows()) {
    CAPTURE(row.desc.to_string());
    const CoeffSpec spec = coeff_spec(row.desc);
    CHECK(spec.head == pattern(row.head));
    CHECK(spec.step == pattern(row.step));
    CHECK(spec.link == pattern(row.link));
    CHECK(spec.kind == row.kind);
  }
}

TEST_CASE("homogeneous pattern carries lambda") {
  const Field f = gf();
  const CoeffSpec spec = coeff_spec(IndecDescriptor::homogeneous(3, FieldElement(f, 7)));
  CHECK(spec.step == pattern({{"D", "C", "B", "0"}, {"-lD", "-C", "0", "A"}}));
  CHECK(spec.head == spec.step);
  CHECK(spec.link == pattern({{"-D"}}));
  CHECK(spec.repetitions == 2);
  REQUIRE(spec.lambda.has_value());
  CHECK(*spec.lambda == FieldElement(f, 7));
}

TEST_CASE("repetition counts") {
  CHECK(coeff_spec(P(4, 0)).repetitions == 3);
  CHECK(coeff_spec(P(5, 2)).repetitions == 2);
  CHECK(coeff_spec(P(6, 3)).repetitions == 3);
  CHECK(coeff_spec(I(4, 0)).repetitions == 3);
  CHECK(coeff_spec(I(5, 1)).repetitions == 2);
  CHECK(coeff_spec(I(6, 4)).repetitions == 2);
  CHECK(coeff_spec(R(1, 5, TubePoint::One)).repetitions == 2);
  CHECK(coeff_spec(R(1, 6, TubePoint::One)).repetitions == 2);
}

TEST_CASE("closed-form descriptors have no coefficient matrix") {
  CHECK(has_closed_form(P(0, 0)));
  CHECK(has_closed_form(I(0, 0)));
  CHECK(has_closed_form(I(0, 3)));
  CHECK_FALSE(has_closed_form(P(0, 3)));
  CHECK_FALSE(has_closed_form(I(1, 1)));
  CHECK_THROWS_AS(coeff_spec(P(0, 0)), Error);
  CHECK_THROWS_AS(coeff_spec(I(0, 2)), Error);
}

TEST_CASE("block rows equal the number of y variables") {
  const Field f = gf();
  const auto descs = enumerate(EnumerationBounds{4, 4, {FieldElement(f, 2)}});
  std::mt19937_64 rng(1);
  const LambdaModule m = random_module(f, DimVector{{3, 1, 2, 2, 1}}, rng);
  for (const auto& d : descs) {
    if (has_closed_form(d)) continue;
    CAPTURE(d.to_string());
    const CoeffSpec spec = coeff_spec(d);
    const std::size_t m0 = declared_dim_vector(d)[0];
    CHECK(spec.block_rows() == m0);
    CHECK(spec.y_order.size() == m0);
    std::vector<std::size_t> sorted = spec.y_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(m0);
    std::iota(expected.begin(), expected.end(), 1);
    CHECK(sorted == expected);
    CHECK(coeff_matrix(m, d).rows() == m0 * m.top_dim());
  }
  CHECK(coeff_spec(P(3, 0)).block_rows() == 7);
  CHECK(coeff_spec(P(5, 1)).block_rows() == 6);
  CHECK(coeff_spec(IndecDescriptor::homogeneous(3, FieldElement(f, 2))).block_rows() == 6);
  CHECK(coeff_spec(R(0, 5, TubePoint::Zero)).block_rows() == 5);
}

TEST_CASE("staircase nesting within each family") {
  const Field f = gf();
  std::mt19937_64 rng(2);
  const LambdaModule m = random_module(f, DimVector{{2, 1, 2, 1, 2}}, rng);
  const FieldElement lambda(f, 5);
  auto nested = [&](const IndecDescriptor& small, const IndecDescriptor& big) {
    const ExactMatrix a = coeff_matrix(m, small);
    const ExactMatrix b = coeff_matrix(m, big);
    REQUIRE(a.rows() <= b.rows());
    REQUIRE(a.cols() <= b.cols());
    CHECK(b.block(0, 0, a.rows(), a.cols()) == a);
  };
  for (std::size_t t = 1; t <= 3; ++t) {
    CAPTURE(t);
    nested(P(t, 0), P(t + 1, 0));
    nested(I(t, 0), I(t + 1, 0));
    for (int i = 1; i <= 4; ++i) {
      nested(P(2 * t + 1, i), P(2 * t + 3, i));
      nested(P(2 * t, i), P(2 * t + 2, i));
      nested(I(2 * t + 1, i), I(2 * t + 3, i));
      nested(I(2 * t, i), I(2 * t + 2, i));
    }
    nested(IndecDescriptor::homogeneous(t, lambda), IndecDescriptor::homogeneous(t + 1, lambda));
    for (int s = 0; s <= 1; ++s) {
      for (TubePoint p : {TubePoint::Zero, TubePoint::One, TubePoint::Infinity}) {
        nested(R(s, 2 * t, p), R(s, 2 * t + 2, p));
        nested(R(s, 2 * t - 1, p), R(s, 2 * t + 1, p));
      }
    }
  }
}

TEST_CASE("closed forms") {
  const Field f = q();
  const LambdaModule i00 = build(I(0, 0), f);
  CHECK(hom_dim(i00, P(0, 0)) == 0);
  const LambdaModule p00 = build(P(0, 0), f);
  CHECK(hom_dim(p00, P(0, 0)) == 1);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const LambdaModule m = random_m(rng, trial % 2 == 0 ? gf() : q());
    const DimVector d = m.dim_vector();
    CHECK(hom_dim(m, I(0, 0)) == d[0]);
    for (int i = 1; i <= 4; ++i) CHECK(hom_dim(m, I(0, i)) == d[static_cast<std::size_t>(i)]);
    CHECK(hom_dim(m, P(0, 0)) == corank(hstack({m.a(), m.b(), m.c(), m.d()})));
    CHECK(hom_dim(m, I(1, 1)) == corank(m.a()));
  }
}

TEST_CASE("hom_vector") {
  std::mt19937_64 rng(4);
  const Field f = gf();
  const LambdaModule m = random_m(rng);
  CHECK(hom_vector(m, {}).empty());
  const auto v = hom_vector(m, {I(0, 0), I(0, 1)});
  CHECK(v == std::vector<std::size_t>{m.dim_vector()[0], m.dim_vector()[1]});

  const auto descs = enumerate(EnumerationBounds{2, 2, {FieldElement(f, 3)}});
  for (int trial = 0; trial < 5; ++trial) {
    const LambdaModule a = random_m(rng);
    const LambdaModule b = random_m(rng);
    const auto va = hom_vector(a, descs);
    const auto vb = hom_vector(b, descs);
    const auto vab = hom_vector(module_direct_sum(a, b), descs);
    for (std::size_t k = 0; k < descs.size(); ++k) CHECK(vab[k] == va[k] + vb[k]);
  }
}

TEST_CASE("formula agrees with the oracle") {
  const Field f = gf();
  const auto descs = enumerate(EnumerationBounds{3, 3, {FieldElement(f, 2), FieldElement(f, 5)}});
  std::vector<LambdaModule> targets;
  for (const auto& d : descs) targets.push_back(build(d, f));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const LambdaModule m = random_m(rng, f, 5);
    for (std::size_t k = 0; k < descs.size(); ++k) {
      CAPTURE(descs[k].to_string());
      CHECK(hom_dim(m, descs[k]) == hom_oracle(m, targets[k]));
    }
  }
  // Non-generic inputs: the catalog modules themselves.
  for (std::size_t a = 0; a < descs.size(); a += 3) {
    for (std::size_t k = 0; k < descs.size(); ++k) {
      CHECK(hom_dim(targets[a], descs[k]) == hom_oracle(targets[a], targets[k]));
    }
  }
}

TEST_CASE("formula agrees with the oracle over the rationals") {
  const Field f = q();
  const auto descs = enumerate(EnumerationBounds{2, 2, {FieldElement::parse(f, "-1/3")}});
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    const LambdaModule m = random_m(rng, f, 3);
    for (const auto& d : descs) CHECK(hom_dim(m, d) == hom_oracle(m, build(d, f)));
  }
}

TEST_CASE("cyclic permutation coherence") {
  const Field f = gf();
  const VertexPermutation rho_inv = VertexPermutation::rotation().inverse();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const LambdaModule m = random_m(rng);
    const LambdaModule shifted = permute_vertices(m, rho_inv);
    for (std::size_t k = 0; k <= 5; ++k) {
      for (int i = 2; i <= 4; ++i) {
        CHECK(hom_dim(m, P(k, i)) == hom_dim(shifted, P(k, i - 1)));
        CHECK(hom_dim(m, I(k, i)) == hom_dim(shifted, I(k, i - 1)));
      }
    }
  }
}

TEST_CASE("R(0,2l,0) uses the homogeneous formula at lambda = 0") {
  const Field f = gf();
  std::mt19937_64 rng(8);
  for (std::size_t l = 1; l <= 3; ++l) {
    const LambdaModule m = random_m(rng);
    const ExactMatrix direct = coeff_matrix(m, R(0, 2 * l, TubePoint::Zero));
    CoeffSpec spec = coeff_spec(IndecDescriptor::homogeneous(l, FieldElement(f, 2)));
    spec.lambda = FieldElement(f, 0);
    CHECK(assemble(spec, m) == direct);
  }
}

TEST_CASE("lambda field must match the module") {
  std::mt19937_64 rng(9);
  const LambdaModule m = random_m(rng, gf());
  CHECK_THROWS_AS(hom_dim(m, IndecDescriptor::homogeneous(1, FieldElement(gf(7), 3))), Error);
}

TEST_CASE("mutation parsing") {
  const SpecMutation m = SpecMutation::parse("r-hom:step:1:0");
  CHECK(m.family == SpecFamily::Homogeneous);
  CHECK(m.part == PatternPart::Step);
  CHECK(m.row == 1);
  CHECK(m.col == 0);
  CHECK(m.kind == MutationKind::FlipSign);
  CHECK(m.to_string() == "r-hom:step:1:0:flip");
  CHECK(SpecMutation::parse("p0:link:1:1:zero").kind == MutationKind::Zero);
  for (const char* bad : {"r-hom:step:1", "x:step:0:0", "p0:body:0:0", "p0:head:a:0", "p0:head:0:0:swap",
                          "p0:head:-1:0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(SpecMutation::parse(bad), Error);
  }
}

TEST_CASE("mutations change only their own family") {
  const SpecMutation flip = SpecMutation::parse("p-odd:head:0:0");
  const CoeffSpec base = coeff_spec(P(3, 2));
  const CoeffSpec mutated = coeff_spec(P(3, 2), &flip);
  CHECK(mutated.head[0][0].sign == -base.head[0][0].sign);
  CHECK(mutated.step == base.step);
  CHECK(coeff_spec(P(2, 2), &flip).head == coeff_spec(P(2, 2)).head);
  const SpecMutation zero_block = SpecMutation::parse("p-odd:head:0:1");
  CHECK_THROWS_AS(coeff_spec(P(3, 1), &zero_block), Error);
  const SpecMutation outside = SpecMutation::parse("p-odd:head:5:0");
  CHECK_THROWS_AS(coeff_spec(P(3, 1), &outside), Error);
}

TEST_CASE("a sign flip on the homogeneous cycle swaps lambda for -lambda") {
  const Field f = gf();
  const FieldElement two(f, 2);
  // For l = 1 only the head is used.
  const SpecMutation flip = SpecMutation::parse("r-hom:head:0:1");
  const LambdaModule x = build(IndecDescriptor::homogeneous(1, two), f);
  CHECK(hom_dim(x, IndecDescriptor::homogeneous(1, two)) == 1);
  CHECK(hom_dim(x, IndecDescriptor::homogeneous(1, two), &flip) == 0);
  CHECK(hom_dim(x, IndecDescriptor::homogeneous(1, -two), &flip) == 1);
}

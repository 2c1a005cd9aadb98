#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "prismcurv/errors.hpp"
#include "prismcurv/generators.hpp"
#include "prismcurv/prism.hpp"

using namespace prismcurv;

namespace {

ContactSequence binned(const std::string& text) { return bin(parse_contacts(text), 1); }

Simplex edge(SpacetimeVertex a, SpacetimeVertex b) { return Simplex({a, b}); }

}  // namespace

TEST_CASE("prism of an edge") {
  const auto tops = prism_top_simplices({1, 2}, 0, 1);
  REQUIRE(tops.size() == 2);
  CHECK(tops[0] == Simplex({{1, 0}, {1, 1}, {2, 1}}));
  CHECK(tops[1] == Simplex({{1, 0}, {2, 0}, {2, 1}}));
  const auto p = prism({1, 2}, 0, 1);
  CHECK(p.f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK(p.contains(edge({1, 0}, {2, 1})));
  CHECK_FALSE(p.contains(edge({2, 0}, {1, 1})));
  CHECK(euler_characteristic(p) == 1);
}

TEST_CASE("degenerate and higher prisms") {
  CHECK(prism({4}, 2, 5).f_vector() == std::vector<std::size_t>{2, 1});
  const auto p2 = prism({1, 2, 3}, 0, 1);
  CHECK(p2.count(3) == 3);
  CHECK(euler_characteristic(p2) == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<NodeId> sigma;
    for (std::size_t k = 0; k < n; ++k) sigma.push_back(10 + k);
    const auto p = prism(sigma, 1, 3);
    CHECK(p.count(static_cast<int>(n)) == n);
    CHECK(euler_characteristic(p) == 1);
  }
  CHECK_THROWS_AS(prism({1, 2}, 1, 1), DomainError);
  CHECK_THROWS_AS(prism({1, 2}, 2, 1), DomainError);
}

TEST_CASE("prisms glue along shared faces") {
  // The prism of a face is a subcomplex of the prism of the simplex.
  const auto big = prism({1, 2, 3}, 0, 2);
  for (const auto& face : std::vector<std::vector<NodeId>>{{1, 2}, {1, 3}, {2, 3}, {2}}) {
    const auto small = prism(face, 0, 2);
    for (auto id : small.all_ids()) CHECK(big.contains(small.simplex(id)));
  }
}

TEST_CASE("edge classes") {
  CHECK(classify_edge(edge({1, 3}, {2, 3})).cls == EdgeClass::Spatial);
  CHECK(classify_edge(edge({1, 3}, {2, 3})).gap == 0);
  CHECK(classify_edge(edge({1, 3}, {1, 5})).cls == EdgeClass::Temporal);
  CHECK(classify_edge(edge({1, 3}, {1, 5})).gap == 2);
  CHECK(classify_edge(edge({1, 3}, {2, 5})).cls == EdgeClass::Diagonal);
  CHECK(classify_edge(edge({1, 3}, {2, 5})).gap == 2);
}

TEST_CASE("build_kst on toy sequences") {
  const auto one = build_kst(binned("0 1 2"));
  CHECK(one.complex.f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(one.stacks.empty());

  BuildOptions k1;
  k1.slice_gap = 1;
  const auto two = build_kst(binned("0 1 2\n1 1 2"), k1);
  CHECK(two.complex.f_vector() == std::vector<std::size_t>{4, 5, 2});
  std::array<int, 3> classes{};
  for (auto id : two.complex.ids(1)) ++classes[static_cast<std::size_t>(two.edge(id).cls)];
  CHECK(classes == std::array<int, 3>{2, 2, 1});

  const auto far = build_kst(binned("0 1 2\n4 1 2"));
  CHECK(far.complex.f_vector() == std::vector<std::size_t>{4, 2});

  CHECK_THROWS_AS(build_kst(parse_contacts("0.5 1 2")), DomainError);
  BuildOptions k0;
  k0.slice_gap = 0;
  CHECK_THROWS_AS(build_kst(binned("0 1 2"), k0), DomainError);
}

TEST_CASE("slice gap and consecutive-only") {
  const auto seq = binned("0 1 2\n2 1 2\n5 1 2");
  BuildOptions opt;
  opt.slice_gap = 3;
  const auto pc = build_kst(seq, opt);
  // Pairs (0,2) and (2,5) qualify, (0,5) does not.
  CHECK(pc.stacks.size() == 2);
  for (auto id : pc.complex.ids(1)) CHECK(pc.edge(id).gap <= 3);

  opt.slice_gap = 5;
  CHECK(build_kst(seq, opt).stacks.size() == 3);
  opt.consecutive_only = true;
  CHECK(build_kst(seq, opt).stacks.size() == 2);
}

TEST_CASE("default weights") {
  BuildOptions opt;
  const auto pc = build_kst(binned("0 1 2\n2 1 2"), opt);
  const auto& cx = pc.complex;
  CHECK(cx.weight(cx.at(Simplex({{1, 0}}))) == 1.0);
  CHECK(cx.weight(cx.at(edge({1, 0}, {2, 0}))) == 1.0);
  CHECK(cx.weight(cx.at(edge({1, 0}, {1, 2}))) == doctest::Approx(1.0 / 3));
  CHECK(cx.weight(cx.at(edge({1, 0}, {2, 2}))) == doctest::Approx(1.0 / 6));

  const auto pc1 = build_kst(binned("0 1 2\n1 1 2"), opt);
  CHECK(pc1.complex.weight(pc1.complex.at(edge({1, 0}, {1, 1}))) == doctest::Approx(0.5));
  // Triangle {(1,0),(1,1),(2,1)} has edge weights 1/2, 1/4, 1.
  const auto tri = pc1.complex.at(Simplex({{1, 0}, {1, 1}, {2, 1}}));
  CHECK(pc1.complex.weight(tri) == doctest::Approx(std::cbrt(0.5 * 0.25 * 1.0)));
  const double w3[] = {1.0, 0.5, 0.25};
  CHECK(geometric_mean(w3) == doctest::Approx(0.5));
}

TEST_CASE("gap weight functions") {
  CHECK(GapWeight::parse("unit")(3) == 1.0);
  CHECK(GapWeight::parse("reciprocal")(1) == 0.5);
  CHECK(GapWeight::parse("exp:0.5")(2) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(GapWeight::parse("cubic"), DomainError);
  CHECK_THROWS_AS(GapWeight::parse("exp:-1"), DomainError);
}

TEST_CASE("every prism has Euler characteristic 1 on synthetic runs") {
  GeneratorConfig cfg;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    cfg.seed = seed;
    const auto pc = build_kst(bin(generate(Model::ErdosRenyi, cfg), 5));
    for (const auto& stack : pc.stacks)
      for (const auto& s : stack.persistent) {
        const auto p = prism(s.nodes(), stack.lower, stack.upper);
        CHECK(euler_characteristic(p) == 1);
        for (auto id : p.all_ids()) CHECK(pc.complex.contains(p.simplex(id)));
      }
    // No edge spans more than K slice values.
    for (auto id : pc.complex.ids(1)) {
      CHECK(pc.edge(id).gap <= 3);
      CHECK((pc.edge(id).gap == 0) == (pc.edge(id).cls == EdgeClass::Spatial));
    }
  }
}

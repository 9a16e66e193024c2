/**
 * The gradient field V̄, the flow Φ̄ and its stabilization.
 */
#include <catch2/catch_amalgamated.hpp>

#include "dmorse/gradient_flow.hpp"
#include "testkit.hpp"

using namespace dmorse;
using namespace dmorse::testkit;

namespace {

struct SquareClosure
{
    Digraph gbar = load_digraph("square_closure.dg");
    MorseFunction f = load_morse("exw1.mf", gbar);
};

}   // namespace

TEST_CASE("gradient field of the square closure", "[flow]")
{
    SquareClosure s;
    auto field = gradient_field(s.gbar, s.f, 2);
    REQUIRE(field.size() == 3);
    CHECK(field.at(Path{0}) == VectorFieldEntry{Path{0, 1}, 1});
    CHECK(field.at(Path{3}) == VectorFieldEntry{Path{1, 3}, -1});
    CHECK(field.at(Path{0, 3}) == VectorFieldEntry{Path{0, 1, 3}, 1});
}

TEST_CASE("flow of the square closure", "[flow]")
{
    SquareClosure s;
    auto phi = [&](const Path& p) { return format_chain(s.gbar, gradient_flow(s.gbar, s.f, Chain(p), 2)); };
    CHECK(phi(Path{0}) == "v1");
    CHECK(phi(Path{3}) == "v1");
    CHECK(phi(Path{2}) == "v2");
    CHECK(phi(Path{0, 1}) == "0");
    CHECK(phi(Path{0, 2}) == "v0v2 - v0v1");
    CHECK(phi(Path{2, 3}) == "v2v3 - v1v3");
    CHECK(phi(Path{0, 3}) == "0");
    CHECK(phi(Path{0, 2, 3}) == "v0v2v3 - v0v1v3");
}

TEST_CASE("stabilization reaches a fixpoint and reports the iterations", "[flow]")
{
    SquareClosure s;
    GradientFlow flow(s.gbar, s.f, 2);
    int iterations = 0;
    Chain stable = flow.stabilize(Chain(Path{0}), &iterations);
    CHECK(format_chain(s.gbar, stable) == "v1");
    CHECK(iterations == 2);
    CHECK(flow_stabilize(s.gbar, s.f, Chain(Path{0, 2, 3}), 2) == flow.flow(Chain(Path{0, 2, 3})));
}

TEST_CASE("the invariant basis is α + V̄∂α over critical paths", "[flow]")
{
    SquareClosure s;
    auto basis = phi_invariant_basis(s.gbar, s.f, 1, 2);
    REQUIRE(basis.size() == 2);
    CHECK(format_chain(s.gbar, basis[0]) == "v0v2 - v0v1");
    CHECK(format_chain(s.gbar, basis[1]) == "v2v3 - v1v3");
    GradientFlow flow(s.gbar, s.f, 2);
    for (const auto& x : basis)
        CHECK(flow.flow(x) == x);
}

TEST_CASE("the flow requires a transitive digraph and respects the bound", "[flow]")
{
    Digraph g = load_digraph("square.dg");
    MorseFunction f = load_morse("exw1.mf", g);
    CHECK(error_kind([&] { GradientFlow(g, f, 2); }) == ErrorKind::NotTransitive);
    SquareClosure s;
    GradientFlow flow(s.gbar, s.f, 1);
    CHECK(error_kind([&] { flow.flow(Chain(Path{0, 1, 3})); }) == ErrorKind::DimensionBoundExceeded);
    CHECK(error_kind([&] { GradientFlow(s.gbar, MorseFunction({Rational(1)}), 2); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("a non-Morse function has non-unique gradient targets", "[flow]")
{
    Digraph g = load_digraph("line3.dg");
    Digraph gbar = transitive_closure(g);
    GradientFlow flow(gbar, MorseFunction({Rational(0), Rational(1), Rational(0)}), 2);
    CHECK(error_kind([&] { flow.vector_at(Path{1}); }) == ErrorKind::NonUniqueTarget);
}

TEST_CASE("non-allowed paths have no gradient vector", "[flow]")
{
    SquareClosure s;
    GradientFlow flow(s.gbar, s.f, 2);
    CHECK_FALSE(flow.vector_at(Path{3, 0}).has_value());
    CHECK(flow.apply_v(Chain(Path{3, 0})).is_zero());
}

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "kempe/directional.hpp"
#include "kempe/generate.hpp"
#include "kempe/solver.hpp"
#include "move_oracle.hpp"

using namespace kempe;
using oracle::effective;
using oracle::enumerate_consistent;
using oracle::movable;

namespace {
bool oracle_movable(const Configuration& config, EdgeId tagged, EdgeId next) {
    return movable(config, tagged, next);
}
}  // namespace

TEST_CASE("spanning tree shapes") {
    SUBCASE("star roots at the hub") {
        const SpanningTree tree = build_spanning_tree(fixtures::star_graph(4), 0);
        CHECK(tree.roots == std::vector<VertexId>{0});
        CHECK(tree.parent_edge[0] == kNoEdge);
        for (VertexId v = 1; v <= 4; ++v) CHECK(tree.depth[static_cast<std::size_t>(v)] == 1);
    }
    SUBCASE("path roots at the first interior vertex") {
        const SpanningTree tree = build_spanning_tree(fixtures::path_graph(4), 3);
        CHECK(tree.roots == std::vector<VertexId>{1});
        CHECK(tree.depth == std::vector<int>{1, 0, 1, 2});
    }
    SUBCASE("petersen has depth two from any root") {
        const SpanningTree tree = build_spanning_tree(fixtures::petersen_graph(), 9);
        CHECK(tree.roots == std::vector<VertexId>{0});
        CHECK(*std::max_element(tree.depth.begin(), tree.depth.end()) == 2);
        int depth_one = 0;
        for (int d : tree.depth) depth_one += d == 1 ? 1 : 0;
        CHECK(depth_one == 3);
    }
    SUBCASE("components get their own roots") {
        std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
        const SpanningTree tree = build_spanning_tree(SimpleGraph(6, edges), 1);
        CHECK(tree.roots == std::vector<VertexId>{0, 3});
        CHECK(tree.parent_edge[3] == kNoEdge);
    }
    SUBCASE("deterministic per seed, varying across seeds") {
        const SimpleGraph g = fixtures::petersen_graph();
        const SpanningTree a = build_spanning_tree(g, 5);
        const SpanningTree b = build_spanning_tree(g, 5);
        CHECK(a.parent_edge == b.parent_edge);
        // a 4-cycle gives its far vertex two possible parents
        const SimpleGraph c4 = fixtures::cycle_graph(4);
        const SpanningTree base = build_spanning_tree(c4, 0);
        bool any_difference = false;
        for (std::uint64_t seed = 1; seed < 16 && !any_difference; ++seed)
            any_difference = build_spanning_tree(c4, seed).parent_edge != base.parent_edge;
        CHECK(any_difference);
    }
}

TEST_CASE("step budget follows the ceiling formula") {
    // ceil(4*3*1*(15-1+1)^2 / ln 2) = ceil(2700 / 0.693147...) = 3896
    CHECK(step_budget(1, 1, 3, 15) == 3896);
    // k = n_i = m collapses the quadratic factor to one
    CHECK(step_budget(5, 5, 3, 5) == 87);  // ceil(60 / ln 2) = ceil(86.56)
    for (std::int64_t k = 1; k < 10; ++k)
        CHECK(step_budget(10, k, 4, 30) > step_budget(10, k + 1, 4, 30));
    CHECK(step_budget(1, 1, 1, 1) >= 1);
    // counts past the 64-bit range saturate instead of overflowing
    CHECK(step_budget(985000, 1, 198, 990000) == (std::uint64_t{1} << 62));
    CHECK_THROWS_AS(step_budget(0, 1, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(step_budget(2, 3, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(step_budget(2, 0, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(step_budget(2, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("classify: kempe-reducible patterns") {
    const SimpleGraph p3 = fixtures::path_graph(3);
    SUBCASE("next carries the continuation color") {
        Configuration config(p3, 3, {{1, 2}, {1, 1}});
        const MoveClassification cls = classify_move(config, 0, 1);
        CHECK(cls.kind == MoveCase::kw_reducible);
        CHECK(cls.alpha == 1);
        CHECK(cls.beta == 2);
        const WalkOutcome out = apply_move(config, cls);
        CHECK(out.kind == WalkOutcomeKind::stepped);
        CHECK(out.moved_variable == 1);
    }
    SUBCASE("next shares the near color on its far link") {
        Configuration config(p3, 3, {{1, 2}, {3, 2}});
        const MoveClassification cls = classify_move(config, 0, 1);
        CHECK(cls.kind == MoveCase::kw_reducible);
        const WalkOutcome out = apply_move(config, cls);
        CHECK(out.kind == WalkOutcomeKind::eliminated_one);
        CHECK(config.edge_colors(0) == ComplexColor{1, 3});
        CHECK(config.edge_colors(1) == ComplexColor{2, 2});
    }
}

TEST_CASE("classify and apply: DW1.1") {
    // edges meet at vertex 0: tagged (0,1) = (beta@0=2, alpha@1=1), next
    // (0,2) = (gamma@0=3, alpha@2=1)
    const SimpleGraph cherry(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}});
    Configuration config(cherry, 3, {{2, 1}, {3, 1}});
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::dw11);
    REQUIRE(cls.inversion.has_value());
    CHECK(cls.inversion->links.size() == 2);
    const WalkOutcome out = apply_move(config, cls);
    CHECK(out.kind == WalkOutcomeKind::eliminated_one);
    CHECK(config.edge_colors(0) == ComplexColor{1, 1});
    CHECK(config.edge_colors(1) == ComplexColor{2, 3});
    CHECK(config.variable_count() == 1);
}

TEST_CASE("classify and apply: plain DW1.2 steps forward") {
    const SimpleGraph cherry(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}});
    Configuration config(cherry, 3, {{2, 1}, {3, 3}});
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::dw12);
    CHECK_FALSE(cls.chain_move);
    const WalkOutcome out = apply_move(config, cls);
    CHECK(out.kind == WalkOutcomeKind::stepped);
    CHECK(out.moved_variable == 1);
    CHECK(out.new_front == 2);
    CHECK(config.edge_colors(0) == ComplexColor{1, 1});
    CHECK(config.edge_colors(1) == ComplexColor{2, 1});
    CHECK(config.variable_count() == 1);
}

TEST_CASE("classify and apply: DW1.2 prefix chain") {
    Configuration config = fixtures::triangle_chain_case();
    // edges: 0 tagged (0,1)=(2,1); 1 next (0,2)=(3,3); 2 third (1,2)=(3,1)
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::dw12);
    CHECK(cls.chain_move);
    CHECK(cls.chain_links.size() == 4);
    const int n_before = config.variable_count();
    const WalkOutcome out = apply_move(config, cls);
    CHECK(out.kind == WalkOutcomeKind::stepped);
    CHECK(out.moved_variable == 1);
    CHECK(config.edge_colors(0) == ComplexColor{3, 3});
    CHECK(config.edge_colors(1) == ComplexColor{2, 1});
    CHECK(config.edge_colors(2) == ComplexColor{1, 3});
    CHECK(config.variable_count() == n_before);
    CHECK(is_consistent(config));
}

TEST_CASE("classify and apply: DW2.1") {
    const SimpleGraph cherry(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}});
    Configuration config(cherry, 4, {{2, 1}, {3, 4}});
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::dw21);
    REQUIRE(cls.inversion.has_value());
    CHECK(cls.inversion->links.size() == 1);
    const WalkOutcome out = apply_move(config, cls);
    CHECK(out.kind == WalkOutcomeKind::eliminated_one);
    CHECK(config.edge_colors(0) == ComplexColor{1, 1});
    CHECK(config.edge_colors(1) == ComplexColor{2, 4});
    CHECK(config.variable_count() == 1);
}

TEST_CASE("classify and apply: DW2.2 when the alpha-type inversion is invalid") {
    // 0 front, 1 tagged far, 2 next far, 3 relay: the (gamma,alpha) path
    // from next runs through the tagged edge, the (delta,beta) one is free.
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}};
    const SimpleGraph g(4, edges);
    Configuration config(g, 4, {{2, 1}, {3, 4}, {1, 3}, {3, 1}});
    CHECK(is_consistent(config));
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::dw22);
    const int n_before = config.variable_count();
    const WalkOutcome out = apply_move(config, cls);
    CHECK(out.kind == WalkOutcomeKind::eliminated_one);
    CHECK(config.edge_colors(0) == ComplexColor{3, 1});  // pair changed, still a variable
    CHECK(config.edge_colors(1) == ComplexColor{2, 2});
    CHECK(config.variable_count() == n_before - 1);
}

TEST_CASE("classify: blocked DW2 when both inversions hit the tagged edge") {
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 4}, {0, 4}};
    const SimpleGraph g(5, edges);
    Configuration config(g, 4, {{2, 1}, {3, 4}, {1, 3}, {3, 1}, {2, 4}, {4, 2}});
    CHECK(is_consistent(config));
    const MoveClassification cls = classify_move(config, 0, 1);
    CHECK(cls.kind == MoveCase::blocked_dw2);
    CHECK_FALSE(oracle_movable(config, 0, 1));
    CHECK_THROWS_AS(apply_move(config, cls), std::invalid_argument);
}

TEST_CASE("petersen twin cycle: the bridge move is blocked, the tree move is not") {
    using namespace fixtures::petersen;
    Configuration config = fixtures::petersen_twin_cycle();

    // walking the inner variable toward the outer one across the (r,r)
    // spoke at vertex 9: the inversion path runs through the tagged edge
    const MoveClassification blocked = classify_move(config, e69, s49);
    CHECK(blocked.kind == MoveCase::blocked_dw12);
    CHECK_FALSE(oracle_movable(config, e69, s49));

    // the spoke at vertex 6 inverts an eight-edge (r,b) cycle instead
    const MoveClassification open = classify_move(config, e69, s16);
    CHECK(open.kind == MoveCase::dw12);
    CHECK_FALSE(open.chain_move);
    REQUIRE(open.inversion.has_value());
    CHECK(open.inversion->is_cycle);
    CHECK(open.inversion->cycle_edge_length() == 8);
    CHECK(oracle_movable(config, e69, s16));

    const WalkOutcome out = apply_move(config, open);
    CHECK(out.kind == WalkOutcomeKind::stepped);
    CHECK(out.moved_variable == s16);
    CHECK(config.edge_colors(e69) == ComplexColor{1, 1});
    CHECK(config.edge_colors(s16) == ComplexColor{1, 2});
    CHECK(config.variable_count() == 2);
    CHECK(is_consistent(config));

    // the moved variable is trapped in a fresh odd cycle, so the follow-up
    // walk cannot eliminate it
    CHECK_FALSE(variable_walk(config, s16));
}

TEST_CASE("stale classification is rejected") {
    Configuration config = fixtures::triangle_chain_case();
    const MoveClassification cls = classify_move(config, 0, 1);
    exchange(config, 2, 1, 2);  // any mutation bumps the version
    CHECK_THROWS_AS(apply_move(config, cls), StaleClassificationError);
}

TEST_CASE("classify matches the brute-force oracle on small path patterns") {
    long long cases = 0;
    for (int edge_count : {2, 3, 4}) {
        const SimpleGraph g = fixtures::path_graph(edge_count + 1);
        for (int palette : {3, 4}) {
            if (edge_count == 4 && palette == 4) continue;  // covered by the acceptance sweep
            enumerate_consistent(g, palette, [&](const std::vector<ComplexColor>& colors) {
                Configuration config(g, palette, colors);
                for (EdgeId tagged = 0; tagged < g.edge_count(); ++tagged) {
                    if (!config.is_variable_edge(tagged)) continue;
                    for (EdgeId next : {tagged - 1, tagged + 1}) {
                        if (next < 0 || next >= g.edge_count()) continue;
                        const MoveClassification cls = classify_move(config, tagged, next);
                        const bool movable = oracle_movable(config, tagged, next);
                        ++cases;
                        REQUIRE(is_blocked(cls.kind) == !movable);
                        if (is_blocked(cls.kind)) continue;
                        Configuration copy = config;
                        const MoveClassification fresh = classify_move(copy, tagged, next);
                        const int n_before = copy.variable_count();
                        apply_move(copy, fresh);
                        REQUIRE(is_consistent(copy));
                        REQUIRE(effective(copy, n_before, tagged, next));
                    }
                }
            });
        }
    }
    CHECK(cases > 10000);
}

TEST_CASE("walk to next step: eliminating an adjacent variable that shares the color") {
    const SimpleGraph p3 = fixtures::path_graph(3);
    SpanningTree tree;
    tree.parent_edge = {0, kNoEdge, 1};
    tree.depth = {1, 0, 1};
    tree.roots = {1};

    SUBCASE("the shared color is the walked one") {
        Configuration config(p3, 3, {{1, 2}, {3, 2}});
        Rng rng(1);
        RunCounters counters;
        const WalkStep res = walk_to_next_step(config, 0, &tree, 2, rng, &counters);
        CHECK(res.eliminated);
        CHECK(config.edge_colors(1) == ComplexColor{2, 2});
        CHECK(config.variable_count() == 1);
    }
    SUBCASE("a variable outside the walked color dies: not an elimination for the walk") {
        Configuration config(p3, 3, {{1, 2}, {3, 2}});
        Rng rng(1);
        const WalkStep res = walk_to_next_step(config, 0, &tree, 1, rng);
        CHECK_FALSE(res.eliminated);
        CHECK(res.tracked == 0);
        CHECK(config.edge_colors(0) == ComplexColor{1, 3});
        CHECK(config.variable_count() == 1);
    }
}

TEST_CASE("walk to next step: deflection past the blocked bridge") {
    using namespace fixtures::petersen;
    Configuration config = fixtures::petersen_twin_cycle();

    // hand-built tree steering the inner variable onto the blocked spoke:
    // root 4, vertex 9 below it via the spoke, vertex 6 below 9
    SpanningTree tree;
    tree.parent_edge.assign(10, kNoEdge);
    tree.depth.assign(10, 0);
    tree.roots = {4};
    tree.depth = {2, 2, 2, 1, 0, 2, 2, 2, 2, 1};
    tree.parent_edge[0] = e04;
    tree.parent_edge[3] = e34;
    tree.parent_edge[9] = s49;
    tree.parent_edge[5] = s05;
    tree.parent_edge[8] = s38;
    tree.parent_edge[1] = e01;
    tree.parent_edge[2] = e23;
    tree.parent_edge[7] = e79;
    tree.parent_edge[6] = e69;

    Rng rng(7);
    RunCounters counters;
    const WalkStep res = walk_to_next_step(config, e69, &tree, 1, rng, &counters);
    CHECK_FALSE(res.eliminated);
    CHECK(res.tracked == e79);  // deflected onto the pentagram edge
    CHECK(counters.deflections == 1);
    CHECK(config.edge_colors(e69) == ComplexColor{2, 2});
    CHECK(config.edge_colors(e79) == ComplexColor{2, 1});
    CHECK(config.variable_count() == 2);
    CHECK(is_consistent(config));
}

TEST_CASE("walk to next step keeps consistency and never raises the count") {
    const SimpleGraph g = fixtures::petersen_graph();
    Rng seeds(31337);
    int steps = 0;
    for (int round = 0; round < 40; ++round) {
        Configuration config = initial_configuration(g, 3, seeds.next());
        wkp(config);
        Rng rng(seeds.next());
        const SpanningTree tree = build_spanning_tree(g, seeds.next());
        for (int s = 0; s < 60 && !config.variables().empty(); ++s) {
            EdgeId tagged = *config.variables().begin();
            const ComplexColor cc = config.edge_colors(tagged);
            const Color c_i = round % 2 == 0 ? cc.first : cc.second;
            const int before = config.variable_count();
            const WalkStep res = walk_to_next_step(config, tagged, round % 2 == 0 ? &tree : nullptr, c_i, rng);
            ++steps;
            REQUIRE(is_consistent(config));
            REQUIRE(config.variable_count() <= before);
            REQUIRE(config.variable_count() == config.recount_variables());
            if (!res.eliminated) REQUIRE(config.is_variable_edge(res.tracked));
        }
    }
    CHECK(steps > 1000);
}

TEST_CASE("wst colors bipartite graphs in both modes") {
    const SimpleGraph k33(6, std::vector<std::pair<VertexId, VertexId>>{
                                 {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const bool random_mode : {false, true}) {
            const RunReport report = wst(k33, random_mode, seed);
            REQUIRE(report.verdict == Verdict::proper);
            REQUIRE(report.palette == 3);
            REQUIRE(report.coloring.size() == 9);
        }
    }
}

TEST_CASE("wst halts with the chromatic claim on the Petersen graph and K5") {
    const SimpleGraph petersen = fixtures::petersen_graph();
    const SimpleGraph k5 = fixtures::complete_graph(5);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(wst(petersen, false, seed).verdict == Verdict::chromatic_claim);
        CHECK(wst(petersen, true, seed).verdict == Verdict::chromatic_claim);
        CHECK(wst(k5, false, seed).verdict == Verdict::chromatic_claim);
        CHECK(wst(k5, true, seed).verdict == Verdict::chromatic_claim);
    }
}

TEST_CASE("wst colors random cubic class-1 instances") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        const SimpleGraph g = random_regular_graph(16, 3, seed);
        const RunReport report = wst(g, false, 1);
        CHECK(report.verdict == Verdict::proper);
    }
}

TEST_CASE("tree walks carry their direction instead of bouncing") {
    // Regression: with the front re-derived from depths on every step, a
    // deflected variable stepped straight back and the walk looped between
    // two edges until the budget ran dry, misreporting this colorable
    // 4-regular instance. The carried front keeps the walk moving.
    const SimpleGraph g = random_regular_graph(100, 4, derive_seed(400, 100 * 1000 + 1 * 10 + 4));
    const RunReport report = wst(g, false, derive_seed(401, derive_seed(400, 100 * 1000 + 1 * 10 + 4)));
    CHECK(report.verdict == Verdict::proper);
    CHECK(report.counters.walks < 100000);  // the looping run burned millions
}

TEST_CASE("fallback always delivers a verified coloring") {
    SUBCASE("petersen needs the extra color") {
        const FallbackResult res = color_with_fallback(fixtures::petersen_graph(), Algorithm::wst, 5);
        CHECK(res.class_two_claimed);
        CHECK(res.report.verdict == Verdict::proper);
        CHECK(res.report.palette == 4);
        CHECK(res.attempts >= 2);
    }
    SUBCASE("the tetrahedron does not") {
        const FallbackResult res = color_with_fallback(fixtures::complete_graph(4), Algorithm::wst, 5);
        CHECK_FALSE(res.class_two_claimed);
        CHECK(res.report.palette == 3);
        CHECK(res.attempts == 1);
    }
}

TEST_CASE("solve is deterministic in the seed") {
    const SimpleGraph g = fixtures::petersen_graph();
    const RunReport a = solve(g, Algorithm::wst, 4, 99);
    const RunReport b = solve(g, Algorithm::wst, 4, 99);
    CHECK(a.verdict == b.verdict);
    CHECK(a.coloring == b.coloring);
    CHECK(a.counters == b.counters);
}

TEST_CASE("wkp through solve reports canonical without a coloring") {
    const RunReport report = solve(fixtures::petersen_graph(), Algorithm::wkp, 3, 0);
    CHECK(report.verdict == Verdict::canonical);
    CHECK(report.coloring.empty());
}

TEST_CASE("disconnected graphs: per-component walks, global verdict") {
    // triangle + square: max degree 2, the odd component forces the claim
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {0, 2},
                                                        {3, 4}, {4, 5}, {5, 6}, {3, 6}};
    const SimpleGraph g(7, edges);
    CHECK(g.max_degree() == 2);
    const RunReport claim = wst(g, false, 1);
    CHECK(claim.verdict == Verdict::chromatic_claim);

    const FallbackResult fixed = color_with_fallback(g, Algorithm::wst, 1);
    CHECK(fixed.report.verdict == Verdict::proper);
    CHECK(fixed.report.palette == 3);
}

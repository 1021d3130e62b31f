#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "symctl/cost.hh"
#include "symctl/costs.hh"
#include "symctl/errors.hh"
#include "symctl/problem.hh"
#include "symctl/run.hh"
#include "symctl/sets.hh"
#include "symctl/shortest_path.hh"

using namespace symctl;

namespace {

const ExtendedCost kInf = ExtendedCost::infinity();

FiniteProblem two_state() {
  /* 0 -u0-> 1 (cost 2), 0 -u1-> {0,1} (cost 1), 1 terminal 3 */
  FiniteProblemBuilder b(2, 2);
  b.set_terminal(0, kInf);
  b.set_terminal(1, ExtendedCost(3.0));
  b.add_transition(0, 0, 1, ExtendedCost(2.0));
  b.add_transition(0, 1, 0, ExtendedCost(1.0));
  b.add_transition(0, 1, 1, ExtendedCost(1.0));
  b.add_transition(1, 0, 1, ExtendedCost(0.0));
  b.add_transition(1, 1, 1, ExtendedCost(0.0));
  return b.build();
}

}  // namespace

TEST(ExtendedCost, Arithmetic) {
  EXPECT_EQ(ExtendedCost(1.5) + ExtendedCost(2.0), ExtendedCost(3.5));
  EXPECT_EQ(ExtendedCost(1.0) + kInf, kInf);
  EXPECT_TRUE(ExtendedCost(7.0) < kInf);
  EXPECT_THROW(ExtendedCost(-1.0), InputError);
  EXPECT_THROW(ExtendedCost(std::nan("")), InputError);
}

TEST(ExtendedCost, TextRoundTrip) {
  for (double v : {0.0, 0.1, 1.0 / 3.0, 47.52, 1e-300})
    EXPECT_EQ(parse_cost(format_cost(ExtendedCost(v))), ExtendedCost(v));
  EXPECT_EQ(format_cost(kInf), "inf");
  EXPECT_EQ(parse_cost("inf"), kInf);
  EXPECT_THROW(parse_cost("-2"), InputError);
  EXPECT_THROW(parse_cost("abc"), InputError);
}

TEST(FiniteProblem, BuilderRejectsBadInput) {
  FiniteProblemBuilder b(2, 1);
  b.add_transition(0, 0, 1, ExtendedCost(1.0));
  EXPECT_THROW(b.build(), InputError);  // pair (1,0) has no successor
  EXPECT_THROW(b.add_transition(2, 0, 0, ExtendedCost(1.0)), InputError);
  b.add_transition(0, 0, 1, ExtendedCost(2.0));
  b.add_transition(1, 0, 0, ExtendedCost(1.0));
  EXPECT_THROW(b.build(), InputError);  // duplicate (0,0,1)
}

TEST(FiniteProblem, Queries) {
  auto p = two_state();
  EXPECT_EQ(p.state_count(), 2u);
  EXPECT_EQ(p.transition_count(), 5u);
  EXPECT_TRUE(p.is_successor(0, 1, 0));
  EXPECT_FALSE(p.is_successor(0, 0, 0));
  EXPECT_EQ(p.running(0, 1, 0), ExtendedCost(2.0));
  EXPECT_EQ(p.running(0, 0, 0), kInf);
  auto inv = build_inverse(p);
  EXPECT_EQ(inv.predecessors(1).size(), 4u);
}

TEST(Focp, RoundTrip) {
  auto p = two_state();
  std::stringstream ss;
  write_focp(ss, p);
  EXPECT_EQ(read_focp(ss), p);
}

TEST(Focp, RejectsMalformed) {
  for (const char* text : {"", "G 0 1\n", "focp 1 1\nG 0 1\n", "focp 1 1\nT 0 0 0 1\nX\n",
                           "focp 1 1\nT 0 0 0 1\nG 0 -1\n", "focp 1 1\nT 0 0 5 1\n", "focp 0 1\n",
                           "focp 1 1\nT 0 0 0 1\nG 0 1\nG 0 2\n"}) {
    std::stringstream ss(text);
    EXPECT_THROW(read_focp(ss), InputError) << text;
  }
  std::stringstream ok("# comment\nfocp 1 1\nT 0 0 0 inf  # self loop\n");
  auto p = read_focp(ok);
  EXPECT_EQ(p.terminal(0), kInf);  // missing G defaults to inf
}

TEST(Run, CostFunctional) {
  auto p = two_state();
  symctl::Run r{{1, 0}, {0, 0, 1}, {0, 0, 1}};
  EXPECT_EQ(eval_cost_functional(r, p), ExtendedCost(1.0 + 2.0 + 3.0));
  symctl::Run never{{1}, {0}, {0, 1}};
  EXPECT_EQ(eval_cost_functional(never, p), kInf);
  symctl::Run bad{{0}, {0, 1}, {0, 0}};
  EXPECT_THROW(eval_cost_functional(bad, p), InputError);
}

TEST(ShortestPath, SmallGraph) {
  std::vector<Arc> arcs{{0, 1, 4}, {0, 2, 1}, {2, 1, 2}, {1, 3, 5}};
  auto p = make_shortest_path(5, arcs, 0);
  EXPECT_EQ(p.state_count(), 5u);
  EXPECT_EQ(p.terminal(0), ExtendedCost::zero());
  EXPECT_THROW(make_shortest_path(2, {{0, 3, 1}}, 0), InputError);
  EXPECT_THROW(make_shortest_path(2, {{0, 1, -1}}, 0), InputError);
}

TEST(Sets, ParseAndQuery) {
  auto d = parse_set("quad 2  63 6 6 56  0 0  42");
  EXPECT_TRUE(d.contains(Point{0.0, 0.0}));
  EXPECT_FALSE(d.contains(Point{1.0, 0.0}));
  EXPECT_TRUE(d.box_inside(Box{{-0.1, -0.1}, {0.1, 0.1}}));
  EXPECT_FALSE(d.box_meets(Box{{2.0, 2.0}, {3.0, 3.0}}));
  auto b = parse_set("box 0.415 0.69");
  EXPECT_TRUE(b.contains(Point{0.5}));
  EXPECT_FALSE(b.contains(Point{0.415}));
  auto c = parse_set("cbox 0 1");
  EXPECT_TRUE(c.contains(Point{1.0}));
  auto u = parse_set("box 0 1 | box 2 3");
  EXPECT_TRUE(u.contains(Point{2.5}));
  auto n = parse_set("not cbox -2pi 2pi -3 3");
  EXPECT_TRUE(n.contains(Point{7.0, 0.0}));
  EXPECT_FALSE(n.contains(Point{6.0, 0.0}));
  EXPECT_EQ(parse_set(u.to_string()).to_string(), u.to_string());
  EXPECT_THROW(parse_set("box 1"), InputError);
  EXPECT_THROW(parse_set("sphere 1 2"), InputError);
  EXPECT_DOUBLE_EQ(parse_number("-2pi"), -2.0 * 3.141592653589793);
}

TEST(Costs, Models) {
  auto target = parse_set("box 0 1");
  auto obstacle = parse_set("box 2 3");
  auto mt = make_min_time(target, obstacle);
  EXPECT_EQ(mt.terminal(Point{0.5}), ExtendedCost::zero());
  EXPECT_EQ(mt.terminal(Point{1.5}), kInf);
  EXPECT_EQ(mt.running(Point{1.5}, Point{0.5}, Point{0.0}), ExtendedCost(1.0));
  EXPECT_EQ(mt.running(Point{2.5}, Point{0.5}, Point{0.0}), kInf);
  auto en = make_energy_entry(target, obstacle);
  EXPECT_DOUBLE_EQ(en.running_value(Point{0.5}), 0.25);
  auto ra = make_reach_avoid(target, obstacle);
  EXPECT_DOUBLE_EQ(ra.running_value(Point{3.0}), 0.0);
  EXPECT_TRUE(mt.terminal_finite_on(Box{{0.2}, {0.8}}));
  EXPECT_FALSE(mt.terminal_finite_on(Box{{0.2}, {1.2}}));
  EXPECT_TRUE(mt.infinite_everywhere_on(Box{{2.2}, {2.8}}));
  EXPECT_FALSE(mt.running_finite_on(Box{{1.5}, {2.5}}));
  EXPECT_EQ(parse_cost_kind("energy_entry"), RunningCostKind::InputSquared);
  EXPECT_THROW(parse_cost_kind("bogus"), InputError);
}

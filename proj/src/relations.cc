/*
 * relations.cc
 */

#include "symctl/relations.hh"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "symctl/errors.hh"

namespace symctl {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<StateId, StateId>>& pairs, bool forward,
               std::vector<std::size_t>& off, std::vector<StateId>& adj) {
  off.assign(n + 1, 0);
  for (auto [a, b] : pairs) ++off[(forward ? a : b) + 1];
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  adj.assign(pairs.size(), 0);
  auto pos = off;
  /* pairs are sorted by (p1,p2), so both directions come out sorted */
  for (auto [a, b] : pairs) adj[pos[forward ? a : b]++] = forward ? b : a;
}

std::string describe(ExtendedCost a, const char* op, ExtendedCost b) {
  return format_cost(a) + " " + op + " " + format_cost(b);
}

}  // namespace

Relation::Relation(std::size_t n1, std::size_t n2, std::vector<std::pair<StateId, StateId>> pairs)
    : n1_(n1), n2_(n2), pairs_(std::move(pairs)) {
  for (auto [a, b] : pairs_)
    if (a >= n1_ || b >= n2_) throw InputError("relation pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  build_csr(n1_, pairs_, true, fwd_off_, fwd_);
  build_csr(n2_, pairs_, false, inv_off_, inv_);
}

Relation Relation::identity(std::size_t n) {
  std::vector<std::pair<StateId, StateId>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {StateId(i), StateId(i)};
  return Relation(n, n, std::move(pairs));
}

bool Relation::contains(StateId p1, StateId p2) const noexcept {
  if (p1 >= n1_) return false;
  auto img = image(p1);
  return std::binary_search(img.begin(), img.end(), p2);
}

bool Relation::is_strict() const noexcept {
  for (std::size_t p = 0; p < n1_; ++p)
    if (fwd_off_[p] == fwd_off_[p + 1]) return false;
  return true;
}

void write_relation(std::ostream& os, const Relation& q) {
  for (auto [a, b] : q.pairs()) os << a << ' ' << b << '\n';
}

Relation read_relation(std::istream& is, std::size_t n1, std::size_t n2) {
  std::vector<std::pair<StateId, StateId>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long a, b;
    std::string extra;
    if (!(ls >> a)) {
      if (ls.eof()) continue;
      throw InputError("relation line " + std::to_string(lineno) + ": expected '<p1> <p2>'");
    }
    if (!(ls >> b) || (ls >> extra) || a < 0 || b < 0)
      throw InputError("relation line " + std::to_string(lineno) + ": expected '<p1> <p2>'");
    if (std::size_t(a) >= n1 || std::size_t(b) >= n2)
      throw InputError("relation line " + std::to_string(lineno) + ": state index out of range");
    pairs.emplace_back(StateId(a), StateId(b));
  }
  return Relation(n1, n2, std::move(pairs));
}

void Verdict::add(Violation v) {
  holds = false;
  ++violation_count;
  if (violations.size() < kMaxListed) violations.push_back(std::move(v));
}

void write_verdict(std::ostream& os, const Verdict& v) {
  os << "verdict=" << (v.holds ? "holds" : "fails") << '\n';
  os << "violations=" << v.violation_count << '\n';
  os << "gated=" << v.gated << '\n';
  for (const auto& x : v.violations)
    os << x.tag << " p1=" << x.p1 << " p2=" << x.p2 << ": " << x.detail << '\n';
  if (v.violation_count > v.violations.size())
    os << "... " << (v.violation_count - v.violations.size()) << " more\n";
}

Verdict check_vfrr(const FiniteProblem& p1, const FiniteProblem& p2, const Relation& q,
                   std::span<const InputId> input_map) {
  if (q.left_size() != p1.state_count() || q.right_size() != p2.state_count())
    throw InputError("relation sizes do not match the problems");
  Verdict verdict;
  const auto m2 = p2.input_count();

  /* (i): every abstract input is a concrete input */
  std::vector<InputId> map(m2);
  bool inputs_ok = true;
  for (InputId u = 0; u < m2; ++u) {
    map[u] = input_map.empty() ? u : (u < input_map.size() ? input_map[u] : ControllerTable::kStop);
    if (map[u] >= p1.input_count()) {
      verdict.add({"(i)", 0, 0, "input " + std::to_string(u) + " of the second problem has no counterpart"});
      inputs_ok = false;
    }
  }

  if (!q.is_strict())
    for (StateId a = 0; a < p1.state_count(); ++a)
      if (q.image(a).empty()) verdict.add({"strict", a, 0, "state has no related state"});

  for (auto [a, b] : q.pairs()) {
    if (p1.terminal(a) > p2.terminal(b))
      verdict.add({"(ii)", a, b, describe(p1.terminal(a), ">", p2.terminal(b))});
    if (!inputs_ok) continue;
    for (InputId u = 0; u < m2; ++u) {
      const auto u1 = map[u];
      const auto pair1 = p1.pair_index(a, u1);
      const auto succ1 = p1.pair_successors(pair1);
      for (std::size_t k = 0; k < succ1.size(); ++k) {
        const auto q1 = succ1[k];
        const auto g1 = p1.pair_cost(pair1, k);
        for (auto q2 : q.image(q1)) {
          if (!p2.is_successor(b, u, q2)) {
            verdict.add({"(iv)", a, b,
                         "u=" + std::to_string(u) + ": related successor " + std::to_string(q2) + " of " +
                             std::to_string(q1) + " missing from F2"});
            continue;
          }
          auto g2 = p2.running(b, q2, u);
          if (g1 > g2)
            verdict.add({"(iii)", a, b,
                         "u=" + std::to_string(u) + " q1=" + std::to_string(q1) + " q2=" + std::to_string(q2) + ": " +
                             describe(g1, ">", g2)});
        }
      }
    }
  }
  return verdict;
}

Verdict check_vasr(const FiniteProblem& p1, const FiniteProblem& p2, const Relation& q, double eps) {
  if (q.left_size() != p1.state_count() || q.right_size() != p2.state_count())
    throw InputError("relation sizes do not match the problems");
  if (!(eps >= 0.0)) throw InputError("eps must be non-negative");
  Verdict verdict;

  /* (P1(0)) o Q^{-1}, with sup over an empty preimage taken as 0 */
  std::vector<ExtendedCost> zero(p1.state_count(), ExtendedCost::zero());
  const auto p1_zero = dp_operator(p1, zero);
  std::vector<ExtendedCost> pulled(p2.state_count(), ExtendedCost::zero());
  for (auto [a, b] : q.pairs()) pulled[b] = std::max(pulled[b], p1_zero[a]);

  const ExtendedCost slack(eps);
  for (auto [a, b] : q.pairs()) {
    if (p1.terminal(a) > p2.terminal(b))
      verdict.add({"(i)", a, b, describe(p1.terminal(a), ">", p2.terminal(b))});
    if (p1.terminal(a) == ExtendedCost::zero()) continue;

    for (InputId u2 = 0; u2 < p2.input_count(); ++u2) {
      const auto pair2 = p2.pair_index(b, u2);
      const auto succ2 = p2.pair_successors(pair2);
      bool bounded = true;
      for (std::size_t k = 0; k < succ2.size() && bounded; ++k)
        bounded = p2.pair_cost(pair2, k).is_finite() && pulled[succ2[k]].is_finite();
      if (!bounded) {
        ++verdict.gated;
        continue;
      }

      bool found = false;
      for (InputId u1 = 0; u1 < p1.input_count() && !found; ++u1) {
        const auto pair1 = p1.pair_index(a, u1);
        const auto succ1 = p1.pair_successors(pair1);
        bool all = true;
        for (std::size_t k = 0; k < succ1.size() && all; ++k) {
          const auto g1 = p1.pair_cost(pair1, k);
          bool some = false;
          for (auto q2 : q.image(succ1[k])) {
            if (!p2.is_successor(b, u2, q2)) continue;
            if (g1 <= slack + p2.running(b, q2, u2)) {
              some = true;
              break;
            }
          }
          all = some;
        }
        found = all;
      }
      if (!found) verdict.add({"(ii)", a, b, "u2=" + std::to_string(u2) + ": no matching input of the first problem"});
    }
  }
  return verdict;
}

RefinedController::RefinedController(GridCover cover, ControllerTable table)
    : cover_(std::move(cover)), table_(std::move(table)) {
  if (table_.size() != cover_.state_count())
    throw InputError("controller has " + std::to_string(table_.size()) + " entries, cover has " +
                     std::to_string(cover_.state_count()) + " states");
}

ControlAction RefinedController::action(std::span<const double> x) const {
  const auto p = cover_.quantize(x);
  if (p == cover_.overflow() || table_.is_stop(p)) return {0, true};
  return {table_.input(p), false};
}

RefinedController serial_compose(const ControllerTable& table, const GridCover& cover) {
  return RefinedController(cover, table);
}

ExtendedCost pointwise_upper_bound(std::span<const ExtendedCost> w, const GridCover& cover,
                                   std::span<const double> x) {
  if (w.size() != cover.state_count()) throw InputError("value array size does not match the cover");
  ExtendedCost sup = ExtendedCost::zero();
  for (auto p : cover.members(x)) sup = std::max(sup, w[p]);
  return sup;
}

}  // namespace symctl

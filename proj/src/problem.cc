/*
 * problem.cc
 */

#include "symctl/problem.hh"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "symctl/errors.hh"

namespace symctl {

FiniteProblem::FiniteProblem(std::size_t n, std::size_t m, std::vector<ExtendedCost> terminal,
                             std::vector<std::uint64_t> offsets, std::vector<StateId> successors,
                             std::vector<ExtendedCost> transition_cost)
    : n_(n),
      m_(m),
      terminal_(std::move(terminal)),
      offsets_(std::move(offsets)),
      successors_(std::move(successors)),
      transition_cost_(std::move(transition_cost)) {
  if (transition_cost_.size() != successors_.size())
    throw InputError("transition cost array does not match successor array");
  validate();
}

FiniteProblem FiniteProblem::with_pair_costs(std::size_t n, std::size_t m,
                                             std::vector<ExtendedCost> terminal,
                                             std::vector<std::uint64_t> offsets,
                                             std::vector<StateId> successors,
                                             std::vector<ExtendedCost> pair_cost) {
  FiniteProblem p;
  p.n_ = n;
  p.m_ = m;
  p.terminal_ = std::move(terminal);
  p.offsets_ = std::move(offsets);
  p.successors_ = std::move(successors);
  p.pair_cost_ = std::move(pair_cost);
  if (p.pair_cost_.size() != n * m) throw InputError("pair cost array has wrong size");
  p.validate();
  return p;
}

void FiniteProblem::validate() const {
  if (n_ == 0 || m_ == 0) throw InputError("problem needs at least one state and one input");
  if (n_ > std::numeric_limits<StateId>::max() || n_ * m_ > std::numeric_limits<std::uint32_t>::max())
    throw InputError("problem too large for 32-bit indices");
  if (terminal_.size() != n_) throw InputError("terminal cost array has wrong size");
  if (offsets_.size() != n_ * m_ + 1 || offsets_.front() != 0 || offsets_.back() != successors_.size())
    throw InputError("malformed offsets array");
  std::vector<std::uint32_t> seen(n_, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t pair = 0; pair < n_ * m_; ++pair) {
    if (offsets_[pair + 1] <= offsets_[pair])
      throw InputError("pair (" + std::to_string(pair / m_) + "," + std::to_string(pair % m_) +
                       ") has no successor");
    for (auto q : pair_successors(pair)) {
      if (q >= n_) throw InputError("successor index out of range");
      if (seen[q] == pair) throw InputError("duplicate successor in pair list");
      seen[q] = static_cast<std::uint32_t>(pair);
    }
  }
}

bool FiniteProblem::is_successor(StateId p, InputId u, StateId q) const noexcept {
  auto s = successors(p, u);
  return std::find(s.begin(), s.end(), q) != s.end();
}

ExtendedCost FiniteProblem::running(StateId p, StateId q, InputId u) const noexcept {
  auto pair = pair_index(p, u);
  auto s = pair_successors(pair);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == q) return pair_cost(pair, k);
  return ExtendedCost::infinity();
}

bool operator==(const FiniteProblem& a, const FiniteProblem& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_ || a.terminal_ != b.terminal_ || a.offsets_ != b.offsets_ ||
      a.successors_ != b.successors_)
    return false;
  for (std::size_t pair = 0; pair < a.pair_count(); ++pair)
    for (std::size_t k = 0; k < a.pair_successors(pair).size(); ++k)
      if (a.pair_cost(pair, k) != b.pair_cost(pair, k)) return false;
  return true;
}

FiniteProblemBuilder::FiniteProblemBuilder(std::size_t n, std::size_t m)
    : n_(n), m_(m), terminal_(n, ExtendedCost::infinity()) {}

void FiniteProblemBuilder::set_terminal(StateId p, ExtendedCost c) {
  if (p >= n_) throw InputError("terminal cost for state out of range");
  terminal_[p] = c;
}

void FiniteProblemBuilder::add_transition(StateId p, InputId u, StateId q, ExtendedCost g) {
  if (p >= n_ || q >= n_ || u >= m_)
    throw InputError("transition (" + std::to_string(p) + "," + std::to_string(u) + "," +
                     std::to_string(q) + ") out of range");
  entries_.push_back({std::size_t(p) * m_ + u, q, g});
}

FiniteProblem FiniteProblemBuilder::build() const {
  auto entries = entries_;
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.pair != b.pair ? a.pair < b.pair : a.target < b.target;
  });
  std::vector<std::uint64_t> offsets(n_ * m_ + 1, 0);
  std::vector<StateId> succ;
  std::vector<ExtendedCost> cost;
  succ.reserve(entries.size());
  cost.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].pair == entries[i - 1].pair && entries[i].target == entries[i - 1].target)
      throw InputError("duplicate transition (" + std::to_string(entries[i].pair / m_) + "," +
                       std::to_string(entries[i].pair % m_) + "," +
                       std::to_string(entries[i].target) + ")");
    ++offsets[entries[i].pair + 1];
    succ.push_back(entries[i].target);
    cost.push_back(entries[i].cost);
  }
  for (std::size_t i = 0; i < n_ * m_; ++i) offsets[i + 1] += offsets[i];
  return FiniteProblem(n_, m_, terminal_, std::move(offsets), std::move(succ), std::move(cost));
}

InverseAdjacency build_inverse(const FiniteProblem& problem) {
  InverseAdjacency inv;
  const auto n = problem.state_count();
  inv.offsets.assign(n + 1, 0);
  for (std::size_t pair = 0; pair < problem.pair_count(); ++pair)
    for (auto q : problem.pair_successors(pair)) ++inv.offsets[q + 1];
  for (std::size_t q = 0; q < n; ++q) inv.offsets[q + 1] += inv.offsets[q];
  inv.pairs.resize(problem.transition_count());
  std::vector<std::uint64_t> fill(inv.offsets.begin(), inv.offsets.end() - 1);
  for (std::size_t pair = 0; pair < problem.pair_count(); ++pair)
    for (auto q : problem.pair_successors(pair)) inv.pairs[fill[q]++] = static_cast<std::uint32_t>(pair);
  return inv;
}

void write_focp(std::ostream& os, const FiniteProblem& problem) {
  const auto n = problem.state_count();
  const auto m = problem.input_count();
  os << "focp " << n << ' ' << m << '\n';
  for (StateId p = 0; p < n; ++p) os << "G " << p << ' ' << format_cost(problem.terminal(p)) << '\n';
  for (StateId p = 0; p < n; ++p)
    for (InputId u = 0; u < m; ++u) {
      auto pair = problem.pair_index(p, u);
      auto s = problem.pair_successors(pair);
      for (std::size_t k = 0; k < s.size(); ++k)
        os << "T " << p << ' ' << u << ' ' << s[k] << ' ' << format_cost(problem.pair_cost(pair, k))
           << '\n';
    }
}

namespace {

std::uint64_t parse_index(const std::string& tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    if (tok.empty() || tok[0] == '-') throw std::invalid_argument("negative");
    auto v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line) + ": bad index '" + tok + "'");
  }
}

}  // namespace

FiniteProblem read_focp(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<FiniteProblemBuilder> builder;
  std::size_t n = 0;
  std::vector<bool> terminal_seen;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (tag == "focp") {
      if (builder) throw InputError(where() + "duplicate header");
      if (tok.size() != 2) throw InputError(where() + "header must be 'focp <n> <m>'");
      n = parse_index(tok[0], lineno);
      auto m = parse_index(tok[1], lineno);
      if (n == 0 || m == 0) throw InputError(where() + "n and m must be positive");
      builder.emplace(n, m);
      terminal_seen.assign(n, false);
    } else if (!builder) {
      throw InputError(where() + "record before 'focp' header");
    } else if (tag == "G") {
      if (tok.size() != 2) throw InputError(where() + "expected 'G <p> <value>'");
      auto p = parse_index(tok[0], lineno);
      if (p >= n) throw InputError(where() + "state out of range");
      if (terminal_seen[p]) throw InputError(where() + "duplicate terminal cost");
      terminal_seen[p] = true;
      try {
        builder->set_terminal(static_cast<StateId>(p), parse_cost(tok[1]));
      } catch (const InputError& e) {
        throw InputError(where() + e.what());
      }
    } else if (tag == "T") {
      if (tok.size() != 4) throw InputError(where() + "expected 'T <p> <u> <q> <g>'");
      try {
        builder->add_transition(static_cast<StateId>(parse_index(tok[0], lineno)),
                                static_cast<InputId>(parse_index(tok[1], lineno)),
                                static_cast<StateId>(parse_index(tok[2], lineno)), parse_cost(tok[3]));
      } catch (const InputError& e) {
        throw InputError(where() + e.what());
      }
    } else {
      throw InputError(where() + "unknown record '" + tag + "'");
    }
  }
  if (!builder) throw InputError("missing 'focp' header");
  return builder->build();
}

FiniteProblem read_focp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_focp(in);
}

void write_focp_file(const std::string& path, const FiniteProblem& problem) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_focp(out, problem);
}

}  // namespace symctl

#include "famrank/witness.hpp"

#include <stdexcept>

#include "famrank/engine.hpp"
#include "famrank/qe/eliminate.hpp"

namespace famrank {

using qe::Formula;
using qe::Term;

namespace {

constexpr unsigned kEngineMaxUnary = 4;
constexpr std::uint64_t kEngineMaxConfigs = 50'000;

struct CaseName {
  WitnessCase kind;
  std::string_view tag;
};

constexpr CaseName kCaseNames[] = {
    {WitnessCase::ZeroaryInfinite, "zeroary-infinite"},
    {WitnessCase::UnaryInfinite, "unary-infinite"},
    {WitnessCase::ConstantsInfinite, "constants-infinite"},
    {WitnessCase::BinaryPredicate, "binary-predicate"},
    {WitnessCase::UnaryFunction, "unary-function"},
    {WitnessCase::ConstantsInfiniteSizeN, "constants-infinite-size-n"},
};

bool is_relational(WitnessCase kind) {
  return kind == WitnessCase::BinaryPredicate || kind == WitnessCase::UnaryFunction;
}

Term var(const std::string& name) { return Term::variable(name); }

Term iterate_f(Term t, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) t = Term::apply(1, std::move(t));
  return t;
}

// "a has no R-predecessor", "b has no R-successor".
Formula source(const std::string& a) { return Formula::negate(Formula::exists("z", Formula::binary(1, var("z"), var(a)))); }
Formula sink(const std::string& b) { return Formula::negate(Formula::exists("z", Formula::binary(1, var(b), var("z")))); }

// R-path of exactly `length` edges from a source to a sink.
Formula path_literal(std::size_t length) {
  std::vector<std::string> hops{"a"};
  for (std::size_t i = 1; i < length; ++i) hops.push_back("x" + std::to_string(i));
  hops.push_back("b");
  std::vector<Formula> edges;
  for (std::size_t i = 0; i + 1 < hops.size(); ++i) edges.push_back(Formula::binary(1, var(hops[i]), var(hops[i + 1])));
  Formula path = Formula::conj_all(edges);
  for (std::size_t i = length; i-- > 1;) path = Formula::exists(hops[i], std::move(path));
  Formula body = Formula::conj(Formula::conj(source("a"), sink("b")), std::move(path));
  return Formula::exists("a", Formula::exists("b", std::move(body)));
}

// Some x without f-preimage reaches a fixpoint in exactly `steps` steps.
Formula orbit_literal(std::size_t steps) {
  Formula no_preimage = Formula::negate(Formula::exists("z", Formula::equal(Term::apply(1, var("z")), var("x"))));
  Formula fixed = Formula::equal(iterate_f(var("x"), steps + 1), iterate_f(var("x"), steps));
  Formula not_earlier = Formula::negate(Formula::equal(iterate_f(var("x"), steps), iterate_f(var("x"), steps - 1)));
  return Formula::exists("x", Formula::conj(Formula::conj(std::move(no_preimage), std::move(fixed)), std::move(not_earlier)));
}

Formula size_two_premise() {
  Formula x_eq_x = Formula::equal(var("x"), var("x"));
  Formula at_least_two = Formula::exists("x", x_eq_x, 2);
  Formula at_most_two = Formula::negate(Formula::exists("x", x_eq_x, 3));
  Formula distinct = Formula::negate(Formula::equal(Term::constant(1), Term::constant(2)));
  return Formula::conj(Formula::conj(std::move(distinct), std::move(at_least_two)), std::move(at_most_two));
}

Formula tautology() { return Formula::forall("x", Formula::equal(var("x"), var("x"))); }

Formula node_sentence(const std::optional<Formula>& premise, const std::vector<Formula>& literals) {
  std::vector<Formula> parts;
  if (premise) parts.push_back(*premise);
  parts.insert(parts.end(), literals.begin(), literals.end());
  if (parts.empty()) return tautology();
  return Formula::conj_all(parts);
}

std::vector<bool> signs_of(const std::string& bits) {
  std::vector<bool> out;
  for (char b : bits) out.push_back(b == '1');
  return out;
}

bool acyclic(const qe::FiniteStructure& s) {
  // Kahn's algorithm over the relation.
  std::vector<std::size_t> indegree(s.universe_size, 0);
  for (const auto& [a, b] : *s.relation) ++indegree[b];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < s.universe_size; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& [a, b] : *s.relation) {
      if (a == v && --indegree[b] == 0) ready.push_back(b);
    }
  }
  return removed == s.universe_size;
}

class Checker {
 public:
  explicit Checker(const TwoTree& tree) : tree_(tree) {}

  CheckReport run() {
    if (!structure_ok()) return report_;
    setup_engine();
    for (const auto& [key, node] : tree_.nodes) {
      if (!satisfiable(key, node)) return report_;
      ++report_.nodes_checked;
    }
    for (const auto& [key, node] : tree_.nodes) {
      if (key.size() == tree_.depth) continue;
      if (!siblings_inconsistent(key)) return report_;
    }
    return report_;
  }

 private:
  bool fail(const std::string& node, std::string reason) {
    report_.passed = false;
    report_.failing_node = node;
    report_.reason = std::move(reason);
    return false;
  }

  bool structure_ok() {
    std::size_t expected = (std::size_t{2} << tree_.depth) - 1;
    if (tree_.depth == 0) return fail("", "depth must be at least 1");
    if (tree_.nodes.size() != expected) return fail("", "tree does not have 2^(depth+1)-1 nodes");
    for (const auto& [key, node] : tree_.nodes) {
      if (key.size() > tree_.depth || key.find_first_not_of("01") != std::string::npos) {
        return fail(key, "node key is not a bit string of length <= depth");
      }
      if (node.literals.size() != key.size()) return fail(key, "literal count differs from node level");
      if (node.sentence != node_sentence(tree_.premise, node.literals)) {
        return fail(key, "sentence is not the premise conjoined with the literals");
      }
      if (key.empty()) continue;
      const auto parent = tree_.nodes.find(key.substr(0, key.size() - 1));
      if (parent == tree_.nodes.end()) return fail(key, "missing parent");
      const auto& pl = parent->second.literals;
      if (!std::equal(pl.begin(), pl.end(), node.literals.begin())) {
        return fail(key, "child does not extend its parent's literals");
      }
    }
    return true;
  }

  void setup_engine() {
    if (is_relational(tree_.kind)) return;
    qe::SymbolUse use;
    for (const auto& [_, node] : tree_.nodes) {
      const auto u = qe::symbols_used(node.sentence);
      use.zeroary = std::max(use.zeroary, u.zeroary);
      use.unary = std::max(use.unary, u.unary);
      use.constants = std::max(use.constants, u.constants);
    }
    sig_ = MonadicSignature{use.zeroary, use.unary, use.constants};
    use_engine_ = sig_.unary <= kEngineMaxUnary && full_family_region_count(sig_) <= kEngineMaxConfigs;
  }

  bool satisfiable(const std::string& key, const TwoTreeNode& node) {
    if (use_engine_) {
      ++report_.engine_checks;
      const FamilySpec family = normalize(qe::eliminate(node.sentence, sig_));
      if (family.regions.empty()) return fail(key, "node denotes the empty family");
      // Cross-check on the lowest corner of one region.
      const Region& r = family.regions.front();
      TheoryPoint corner{r.discrete, {}};
      for (const auto& iv : r.cells) corner.cells.push_back(iv.lo);
      if (!qe::evaluate(node.sentence, qe::materialize(corner, sig_, 1'000'000))) {
        return fail(key, "engine region point does not satisfy the node sentence");
      }
      return true;
    }
    ++report_.model_checks;
    const auto model = model_for(tree_.kind, key);
    if (tree_.kind == WitnessCase::BinaryPredicate && !acyclic(model)) return fail(key, "chain model has a cycle");
    if (!qe::evaluate(node.sentence, model)) return fail(key, "constructed model does not satisfy the node");
    return true;
  }

  bool siblings_inconsistent(const std::string& parent) {
    const auto& zero = tree_.nodes.at(parent + "0");
    const auto& one = tree_.nodes.at(parent + "1");
    if (use_engine_) {
      ++report_.engine_checks;
      if (!is_empty(qe::eliminate(Formula::conj(zero.sentence, one.sentence), sig_))) {
        return fail(parent, "children are consistent with each other");
      }
      return true;
    }
    ++report_.model_checks;
    if (qe::evaluate(one.sentence, model_for(tree_.kind, parent + "0")) ||
        qe::evaluate(zero.sentence, model_for(tree_.kind, parent + "1"))) {
      return fail(parent, "a child's model satisfies its sibling");
    }
    return true;
  }

  const TwoTree& tree_;
  CheckReport report_;
  MonadicSignature sig_;
  bool use_engine_ = false;
};

}  // namespace

std::string_view to_string(WitnessCase c) {
  for (const auto& n : kCaseNames) {
    if (n.kind == c) return n.tag;
  }
  return "unknown";
}

std::optional<WitnessCase> parse_witness_case(std::string_view tag) {
  for (const auto& n : kCaseNames) {
    if (n.tag == tag) return n.kind;
  }
  return std::nullopt;
}

std::vector<WitnessCase> all_witness_cases() {
  std::vector<WitnessCase> out;
  for (const auto& n : kCaseNames) out.push_back(n.kind);
  return out;
}

std::vector<std::string> TwoTree::leaves() const {
  std::vector<std::string> out;
  for (const auto& [key, _] : nodes) {
    if (key.size() == depth) out.push_back(key);
  }
  return out;
}

Formula level_literal(WitnessCase kind, std::size_t level) {
  if (level == 0) throw std::invalid_argument("levels start at 1");
  const auto i = static_cast<std::uint32_t>(level);
  switch (kind) {
    case WitnessCase::ZeroaryInfinite:
      return Formula::zeroary(i);
    case WitnessCase::UnaryInfinite:
      return Formula::exists("x", Formula::unary(i, var("x")));
    case WitnessCase::ConstantsInfinite:
      return Formula::equal(Term::constant(1), Term::constant(i + 1));
    case WitnessCase::ConstantsInfiniteSizeN:
      return Formula::equal(Term::constant(i + 2), Term::constant(1));
    case WitnessCase::BinaryPredicate:
      return path_literal(level);
    case WitnessCase::UnaryFunction:
      return orbit_literal(level);
  }
  throw std::invalid_argument("unknown witness case");
}

TwoTree generate(WitnessCase kind, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("2-tree depth must be at least 1");
  if (is_relational(kind) && depth > kMaxRelationalDepth) {
    throw std::invalid_argument("relational 2-trees are capped at depth " + std::to_string(kMaxRelationalDepth));
  }
  TwoTree tree;
  tree.kind = kind;
  tree.depth = depth;
  if (kind == WitnessCase::ConstantsInfiniteSizeN) tree.premise = size_two_premise();

  std::vector<Formula> literals;
  for (std::size_t level = 1; level <= depth; ++level) literals.push_back(level_literal(kind, level));

  std::vector<std::string> frontier{""};
  tree.nodes[""] = TwoTreeNode{{}, node_sentence(tree.premise, {})};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      const auto& parent = tree.nodes.at(key);
      for (char bit : {'0', '1'}) {
        TwoTreeNode child;
        child.literals = parent.literals;
        child.literals.push_back(bit == '1' ? literals[level - 1] : Formula::negate(literals[level - 1]));
        child.sentence = parent.literals.empty() && !tree.premise
                             ? child.literals.back()
                             : Formula::conj(parent.sentence, child.literals.back());
        tree.nodes[key + bit] = std::move(child);
        next.push_back(key + bit);
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

qe::FiniteStructure model_for(WitnessCase kind, const std::string& bits) {
  const auto signs = signs_of(bits);
  const std::size_t n = signs.size();
  qe::FiniteStructure s;
  switch (kind) {
    case WitnessCase::ZeroaryInfinite:
      s.universe_size = 1;
      s.cell_of = {0};
      s.zeroary = signs;
      break;
    case WitnessCase::UnaryInfinite: {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < n; ++i) mask |= static_cast<std::uint32_t>(signs[i]) << i;
      s.universe_size = 1;
      s.unary_count = static_cast<unsigned>(n);
      s.cell_of = {mask};
      break;
    }
    case WitnessCase::ConstantsInfinite:
      s.constants.push_back(0);
      for (std::size_t i = 0; i < n; ++i) s.constants.push_back(signs[i] ? 0 : i + 1);
      s.universe_size = n + 1;
      s.cell_of.assign(s.universe_size, 0);
      break;
    case WitnessCase::ConstantsInfiniteSizeN:
      s.universe_size = 2;
      s.cell_of = {0, 0};
      s.constants = {0, 1};
      for (std::size_t i = 0; i < n; ++i) s.constants.push_back(signs[i] ? 0 : 1);
      break;
    case WitnessCase::BinaryPredicate: {
      // Disjoint simple chains, one with `len` edges per positive level.
      s.relation.emplace();
      std::size_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!signs[i]) continue;
        const std::size_t len = i + 1;
        for (std::size_t e = 0; e < len; ++e) s.relation->insert({next + e, next + e + 1});
        next += len + 1;
      }
      s.universe_size = std::max<std::size_t>(next, 1);
      s.cell_of.assign(s.universe_size, 0);
      break;
    }
    case WitnessCase::UnaryFunction: {
      // Chains x0 -> ... -> x_len with f(x_len) = x_len; a lone fixpoint
      // when no level is positive.
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < n; ++i) {
        if (!signs[i]) continue;
        const std::size_t len = i + 1;
        const std::size_t start = f.size();
        for (std::size_t e = 0; e < len; ++e) f.push_back(start + e + 1);
        f.push_back(start + len);
      }
      if (f.empty()) f.push_back(0);
      s.universe_size = f.size();
      s.cell_of.assign(s.universe_size, 0);
      s.function = std::move(f);
      break;
    }
  }
  return s;
}

CheckReport check(const TwoTree& tree) { return Checker(tree).run(); }

nlohmann::json to_json(const TwoTree& tree) {
  nlohmann::json nodes = nlohmann::json::object();
  for (const auto& [key, node] : tree.nodes) nodes[key] = qe::to_text(node.sentence);
  return nlohmann::json{{"case", std::string(to_string(tree.kind))}, {"depth", tree.depth}, {"nodes", nodes}};
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json out{{"passed", report.passed},
                     {"nodes_checked", report.nodes_checked},
                     {"engine_checks", report.engine_checks},
                     {"model_checks", report.model_checks}};
  if (report.failing_node) out["failure"] = {{"node", *report.failing_node}, {"reason", report.reason}};
  return out;
}

}  // namespace famrank

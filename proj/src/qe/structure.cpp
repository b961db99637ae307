#include "famrank/qe/structure.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "famrank/errors.hpp"

namespace famrank::qe {

void FiniteStructure::validate() const {
  if (universe_size == 0) throw std::invalid_argument("structures are nonempty");
  if (cell_of.size() != universe_size) throw std::invalid_argument("cell_of must list every element");
  const std::uint64_t cells = std::uint64_t{1} << unary_count;
  for (auto c : cell_of) {
    if (c >= cells) throw std::invalid_argument("element in a nonexistent cell");
  }
  for (auto e : constants) {
    if (e >= universe_size) throw std::invalid_argument("constant interpreted outside the universe");
  }
  if (relation) {
    for (const auto& [a, b] : *relation) {
      if (a >= universe_size || b >= universe_size) throw std::invalid_argument("relation pair outside the universe");
    }
  }
  if (function) {
    if (function->size() != universe_size) throw std::invalid_argument("function must be total");
    for (auto e : *function) {
      if (e >= universe_size) throw std::invalid_argument("function value outside the universe");
    }
  }
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const FiniteStructure& s) : s_(s) {}

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Zeroary:
        if (f.symbol > s_.zeroary.size()) throw UnknownSymbol("structure does not interpret Q" + std::to_string(f.symbol));
        return s_.zeroary[f.symbol - 1];
      case Formula::Kind::Unary: {
        if (f.symbol > s_.unary_count) throw UnknownSymbol("structure does not interpret P" + std::to_string(f.symbol));
        const auto e = term(f.terms[0]);
        return (s_.cell_of[e] >> (f.symbol - 1)) & 1u;
      }
      case Formula::Kind::Binary:
        if (!s_.relation || f.symbol != 1) {
          throw UnknownSymbol("structure does not interpret R" + std::to_string(f.symbol));
        }
        return s_.relation->count({term(f.terms[0]), term(f.terms[1])}) > 0;
      case Formula::Kind::Equal:
        return term(f.terms[0]) == term(f.terms[1]);
      case Formula::Kind::Not:
        return !eval(f.children[0]);
      case Formula::Kind::And:
        return eval(f.children[0]) && eval(f.children[1]);
      case Formula::Kind::Or:
        return eval(f.children[0]) || eval(f.children[1]);
      case Formula::Kind::Implies:
        return !eval(f.children[0]) || eval(f.children[1]);
      case Formula::Kind::Iff:
        return eval(f.children[0]) == eval(f.children[1]);
      case Formula::Kind::Exists: {
        std::uint64_t hits = 0;
        for (std::size_t e = 0; e < s_.universe_size && hits < f.threshold; ++e) {
          if (with_binding(f.variable, e, f.children[0])) ++hits;
        }
        return hits >= f.threshold;
      }
      case Formula::Kind::Forall:
        for (std::size_t e = 0; e < s_.universe_size; ++e) {
          if (!with_binding(f.variable, e, f.children[0])) return false;
        }
        return true;
    }
    return false;
  }

 private:
  bool with_binding(const std::string& var, std::size_t e, const Formula& body) {
    env_.emplace_back(var, e);
    const bool v = eval(body);
    env_.pop_back();
    return v;
  }

  std::size_t term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Variable:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        throw std::invalid_argument("unbound variable '" + t.name + "'");
      case Term::Kind::Constant:
        if (t.index > s_.constants.size()) {
          throw UnknownSymbol("structure does not interpret c" + std::to_string(t.index));
        }
        return s_.constants[t.index - 1];
      case Term::Kind::Apply: {
        if (!s_.function || t.index != 1) throw UnknownSymbol("structure does not interpret f" + std::to_string(t.index));
        return (*s_.function)[term(t.args[0])];
      }
    }
    return 0;
  }

  const FiniteStructure& s_;
  std::vector<std::pair<std::string, std::size_t>> env_;
};

}  // namespace

bool evaluate(const Formula& sentence, const FiniteStructure& s) {
  s.validate();
  return Evaluator(s).eval(sentence);
}

FiniteStructure materialize(const TheoryPoint& p, const MonadicSignature& sig, std::uint64_t size_budget) {
  p.validate(sig);
  const ExtNat total = p.total_size();
  if (total.is_infinite()) throw std::invalid_argument("cannot materialize a theory with an infinite cell");
  if (total.value() > size_budget) {
    throw ResourceLimit("structure of size " + total.to_string() + " exceeds budget " + std::to_string(size_budget));
  }
  FiniteStructure s;
  s.universe_size = total.value();
  s.unary_count = sig.unary;
  s.zeroary = p.discrete.zeroary;
  const auto& config = p.discrete.constants;
  std::vector<std::size_t> block_element(config.block_count());
  for (std::uint32_t cell = 0; cell < p.cells.size(); ++cell) {
    std::uint64_t used = 0;
    for (std::size_t b = 0; b < config.block_count(); ++b) {
      if (config.block_cell[b] != cell) continue;
      block_element[b] = s.cell_of.size();
      s.cell_of.push_back(cell);
      ++used;
    }
    for (std::uint64_t i = used; i < p.cells[cell].value(); ++i) s.cell_of.push_back(cell);
  }
  for (auto b : config.block_of) s.constants.push_back(block_element[b]);
  return s;
}

TheoryPoint theory_of(const FiniteStructure& s, const MonadicSignature& sig) {
  s.validate();
  if (s.unary_count != sig.unary || s.zeroary.size() != sig.zeroary || s.constants.size() != sig.constants) {
    throw SignatureMismatch("structure and signature disagree");
  }
  TheoryPoint p;
  p.discrete.zeroary = s.zeroary;
  std::map<std::size_t, std::uint32_t> block_of_element;
  for (auto e : s.constants) {
    auto [it, inserted] = block_of_element.try_emplace(e, static_cast<std::uint32_t>(block_of_element.size()));
    p.discrete.constants.block_of.push_back(it->second);
    if (inserted) p.discrete.constants.block_cell.push_back(s.cell_of[e]);
  }
  p.cells.assign(sig.cell_count(), ExtNat(0));
  for (auto c : s.cell_of) p.cells[c] += 1;
  return p;
}

}  // namespace famrank::qe

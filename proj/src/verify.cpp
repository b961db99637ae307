#include "famrank/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "famrank/classifier.hpp"
#include "famrank/engine.hpp"
#include "famrank/json_io.hpp"
#include "famrank/qe/eliminate.hpp"
#include "famrank/qe/structure.hpp"

namespace famrank::verify {

namespace {

// A value beyond every finite endpoint, constant count and size bound, so
// that all larger values are indistinguishable by the family.
std::uint64_t large_value(const FamilySpec& f) {
  std::uint64_t top = f.signature.constants;
  for (const auto& r : f.regions) {
    for (const auto& iv : r.cells) {
      top = std::max(top, iv.lo);
      if (iv.hi.is_finite()) top = std::max(top, iv.hi.value());
    }
  }
  if (const auto* exact = std::get_if<ExactSize>(&f.restriction)) top = std::max(top, exact->size);
  return top + 1;
}

class RankOracle {
 public:
  explicit RankOracle(const FamilySpec& f) : f_(f), large_(large_value(f)) {}

  std::uint64_t rank(const TheoryPoint& p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    std::vector<std::size_t> infinite;
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      if (p.cells[c].is_infinite()) infinite.push_back(c);
    }
    std::optional<std::uint64_t> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << infinite.size()); ++mask) {
      TheoryPoint q = p;
      for (std::size_t j = 0; j < infinite.size(); ++j) {
        if ((mask >> j) & 1u) q.cells[infinite[j]] = large_;
      }
      if (!contains(f_, q)) continue;
      const auto r = rank(q);
      best = std::max(best.value_or(0), r);
    }
    const std::uint64_t out = best ? *best + 1 : 0;
    memo_.emplace(p, out);
    return out;
  }

  std::uint64_t large() const { return large_; }

 private:
  const FamilySpec& f_;
  std::uint64_t large_;
  std::map<TheoryPoint, std::uint64_t> memo_;
};

// Candidate cell values inside an interval: every integer up to `top` plus
// Infinity when the interval is unbounded.
std::vector<ExtNat> candidates(const Interval& iv, std::uint64_t top) {
  std::vector<ExtNat> out;
  for (std::uint64_t v = iv.lo; v <= top && ExtNat(v) <= iv.hi; ++v) out.push_back(v);
  if (iv.unbounded()) out.push_back(ExtNat::infinity());
  return out;
}

void collect_points(const FamilySpec& f, std::uint64_t top, bool finite_only, std::optional<std::uint64_t> sum_cap,
                    std::set<TheoryPoint>& out) {
  for (const auto& r : f.regions) {
    TheoryPoint p{r.discrete, std::vector<ExtNat>(r.cells.size())};
    auto go = [&](auto&& self, std::size_t d, std::uint64_t sum) -> void {
      if (d == r.cells.size()) {
        if (contains(f, p)) out.insert(p);
        return;
      }
      for (const auto& v : candidates(r.cells[d], top)) {
        if (v.is_infinite() && finite_only) continue;
        const std::uint64_t next = v.is_infinite() ? sum : sum + v.value();
        if (sum_cap && next > *sum_cap) continue;
        p.cells[d] = v;
        self(self, d + 1, next);
      }
    };
    go(go, 0, 0);
  }
}

}  // namespace

std::uint64_t oracle_point_rank(const FamilySpec& f, const TheoryPoint& p) {
  if (!contains(f, p)) throw std::invalid_argument("point is not a member of the family");
  return RankOracle(f).rank(p);
}

RankResult oracle_rank_by_scan(const FamilySpec& f) {
  RankOracle oracle(f);
  std::set<TheoryPoint> points;
  if (const auto* exact = std::get_if<ExactSize>(&f.restriction)) {
    collect_points(f, exact->size, true, exact->size, points);
  } else {
    collect_points(f, oracle.large(), false, std::nullopt, points);
  }
  if (points.empty()) return RankResult::empty();
  std::uint64_t best = 0;
  std::uint64_t count = 0;
  std::vector<const TheoryPoint*> maximizers;
  for (const auto& p : points) {
    const auto r = oracle.rank(p);
    if (r > best || count == 0) {
      best = r;
      count = 0;
      maximizers.clear();
    }
    if (r == best) {
      ++count;
      maximizers.push_back(&p);
    }
  }
  for (const auto* p : maximizers) {
    for (const auto& v : p->cells) {
      if (v == ExtNat(oracle.large())) throw std::logic_error("maximal rank attained beyond every endpoint");
    }
  }
  return RankResult::finite(best, count);
}

std::vector<TheoryPoint> enumerate_finite_points(const FamilySpec& f, std::uint64_t cap) {
  std::set<TheoryPoint> points;
  collect_points(f, cap, true, cap, points);
  return {points.begin(), points.end()};
}

MonadicSignature random_signature(std::mt19937_64& rng, unsigned max_unary, unsigned max_zeroary,
                                  unsigned max_constants) {
  auto pick = [&rng](unsigned hi) { return std::uniform_int_distribution<unsigned>(0, hi)(rng); };
  MonadicSignature sig;
  sig.unary = pick(max_unary);
  sig.zeroary = pick(max_zeroary);
  sig.constants = pick(max_constants);
  return sig;
}

DiscreteData random_discrete(std::mt19937_64& rng, const MonadicSignature& sig) {
  DiscreteData d;
  std::bernoulli_distribution coin(0.5);
  for (unsigned j = 0; j < sig.zeroary; ++j) d.zeroary.push_back(coin(rng));
  std::uint32_t blocks = 0;
  for (unsigned i = 0; i < sig.constants; ++i) {
    const auto b = std::uniform_int_distribution<std::uint32_t>(0, blocks)(rng);
    d.constants.block_of.push_back(b);
    if (b == blocks) ++blocks;
  }
  const auto cells = static_cast<std::uint32_t>(sig.cell_count());
  for (std::uint32_t b = 0; b < blocks; ++b) {
    d.constants.block_cell.push_back(std::uniform_int_distribution<std::uint32_t>(0, cells - 1)(rng));
  }
  return d;
}

FamilySpec random_family(std::mt19937_64& rng, const MonadicSignature& sig) {
  FamilySpec f{sig, {}, NoRestriction{}};
  const auto regions = std::uniform_int_distribution<int>(1, 3)(rng);
  std::uniform_int_distribution<std::uint64_t> small(0, 1);
  std::uniform_int_distribution<int> shape(0, 2);
  for (int i = 0; i < regions; ++i) {
    Region r{random_discrete(rng, sig), Box(sig.cell_count())};
    for (auto& iv : r.cells) {
      iv.lo = small(rng);
      switch (shape(rng)) {
        case 0:
          iv.hi = iv.lo;
          break;
        case 1:
          iv.hi = iv.lo + small(rng);
          break;
        default:
          iv.hi = ExtNat::infinity();
      }
    }
    f.regions.push_back(std::move(r));
  }
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 2:
      f.restriction = InfiniteModels{};
      break;
    case 3:
      f.restriction = ExactSize{std::uniform_int_distribution<std::uint64_t>(1, 4)(rng)};
      break;
    default:
      break;
  }
  return f;
}

TheoryPoint random_finite_point(std::mt19937_64& rng, const MonadicSignature& sig, std::uint64_t max_size) {
  TheoryPoint p{random_discrete(rng, sig), {}};
  const auto cells = sig.cell_count();
  const auto blocks = p.discrete.constants.blocks_per_cell(cells);
  std::uint64_t used = 0;
  for (auto b : blocks) {
    p.cells.push_back(b);
    used += b;
  }
  const std::uint64_t low = std::max<std::uint64_t>(used, 1);
  const std::uint64_t total = std::uniform_int_distribution<std::uint64_t>(low, std::max(low, max_size))(rng);
  std::uniform_int_distribution<std::size_t> cell(0, cells - 1);
  for (std::uint64_t i = used; i < total; ++i) p.cells[cell(rng)] += 1;
  return p;
}

namespace {

class SentenceGen {
 public:
  SentenceGen(std::mt19937_64& rng, const MonadicSignature& sig) : rng_(rng), sig_(sig) {}

  qe::Formula formula(std::size_t depth, int budget) {
    const bool atom_ok = sig_.zeroary > 0 || !terms().empty();
    if (!atom_ok) return quantifier(depth, budget);
    if (budget <= 1) return atom();
    const int choice = uniform(0, depth > 0 ? 9 : 6);
    if (choice <= 2) return atom();
    if (choice == 3) return qe::Formula::negate(formula(depth, budget - 1));
    if (choice <= 6) {
      auto a = formula(depth, budget / 2);
      auto b = formula(depth, budget / 2);
      switch (uniform(0, 5)) {
        case 0:
        case 1:
          return qe::Formula::conj(std::move(a), std::move(b));
        case 2:
        case 3:
          return qe::Formula::disj(std::move(a), std::move(b));
        case 4:
          return qe::Formula::implies(std::move(a), std::move(b));
        default:
          return qe::Formula::iff(std::move(a), std::move(b));
      }
    }
    return quantifier(depth, budget);
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<qe::Term> terms() const {
    std::vector<qe::Term> out;
    for (const auto& v : scope_) out.push_back(qe::Term::variable(v));
    for (unsigned c = 1; c <= sig_.constants; ++c) out.push_back(qe::Term::constant(c));
    return out;
  }

  qe::Term term() {
    auto ts = terms();
    return ts[static_cast<std::size_t>(uniform(0, static_cast<int>(ts.size()) - 1))];
  }

  qe::Formula atom() {
    std::vector<int> kinds;
    if (sig_.zeroary > 0) kinds.push_back(0);
    if (!terms().empty()) {
      if (sig_.unary > 0) kinds.push_back(1);
      kinds.push_back(2);
    }
    switch (kinds[static_cast<std::size_t>(uniform(0, static_cast<int>(kinds.size()) - 1))]) {
      case 0:
        return qe::Formula::zeroary(static_cast<std::uint32_t>(uniform(1, static_cast<int>(sig_.zeroary))));
      case 1:
        return qe::Formula::unary(static_cast<std::uint32_t>(uniform(1, static_cast<int>(sig_.unary))), term());
      default:
        return qe::Formula::equal(term(), term());
    }
  }

  qe::Formula quantifier(std::size_t depth, int budget) {
    static const char* kNames[] = {"x", "y", "z"};
    std::string var = kNames[uniform(0, 2)];
    scope_.push_back(var);
    auto body = formula(depth - 1, budget - 1);
    scope_.pop_back();
    const int kind = uniform(0, 5);
    if (kind <= 1) return qe::Formula::forall(var, std::move(body));
    const std::uint64_t threshold = kind <= 3 ? 1 : static_cast<std::uint64_t>(kind - 2);
    return qe::Formula::exists(var, std::move(body), threshold);
  }

  std::mt19937_64& rng_;
  const MonadicSignature& sig_;
  std::vector<std::string> scope_;
};

void record(CheckResult& check, std::size_t size, nlohmann::json detail, std::size_t& best_size) {
  ++check.failures;
  if (!check.counterexample || size < best_size) {
    best_size = size;
    check.counterexample = std::move(detail);
  }
}

CheckResult check_rank_oracle(const Options& options, std::mt19937_64& rng) {
  CheckResult check{"rank_oracle", options.trials, 0, std::nullopt};
  std::size_t best = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto sig = random_signature(rng, options.max_unary, 1, 1);
    const auto family = random_family(rng, sig);
    RankResult engine = rs_and_degree(family);
    if (options.inject_fault == "rank" && engine.is_finite()) {
      engine = RankResult::finite(engine.rank(), *engine.degree() + 1);
    }
    const RankResult oracle = oracle_rank_by_scan(family);
    if (engine != oracle) {
      nlohmann::json detail{{"trial", t},
                            {"family", to_json(family)},
                            {"engine", to_json(engine)},
                            {"oracle", to_json(oracle)}};
      record(check, family.regions.size() * sig.cell_count(), std::move(detail), best);
    }
  }
  return check;
}

CheckResult check_inequalities(const Options& options, std::mt19937_64& rng) {
  CheckResult check{"rank_inequalities", options.trials, 0, std::nullopt};
  std::size_t best = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto msig = random_signature(rng, options.max_unary, 3, 3);
    const auto n = std::uniform_int_distribution<std::uint64_t>(1, 4)(rng);
    const Signature sig = msig.to_signature();
    const auto full = classify_full_family(sig);
    const auto sized = classify_size_n_family(sig, n);
    const auto infinite = classify_infinite_model_family(sig);
    bool ok = compare_rank(sized, full) <= 0 && compare_rank(infinite, full) <= 0;
    if (msig.unary >= 1 && msig.constants == 0) {
      ok = ok && infinite.is_finite() && infinite.rank() == (std::uint64_t{1} << msig.unary) - 1;
    }
    if (!ok) {
      nlohmann::json detail{{"trial", t},
                            {"signature", to_json(sig)},
                            {"size", n},
                            {"full", to_json(full)},
                            {"size_n", to_json(sized)},
                            {"infinite_models", to_json(infinite)}};
      record(check, msig.unary + msig.zeroary + msig.constants, std::move(detail), best);
    }
  }
  return check;
}

CheckResult check_qe(const Options& options, std::mt19937_64& rng) {
  CheckResult check{"qe_soundness", options.trials, 0, std::nullopt};
  std::size_t best = 0;
  constexpr int kPointsPerSentence = 5;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto sig = random_signature(rng, std::min(options.max_unary, 2u), 2, 2);
    const auto sentence = random_sentence(rng, sig, 3);
    const auto family = qe::eliminate(sentence, sig);
    for (int i = 0; i < kPointsPerSentence; ++i) {
      const auto point = random_finite_point(rng, sig, 6);
      bool direct = qe::evaluate(sentence, qe::materialize(point, sig, 6));
      if (options.inject_fault == "qe") direct = !direct;
      const bool eliminated = contains(family, point);
      if (direct != eliminated) {
        const auto text = qe::to_text(sentence);
        nlohmann::json detail{{"trial", t},
                              {"signature", to_json(sig)},
                              {"sentence", text},
                              {"point", to_json(point)},
                              {"evaluate", direct},
                              {"eliminate", eliminated}};
        record(check, text.size(), std::move(detail), best);
        break;
      }
    }
  }
  return check;
}

}  // namespace

qe::Formula random_sentence(std::mt19937_64& rng, const MonadicSignature& sig, std::size_t max_depth) {
  if (max_depth == 0) throw std::invalid_argument("random sentences need quantifier depth >= 1");
  return SentenceGen(rng, sig).formula(max_depth, 12);
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json out{{"passed", passed()}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}};
    if (c.counterexample) item["counterexample"] = *c.counterexample;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  return out;
}

Report run(const Options& options) {
  // Each check draws from its own stream.
  std::mt19937_64 rank_rng(options.seed);
  std::mt19937_64 ineq_rng(options.seed + 1);
  std::mt19937_64 qe_rng(options.seed + 2);
  Report report;
  report.checks.push_back(check_rank_oracle(options, rank_rng));
  report.checks.push_back(check_inequalities(options, ineq_rng));
  report.checks.push_back(check_qe(options, qe_rng));
  return report;
}

}  // namespace famrank::verify

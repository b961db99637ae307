// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "famrank/classifier.hpp"
#include "famrank/combinatorics.hpp"
#include "famrank/engine.hpp"
#include "famrank/qe/eliminate.hpp"
#include "famrank/qe/structure.hpp"
#include "famrank/verify.hpp"
#include "famrank/witness.hpp"
#include "oracles.hpp"

using namespace famrank;

namespace {

const ExtNat kInf = ExtNat::infinity();

// Wall-clock budgets in seconds.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc3Seconds = 10.0;
constexpr double kAc9Seconds = 30.0;

constexpr std::uint64_t kAc8Seed = 2024;
constexpr std::size_t kAc8Trials = 100;
constexpr std::uint64_t kAc9Seed = 1234;
constexpr std::size_t kAc9Trials = 1000;
constexpr std::uint64_t kDisjointnessCap = 12;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

std::string show(const RankResult& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Signature monadic(ExtNat zeroary, ExtNat unary, ExtNat constants) {
  Signature sig;
  sig.zeroary = zeroary;
  sig.unary = unary;
  sig.constants = constants;
  return sig;
}

// Stirling numbers of the second kind by the triangle recurrence.
std::uint64_t stirling(unsigned n, unsigned j) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = 1; b <= a; ++b) s[a][b] = s[a - 1][b - 1] + b * s[a - 1][b];
  }
  return j <= n ? s[n][j] : 0;
}

std::uint64_t mixed_degree(unsigned k, unsigned m, unsigned n) {
  std::uint64_t sum = 0;
  for (unsigned j = 0; j <= n; ++j) {
    std::uint64_t term = stirling(n, j);
    for (unsigned i = 0; i < j; ++i) term <<= k;
    sum += term;
  }
  return sum << m;
}

void ac1(Outcome& out) {
  struct Row {
    Signature sig;
    bool expected;
    const char* label;
  };
  std::vector<Row> rows;
  rows.push_back({Signature{}, true, "empty"});
  rows.push_back({monadic(0, 0, 1), true, "one constant"});
  rows.push_back({monadic(1, 0, 0), false, "one 0-ary"});
  rows.push_back({monadic(0, 1, 0), false, "one unary"});
  rows.push_back({monadic(0, 0, 2), false, "two constants"});
  Signature f;
  f.functions[1] = 1;
  rows.push_back({f, false, "unary function"});
  Signature r;
  r.predicates[2] = 1;
  rows.push_back({r, false, "binary predicate"});
  rows.push_back({monadic(1, 0, 1), false, "0-ary and constant"});
  rows.push_back({monadic(0, 1, 1), false, "unary and constant"});
  rows.push_back({monadic(0, 0, kInf), false, "infinitely many constants"});
  Signature cf = monadic(0, 0, 1);
  cf.functions[1] = 1;
  rows.push_back({cf, false, "constant and function"});
  rows.push_back({monadic(2, 3, 0), false, "0-ary and unary"});
  for (const auto& row : rows) {
    out.expect(is_full_family_e_minimal(row.sig) == row.expected, std::string("mismatch on ") + row.label);
    const bool coherent = classify_full_family(row.sig) == RankResult::finite(1, 1);
    out.expect(coherent == row.expected, std::string("classification disagrees on ") + row.label);
  }
}

void ac2(Outcome& out) {
  for (unsigned m = 0; m <= 6; ++m) {
    const auto got = classify_full_family(monadic(m, 0, 0));
    out.expect(got == RankResult::finite(1, 1u << m), "m=" + std::to_string(m) + " gave " + show(got));
  }
}

void ac3(Outcome& out) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned m = 0; m <= 3; ++m) {
      const auto expected = RankResult::finite(1u << k, 1u << m);
      const auto classified = classify_full_family(monadic(m, k, 0));
      const auto engine = rs_and_degree(full_family(MonadicSignature{m, k, 0}));
      const std::string at = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      out.expect(classified == expected, at + " classifier " + show(classified));
      out.expect(engine == expected, at + " engine " + show(engine));
    }
  }
}

void ac4(Outcome& out) {
  const std::vector<std::uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  const auto triangle = bell_numbers(8);
  for (unsigned n = 0; n <= 8; ++n) {
    const std::uint64_t enumerated = famrank::testing::set_partitions(n).size();
    const std::string at = "n=" + std::to_string(n);
    out.expect(triangle[n] == expected[n], at + " triangle");
    out.expect(enumerated == expected[n], at + " enumeration");
    const auto got = classify_full_family(monadic(0, 0, n));
    out.expect(got == RankResult::finite(1, expected[n]), at + " classifier " + show(got));
  }
}

void ac5(Outcome& out) {
  std::size_t cases = 0;
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (unsigned n = 0; n <= 3; ++n) {
        ++cases;
        const auto engine = rs_and_degree(full_family(MonadicSignature{m, k, n}));
        const auto expected = RankResult::finite(1u << k, mixed_degree(k, m, n));
        out.expect(engine == expected, "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) + " engine " + show(engine));
      }
    }
  }
  out.expect(cases == 36, "case count");
}

void ac6(Outcome& out) {
  std::vector<Signature> table;
  for (int kind = 0; kind < 3; ++kind) {
    Signature s;
    (kind == 0 ? s.zeroary : kind == 1 ? s.unary : s.constants) = kInf;
    table.push_back(s);
  }
  table.push_back(monadic(kInf, kInf, kInf));
  table.push_back(monadic(1, 2, kInf));
  table.push_back(monadic(kInf, 1, 3));
  for (unsigned arity : {2u, 3u, 5u}) {
    Signature s;
    s.predicates[arity] = 1;
    table.push_back(s);
  }
  Signature many;
  many.predicates[2] = kInf;
  table.push_back(many);
  Signature mixed = monadic(1, 1, 1);
  mixed.predicates[4] = 2;
  table.push_back(mixed);
  for (unsigned arity : {1u, 2u, 3u}) {
    Signature s;
    s.functions[arity] = 1;
    table.push_back(s);
  }
  Signature fmany = monadic(0, 0, 1);
  fmany.functions[1] = kInf;
  table.push_back(fmany);
  Signature fmixed = monadic(2, 2, 2);
  fmixed.functions[2] = 3;
  table.push_back(fmixed);
  Signature both;
  both.predicates[2] = 1;
  both.functions[1] = 1;
  table.push_back(both);
  table.push_back(monadic(0, kInf, 0));
  table.back().predicates[3] = 1;
  Signature rel_inf_const = monadic(0, 0, kInf);
  rel_inf_const.predicates[2] = 1;
  table.push_back(rel_inf_const);
  table.push_back(monadic(0, 0, kInf));
  table.back().functions[1] = 1;
  out.expect(table.size() == 20, "table size " + std::to_string(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.expect(classify_full_family(table[i]).is_infinite(), "row " + std::to_string(i) + " not infinite");
  }
  for (auto c : all_witness_cases()) {
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto report = check(generate(c, d));
      out.expect(report.passed, std::string(to_string(c)) + " depth " + std::to_string(d) + ": " + report.reason);
    }
  }
}

void ac7(Outcome& out) {
  struct Row {
    Signature sig;
    std::uint64_t n;
    bool finite;
  };
  Signature binary;
  binary.predicates[2] = 1;
  Signature binary_inf;
  binary_inf.predicates[2] = kInf;
  Signature func_inf;
  func_inf.functions[1] = kInf;
  Signature func_one;
  func_one.functions[1] = 1;
  const std::vector<Row> rows{
      {Signature{}, 1, true},
      {monadic(0, 1, 0), 2, true},
      {monadic(2, 2, 2), 4, true},
      {monadic(0, 0, kInf), 1, true},
      {monadic(0, 0, kInf), 2, false},
      {monadic(0, kInf, 0), 1, false},
      {monadic(0, kInf, 0), 2, false},
      {monadic(kInf, 0, 0), 1, false},
      {monadic(1, 1, kInf), 1, true},
      {monadic(1, 1, kInf), 3, false},
      {binary, 3, true},
      {binary_inf, 1, false},
      {func_inf, 1, true},
      {func_inf, 2, false},
      {func_one, 5, true},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto got = classify_size_n_family(rows[i].sig, rows[i].n);
    const bool finite_zero = got.is_finite() && got.rank() == 0;
    out.expect(finite_zero == rows[i].finite, "row " + std::to_string(i) + " gave " + show(got));
    out.expect(got.is_finite() || got.is_infinite(), "row " + std::to_string(i) + " empty");
  }
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; m <= 1; ++m) {
      for (unsigned c = 0; c <= 2; ++c) {
        for (unsigned n = 1; n <= 5; ++n) {
          const MonadicSignature sig{m, k, c};
          const auto got = classify_size_n_family(sig.to_signature(), n);
          const auto counted = count_points(full_family(sig, ExactSize{n}), kInf);
          const auto brute = famrank::testing::isomorphism_classes(sig, n);
          const std::string at = "k=" + std::to_string(k) + " m=" + std::to_string(m) + " c=" + std::to_string(c) +
                                 " n=" + std::to_string(n);
          out.expect(counted == ExtNat(brute), at + " count_points");
          out.expect(got == RankResult::finite(0, brute), at + " classifier " + show(got));
        }
      }
    }
  }
}

void ac8(Outcome& out) {
  std::mt19937_64 rng(kAc8Seed);
  for (std::size_t t = 0; t < kAc8Trials; ++t) {
    const auto msig = verify::random_signature(rng, 3, 3, 3);
    const auto n = std::uniform_int_distribution<std::uint64_t>(1, 4)(rng);
    const auto sig = msig.to_signature();
    const auto full = classify_full_family(sig);
    const auto sized = classify_size_n_family(sig, n);
    const auto infinite = classify_infinite_model_family(sig);
    const std::string at = "trial " + std::to_string(t);
    out.expect(compare_rank(sized, full) <= 0, at + " size-n above full");
    out.expect(compare_rank(infinite, full) <= 0, at + " infinite above full");
    if (msig.unary >= 1 && msig.constants == 0) {
      const auto oracle = verify::oracle_rank_by_scan(full_family(msig, InfiniteModels{}));
      const std::uint64_t expected = (std::uint64_t{1} << msig.unary) - 1;
      out.expect(infinite.is_finite() && infinite.rank() == expected, at + " infinite rank " + show(infinite));
      out.expect(oracle.is_finite() && oracle.rank() == expected, at + " oracle rank " + show(oracle));
    }
  }
}

void ac9(Outcome& out) {
  std::mt19937_64 rng(kAc9Seed);
  std::size_t mismatches = 0;
  std::size_t comparisons = 0;
  for (std::size_t t = 0; t < kAc9Trials; ++t) {
    const auto sig = verify::random_signature(rng, 2, 2, 2);
    const auto sentence = verify::random_sentence(rng, sig, 3);
    const auto family = qe::eliminate(sentence, sig);
    for (int i = 0; i < 5; ++i) {
      const auto p = verify::random_finite_point(rng, sig, 6);
      ++comparisons;
      if (contains(family, p) != qe::evaluate(sentence, qe::materialize(p, sig, 6))) {
        if (mismatches == 0) out.note << "first mismatch: " << qe::to_text(sentence) << "; ";
        ++mismatches;
      }
    }
  }
  out.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  out.note << comparisons << " comparisons";
}

void ac10(Outcome& out) {
  std::vector<MonadicSignature> sigs;
  for (unsigned m = 0; m <= 6; ++m) sigs.push_back({m, 0, 0});
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned m = 0; m <= 3; ++m) sigs.push_back({m, k, 0});
  }
  for (unsigned n = 0; n <= 8; ++n) sigs.push_back({0, 0, n});
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (unsigned n = 0; n <= 3; ++n) sigs.push_back({m, k, n});
    }
  }
  for (const auto& sig : sigs) {
    const auto f = full_family(sig);
    const auto whole = rs_and_degree(f);
    const auto parts = decompose_alpha_minimal(f);
    const std::string at = "m=" + std::to_string(sig.zeroary) + " k=" + std::to_string(sig.unary) +
                           " n=" + std::to_string(sig.constants);
    out.expect(parts.size() == *whole.degree(), at + " part count");
    FamilySpec cover{sig, {}, NoRestriction{}};
    ExtNat part_total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.expect(rs_and_degree(parts[i]) == RankResult::finite(whole.rank(), 1), at + " part not minimal");
      if (parts.size() <= 64) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          out.expect(is_empty(intersect(parts[i], parts[j])), at + " parts overlap");
        }
      }
      part_total += count_points(parts[i], kDisjointnessCap);
      cover.regions.insert(cover.regions.end(), parts[i].regions.begin(), parts[i].regions.end());
    }
    out.expect(equivalent(cover, f), at + " parts do not cover");
    // Covering plus additive counts rules out overlaps among small models.
    out.expect(part_total == count_points(f, kDisjointnessCap), at + " part counts do not add up");
    // Parts have degree 1, so the maximal points are split one per part.
    out.expect(maximal_rank_points(cover).size() == parts.size(), at + " maximal points shared");
  }
}

void ac11(Outcome& out) {
  std::size_t patterns = 0;
  for (unsigned k = 0; k <= 3; ++k) {
    const MonadicSignature sig{0, k, 0};
    const auto full = full_family(sig);
    const std::size_t cells = sig.cell_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      ++patterns;
      TheoryPoint p{DiscreteData{}, std::vector<ExtNat>(cells, 1)};
      std::size_t s = 0;
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1u) {
          p.cells[c] = kInf;
          ++s;
        }
      }
      out.expect(point_rank(p, full) == s, "pattern " + std::to_string(mask) + " k=" + std::to_string(k));
    }
  }
  out.note << patterns << " patterns";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Outcome&)> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "e-minimal full families", ac1, kAc1Seconds},
      {"AC2", "0-ary predicates", ac2, 0},
      {"AC3", "unary and 0-ary predicates", ac3, kAc3Seconds},
      {"AC4", "constants and Bell numbers", ac4, 0},
      {"AC5", "mixed signatures", ac5, 0},
      {"AC6", "infinite cases and witnesses", ac6, 0},
      {"AC7", "n-element families", ac7, 0},
      {"AC8", "rank inequalities", ac8, 0},
      {"AC9", "QE soundness", ac9, kAc9Seconds},
      {"AC10", "alpha-minimal decomposition", ac10, 0},
      {"AC11", "point-rank law", ac11, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      out.ok = false;
      out.note << " over budget";
    }
    if (!out.ok) ++failed;
    std::printf("[%s] %-5s %-30s %8.3fs  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                out.note.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

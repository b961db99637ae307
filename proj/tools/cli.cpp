#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "famrank/classifier.hpp"
#include "famrank/engine.hpp"
#include "famrank/errors.hpp"
#include "famrank/json_io.hpp"
#include "famrank/qe/eliminate.hpp"
#include "famrank/qe/parser.hpp"
#include "famrank/verify.hpp"
#include "famrank/witness.hpp"

namespace famrank::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SignatureFlags {
  std::string zeroary = "0";
  std::string unary = "0";
  std::string constants = "0";
  std::vector<std::string> preds;
  std::vector<std::string> funcs;
  std::string compact;
  std::string json_file;

  void attach(CLI::App& app) {
    app.add_option("--zeroary", zeroary, "0-ary predicates (N or inf)");
    app.add_option("--unary", unary, "unary predicates (N or inf)");
    app.add_option("--constants", constants, "constant symbols (N or inf)");
    app.add_option("--pred", preds, "predicates as ARITY:N, arity >= 2 (repeatable)");
    app.add_option("--func", funcs, "functions as ARITY:N, arity >= 1 (repeatable)");
    app.add_option("--sig", compact, "comma-separated key=value list: zeroary, unary, constants, predA, funcA");
    app.add_option("--json", json_file, "file holding a Signature JSON object");
  }

  Signature build(const CLI::App& app) const {
    const bool has_flags = app.count("--zeroary") + app.count("--unary") + app.count("--constants") +
                               app.count("--pred") + app.count("--func") >
                           0;
    const int sources = static_cast<int>(has_flags) + static_cast<int>(!compact.empty()) +
                        static_cast<int>(!json_file.empty());
    if (sources > 1) throw UsageError("give the signature by flags, --sig or --json, not several");
    Signature sig;
    if (!json_file.empty()) {
      std::ifstream in(json_file);
      if (!in) throw UsageError("cannot read " + json_file);
      sig = signature_from_json(nlohmann::json::parse(in));
    } else if (!compact.empty()) {
      sig = parse_compact(compact);
    } else {
      sig.zeroary = count(zeroary);
      sig.unary = count(unary);
      sig.constants = count(constants);
      for (const auto& p : preds) add_arity(sig.predicates, p);
      for (const auto& f : funcs) add_arity(sig.functions, f);
    }
    sig.validate();
    return sig;
  }

 private:
  static ExtNat count(const std::string& text) {
    try {
      return parse_ext_nat(text);
    } catch (const std::invalid_argument&) {
      throw UsageError("expected a count or inf, got '" + text + "'");
    }
  }

  static unsigned arity(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        text.size() > 9) {
      throw UsageError("bad arity '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(text));
  }

  static void add_arity(std::map<unsigned, ExtNat>& into, const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("expected ARITY:N, got '" + spec + "'");
    const unsigned a = arity(spec.substr(0, colon));
    if (into.count(a)) throw UsageError("arity " + std::to_string(a) + " given twice");
    into[a] = count(spec.substr(colon + 1));
  }

  static Signature parse_compact(const std::string& text) {
    Signature sig;
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value in --sig, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "zeroary") {
        sig.zeroary = count(value);
      } else if (key == "unary") {
        sig.unary = count(value);
      } else if (key == "constants") {
        sig.constants = count(value);
      } else if (key.rfind("pred", 0) == 0) {
        add_arity(sig.predicates, key.substr(4) + ":" + value);
      } else if (key.rfind("func", 0) == 0) {
        add_arity(sig.functions, key.substr(4) + ":" + value);
      } else {
        throw UsageError("unknown --sig key '" + key + "'");
      }
    }
    return sig;
  }
};

struct RestrictionFlags {
  std::string restrict;
  std::optional<std::uint64_t> size;

  void attach(CLI::App& app) {
    auto* r = app.add_option("--restrict", restrict, "restrict to theories with infinite models")
                  ->check(CLI::IsMember({"infinite"}));
    app.add_option("--size", size, "restrict to theories with an N-element model")->excludes(r);
  }

  Restriction build() const {
    if (!restrict.empty()) return InfiniteModels{};
    if (size) {
      if (*size == 0) throw UsageError("--size must be at least 1");
      return ExactSize{*size};
    }
    return NoRestriction{};
  }
};

void merge_into(nlohmann::json& target, const nlohmann::json& extra) {
  for (const auto& [key, value] : extra.items()) target[key] = value;
}

nlohmann::json stage_json(const DerivativeStage& stage) {
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& r : stage.regions) regions.push_back(to_json(r));
  return {{"min_infinite_cells", stage.floor}, {"count", to_json(stage.point_count())}, {"regions", regions}};
}

nlohmann::json cmd_classify(const Signature& sig, const Restriction& restriction) {
  RankResult result = RankResult::empty();
  std::optional<bool> e_minimal;
  if (std::holds_alternative<NoRestriction>(restriction)) {
    result = classify_full_family(sig);
    e_minimal = is_full_family_e_minimal(sig);
  } else {
    if (const auto* exact = std::get_if<ExactSize>(&restriction)) {
      result = classify_size_n_family(sig, exact->size);
    } else {
      result = classify_infinite_model_family(sig);
    }
    if (!result.is_finite()) {
      e_minimal = false;
    } else if (result.degree()) {
      e_minimal = result.rank() == 1 && *result.degree() == 1;
    } else if (result.rank() == 0) {
      e_minimal = false;
    }
  }
  nlohmann::json out = to_json(result);
  out["e_minimal"] = e_minimal ? nlohmann::json(*e_minimal) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json cmd_rank(const Signature& sig, const Restriction& restriction, const std::string& text) {
  if (!sig.is_monadic()) throw UnsupportedFeature("rank needs a monadic signature, got " + describe(sig));
  const auto msig = as_finite_monadic(sig);
  if (!msig) throw UnsupportedFeature("rank needs finitely many symbols, got " + describe(sig));
  const auto sentence = qe::parse(text);
  const auto eliminated = qe::eliminate(sentence, *msig);
  const FamilySpec family = normalize(FamilySpec{*msig, eliminated.regions, restriction});
  const RankResult result = rs_and_degree(family);
  nlohmann::json out = to_json(result);
  merge_into(out, {{"sentence", qe::to_text(sentence)},
                   {"alpha_minimal", result.is_finite() && result.degree() == std::optional<std::uint64_t>(1)},
                   {"e_minimal", is_e_minimal_family(family)},
                   {"accumulation_points", stage_json(accumulation_points(family))}});
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and degree of families of complete theories", "famrank"};
  app.require_subcommand(1);

  SignatureFlags classify_sig;
  RestrictionFlags classify_restriction;
  auto* classify = app.add_subcommand("classify", "rank and degree of the family of all theories of a signature");
  classify_sig.attach(*classify);
  classify_restriction.attach(*classify);

  SignatureFlags rank_sig;
  RestrictionFlags rank_restriction;
  std::string sentence;
  auto* rank = app.add_subcommand("rank", "rank and degree of the theories containing a sentence");
  rank_sig.attach(*rank);
  rank_restriction.attach(*rank);
  rank->add_option("--sentence", sentence, "sentence text")->required();

  std::string witness_case;
  std::size_t witness_depth = 0;
  bool witness_check = false;
  auto* witness = app.add_subcommand("witness", "2-tree of sentences witnessing infinite rank");
  witness->add_option("--case", witness_case, "case tag")->required();
  witness->add_option("--depth", witness_depth, "tree depth")->required();
  witness->add_flag("--check", witness_check, "verify the tree");

  verify::Options verify_options;
  std::string inject;
  auto* verify_cmd = app.add_subcommand("verify", "seeded cross-checks against independent oracles");
  verify_cmd->add_option("--trials", verify_options.trials, "trials per check");
  verify_cmd->add_option("--seed", verify_options.seed, "random seed");
  verify_cmd->add_option("--max-unary", verify_options.max_unary, "largest number of unary predicates")
      ->check(CLI::Range(0u, 4u));
  verify_cmd->add_option("--inject-fault", inject, "test hook: corrupt the rank or qe side")
      ->check(CLI::IsMember({"rank", "qe"}))
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    nlohmann::json result;
    int status = kOk;
    if (*classify) {
      result = cmd_classify(classify_sig.build(*classify), classify_restriction.build());
    } else if (*rank) {
      result = cmd_rank(rank_sig.build(*rank), rank_restriction.build(), sentence);
    } else if (*witness) {
      const auto kind = parse_witness_case(witness_case);
      if (!kind) throw UsageError("unknown case '" + witness_case + "'");
      const TwoTree tree = generate(*kind, witness_depth);
      result = to_json(tree);
      if (witness_check) {
        const CheckReport report = check(tree);
        result["check"] = to_json(report);
        if (!report.passed) status = kDiscrepancy;
      }
    } else {
      if (!inject.empty()) verify_options.inject_fault = inject;
      const verify::Report report = verify::run(verify_options);
      result = report.to_json();
      if (!report.passed()) status = kDiscrepancy;
    }
    out << result.dump(2) << '\n';
    return status;
  } catch (const UnsupportedFeature& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad json: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace famrank::cli

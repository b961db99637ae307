#include "famrank/json_io.hpp"

#include <stdexcept>
#include <string>

namespace famrank {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("malformed JSON: " + what);
}

std::uint64_t as_u64(const json& j, const std::string& what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0), what);
  return j.get<std::uint64_t>();
}

unsigned as_unsigned(const json& j, const std::string& what) {
  auto v = as_u64(j, what);
  require(v <= 0xffffffffu, what + " out of range");
  return static_cast<unsigned>(v);
}

json arity_map(const std::map<unsigned, ExtNat>& m) {
  json out = json::object();
  for (const auto& [arity, count] : m) out[std::to_string(arity)] = to_json(count);
  return out;
}

std::map<unsigned, ExtNat> arity_map_from(const json& j, const std::string& what) {
  require(j.is_object(), what + " must be an object");
  std::map<unsigned, ExtNat> out;
  for (const auto& [key, value] : j.items()) {
    unsigned arity = 0;
    try {
      std::size_t used = 0;
      arity = static_cast<unsigned>(std::stoul(key, &used));
      require(used == key.size(), what + " key");
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed JSON: arity key '" + key + "'");
    }
    auto count = ext_nat_from_json(value);
    if (count != ExtNat(0)) out[arity] = count;
  }
  return out;
}

}  // namespace

json to_json(const ExtNat& n) {
  if (n.is_infinite()) return "inf";
  return n.value();
}

ExtNat ext_nat_from_json(const json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "inf", "ExtNat string must be \"inf\"");
    return ExtNat::infinity();
  }
  return ExtNat(as_u64(j, "ExtNat"));
}

json to_json(const Signature& sig) {
  return json{{"zeroary", to_json(sig.zeroary)},
              {"unary", to_json(sig.unary)},
              {"constants", to_json(sig.constants)},
              {"predicates", arity_map(sig.predicates)},
              {"functions", arity_map(sig.functions)}};
}

Signature signature_from_json(const json& j) {
  require(j.is_object(), "signature must be an object");
  Signature sig;
  if (j.contains("zeroary")) sig.zeroary = ext_nat_from_json(j.at("zeroary"));
  if (j.contains("unary")) sig.unary = ext_nat_from_json(j.at("unary"));
  if (j.contains("constants")) sig.constants = ext_nat_from_json(j.at("constants"));
  if (j.contains("predicates")) sig.predicates = arity_map_from(j.at("predicates"), "predicates");
  if (j.contains("functions")) sig.functions = arity_map_from(j.at("functions"), "functions");
  sig.validate();
  return sig;
}

json to_json(const MonadicSignature& sig) {
  return json{{"zeroary", sig.zeroary}, {"unary", sig.unary}, {"constants", sig.constants}};
}

MonadicSignature monadic_signature_from_json(const json& j) {
  require(j.is_object(), "signature must be an object");
  return MonadicSignature{as_unsigned(j.value("zeroary", json(0)), "zeroary"),
                          as_unsigned(j.value("unary", json(0)), "unary"),
                          as_unsigned(j.value("constants", json(0)), "constants")};
}

json to_json(const RankResult& r) {
  switch (r.kind()) {
    case RankResult::Kind::Empty:
      return json{{"kind", "empty"}};
    case RankResult::Kind::Infinite:
      return json{{"kind", "infinite"}};
    case RankResult::Kind::Finite: {
      json out{{"kind", "finite"}, {"rank", r.rank()}};
      if (auto d = r.degree()) {
        out["degree"] = *d;
      } else {
        out["degree"] = "uncounted";
      }
      return out;
    }
  }
  return json();
}

RankResult rank_result_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(), "RankResult.kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "empty") return RankResult::empty();
  if (kind == "infinite") return RankResult::infinite();
  require(kind == "finite", "unknown RankResult kind '" + kind + "'");
  const auto rank = as_u64(j.at("rank"), "rank");
  const auto& degree = j.at("degree");
  if (degree.is_string()) {
    require(degree.get<std::string>() == "uncounted", "degree");
    return RankResult::finite_uncounted(rank);
  }
  return RankResult::finite(rank, as_u64(degree, "degree"));
}

json to_json(const DiscreteData& d) {
  json zeroary = json::array();
  for (bool b : d.zeroary) zeroary.push_back(b ? 1 : 0);
  return json{{"zeroary", zeroary},
              {"constants", json{{"blocks", d.constants.block_of}, {"cells", d.constants.block_cell}}}};
}

DiscreteData discrete_from_json(const json& j) {
  require(j.is_object(), "discrete data must be an object");
  DiscreteData d;
  for (const auto& bit : j.at("zeroary")) d.zeroary.push_back(as_u64(bit, "zeroary bit") != 0);
  const auto& c = j.at("constants");
  for (const auto& b : c.at("blocks")) d.constants.block_of.push_back(as_unsigned(b, "block id"));
  for (const auto& b : c.at("cells")) d.constants.block_cell.push_back(as_unsigned(b, "block cell"));
  return d;
}

json to_json(const TheoryPoint& p) {
  json out = to_json(p.discrete);
  json cells = json::array();
  for (const auto& v : p.cells) cells.push_back(to_json(v));
  out["cells"] = cells;
  return out;
}

TheoryPoint theory_point_from_json(const json& j) {
  TheoryPoint p;
  p.discrete = discrete_from_json(j);
  for (const auto& v : j.at("cells")) p.cells.push_back(ext_nat_from_json(v));
  return p;
}

json to_json(const Region& r) {
  json out = to_json(r.discrete);
  json cells = json::array();
  for (const auto& iv : r.cells) cells.push_back(json::array({iv.lo, to_json(iv.hi)}));
  out["cells"] = cells;
  return out;
}

Region region_from_json(const json& j) {
  Region r;
  r.discrete = discrete_from_json(j);
  for (const auto& iv : j.at("cells")) {
    require(iv.is_array() && iv.size() == 2, "interval must be [lo, hi]");
    r.cells.push_back(Interval{as_u64(iv[0], "lo"), ext_nat_from_json(iv[1])});
  }
  return r;
}

json to_json(const Restriction& r) {
  return std::visit(
      [](const auto& v) -> json {
        using R = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<R, InfiniteModels>) {
          return "infinite";
        } else if constexpr (std::is_same_v<R, ExactSize>) {
          return json{{"size", v.size}};
        } else {
          return "none";
        }
      },
      r);
}

Restriction restriction_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "none") return NoRestriction{};
    if (s == "infinite") return InfiniteModels{};
    require(false, "unknown restriction '" + s + "'");
  }
  require(j.is_object() && j.contains("size"), "restriction");
  return ExactSize{as_u64(j.at("size"), "size")};
}

json to_json(const FamilySpec& f) {
  json regions = json::array();
  for (const auto& r : f.regions) regions.push_back(to_json(r));
  return json{{"signature", to_json(f.signature)}, {"restriction", to_json(f.restriction)}, {"regions", regions}};
}

FamilySpec family_from_json(const json& j) {
  FamilySpec f;
  f.signature = monadic_signature_from_json(j.at("signature"));
  f.restriction = restriction_from_json(j.at("restriction"));
  for (const auto& r : j.at("regions")) f.regions.push_back(region_from_json(r));
  return f;
}

}  // namespace famrank

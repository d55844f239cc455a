#include "o2n/archive.hpp"

#include "o2n/error.hpp"

namespace o2n {

Json to_json(const HighestWeight& hw) { return Json{{"n", hw.n}, {"lambda_twice", hw.twice}}; }

HighestWeight highest_weight_from_json(const Json& j) {
  HighestWeight hw{j.at("n").get<int>(), j.at("lambda_twice").get<std::vector<std::int64_t>>()};
  validate_highest_weight(hw);
  return hw;
}

Json to_json(const Pattern& p) { return Json{{"rows_twice", p.rows()}}; }

Pattern pattern_from_json(const Json& j) {
  return Pattern::from_rows(j.at("rows_twice").get<std::vector<std::vector<std::int64_t>>>());
}

Json to_json(const SparseOperator& op) {
  Json entries = Json::array();
  for (std::size_t s = 0; s < op.dim(); ++s)
    for (const auto& e : op.column(s)) entries.push_back(Json::array({s, e.target, to_string(e.value)}));
  return Json{{"dim", op.dim()}, {"entries", std::move(entries)}};
}

SparseOperator operator_from_json(const Json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<SparseOperator::Column> cols(dim);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ArchiveError("operator entry must be [source, target, value]");
    auto s = e[0].get<std::size_t>(), t = e[1].get<std::size_t>();
    if (s >= dim || t >= dim) throw ArchiveError("operator entry index out of range");
    Rational v = parse_rational(e[2].get<std::string>());
    if (is_zero(v)) throw ArchiveError("operator entry stores an explicit zero");
    cols[s].push_back({static_cast<std::uint32_t>(t), v});
  }
  SparseOperator op(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t i = 1; i < cols[s].size(); ++i)
      if (cols[s][i - 1].target >= cols[s][i].target) throw ArchiveError("operator entries not sorted by (source, target)");
    op.set_column(s, std::move(cols[s]));
  }
  return op;
}

Json to_json(const VerifyReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) ces.push_back(Json{{"where", c.where}, {"expected", c.expected}, {"got", c.got}});
  return Json{{"suite", r.suite},
              {"n", r.hw.n},
              {"lambda_twice", r.hw.twice},
              {"pass", r.pass},
              {"counterexamples", std::move(ces)}};
}

std::string mu_label(const std::vector<std::int64_t>& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + HalfInt{mu[i]}.str();
  return s + ")";
}

Json to_json(const BranchingTable& t) {
  Json j = Json::object();
  for (const auto& [mu, c] : t) j[mu_label(mu)] = c;
  return j;
}

std::string serialize_archive(const Representation& rep, const std::vector<VerifyReport>& reports) {
  Json pats = Json::array();
  for (const auto& p : rep.basis().patterns()) pats.push_back(to_json(p));
  Json gens = Json::object();
  const auto& labels = canonical_generators(rep.n());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (!rep.cache()[a]) throw ArchiveError(labels[a].label() + " missing; refusing to write a partial archive");
    gens[labels[a].label()] = to_json(*rep.cache()[a]);
  }
  Json j{{"format_version", kArchiveFormatVersion},
         {"highest_weight", to_json(rep.highest_weight())},
         {"patterns", std::move(pats)},
         {"generators", std::move(gens)}};
  if (!reports.empty()) {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    j["reports"] = std::move(rs);
  }
  return j.dump(1) + "\n";
}

Representation parse_archive(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArchiveError(std::string("archive is not valid JSON: ") + e.what());
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kArchiveFormatVersion)
      throw ArchiveError("unsupported archive format version " + std::to_string(version));
    const HighestWeight hw = highest_weight_from_json(j.at("highest_weight"));
    std::vector<Pattern> pats;
    for (const auto& p : j.at("patterns")) pats.push_back(pattern_from_json(p));
    if (pats != enumerate(hw)) throw ArchiveError("pattern list is not the basis of " + hw.str());
    Representation rep(hw, PatternBasis(hw, std::move(pats)));
    const auto& gens = j.at("generators");
    for (const Gen& g : canonical_generators(hw.n)) {
      if (!gens.contains(g.label())) throw ArchiveError("archive lacks " + g.label());
      SparseOperator op = operator_from_json(gens.at(g.label()));
      if (op.dim() != rep.dim()) throw ArchiveError(g.label() + " has the wrong dimension");
      rep.set(g, std::move(op));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ArchiveError(std::string("malformed archive: ") + e.what());
  } catch (const ArchiveError&) {
    throw;
  } catch (const Error& e) {
    throw ArchiveError(std::string("malformed archive: ") + e.what());
  }
}

}  // namespace o2n

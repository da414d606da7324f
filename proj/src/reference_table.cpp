#include "cremona/reference_table.hpp"

#include <json.hpp>

#include "cremona/errors.hpp"
#include "cremona/invariants.hpp"
#include "reference_table_data.hpp"

namespace cremona {

namespace {

std::vector<ReferenceRow> load() {
  const auto json = nlohmann::json::parse(detail::kReferenceTableJson);
  std::vector<ReferenceRow> rows;
  for (const auto& j : json) {
    ReferenceRow row;
    row.row = j.at("row").get<std::string>();
    row.r = j.at("r").get<int>();
    row.n = j.at("n").get<int>();
    row.multidegree.emplace_back(1);
    for (const auto& d : j.at("degrees")) {
      row.multidegree.emplace_back(d.get<long>());
    }
    row.multidegree.emplace_back(1);
    if (j.contains("lambda")) {
      row.lambda = j.at("lambda").get<std::int64_t>();
      row.genus = j.at("genus").get<std::int64_t>();
    }
    row.description = j.at("description").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = load();
  return rows;
}

std::vector<ReferenceCheck> verify_reference_table() {
  std::vector<ReferenceCheck> out;
  for (const auto& row : reference_table()) {
    ReferenceCheck check;
    check.row = &row;
    check.violations = multidegree_admissible(row.multidegree);
    if (row.lambda) {
      const Integer& d1 = row.multidegree[1];
      const Integer& d2 = row.multidegree[row.multidegree.size() - 2];
      const auto cfg = TransformationConfig::make(row.n, static_cast<int>(d1.get_si()),
                                                  static_cast<int>(d2.get_si()), row.r);
      const InvariantTable table = solve_invariants(cfg);
      check.recomputed = multidegree(cfg, table).evaluate_at(*row.lambda, *row.genus);
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace cremona

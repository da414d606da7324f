#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cremona/config.hpp"
#include "cremona/cremona_core.hpp"
#include "cremona/filters.hpp"
#include "cremona/tuple.hpp"

namespace cremona {

/// Why a tuple left a stage: the filters it violates, or a note when no filter applies.
struct ExclusionRecord {
  Tuple tuple;
  std::vector<std::string> filters;
  std::string note;

  friend bool operator==(const ExclusionRecord&, const ExclusionRecord&) = default;
};

enum class StageKind { Domain, Filter, ExtendNu, SolveNu };

std::string_view stage_kind_name(StageKind kind);
StageKind parse_stage_kind(std::string_view name);

struct StageReport {
  std::string name;
  StageKind kind = StageKind::Filter;
  std::string input;  // empty for the domain stage
  std::vector<std::string> filters;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<Tuple> survivors;           // sorted
  std::vector<ExclusionRecord> exclusions;  // sorted by tuple
  bool expect_empty = false;

  bool expectation_met() const { return !expect_empty || survivors.empty(); }

  friend bool operator==(const StageReport&, const StageReport&) = default;
};

struct EnumerateOptions {
  unsigned threads = 1;  // 0: hardware concurrency
};

/// Evaluates every filter on every tuple and records all violated filters per excluded
/// tuple. Output order is independent of the thread count.
StageReport enumerate(std::span<const Tuple> domain, std::span<const Filter* const> filters,
                      const EnumerateOptions& options = {});
StageReport enumerate(std::span<const Tuple> domain, const std::vector<Filter>& filters,
                      const EnumerateOptions& options = {});

/// lambda in [lambda_min, lambda_max] (default delta1^codim) and g in [0, genus_max]
/// (default the Castelnuovo bound in the curve-section ambient space).
struct DomainSpec {
  std::int64_t lambda_min = 3;
  std::optional<std::int64_t> lambda_max;
  std::optional<std::int64_t> genus_max;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

std::vector<Tuple> generate_domain(const DomainSpec& domain, const TransformationConfig& cfg);

struct StageSpec {
  std::string name;
  StageKind kind = StageKind::Filter;
  std::optional<std::string> input;  // default: the previous stage
  std::vector<std::string> filters;  // filter or group names
  bool expect_empty = false;

  friend bool operator==(const StageSpec&, const StageSpec&) = default;
};

enum class BranchKind { Plain, LogGeneral, ConicBundle, DelPezzoFibration };

std::string_view branch_kind_name(BranchKind kind);
BranchKind parse_branch_kind(std::string_view name);

struct BranchSpec {
  std::string name;
  std::string stage;
  BranchKind kind = BranchKind::Plain;

  friend bool operator==(const BranchSpec&, const BranchSpec&) = default;
};

/// A user filter given as text, e.g. {"always", ">=", "1"}.
struct FilterSpec {
  std::string name;
  Relation relation = Relation::GreaterEqual;
  Polynomial expression;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

struct PipelineSpec {
  std::string name;
  TransformationConfig config = TransformationConfig::cubic_p6();
  std::optional<int> type_check_n;
  std::int64_t d2_threshold = 3;
  unsigned threads = 0;
  DomainSpec domain;
  std::vector<FilterSpec> filters;
  std::vector<StageSpec> stages;
  std::vector<BranchSpec> branches;

  friend bool operator==(const PipelineSpec&, const PipelineSpec&) = default;
};

std::vector<std::string> builtin_pipeline_names();
/// "cubic-p6" or "cubo-cubic-p7"; throws ConfigError otherwise.
PipelineSpec builtin_pipeline(std::string_view name);

struct Finalist {
  std::string branch;
  Tuple tuple;
  std::string label;
  std::vector<Integer> multidegree;
  std::vector<Integer> pluridegrees;
  bool multidegree_admissible = false;
  std::vector<std::pair<std::string, Rational>> facts;
  std::vector<std::pair<std::string, Rational>> invariants;  // evaluated reduction table

  friend bool operator==(const Finalist&, const Finalist&) = default;
};

struct BranchReport {
  std::string name;
  std::string stage;
  BranchKind kind = BranchKind::Plain;
  std::vector<Tuple> tuples;

  friend bool operator==(const BranchReport&, const BranchReport&) = default;
};

struct ClassificationReport {
  std::string pipeline;
  std::string config;
  std::vector<AdmissibleType> type_check;
  std::vector<StageReport> stages;
  std::vector<BranchReport> branches;
  std::vector<Finalist> finalists;

  const StageReport& stage(std::string_view name) const;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Checks the spec (stage names, inputs, filter availability, nu availability) before any
/// enumeration and throws ConfigError on the first problem.
void validate_pipeline(const PipelineSpec& spec);

ClassificationReport run_pipeline(const PipelineSpec& spec);

}  // namespace cremona

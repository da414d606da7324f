#include "cremona/filters.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

Polynomial c(std::int64_t value) { return Polynomial(Rational(value)); }

template <class T>
T lebarz_numerator(const SectionInvariants<T>& si) {
  const T& k = si.kappa;
  const T& z = si.zeta;
  const T& th = si.theta;
  const T& l = si.lambda;
  const T l2 = l * l;
  return T(3) * l2 * l2 - T(36) * k * l2 - T(6) * z * l2 + T(6) * th * l2 - T(90) * l2 * l +
         T(78) * k * k + T(30) * k * z + T(3) * z * z - T(30) * k * th - T(6) * z * th +
         T(3) * th * th + T(612) * k * l + T(116) * z * l - T(100) * th * l + T(855) * l2 -
         T(1980) * k - T(510) * z + T(294) * th - T(2466) * l;
}

const std::array<std::string_view, 6> kCaseNames = {
    "scroll-over-curve", "adjunction-map-degenerate", "veronese-fibration",
    "mukai",             "del-pezzo-fibration",       "conic-bundle"};

}  // namespace

std::string_view relation_symbol(Relation relation) {
  switch (relation) {
    case Relation::GreaterEqual:
      return ">=";
    case Relation::Greater:
      return ">";
    case Relation::Equal:
      return "=";
    case Relation::NotEqual:
      return "!=";
  }
  return "?";
}

Relation parse_relation(std::string_view symbol) {
  if (symbol == ">=") return Relation::GreaterEqual;
  if (symbol == ">") return Relation::Greater;
  if (symbol == "=" || symbol == "==") return Relation::Equal;
  if (symbol == "!=") return Relation::NotEqual;
  throw ConfigError("unknown relation '" + std::string(symbol) + "'");
}

bool relation_holds(Relation relation, const Rational& value) {
  switch (relation) {
    case Relation::GreaterEqual:
      return value.sign() >= 0;
    case Relation::Greater:
      return value.sign() > 0;
    case Relation::Equal:
      return value.is_zero();
    case Relation::NotEqual:
      return !value.is_zero();
  }
  return false;
}

bool Condition::holds(const Tuple& tuple) const {
  return relation_holds(relation, evaluate_at(expression, tuple.point()));
}

bool Guard::admits(const Tuple& tuple) const {
  const bool all = std::all_of(all_of.begin(), all_of.end(),
                               [&](const Condition& cond) { return cond.holds(tuple); });
  return all != negated;
}

std::string_view filter_kind_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::Inequality:
      return "inequality";
    case FilterKind::StrictInequality:
      return "strict-inequality";
    case FilterKind::Equality:
      return "equality";
    case FilterKind::Disequality:
      return "disequality";
    case FilterKind::Conditional:
      return "conditional";
  }
  return "?";
}

Filter::Filter(std::string name, Relation relation, const Polynomial& expression, std::string source,
               std::optional<Guard> guard)
    : name_(std::move(name)),
      relation_(relation),
      expression_(expression.primitive_part()),
      source_(std::move(source)),
      guard_(std::move(guard)) {
  if (guard_) {
    for (auto& cond : guard_->all_of) {
      cond.expression = cond.expression.primitive_part();
    }
  }
}

FilterKind Filter::kind() const noexcept {
  if (guard_) {
    return FilterKind::Conditional;
  }
  switch (relation_) {
    case Relation::GreaterEqual:
      return FilterKind::Inequality;
    case Relation::Greater:
      return FilterKind::StrictInequality;
    case Relation::Equal:
      return FilterKind::Equality;
    case Relation::NotEqual:
      return FilterKind::Disequality;
  }
  return FilterKind::Inequality;
}

bool Filter::depends_on_nu() const {
  if (expression_.depends_on(Var::Nu)) {
    return true;
  }
  if (guard_) {
    for (const auto& cond : guard_->all_of) {
      if (cond.expression.depends_on(Var::Nu)) {
        return true;
      }
    }
  }
  return false;
}

Rational Filter::value(const Tuple& tuple) const { return evaluate_at(expression_, tuple.point()); }

bool Filter::passes(const Tuple& tuple) const {
  if (guard_ && !guard_->admits(tuple)) {
    return true;
  }
  return relation_holds(relation_, value(tuple));
}

std::string Filter::to_string() const {
  std::ostringstream os;
  if (guard_) {
    os << (guard_->negated ? "unless (" : "if (");
    for (std::size_t i = 0; i < guard_->all_of.size(); ++i) {
      const auto& cond = guard_->all_of[i];
      os << (i ? " and " : "") << cond.expression << " " << relation_symbol(cond.relation) << " 0";
    }
    os << "): ";
  }
  os << expression_ << " " << relation_symbol(relation_) << " 0";
  return os.str();
}

std::int64_t castelnuovo_bound(std::int64_t d, std::int64_t s) {
  if (d < 1 || s < 2) {
    throw DomainError("castelnuovo_bound needs d >= 1 and s >= 2, got d = " + std::to_string(d) +
                      ", s = " + std::to_string(s));
  }
  const std::int64_t m = (d - 1) / (s - 1);
  const std::int64_t eps = d - 1 - m * (s - 1);
  return m * (m - 1) / 2 * (s - 1) + m * eps;
}

std::vector<Filter> livorni_sommese_filters(const InvariantTable& table) {
  const auto& t = table.threefold();
  const Polynomial& l = t.at(inv::kH3);
  const Polynomial& kh2 = t.at(inv::kKH2);
  const Polynomial& k2h = t.at(inv::kK2H);
  const Polynomial& k3 = t.at(inv::kK3);
  const Polynomial& c2h = t.at(inv::kC2H);
  const Polynomial& c3 = t.at(inv::kC3);
  const Polynomial& chi0 = t.at(inv::kChi0);
  const Polynomial& g = symbols::genus();
  const std::string source = "Livorni-Sommese inequality";
  return {
      Filter("livorni-sommese.1", Relation::GreaterEqual,
             k3 + c(6) * k2h + c(15) * kh2 + c(20) * l - c3 + c(48) * chi0 - c(6) * c2h, source),
      Filter("livorni-sommese.2", Relation::GreaterEqual,
             t.at(inv::kKS2) + c(4) * t.at(inv::kKSHS) + c(6) * l - t.at(inv::kC2TS), source),
      Filter("livorni-sommese.3", Relation::GreaterEqual,
             c(2) * t.at(inv::kC2TS) - c3 + c(2) * g - c(2), source),
      Filter("livorni-sommese.4", Relation::GreaterEqual,
             c(-24) * chi0 + c(3) * k2h + c(15) * kh2 + c(2) * c2h + c(20) * l + c3, source),
  };
}

std::vector<Filter> cremona_degree_filters(const Multidegree& md) {
  if (md.size() < 7) {
    throw ConfigError("cremona_degree_filters needs a multidegree of length >= 7");
  }
  const std::string source = "projective degree inequality";
  return {
      Filter("cremona-degrees.deg1*deg3>=deg4", Relation::GreaterEqual, md[1] * md[3] - md[4], source),
      Filter("cremona-degrees.deg1*deg4>=deg5", Relation::GreaterEqual, md[1] * md[4] - md[5], source),
      Filter("cremona-degrees.deg3^2>=deg2*deg4", Relation::GreaterEqual, md[3] * md[3] - md[2] * md[4],
             source),
      Filter("cremona-degrees.deg4^2>=deg3*deg5", Relation::GreaterEqual, md[4] * md[4] - md[3] * md[5],
             source),
      Filter("cremona-degrees.deg5^2>=deg4*deg6", Relation::GreaterEqual, md[5] * md[5] - md[4] * md[6],
             source),
  };
}

Rational lebarz_quadrisecant_count(const SectionInvariants<Rational>& si) {
  return lebarz_numerator(si) / Rational(24);
}

Polynomial lebarz_quadrisecant_count(const SectionInvariants<Polynomial>& si) {
  return lebarz_numerator(si) * Polynomial(Rational(1, 24));
}

SectionInvariants<Polynomial> section_invariants(const InvariantTable& table) {
  const auto& t = table.threefold();
  if (t.kind() == InvariantTable::Kind::Reduction) {
    throw ConfigError("section invariants are taken from the unreduced table");
  }
  return {t.at(inv::kKSHS), t.at(inv::kKS2), t.at(inv::kC2TS), t.at(inv::kH3)};
}

Polynomial lebarz_bound_polynomial(const InvariantTable& table) {
  return lebarz_quadrisecant_count(section_invariants(table));
}

Filter lebarz_nu_bound(const InvariantTable& table) {
  return Filter("le-barz.nu-bound", Relation::GreaterEqual, lebarz_bound_polynomial(table) - symbols::nu(),
                "Le Barz quadrisecant count");
}

std::vector<Filter> log_general_filters(const InvariantTable& reduction, std::int64_t d2_threshold) {
  const auto d = pluridegrees(reduction);
  const Polynomial& d0 = d[0];
  const Polynomial& d1 = d[1];
  const Polynomial& d2 = d[2];
  const Polynomial& d3 = d[3];
  const Polynomial& chi0 = reduction.at(inv::kChi0);
  const Polynomial& chim = reduction.at(inv::kChiMinusH);
  const Polynomial x = chi0 - chim;
  const Polynomial& g = symbols::genus();
  const std::string source = "K'+H' nef and big";

  std::vector<Filter> out = {
      Filter("log-general.d1>=1", Relation::GreaterEqual, d1 - c(1), source),
      Filter("log-general.d2>=" + std::to_string(d2_threshold), Relation::GreaterEqual, d2 - c(d2_threshold),
             source),
      Filter("log-general.d3>=1", Relation::GreaterEqual, d3 - c(1), source),
      Filter("log-general.hodge-1", Relation::GreaterEqual, d1 * d1 - d2 * d0, source),
      Filter("log-general.hodge-2", Relation::GreaterEqual, d2 * d2 - d3 * d1, source),
      Filter("log-general.cubic-hodge-1", Relation::GreaterEqual, d1 * d1 * d1 - d3 * d0 * d0, source),
      Filter("log-general.cubic-hodge-2", Relation::GreaterEqual, d2 * d2 * d2 - d3 * d3 * d0, source),
      Filter("log-general.5d1>=d0", Relation::GreaterEqual, c(5) * d1 - d0, source),
      Filter("log-general.5d2>=d1", Relation::GreaterEqual, c(5) * d2 - d1, source),
      Filter("log-general.5d3>=d2", Relation::GreaterEqual, c(5) * d3 - d2, source),
  };
  const Guard exception{{{d3 - c(1), Relation::Equal}, {d2 - c(5), Relation::Equal},
                         {c(25) - d1, Relation::GreaterEqual}},
                        true};
  out.emplace_back("log-general.4d1>=d0", Relation::GreaterEqual, c(4) * d1 - d0, source, exception);
  out.emplace_back("log-general.4d2>=d1", Relation::GreaterEqual, c(4) * d2 - d1, source, exception);
  out.emplace_back("log-general.4d3>=d2", Relation::GreaterEqual, c(4) * d3 - d2, source, exception);
  out.emplace_back("log-general.chi-window-lower", Relation::GreaterEqual, d2 - c(2) * x + c(6), source);
  out.emplace_back("log-general.chi-window-upper", Relation::Greater, c(9) * x - d2, source);
  out.emplace_back("log-general.chi-1", Relation::GreaterEqual,
                   c(3) * d2 + c(2) * d1 - d0 + c(12) * x - c(32) * chi0, source);
  out.emplace_back("log-general.chi-2", Relation::GreaterEqual,
                   c(2) * d3 + c(7) * d2 + c(12) * d1 - c(3) * d0 + c(30) * chi0 + c(18) * chim, source);
  out.emplace_back("log-general.c3", Relation::GreaterEqual,
                   c(24) * x + c(2) * g - c(2) - c(2) * d2 - reduction.at(inv::kC3), source);
  return out;
}

Filter hodge_equality_implication(const InvariantTable& reduction) {
  const auto d = pluridegrees(reduction);
  Guard equality{{{d[1] * d[1] - d[2] * d[0], Relation::Equal}}, false};
  return Filter("log-general.hodge-equality", Relation::Equal, d[2] * d[2] - d[3] * d[1],
                "K'+H' nef and big", std::move(equality));
}

std::string_view adjunction_case_name(AdjunctionCase c) {
  return kCaseNames[static_cast<std::size_t>(c)];
}

AdjunctionCase parse_adjunction_case(std::string_view name) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (kCaseNames[i] == name) {
      return static_cast<AdjunctionCase>(i);
    }
  }
  throw ConfigError("unknown adjunction case '" + std::string(name) + "'");
}

std::vector<Filter> adjunction_case_system(AdjunctionCase which, const InvariantTable& table) {
  const std::string prefix(adjunction_case_name(which));
  const std::string source = "adjunction case";
  std::vector<Polynomial> equations;
  switch (which) {
    case AdjunctionCase::ScrollOverCurve:
      equations = {adjoint_power(table, 1, 3, 3)};
      break;
    case AdjunctionCase::AdjunctionMapDegenerate:
      equations = {adjoint_power(table, 1, 2, 3)};
      break;
    case AdjunctionCase::VeroneseFibration:
      equations = {adjoint_power(table, 2, 3, 3), adjoint_power(table, 2, 3, 2)};
      break;
    case AdjunctionCase::Mukai: {
      const Polynomial& h3 = table.at(inv::kH3);
      equations = {table.at(inv::kK3) + h3, table.at(inv::kK2H) - h3, table.at(inv::kKH2) + h3};
      break;
    }
    case AdjunctionCase::DelPezzoFibration:
      equations = {adjoint_power(table, 1, 1, 3), adjoint_power(table, 1, 1, 2)};
      break;
    case AdjunctionCase::ConicBundle:
      equations = {adjoint_power(table, 1, 1, 3)};
      break;
  }
  std::vector<Filter> out;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    out.emplace_back(prefix + "." + std::to_string(i + 1), Relation::Equal, equations[i], source);
  }
  return out;
}

FilterBank FilterBank::builtin(const TransformationConfig& cfg, const InvariantTable& base,
                               std::int64_t d2_threshold) {
  FilterBank bank;
  const InvariantTable& threefold = base.threefold();
  const InvariantTable reduction = reduction_table(threefold);

  for (auto& f : livorni_sommese_filters(threefold)) {
    bank.add(std::move(f), {"livorni-sommese"});
  }
  for (auto& f : cremona_degree_filters(multidegree(cfg, base))) {
    bank.add(std::move(f), {"cremona-degrees"});
  }
  bank.add(lebarz_nu_bound(threefold), {"le-barz"});
  for (auto& f : log_general_filters(reduction, d2_threshold)) {
    std::vector<std::string> groups = {"log-general"};
    if (f.name() == "log-general.hodge-1") {
      groups.emplace_back("log-general.hodge");
    }
    if (f.name() == "log-general.d1>=1") {
      groups.emplace_back("log-general.nu-range");
    }
    bank.add(std::move(f), groups);
  }
  bank.add(hodge_equality_implication(reduction));
  for (auto which : {AdjunctionCase::ScrollOverCurve, AdjunctionCase::AdjunctionMapDegenerate}) {
    for (auto& f : adjunction_case_system(which, threefold)) {
      bank.add(std::move(f), {std::string(adjunction_case_name(which))});
    }
  }
  for (auto which : {AdjunctionCase::VeroneseFibration, AdjunctionCase::Mukai,
                     AdjunctionCase::DelPezzoFibration, AdjunctionCase::ConicBundle}) {
    for (auto& f : adjunction_case_system(which, reduction)) {
      bank.add(std::move(f), {std::string(adjunction_case_name(which))});
    }
  }
  bank.add(Filter("conic-bundle.surface-base", Relation::GreaterEqual,
                  adjoint_power(reduction, 1, 1, 2) - c(1), "adjunction case"),
           {});
  return bank;
}

void FilterBank::add(Filter filter, const std::vector<std::string>& groups) {
  const std::string name = filter.name();
  if (filters_.count(name) || groups_.count(name)) {
    throw ConfigError("duplicate filter name '" + name + "'");
  }
  for (const auto& group : groups) {
    if (filters_.count(group)) {
      throw ConfigError("group name '" + group + "' clashes with a filter");
    }
    groups_[group].push_back(name);
  }
  filters_.emplace(name, std::move(filter));
}

bool FilterBank::contains(std::string_view name) const {
  return filters_.find(name) != filters_.end() || groups_.find(name) != groups_.end();
}

const Filter& FilterBank::at(std::string_view name) const {
  const auto it = filters_.find(name);
  if (it == filters_.end()) {
    throw ConfigError("unknown filter '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<const Filter*> FilterBank::resolve(std::string_view name) const {
  if (const auto g = groups_.find(name); g != groups_.end()) {
    std::vector<const Filter*> out;
    for (const auto& member : g->second) {
      out.push_back(&at(member));
    }
    return out;
  }
  return {&at(name)};
}

std::vector<std::string> FilterBank::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : filters_) {
    out.push_back(name);
  }
  return out;
}

std::vector<std::string> FilterBank::group_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : groups_) {
    out.push_back(name);
  }
  return out;
}

}  // namespace cremona

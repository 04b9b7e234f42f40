#include <chrono>

#include "levelnum/errors.hpp"
#include "levelnum/invariants.hpp"

namespace levelnum {

ExpectedLevels expected_values(const FamilySpec& spec) {
  const auto half_up = [](int n) { return LevelValue((n + 1) / 2); };
  const LevelValue inf = LevelValue::infinite();
  switch (spec.family) {
    case Family::complete: {
      const int n = spec.first;
      if (n < 3) return {inf, inf};
      if (n == 3) return {LevelValue(0), LevelValue(0)};
      if (n == 4) return {LevelValue(1), half_up(n)};
      return {half_up(n), half_up(n)};
    }
    case Family::complete_bipartite: {
      const int big = std::max(spec.first, spec.second);
      const int small = std::min(spec.first, spec.second);
      if (small < 2) return {inf, inf};  // a star has no cycle
      if (small == 2) {
        if (big == 2) return {LevelValue(0), LevelValue(0)};  // the 4-cycle
        return {LevelValue(1), inf};
      }
      if (big == small) return {LevelValue(big), LevelValue(big)};
      return {LevelValue(big), inf};
    }
    default:
      throw InvalidInput("no closed form for " + to_string(spec));
  }
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return {};
}

namespace {

template <class T, class Fn>
Field<T> timed(Fn&& compute) {
  Field<T> field;
  const auto start = std::chrono::steady_clock::now();
  try {
    field.value = compute();
  } catch (const SizeLimitExceeded& e) {
    field.skipped_reason = e.what();
  }
  field.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return field;
}

// A graph that is its own spine has 0 levels but still one planar piece.
LevelValue as_pieces(LevelValue levels) {
  return levels.is_finite() && levels.get() == 0 ? LevelValue(1) : levels;
}

}  // namespace

std::vector<InequalityCheck> InvariantReport::checks() const {
  std::vector<InequalityCheck> out;
  const auto describe = [](const std::string& name, auto value) { return name + "=" + value; };

  InequalityCheck theta{"thickness <= level", "thickness", "level", CheckStatus::skipped};
  if (thickness.value && level.value) {
    theta.lhs = describe("thickness", std::to_string(*thickness.value));
    theta.rhs = describe("level", to_string(level.value->value));
    theta.status = LevelValue(*thickness.value) <= as_pieces(level.value->value) ? CheckStatus::pass : CheckStatus::fail;
  }
  out.push_back(theta);

  InequalityCheck book{"book_thickness <= hamiltonian_level", "book_thickness", "hamiltonian_level",
                       CheckStatus::skipped};
  if (book_thickness.value && hamiltonian_level.value && hamiltonian_level.value->value.is_finite()) {
    book.lhs = describe("book_thickness", std::to_string(*book_thickness.value));
    book.rhs = describe("hamiltonian_level", to_string(hamiltonian_level.value->value));
    book.status = LevelValue(*book_thickness.value) <= as_pieces(hamiltonian_level.value->value) ? CheckStatus::pass
                                                                                                  : CheckStatus::fail;
  }
  out.push_back(book);

  InequalityCheck spines{"level <= hamiltonian_level", "level", "hamiltonian_level", CheckStatus::skipped};
  if (level.value && hamiltonian_level.value && hamiltonian_level.value->value.is_finite()) {
    spines.lhs = describe("level", to_string(level.value->value));
    spines.rhs = describe("hamiltonian_level", to_string(hamiltonian_level.value->value));
    if (level.value->value <= hamiltonian_level.value->value) {
      spines.status = CheckStatus::pass;
    } else {
      // A capped level search only gives an upper bound, which proves nothing
      // when it exceeds hl.
      spines.status = level.value->exactness == Exactness::exact ? CheckStatus::fail : CheckStatus::skipped;
    }
  }
  out.push_back(spines);
  return out;
}

bool InvariantReport::all_pass() const {
  for (const InequalityCheck& c : checks()) {
    if (c.status == CheckStatus::fail) {
      return false;
    }
  }
  return true;
}

InvariantReport validate_inequalities(const Graph& g, std::string graph_id, const ReportLimits& limits) {
  InvariantReport report;
  report.graph_id = std::move(graph_id);
  if (is_connected(g)) {
    report.level = timed<LevelResult>([&] { return level_number(g, limits.solve); });
    report.hamiltonian_level = timed<LevelResult>([&] { return hamiltonian_level_number(g, limits.solve); });
  } else {
    report.level.skipped_reason = "graph is not connected";
    report.hamiltonian_level.skipped_reason = "graph is not connected";
  }
  report.book_thickness = timed<int>([&] { return book_thickness(g, limits.book_max_vertices); });
  report.thickness = timed<int>([&] { return thickness(g, limits.thickness_max_edges); });
  return report;
}

}  // namespace levelnum

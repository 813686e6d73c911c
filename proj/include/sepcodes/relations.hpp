#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcodes/codes.hpp"
#include "sepcodes/graph.hpp"

namespace sepcodes {

// A "lower <= upper" arrow of the relation diagram, labelled by the case of
// the precedence argument that yields it: (a) neighbourhoods, (b) adjacent
// sym-diffs, (c) non-adjacent sym-diffs.
struct Arrow {
  CodeKind lower;
  CodeKind upper;
  char precedence_case;
};

inline constexpr std::array<Arrow, 12> kRelationArrows{{
    {CodeKind::ID, CodeKind::ITD, 'a'},  {CodeKind::LD, CodeKind::LTD, 'a'},
    {CodeKind::FD, CodeKind::FTD, 'a'},  {CodeKind::OD, CodeKind::OTD, 'a'},
    {CodeKind::LD, CodeKind::ID, 'b'},   {CodeKind::LTD, CodeKind::ITD, 'b'},
    {CodeKind::OD, CodeKind::FD, 'b'},   {CodeKind::OTD, CodeKind::FTD, 'b'},
    {CodeKind::ID, CodeKind::FD, 'c'},   {CodeKind::ITD, CodeKind::FTD, 'c'},
    {CodeKind::LD, CodeKind::OD, 'c'},   {CodeKind::LTD, CodeKind::OTD, 'c'},
}};

// X-number of every kind; std::nullopt when the graph is not X-admissible.
struct XNumbers {
  std::array<std::optional<CoverResult>, 8> by_kind;

  const std::optional<CoverResult>& operator[](CodeKind x) const {
    return by_kind[static_cast<std::size_t>(x)];
  }
  std::optional<CoverResult>& operator[](CodeKind x) { return by_kind[static_cast<std::size_t>(x)]; }
};

inline XNumbers compute_x_numbers(const Graph& g, const CoverOptions& opts = {}) {
  XNumbers out;
  for (CodeKind x : kAllCodeKinds)
    if (is_admissible(g, x)) out[x] = x_number(g, x, opts);
  return out;
}

enum class RelationStatus { Holds, Violated, Unknown };

inline std::string_view to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::Holds: return "holds";
    case RelationStatus::Violated: return "violated";
    case RelationStatus::Unknown: return "unknown";
  }
  return "?";
}

struct RelationCheck {
  std::string name;
  RelationStatus status;
  std::string detail;
};

namespace detail {

inline std::string gamma(CodeKind x) { return "gamma^" + std::string(to_string(x)); }

inline RelationCheck verdict(std::string name, bool known, bool holds, std::string detail) {
  return {std::move(name), !known ? RelationStatus::Unknown : holds ? RelationStatus::Holds : RelationStatus::Violated,
          std::move(detail)};
}

inline bool exact(const std::optional<CoverResult>& r) { return r && r->optimal; }

}  // namespace detail

// Every diagram arrow whose upper end is admissible, the FD/FTD gap and the
// FD/FTD lower bounds. Checks involving a number the solver could not prove
// optimal come back Unknown.
inline std::vector<RelationCheck> check_relations(const Graph& g, const XNumbers& xs,
                                                  const CoverOptions& opts = {}) {
  using detail::exact;
  using detail::gamma;
  using K = CodeKind;
  std::vector<RelationCheck> out;

  for (const Arrow& arrow : kRelationArrows) {
    if (!xs[arrow.upper]) continue;
    const auto& lo = xs[arrow.lower];
    const auto& up = xs[arrow.upper];
    const bool known = exact(lo) && exact(up);
    out.push_back(detail::verdict(
        gamma(arrow.lower) + " <= " + gamma(arrow.upper) + " (" + arrow.precedence_case + ")", known,
        known && lo->size <= up->size,
        lo ? std::to_string(lo->size) + " vs " + std::to_string(up->size) : "lower kind not admissible"));
  }

  if (xs[K::FD]) {
    const auto& fd = *xs[K::FD];
    const VertexSet isolated = isolated_vertices(g);
    if (isolated.size() == 1) {
      const Graph rest = remove_vertices(g, isolated);
      const CoverResult ftd_rest = x_number(rest, K::FTD, opts);
      const bool known = fd.optimal && ftd_rest.optimal;
      out.push_back(detail::verdict("gamma^FD(G) = gamma^FTD(G - isolated) + 1", known,
                                    fd.size == ftd_rest.size + 1,
                                    std::to_string(fd.size) + " vs " + std::to_string(ftd_rest.size) + " + 1"));
    } else if (xs[K::FTD]) {
      const auto& ftd = *xs[K::FTD];
      const bool known = fd.optimal && ftd.optimal;
      out.push_back(detail::verdict("gamma^FTD - 1 <= gamma^FD <= gamma^FTD", known,
                                    fd.size + 1 >= ftd.size && fd.size <= ftd.size,
                                    "FD " + std::to_string(fd.size) + ", FTD " + std::to_string(ftd.size)));
    }
  }

  if (xs[K::FTD] && g.order() > 0) {
    const auto value = [&](K x) { return xs[x]->size; };
    bool known = true;
    for (K x : kAllCodeKinds) known = known && exact(xs[x]);

    const std::size_t ftd_floor = std::max({value(K::ITD), value(K::OTD), value(K::FD)});
    out.push_back(detail::verdict("gamma^FTD >= max(gamma^ITD, gamma^OTD, gamma^FD)", known,
                                  value(K::FTD) >= ftd_floor,
                                  std::to_string(value(K::FTD)) + " vs " + std::to_string(ftd_floor)));

    // Sizes are >= 1 here, so the "- 1" terms do not underflow.
    const std::size_t fd_floor = std::max({value(K::ID), value(K::OD), value(K::LTD) - 1, value(K::ITD) - 1,
                                           value(K::OTD) - 1});
    out.push_back(detail::verdict("gamma^FD >= max(gamma^ID, gamma^OD, gamma^LTD - 1, gamma^ITD - 1, gamma^OTD - 1)",
                                  known, value(K::FD) >= fd_floor,
                                  std::to_string(value(K::FD)) + " vs " + std::to_string(fd_floor)));

    bool ld_lowest = true, ftd_highest = true;
    for (K x : kAllCodeKinds) {
      ld_lowest = ld_lowest && value(K::LD) <= value(x);
      ftd_highest = ftd_highest && value(x) <= value(K::FTD);
    }
    out.push_back(detail::verdict("gamma^LD <= every X-number", known, ld_lowest, ""));
    out.push_back(detail::verdict("every X-number <= gamma^FTD", known, ftd_highest, ""));
  }
  return out;
}

inline bool all_hold(const std::vector<RelationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.status == RelationStatus::Holds; });
}

}  // namespace sepcodes

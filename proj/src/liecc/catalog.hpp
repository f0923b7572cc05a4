#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liecc/lie_algebra.hpp"

namespace liecc {

enum class CatalogFilter { all, complete, cocomplete, almost_abelian };

const char* to_string(CatalogFilter f);
CatalogFilter parse_filter(std::string_view s);

struct CatalogEntry {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> parameters;
  /// Human-readable exclusions, e.g. "a ≠ 0, -1".
  std::string constraint;
  bool real_only = false;
  /// Listed among the complete (resp. cocomplete, almost abelian) rows.
  bool listed_complete = false;
  bool listed_cocomplete = false;
  bool almost_abelian = false;
  /// Sanity controls outside the tables.
  bool control = false;
  /// Expected verdicts. Table rows carry their listing; controls and
  /// unlisted rows carry the negative verdict.
  bool expect_complete = false;
  bool expect_cocomplete = false;
  std::string brackets;  // bracket template, 1-based text
  std::string note;
};

/// Every built-in entry, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();
std::vector<CatalogEntry> list_entries(CatalogFilter filter);
/// Throws InputError for an unknown name.
const CatalogEntry& find_entry(const std::string& name);

/// True when params satisfy the entry's constraint.
bool parameters_admissible(const CatalogEntry& e, const std::vector<Scalar>& params);

/// Throws InputError on unknown names, wrong parameter count, constraint
/// violations and real-only entries in complex mode.
LieAlgebra instantiate(const std::string& name, const std::vector<Scalar>& params, Field field = Field::real);

/// Admissible parameter tuples drawn from {-2, 1/2, 2, 3}; one empty tuple
/// for parameter-free entries.
std::vector<std::vector<Scalar>> sample_parameters(const CatalogEntry& e);

struct CatalogCheck {
  std::string name;
  std::vector<Scalar> params;
  Field field = Field::real;
  bool complete = false;
  bool cocomplete = false;
  bool complete_ok = false;
  bool cocomplete_ok = false;
};

/// Runs every sampled instance through both checkers, in every available
/// field.
std::vector<CatalogCheck> verify_catalog();

}  // namespace liecc

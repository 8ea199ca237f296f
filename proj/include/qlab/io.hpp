#pragma once

#include <iosfwd>
#include <map>

#include <json.hpp>

#include "qlab/kan.hpp"

namespace qlab {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closure-space literal: a category name plus the closure index map over
// the canonical presheaf enumeration of that category.
struct ClosureSpaceDoc {
  std::string category;
  std::vector<int> op;
};

struct Workspace {
  QuantaloidPtr q;
  std::map<std::string, QCategory> categories;
  std::map<std::string, QFunctor> functors;
  std::map<std::string, QDistributor> distributors;
  std::map<std::string, ClosureSpaceDoc> spaces;
  long long cap = kDefaultCap;

  // workspace names of functor/distributor boundaries, for serialization
  std::map<std::string, std::pair<std::string, std::string>> functor_bounds;
  std::map<std::string, std::pair<std::string, std::string>> dist_bounds;
};

// Parsers throw SchemaError on malformed documents; semantic law violations
// are left to the validators.
Quantaloid parse_quantaloid(const nlohmann::json& doc);
QCategory parse_category(const nlohmann::json& doc, QuantaloidPtr q);
QFunctor parse_functor(const nlohmann::json& doc, const Workspace& ws);
QDistributor parse_distributor(const nlohmann::json& doc, const Workspace& ws);
Presheaf parse_presheaf(const nlohmann::json& doc, const QCategory& a);
Workspace parse_workspace(const nlohmann::json& doc);
Workspace load_workspace(const std::string& path);

nlohmann::json quantaloid_json(const Quantaloid& q);
nlohmann::json category_json(const QCategory& a);
nlohmann::json functor_json(const QFunctor& f, const std::string& source_name,
                            const std::string& target_name);
nlohmann::json distributor_json(const QDistributor& d, const std::string& source_name,
                                const std::string& target_name);
nlohmann::json presheaf_json(const QCategory& a, const Presheaf& p);
nlohmann::json space_json(const ClosureSpaceDoc& doc);
nlohmann::json workspace_json(const Workspace& ws);
nlohmann::json lattice_json(const FixedPointLattice& lattice);

// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& doc);

Report validate_workspace(const Workspace& ws);
QClosureSpace resolve_space(const Workspace& ws, const ClosureSpaceDoc& doc);

}  // namespace qlab

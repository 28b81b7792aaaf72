#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olap/clustering.hpp"
#include "olap/query.hpp"

namespace olap {

// Who the analyst is: identity, demographic and contact data, all supplied
// (not mined). Map keys are free-form labels like "ssn" or "age".
struct PersonalView {
  std::string name;
  std::map<std::string, std::string> identifiers;
  std::map<std::string, std::string> demographics;
  std::map<std::string, std::string> contacts;

  bool operator==(const PersonalView&) const = default;
};

// What the analyst does: position plus free-form lists, order preserved.
struct ProfessionalView {
  std::string function;
  std::vector<std::string> responsibilities;
  std::vector<std::string> roles;
  std::vector<std::string> duties;

  bool operator==(const ProfessionalView&) const = default;
};

// The multi-view profile: mined behavioral pools plus the optional supplied
// views.
struct AnalystProfile {
  std::string analyst_id;
  std::optional<PersonalView> personal;
  std::optional<ProfessionalView> professional;
  PreferencePools behavioral;

  bool operator==(const AnalystProfile&) const = default;
};

enum class ClauseKind { fact, measure, dimension, slicer_member };

std::string_view clause_kind_token(ClauseKind kind);  // "slicer-member" etc.
std::optional<ClauseKind> parse_clause_kind(std::string_view token);

// One behavioral clause with its occurrence count within a pool.
struct ClauseAnnotation {
  ClauseKind kind;
  std::string value;  // cube, measure, dimension, or dotted slicer path
  std::size_t frequency = 0;

  bool operator==(const ClauseAnnotation&) const = default;
};

struct AnnotatedProfile {
  AnalystProfile profile;
  // Indexed by PoolLabel order: consensual, semi-conflicting, conflicting.
  std::array<std::vector<ClauseAnnotation>, kPoolLabels.size()> annotations;

  std::span<const ClauseAnnotation> annotations_for(PoolLabel label) const {
    return annotations[static_cast<std::size_t>(label)];
  }

  bool operator==(const AnnotatedProfile&) const = default;
};

// Attaches the supplied views to the mined pools. Throws on an empty
// analyst id, an empty personal name, or an empty professional function.
AnalystProfile enrich(PreferencePools pools, std::string analyst_id,
                      std::optional<PersonalView> personal,
                      std::optional<ProfessionalView> professional);

// Counts, per pool and clause, how many corpus occurrences assigned to that
// pool reference the clause. `corpus` must be the same occurrence stream the
// pools were mined from; an occurrence matching no pool is an error.
// Dimension clauses count occurrences referencing >= 1 attribute of the
// dimension on an axis; slicer usage is annotated separately per member.
AnnotatedProfile annotate(AnalystProfile profile, std::span<const ParsedQuery> corpus);

// Versioned, byte-stable document ("olap-profile/1"). render/parse work on
// strings; save/load add file IO. load(save(x)) == x structurally.
std::string render_profile(const AnnotatedProfile& ap);
AnnotatedProfile parse_profile(std::string_view text);
void save_profile(const AnnotatedProfile& ap, const std::string& path);
AnnotatedProfile load_profile(const std::string& path);

// Sidecar views file: optional analyst id plus the two supplied views.
struct ViewsFile {
  std::string analyst_id;  // empty when the file does not set one
  std::optional<PersonalView> personal;
  std::optional<ProfessionalView> professional;

  bool operator==(const ViewsFile&) const = default;
};

// Parses the line-oriented views format:
//
//   analyst: SalesManager1
//   personal
//     name: Alia Haddad
//     identifier ssn: 123-45-678
//     demographic age: 34
//     contact email: alia@example.test
//   professional
//     function: sales manager
//     duty: assign sales territories
//
// Two-space indentation, '#' comment lines, repeated list keys append.
ViewsFile parse_views(std::string_view text);
ViewsFile load_views(const std::string& path);

}  // namespace olap

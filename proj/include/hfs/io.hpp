#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfs/approx.hpp"
#include "hfs/laws.hpp"

namespace hfs::io {

// The serialized form of a covering-space candidate: everything needed
// to build a CoveringSpace once a precision grid is chosen.  Degrees
// stay as strings until then.
struct SpaceDocument {
  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  // cells[p][x] = degree strings of F(e_p)(x)
  std::vector<std::vector<std::vector<std::string>>> cells;
  std::vector<std::string> beta;   // may be empty (supplied via flag)
  std::optional<char> kind;        // 'p','a','m','s','t','n'
};

// Either a hesitant fuzzy target or a crisp object subset.
struct TargetDocument {
  std::optional<std::vector<std::pair<std::string, std::vector<std::string>>>> hesitant;
  std::optional<std::vector<std::string>> subset;
};

SpaceDocument space_from_json(const std::string& text);
SpaceDocument space_from_csv(const std::string& text);
// Dispatches on the .csv extension, otherwise JSON.
SpaceDocument space_from_file(const std::string& path);
std::string space_to_json(const SpaceDocument& doc);

TargetDocument target_from_json(const std::string& text);
TargetDocument target_from_file(const std::string& path);
std::string target_to_json(const TargetDocument& doc);

// Canonical JSON fragments (multisets descending, objects in universe
// order) shared by the commands.
std::string hfs_to_json(const HesitantFuzzySet& h);

CoveringSpace build_space(const SpaceDocument& doc, int precision,
                          std::optional<InclusionKind> kind_override,
                          const std::optional<std::vector<std::string>>& beta_override);

// Options common to every command.
struct CommonOpts {
  std::string format = "text";  // "text" or "json"
  int precision = 4;
};

struct CmdResult {
  int code = 0;         // 0 ok, 1 verdict failure, 2 parse/IO error
  std::string out;      // full report, ready to print
};

CmdResult cmd_validate(const std::string& space_path,
                       const std::optional<std::string>& kind,
                       const std::optional<std::string>& beta,
                       const CommonOpts& opts);

CmdResult cmd_neighborhood(const std::string& space_path,
                           const std::optional<std::string>& object,
                           bool crisp_only,
                           const std::optional<std::string>& kind,
                           const std::optional<std::string>& beta,
                           const CommonOpts& opts);

CmdResult cmd_approx(const std::string& space_path,
                     const std::string& target_path,
                     const std::string& mode,    // "hesitant" or "crisp"
                     const std::string& bound,   // "lower", "upper", "both"
                     const std::optional<std::string>& kind,
                     const std::optional<std::string>& beta,
                     const CommonOpts& opts);

CmdResult cmd_laws(std::uint64_t seed, std::uint64_t cases, const CommonOpts& opts);

CmdResult cmd_repro(const CommonOpts& opts);

}  // namespace hfs::io

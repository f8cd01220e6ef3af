/// @file
/// @brief The `tma` command line: ingest, analyze, compare, complexes, render.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tma/clustering.h"
#include "tma/field.h"
#include "tma/mappings.h"
#include "tma/vr_persistence.h"

namespace tma {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad usage or I/O failure
  kExitIngest = 2,
  kExitSchema = 3,
  kExitTooFewFragments = 4,
  kExitOutOfRange = 5,
};

struct AnalysisConfig {
  std::vector<MappingId> mappings{kAllMappings.begin(), kAllMappings.end()};
  int max_dim = 3;
  double max_scale = kUnbounded;
  PrimeField field{2};
  Linkage linkage = Linkage::kSingle;
  std::filesystem::path out_dir = ".";
  bool json = true;
  bool csv = true;
  bool svg = true;
};

/// Diagrams of one point cloud under `config`.
DiagramDocument analyze_cloud(const PointCloud& cloud, const AnalysisConfig& config);

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Regression checks against the built-in Luna fragment.
std::vector<FixtureCheck> fixture_checks();

/// Runs the command line with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tma

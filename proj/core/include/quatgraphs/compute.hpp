#ifndef QUATGRAPHS_COMPUTE_HPP
#define QUATGRAPHS_COMPUTE_HPP

#include "quatgraphs/graphs.hpp"
#include "quatgraphs/spectral.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quatgraphs {

// Orchestration with an in-process memo and an optional on-disk JSON cache.
// Disk entries carry a format_version; anything that fails to parse or
// validate is recomputed with a warning on stderr and overwritten.
struct ComputeOptions {
  std::string cache_dir;  // empty = in-memory only
};

std::shared_ptr<const ClassSet> get_class_set(int g, long long p,
                                              const ComputeOptions& opt = {});
std::shared_ptr<const BrandtMatrix> get_brandt(int g, long long p, long long n,
                                               const ComputeOptions& opt = {});

WeightedGraph get_graph(const std::string& kind, int g, long long ell,
                        long long p, const ComputeOptions& opt = {});

SpectralReport get_verdict(int g, long long ell, long long p,
                           const ComputeOptions& opt = {});

struct SurveyRow {
  long long p = 0;
  std::optional<SpectralReport> report;
  std::string error;  // nonempty when the cell failed
};

// One row per prime p <= pmax with p != ell; cell failures are recorded and
// the survey continues.
std::vector<SurveyRow> ramanujan_survey(int g, long long ell, long long pmax,
                                        const ComputeOptions& opt = {});

std::string survey_to_csv(const std::vector<SurveyRow>& rows, int g, long long ell);
std::string survey_to_json(const std::vector<SurveyRow>& rows, int g, long long ell);

// Resolves the cache directory: explicit flag value, else the
// QUATGRAPHS_CACHE_DIR environment variable, else empty (no disk cache).
std::string resolve_cache_dir(const std::string& flag_value, bool no_cache);

}  // namespace quatgraphs

#endif

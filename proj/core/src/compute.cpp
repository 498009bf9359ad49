#include "quatgraphs/compute.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

namespace quatgraphs {

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<int, long long>, std::shared_ptr<const ClassSet>> g_classes;
std::map<std::tuple<int, long long, long long>, std::shared_ptr<const BrandtMatrix>> g_brandt;

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  out << text;
}

}  // namespace

std::string resolve_cache_dir(const std::string& flag_value, bool no_cache) {
  if (no_cache) return "";
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QUATGRAPHS_CACHE_DIR")) return env;
  return "";
}

std::shared_ptr<const ClassSet> get_class_set(int g, long long p,
                                              const ComputeOptions& opt) {
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_classes.find({g, p});
    if (it != g_classes.end()) return it->second;
  }
  std::filesystem::path cache_file;
  if (!opt.cache_dir.empty()) {
    cache_file = std::filesystem::path(opt.cache_dir) /
                 ("classset-g" + std::to_string(g) + "-p" + std::to_string(p) + ".json");
    if (auto text = read_file(cache_file)) {
      try {
        auto cs = std::make_shared<const ClassSet>(class_set_from_json(*text));
        QG_REQUIRE(cs->g == g && cs->p == p, "cache key mismatch");
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        g_classes[{g, p}] = cs;
        return cs;
      } catch (const std::exception& e) {
        std::cerr << "warning: cache entry " << cache_file.string()
                  << " is corrupted (" << e.what() << "); recomputing\n";
      }
    }
  }
  auto cs = std::make_shared<const ClassSet>(compute_class_set(g, p));
  if (!cache_file.empty()) write_file(cache_file, class_set_to_json(*cs));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_classes[{g, p}] = cs;
  return cs;
}

std::shared_ptr<const BrandtMatrix> get_brandt(int g, long long p, long long n,
                                               const ComputeOptions& opt) {
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_brandt.find({g, p, n});
    if (it != g_brandt.end()) return it->second;
  }
  auto classes = get_class_set(g, p, opt);
  std::filesystem::path cache_file;
  if (!opt.cache_dir.empty()) {
    cache_file = std::filesystem::path(opt.cache_dir) /
                 ("brandt-g" + std::to_string(g) + "-p" + std::to_string(p) +
                  "-n" + std::to_string(n) + "-" + class_set_hash(*classes) + ".json");
    if (auto text = read_file(cache_file)) {
      try {
        auto B = std::make_shared<const BrandtMatrix>(brandt_from_json(*text));
        QG_REQUIRE(B->g == g && B->p == p && B->n == n && B->h == classes->h(),
                   "cache key mismatch");
        QG_REQUIRE(B->weights == classes->aut_counts, "cache weights mismatch");
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        g_brandt[{g, p, n}] = B;
        return B;
      } catch (const std::exception& e) {
        std::cerr << "warning: cache entry " << cache_file.string()
                  << " is corrupted (" << e.what() << "); recomputing\n";
      }
    }
  }
  auto B = std::make_shared<const BrandtMatrix>(brandt(*classes, n));
  if (!cache_file.empty()) write_file(cache_file, brandt_to_json(*B));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_brandt[{g, p, n}] = B;
  return B;
}

WeightedGraph get_graph(const std::string& kind, int g, long long ell,
                        long long p, const ComputeOptions& opt) {
  QG_REQUIRE(kind == "big" || kind == "little" || kind == "enhanced",
             "kind must be big, little, or enhanced");
  QG_REQUIRE(ell != p, "the two primes must differ");
  QG_REQUIRE(is_prime(ell), "ell must be prime");
  auto classes = get_class_set(g, p, opt);
  auto B = get_brandt(g, p, ell, opt);
  if (kind == "big") return big_graph(*classes, *B);
  WeightedGraph little = little_graph(*classes, *B);
  if (kind == "little") return little;
  return enhanced_graph(little);
}

SpectralReport get_verdict(int g, long long ell, long long p,
                           const ComputeOptions& opt) {
  QG_REQUIRE(ell != p, "the two primes must differ");
  auto B = get_brandt(g, p, ell, opt);
  return ramanujan_verdict(*B);
}

std::vector<SurveyRow> ramanujan_survey(int g, long long ell, long long pmax,
                                        const ComputeOptions& opt) {
  std::vector<SurveyRow> rows;
  for (long long p = 2; p <= pmax; ++p) {
    if (!is_prime(p) || p == ell) continue;
    SurveyRow row;
    row.p = p;
    try {
      row.report = get_verdict(g, ell, p, opt);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows, int, long long) {
  std::string out = spectral_csv_header() + "\n";
  for (const auto& row : rows) {
    if (row.report) {
      out += spectral_csv_row(*row.report) + "\n";
    } else {
      out += "# p=" + std::to_string(row.p) + " error: " + row.error + "\n";
    }
  }
  return out;
}

std::string survey_to_json(const std::vector<SurveyRow>& rows, int g, long long ell) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["kind"] = "survey";
  j["g"] = g;
  j["l"] = ell;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["p"] = row.p;
    if (row.report) {
      r["h"] = row.report->h;
      r["k"] = row.report->k;
      r["ramanujan"] = row.report->ramanujan;
      r["second_largest_abs_lo"] = rat_to_decimal(row.report->second_largest_lo, 12);
      r["second_largest_abs_hi"] = rat_to_decimal(row.report->second_largest_hi, 12);
      nlohmann::json cp = nlohmann::json::array();
      for (const Int& c : row.report->charpoly) cp.push_back(c.str());
      r["charpoly"] = cp;
    } else {
      r["error"] = row.error;
    }
    arr.push_back(r);
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace quatgraphs

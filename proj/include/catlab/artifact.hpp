// artifact.hpp — run configuration and reproducible CSV/JSON artifacts for
// the command-line tool.

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace catlab::io {

inline constexpr const char* kToolVersion = "catlab 1.0.0";

enum class OutputFormat { csv, json };

struct RunConfig {
  double alpha{2.0};
  double nbar{100.0};
  double gamma{1.0};
  std::optional<double> tau_max;  // defaults to 4 * tau_P when unset
  int grid_tau{200};
  int grid_u{200};
  double tol{1e-7};
  std::string out{"-"};  // "-" means stdout
  OutputFormat format{OutputFormat::csv};
  int jobs{0};  // 0 = logical core count (CATLAB_JOBS overrides the default)

  /// Effective tau_max: explicit value, or 4 * tau_P (falls back to 1.0 for
  /// nbar = 0 where tau_P is infinite).
  double effective_tau_max() const;

  /// Effective worker count after the CATLAB_JOBS fallback.
  int effective_jobs() const;

  void validate() const;
};

/// Merge key/value pairs from a flat JSON config file into fields that were
/// not set on the command line (CLI flags take precedence).
RunConfig load_config_file(const std::string& path, RunConfig base,
                           const std::vector<std::string>& cli_set_fields);

/// Tabular artifact: "#"-prefixed metadata lines, a header row, and string
/// cells. Infinite values serialize as "inf" in CSV and as a
/// {"value": null, "infinite": true} pair in JSON.
class Artifact {
 public:
  explicit Artifact(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_meta(const std::string& key, const std::string& value);
  void add_meta_config(const RunConfig& config);
  void add_row(std::vector<std::string> cells);

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

  /// Write to config.out in config.format ("-" = stdout).
  void write(const RunConfig& config) const;

  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::vector<std::string>> rows_;
};

/// Format a double for artifacts: "inf" for infinities, "nan" for NaN,
/// shortest round-trip decimal otherwise.
std::string format_value(double v);

/// Parallel ordered map: evaluates fn(i) for i in [0, count) on a bounded
/// worker pool; results land in input order.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace catlab::io

#include "catlab/artifact.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

#include "catlab/types.hpp"

namespace catlab::io {

double RunConfig::effective_tau_max() const {
  if (tau_max) return *tau_max;
  if (nbar == 0.0) return 1.0;
  return 4.0 * 0.5 * std::log1p(1.0 / nbar);
}

int RunConfig::effective_jobs() const {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("CATLAB_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void RunConfig::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("config: alpha must be >= 0");
  if (!(nbar >= 0.0)) throw std::invalid_argument("config: nbar must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("config: gamma must be > 0");
  if (tau_max && !(*tau_max > 0.0)) {
    throw std::invalid_argument("config: tau-max must be > 0");
  }
  if (grid_tau < 2 || grid_u < 2) {
    throw std::invalid_argument("config: grid sizes must be >= 2");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be > 0");
}

RunConfig load_config_file(const std::string& path, RunConfig base,
                           const std::vector<std::string>& cli_set_fields) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  nlohmann::json doc;
  in >> doc;
  const auto overridden = [&](const std::string& key) {
    for (const auto& f : cli_set_fields) {
      if (f == key) return true;
    }
    return false;
  };
  const auto set_double = [&](const std::string& key, double& field) {
    if (doc.contains(key) && !overridden(key)) field = doc.at(key).get<double>();
  };
  const auto set_int = [&](const std::string& key, int& field) {
    if (doc.contains(key) && !overridden(key)) field = doc.at(key).get<int>();
  };
  set_double("alpha", base.alpha);
  set_double("nbar", base.nbar);
  set_double("gamma", base.gamma);
  if (doc.contains("tau_max") && !overridden("tau_max")) {
    base.tau_max = doc.at("tau_max").get<double>();
  }
  set_int("grid_tau", base.grid_tau);
  set_int("grid_u", base.grid_u);
  set_double("tol", base.tol);
  if (doc.contains("out") && !overridden("out")) {
    base.out = doc.at("out").get<std::string>();
  }
  if (doc.contains("format") && !overridden("format")) {
    const auto fmt = doc.at("format").get<std::string>();
    if (fmt == "csv") {
      base.format = OutputFormat::csv;
    } else if (fmt == "json") {
      base.format = OutputFormat::json;
    } else {
      throw std::invalid_argument("config: format must be csv or json");
    }
  }
  set_int("jobs", base.jobs);
  return base;
}

void Artifact::add_meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
}

void Artifact::add_meta_config(const RunConfig& config) {
  add_meta("tool", kToolVersion);
  add_meta("alpha", format_value(config.alpha));
  add_meta("nbar", format_value(config.nbar));
  add_meta("gamma", format_value(config.gamma));
  add_meta("tau_max", format_value(config.effective_tau_max()));
  add_meta("grid_tau", std::to_string(config.grid_tau));
  add_meta("grid_u", std::to_string(config.grid_u));
  add_meta("tol", format_value(config.tol));
}

void Artifact::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw std::invalid_argument("Artifact: row width does not match header");
  }
  rows_.push_back(std::move(cells));
}

void Artifact::write_csv(std::ostream& os) const {
  for (const auto& [k, v] : meta_) os << "# " << k << " = " << v << "\n";
  for (size_t i = 0; i < columns_.size(); ++i) {
    os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
  }
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

void Artifact::write_json(std::ostream& os) const {
  nlohmann::json doc;
  for (const auto& [k, v] : meta_) doc["meta"][k] = v;
  for (size_t c = 0; c < columns_.size(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& row : rows_) {
      const std::string& cell = row[c];
      double parsed = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), parsed);
      if (cell == "inf" || cell == "-inf") {
        col.push_back({{"value", nullptr}, {"infinite", true}});
      } else if (cell == "nan") {
        col.push_back({{"value", nullptr}, {"nan", true}});
      } else if (ec == std::errc{} && ptr == cell.data() + cell.size() &&
                 std::isfinite(parsed)) {
        col.push_back(parsed);
      } else {
        col.push_back(cell);
      }
    }
    doc["data"][columns_[c]] = std::move(col);
  }
  os << doc.dump(2) << "\n";
}

void Artifact::write(const RunConfig& config) const {
  const auto emit = [&](std::ostream& os) {
    if (config.format == OutputFormat::csv) {
      write_csv(os);
    } else {
      write_json(os);
    }
  };
  if (config.out == "-") {
    emit(std::cout);
  } else {
    std::ofstream out(config.out);
    if (!out) throw std::invalid_argument("cannot open output " + config.out);
    emit(out);
  }
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  jobs = std::min(std::max(jobs, 1), std::max(count, 1));
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace catlab::io

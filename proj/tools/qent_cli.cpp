// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand is a library survey; its flags are
// the survey's parameter keys plus --out and --output.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "qent/qent.h"

namespace {

constexpr int kExitDomain = 3;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;

const std::map<std::string, std::string>& command_help() {
  static const std::map<std::string, std::string> help = {
      {"survey-sep", "separability and criteria-chain probabilities"},
      {"survey-qcond", "conditional q-entropy and PPT coincidence probabilities"},
      {"dist-r", "histogram of the participation ratio"},
      {"dist-lmax", "histogram of the largest eigenvalue"},
      {"survey-gates", "entanglement change produced by a gate"},
      {"speed-scan", "orthogonality times of random evolutions"},
      {"grover-trace", "amplitudes and residual tangle along Grover iterations"},
      {"xy-evolve", "XY chain purity and magnetization under a field schedule"},
      {"xy-adiabatic", "XY chain purity under a slow coupling ramp"},
      {"metric-extremes", "Bures and Hilbert-Schmidt distance extremes to the separable set"},
      {"maxent-scan", "maximum-entropy Bell-diagonal family across its boundary"},
  };
  return help;
}

const std::map<std::string, std::string>& flag_help() {
  static const std::map<std::string, std::string> help = {
      {"dims", "bipartition AxB"},
      {"measure", "simplex measure: lebesgue|dirichlet:ETA|bures|hs"},
      {"samples", "number of Monte Carlo samples"},
      {"seed", "master seed"},
      {"q", "entropic index: positive number or inf"},
      {"alpha", "confidence level is 1 - alpha"},
      {"threads", "worker threads (overrides QENT_THREADS)"},
      {"bins", "histogram bins"},
      {"gate", "identity|cnot|hadamard:Q|u:THETA|nonlocal:L1,L2,L3"},
      {"qubits", "qubits carrying the input state"},
      {"inputs", "pure|mixed"},
      {"family", "qubits|bosons|fermions|haar"},
      {"n", "number of qubits"},
      {"k", "number of marked items"},
      {"iters", "last iteration to record"},
      {"pivot", "qubit used for the residual tangle"},
      {"g0", "coupling"},
      {"h0", "initial transverse field"},
      {"hf", "final transverse field"},
      {"gamma", "anisotropy in (0, 1]"},
      {"schedule", "step|exponential|hyperbolic"},
      {"kappa", "ramp rate"},
      {"modes", "momentum modes (chain of 2*modes sites)"},
      {"tmax", "final time"},
      {"points", "number of output points"},
      {"field", "constant transverse field"},
      {"metric", "bures|hs|all"},
      {"steps", "annealing steps per walk"},
      {"walks", "independent annealing walks"},
  };
  return help;
}

struct TableHandle {
  void operator()(qent_table* t) const { qent_table_destroy(t); }
};
using TablePtr = std::unique_ptr<qent_table, TableHandle>;

std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const qent_table* t) {
  std::ostringstream os;
  const size_t cols = qent_table_columns(t), rows = qent_table_rows(t);
  for (size_t c = 0; c < cols; ++c) os << (c ? "," : "") << csv_escape(qent_table_column_name(t, c));
  os << '\n';
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (c) os << ',';
      switch (qent_table_cell_kind(t, r, c)) {
        case QENT_CELL_INT: {
          long long v = 0;
          qent_table_cell_int(t, r, c, &v);
          os << v;
          break;
        }
        case QENT_CELL_REAL: {
          double v = 0.0;
          qent_table_cell_real(t, r, c, &v);
          os << format_real(v);
          break;
        }
        case QENT_CELL_TEXT:
          os << csv_escape(qent_table_cell_text(t, r, c));
          break;
        default:
          break;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const qent_table* t) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  const size_t cols = qent_table_columns(t), rows = qent_table_rows(t);
  for (size_t r = 0; r < rows; ++r) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (size_t c = 0; c < cols; ++c) {
      const std::string key = qent_table_column_name(t, c);
      switch (qent_table_cell_kind(t, r, c)) {
        case QENT_CELL_INT: {
          long long v = 0;
          qent_table_cell_int(t, r, c, &v);
          rec[key] = v;
          break;
        }
        case QENT_CELL_REAL: {
          double v = 0.0;
          qent_table_cell_real(t, r, c, &v);
          rec[key] = v;
          break;
        }
        case QENT_CELL_TEXT:
          rec[key] = qent_table_cell_text(t, r, c);
          break;
        default:
          rec[key] = nullptr;
      }
    }
    records.push_back(std::move(rec));
  }
  return records.dump(2) + "\n";
}

// Writes next to the target and renames, so readers never see a partial file.
bool write_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << body;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

struct Subcommand {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::string out_format = "csv";
  std::string output;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo surveys of entanglement and separability"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Subcommand>> subs;
  for (size_t i = 0; i < qent_survey_count(); ++i) {
    auto sub = std::make_unique<Subcommand>();
    sub->name = qent_survey_name(i);
    const auto desc = command_help().find(sub->name);
    sub->app = app.add_subcommand(sub->name, desc == command_help().end() ? "" : desc->second);
    for (size_t k = 0;; ++k) {
      const char* key = qent_survey_param(sub->name.c_str(), k);
      if (key == nullptr) break;
      auto it = flag_help().find(key);
      sub->app->add_option("--" + std::string(key), sub->values[key], it == flag_help().end() ? "" : it->second);
    }
    sub->app->add_option("--out", sub->out_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->app->add_option("--output", sub->output, "output file (default: standard output)");
    subs.push_back(std::move(sub));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (const auto& sub : subs) {
    if (!sub->app->parsed()) continue;
    std::vector<std::string> keys, vals;
    for (const auto& [key, value] : sub->values) {
      if (sub->app->get_option("--" + key)->count() == 0) continue;
      keys.push_back(key);
      vals.push_back(value);
    }
    std::vector<const char*> kp, vp;
    for (size_t i = 0; i < keys.size(); ++i) {
      kp.push_back(keys[i].c_str());
      vp.push_back(vals[i].c_str());
    }
    const auto start = std::chrono::steady_clock::now();
    std::cerr << sub->name << ": running\n";
    qent_table* raw = nullptr;
    const qent_status st = qent_survey_run(sub->name.c_str(), kp.data(), vp.data(), kp.size(), &raw);
    TablePtr table(raw);
    if (st != QENT_OK) {
      std::cerr << "error: " << qent_last_error() << "\n";
      if (st == QENT_ERR_DOMAIN) return kExitDomain;
      if (st == QENT_ERR_ARGUMENT) return kExitUsage;
      return kExitFailure;
    }
    const std::string body = sub->out_format == "json" ? to_json(table.get()) : to_csv(table.get());
    if (sub->output.empty()) {
      std::cout << body;
      std::cout.flush();
    } else if (!write_atomic(sub->output, body)) {
      std::cerr << "error: cannot write " << sub->output << "\n";
      return kExitFailure;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << sub->name << ": " << qent_table_rows(table.get()) << " rows in " << format_real(secs) << " s\n";
  }
  return 0;
}

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

#include "qent/surveys.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qent/entmeas.hpp"
#include "qent/error.hpp"
#include "qent/gates.hpp"
#include "qent/grover.hpp"
#include "qent/maxent.hpp"
#include "qent/metric_extremes.hpp"
#include "qent/randgen.hpp"
#include "qent/sepcrit.hpp"
#include "qent/simplexgeo.hpp"
#include "qent/speed.hpp"
#include "qent/survey.hpp"
#include "qent/xychain.hpp"

namespace qent {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

namespace {

constexpr double kPi = std::numbers::pi;

// ---- parameter access ------------------------------------------------------

class Params {
 public:
  explicit Params(const ParamMap& m) : map_(m) {}

  bool has(const std::string& key) const { return map_.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = map_.find(key);
    return it == map_.end() ? fallback : it->second;
  }

  double real(const std::string& key, double fallback) const {
    auto it = map_.find(key);
    if (it == map_.end()) return fallback;
    const std::string& s = it->second;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw DomainError("--" + key + " expects a real number, got '" + s + "'");
    return v;
  }

  long long integer(const std::string& key, long long fallback) const {
    auto it = map_.find(key);
    if (it == map_.end()) return fallback;
    const std::string& s = it->second;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("--" + key + " expects an integer, got '" + s + "'");
    return v;
  }

  std::uint64_t seed() const {
    const long long s = integer("seed", 1);
    require(s >= 0, "--seed must be non-negative");
    return static_cast<std::uint64_t>(s);
  }

  long long samples(long long fallback) const {
    const long long m = integer("samples", fallback);
    require(m >= 2, "--samples must be at least 2");
    return m;
  }

  double alpha() const {
    const double a = real("alpha", 0.05);
    require(a > 0.0 && a < 1.0, "--alpha must lie in (0, 1)");
    return a;
  }

  int threads() const {
    const long long t = integer("threads", 0);
    require(t >= 0 && t <= 1024, "--threads must lie in [0, 1024]");
    return static_cast<int>(t);
  }

  Dims dims() const {
    const std::string s = text("dims", "2x2");
    const auto x = s.find('x');
    require(x != std::string::npos, "--dims expects AxB");
    Params sub({{"a", s.substr(0, x)}, {"b", s.substr(x + 1)}});
    const long long a = sub.integer("a", 0), b = sub.integer("b", 0);
    require(a >= 2 && b >= 2 && a * b <= 64, "--dims factors must be >= 2 with product <= 64");
    return {static_cast<int>(a), static_cast<int>(b)};
  }

  SimplexMeasure measure() const { return SimplexMeasure::parse(text("measure", "lebesgue")); }

 private:
  ParamMap map_;
};

std::string dims_text(const Dims& d) { return std::to_string(d[0]) + "x" + std::to_string(d[1]); }

// Several fractions estimated from one pass over the samples.
struct MultiAcc {
  std::vector<MeanAccumulator> parts;
  void merge(const MultiAcc& o) {
    if (parts.empty()) {
      parts = o.parts;
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].merge(o.parts[i]);
  }
};

struct HistAcc {
  std::vector<long long> counts;
  long long total = 0;
  void merge(const HistAcc& o) {
    if (counts.empty()) counts.assign(o.counts.size(), 0);
    for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
    total += o.total;
  }
};

void push_estimate(std::vector<Cell>& row, const SurveyEstimate& e) {
  row.emplace_back(e.mean);
  row.emplace_back(e.std_error);
  row.emplace_back(e.half_width);
  row.emplace_back(static_cast<long long>(e.samples));
}

// Density of a histogram bin, with binomial error bars.
SurveyEstimate bin_density(long long count, long long total, double width, double alpha) {
  const double p = static_cast<double>(count) / static_cast<double>(total);
  SurveyEstimate e;
  e.samples = total;
  e.mean = p / width;
  e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(total - 1)) / width;
  e.half_width = student_t_critical(total - 1, alpha) * e.std_error;
  return e;
}

// ---- survey-sep --------------------------------------------------------------

Table survey_sep(const Params& p) {
  const Dims dims = p.dims();
  const SimplexMeasure measure = p.measure();
  const QParam q = QParam::parse(p.text("q", "inf"));
  const long long m = p.samples(100000);
  const bool two_by_n = dims[0] == 2 || dims[1] == 2;
  enum { kPpt, kReduction, kMajor, kQent, kChain, kMismatch, kCount };
  const MultiAcc acc = run_chunked<MultiAcc>(m, p.seed(), p.threads(), [&](Rng& rng, long long, long long count) {
    MultiAcc a;
    a.parts.resize(kCount);
    SimplexSampler sampler(total_dim(dims), measure);
    for (long long i = 0; i < count; ++i) {
      const CMat rho = sample_mixed_state(dims, sampler, rng);
      const CriterionReport r = chain_audit(rho, dims, {q});
      a.parts[kPpt].add(r.ppt.pass);
      a.parts[kReduction].add(r.reduction.pass);
      a.parts[kMajor].add(r.majorization.pass());
      a.parts[kQent].add(r.q_entropic.front().pass);
      a.parts[kChain].add(!r.chain_consistent);
      a.parts[kMismatch].add(two_by_n && r.ppt.pass != r.reduction.pass);
    }
    return a;
  });
  Table t;
  t.columns = {"quantity", "dims", "measure", "mean", "std_error", "half_width", "samples"};
  const char* names[kCount] = {"P_sep", "P_reduction", "P_majorization", nullptr, "chain_violations",
                               "ppt_reduction_mismatch"};
  for (int i = 0; i < kCount; ++i) {
    if (i == kMismatch && !two_by_n) continue;
    std::string name = i == kQent ? "P_qentropic(q=" + q.name() + ")" : names[i];
    std::vector<Cell> row{name, dims_text(dims), measure.name()};
    push_estimate(row, make_estimate(acc.parts[i], p.alpha()));
    t.add_row(std::move(row));
  }
  return t;
}

// ---- survey-qcond ------------------------------------------------------------

Table survey_qcond(const Params& p) {
  const Dims dims = p.dims();
  const SimplexMeasure measure = p.measure();
  std::vector<QParam> qs;
  if (p.has("q"))
    qs.push_back(QParam::parse(p.text("q", "")));
  else
    qs = {QParam::finite(1.0), QParam::inf()};
  const long long m = p.samples(100000);
  const MultiAcc acc = run_chunked<MultiAcc>(m, p.seed(), p.threads(), [&](Rng& rng, long long, long long count) {
    MultiAcc a;
    a.parts.resize(2 * qs.size());
    SimplexSampler sampler(total_dim(dims), measure);
    for (long long i = 0; i < count; ++i) {
      const CMat rho = sample_mixed_state(dims, sampler, rng);
      const bool sep = ppt(rho, dims).pass;
      for (std::size_t j = 0; j < qs.size(); ++j) {
        const bool pass = q_entropic(rho, dims, qs[j]).pass;
        a.parts[2 * j].add(pass == sep);
        a.parts[2 * j + 1].add(pass);
      }
    }
    return a;
  });
  Table t;
  t.columns = {"dims", "measure", "q", "quantity", "mean", "std_error", "half_width", "samples"};
  for (std::size_t j = 0; j < qs.size(); ++j) {
    for (int k = 0; k < 2; ++k) {
      std::vector<Cell> row{dims_text(dims), measure.name(), qs[j].name(),
                            std::string(k == 0 ? "P_coincide" : "P_qpass")};
      push_estimate(row, make_estimate(acc.parts[2 * j + k], p.alpha()));
      t.add_row(std::move(row));
    }
  }
  return t;
}

// ---- dist-r / dist-lmax --------------------------------------------------------

template <class ValueFn, class DensityFn>
Table spectral_histogram(const Params& p, double lo, double hi, ValueFn value, DensityFn analytic) {
  const SimplexMeasure measure = p.measure();
  const long long m = p.samples(100000);
  const long long bins = p.integer("bins", 60);
  require(bins >= 1 && bins <= 100000, "--bins must lie in [1, 100000]");
  const double width = (hi - lo) / static_cast<double>(bins);
  const HistAcc acc = run_chunked<HistAcc>(m, p.seed(), p.threads(), [&](Rng& rng, long long, long long count) {
    HistAcc a;
    a.counts.assign(static_cast<std::size_t>(bins), 0);
    SimplexSampler sampler(4, measure);
    for (long long i = 0; i < count; ++i) {
      const double v = value(sampler.next(rng));
      long long b = static_cast<long long>(std::floor((v - lo) / width));
      b = std::clamp<long long>(b, 0, bins - 1);
      ++a.counts[static_cast<std::size_t>(b)];
      ++a.total;
    }
    return a;
  });
  Table t;
  t.columns = {"bin_lo", "bin_hi", "density", "std_error", "half_width", "samples", "analytic"};
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  for (long long b = 0; b < bins; ++b) {
    const double a0 = lo + b * width, a1 = a0 + width;
    const SurveyEstimate e = bin_density(acc.counts[b], acc.total, width, p.alpha());
    std::vector<Cell> row{a0, a1};
    push_estimate(row, e);
    row.emplace_back(Quad::integrate(analytic, a0, a1, 0) / width);
    t.add_row(std::move(row));
  }
  return t;
}

Table dist_r(const Params& p) {
  return spectral_histogram(
      p, 1.0, 4.0, [](const RVec& lam) { return 1.0 / lam.squaredNorm(); }, [](double r) { return f_R(r); });
}

Table dist_lmax(const Params& p) {
  return spectral_histogram(
      p, 0.25, 1.0, [](const RVec& lam) { return lam.maxCoeff(); }, [](double l) { return f_lambda_max(l); });
}

// ---- survey-gates --------------------------------------------------------------

GateSpec parse_gate(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "identity") return GateSpec::identity();
  if (head == "cnot") return GateSpec::cnot();
  if (head == "hadamard") return GateSpec::hadamard_on(static_cast<int>(Params({{"gate", arg}}).integer("gate", 0)));
  if (head == "u") return GateSpec::u_theta(Params({{"gate", arg}}).real("gate", kPi / 2.0));
  if (head == "nonlocal") {
    double l[3] = {0, 0, 0};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const auto comma = arg.find(',', start);
      require(i == 2 ? comma == std::string::npos : comma != std::string::npos, "nonlocal gate expects l1,l2,l3");
      l[i] = Params({{"gate", arg.substr(start, comma - start)}}).real("gate", 0.0);
      start = comma + 1;
    }
    return GateSpec::nonlocal(l[0], l[1], l[2]);
  }
  throw DomainError("unknown gate '" + text + "'");
}

Table survey_gates(const Params& p) {
  const CMat gate = build_gate(parse_gate(p.text("gate", "cnot")));
  DeltaEInputs inputs;
  inputs.n_qubits = static_cast<int>(p.integer("qubits", 2));
  const std::string kind = p.text("inputs", "pure");
  require(kind == "pure" || kind == "mixed", "--inputs must be pure or mixed");
  inputs.pure = kind == "pure";
  inputs.measure = p.measure();
  const long long m = p.samples(100000);
  const DeltaEHistogram hist = delta_e_survey(gate, inputs, m, p.seed(), p.threads());
  Table t;
  t.columns = {"quantity", "x", "mean", "std_error", "half_width", "samples"};
  for (int b = 0; b < DeltaEHistogram::kBins; ++b) {
    std::vector<Cell> row{std::string("density"), DeltaEHistogram::center(b)};
    push_estimate(row, bin_density(hist.counts()[b], hist.total(), DeltaEHistogram::kWidth, p.alpha()));
    t.add_row(std::move(row));
  }
  const HalfWidth w = width_half_max(hist);
  t.add_row({std::string("W_raw"), std::monostate{}, w.raw, std::monostate{}, std::monostate{}, hist.total()});
  t.add_row({std::string("W_smoothed"), std::monostate{}, w.smoothed, std::monostate{}, std::monostate{},
             hist.total()});
  if (inputs.n_qubits == 2) {
    std::vector<Cell> row{std::string("entangling_power"), std::monostate{}};
    push_estimate(row, entangling_power(gate, m, p.seed() + 1, p.threads(), p.alpha()));
    t.add_row(std::move(row));
  }
  return t;
}

// ---- speed-scan ----------------------------------------------------------------

Table speed_scan(const Params& p) {
  const std::string family = p.text("family", "qubits");
  const long long m = p.samples(10000);
  Table t;
  t.columns = {"family",  "quantity", "concurrence", "value",   "std_error",
               "half_width", "samples",  "band_min",    "band_max"};
  auto point_row = [&](const SpeedPoint& pt, const Band& band) {
    t.add_row({family, std::string("tau_over_tmin"), pt.concurrence, pt.tau_over_tmin, std::monostate{},
               std::monostate{}, 1LL, band.min, band.max});
  };
  if (family == "qubits" || family == "bosons") {
    Rng rng(p.seed());
    for (long long i = 0; i < m; ++i) {
      std::optional<SpeedPoint> pt;
      if (family == "qubits") {
        pt = two_qubit_speed_point(sample_gamma_family(rng));
        if (pt) point_row(*pt, two_qubit_band(pt->concurrence));
      } else {
        const double alpha = kPi / 2.0 + kPi / 2.0 * rng.uniform();
        pt = boson_speed_point(boson_state(alpha, 2.0 * kPi * rng.uniform()));
        if (pt) point_row(*pt, boson_band(pt->concurrence));
      }
    }
  } else if (family == "fermions") {
    const Band range{std::sqrt(10.0) / 3.0, 2.0};
    for (const SpeedPoint& pt : fermion_scan(m, p.seed())) point_row(pt, range);
  } else if (family == "haar") {
    const SurveyEstimate e = fraction_below_min_curve(m, p.seed(), p.threads(), p.alpha());
    t.add_row({family, std::string("fraction_below_min_curve"), std::monostate{}, e.mean, e.std_error,
               e.half_width, e.samples, std::monostate{}, std::monostate{}});
  } else {
    throw DomainError("--family must be qubits, bosons, fermions or haar");
  }
  return t;
}

// ---- grover-trace ----------------------------------------------------------------

Table grover_trace(const Params& p) {
  GroverParams g;
  g.n = static_cast<int>(p.integer("n", 6));
  g.k = static_cast<int>(p.integer("k", 1));
  g.validate();
  const long long iters = p.integer("iters", 2LL * optimal_iterations(g));
  require(iters >= 0 && iters <= 100000, "--iters must lie in [0, 100000]");
  const long long pivot = p.integer("pivot", 0);
  require(pivot >= 0 && pivot < g.n, "--pivot must name a qubit");
  Table t;
  t.columns = {"j", "s_abs", "c_abs", "d_w"};
  for (const GroverRecord& r : trace_run(g, static_cast<int>(iters), static_cast<int>(pivot)))
    t.add_row({static_cast<long long>(r.j), r.s_abs, r.c_abs, r.d_w});
  return t;
}

// ---- xy-evolve / xy-adiabatic ------------------------------------------------------

Table xy_evolve(const Params& p) {
  const double g0 = p.real("g0", -0.25), h0 = p.real("h0", -5.0), hf = p.real("hf", -1.0);
  const double gamma = p.real("gamma", 0.5);
  const std::string kind = p.text("schedule", "step");
  const long long modes = p.integer("modes", 1000);
  const double tmax = p.real("tmax", 50.0);
  const long long points = p.integer("points", 501);
  require(modes >= 1 && modes <= 1000000, "--modes must lie in [1, 1e6]");
  require(tmax > 0.0, "--tmax must be positive");
  require(points >= 2 && points <= 1000000, "--points must lie in [2, 1e6]");
  FieldSchedule h;
  if (kind == "step")
    h = FieldSchedule::step(h0, hf);
  else if (kind == "exponential")
    h = FieldSchedule::exponential(h0, hf, p.real("kappa", 1.0));
  else if (kind == "hyperbolic")
    h = FieldSchedule::hyperbolic(h0, hf);
  else
    throw DomainError("--schedule must be step, exponential or hyperbolic");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (long long i = 0; i < points; ++i) grid[i] = tmax * static_cast<double>(i) / static_cast<double>(points - 1);
  const auto series = evolve(init_ground_modes(static_cast<int>(modes), g0, h0, gamma),
                             FieldSchedule::constant(g0), h, gamma, grid);
  Table t;
  t.columns = {"t", "g", "h", "purity", "magnetization"};
  for (std::size_t i = 0; i < series.size(); ++i)
    t.add_row({grid[i], g0, h.at(grid[i]), purity_of(series[i]), magnetization_of(series[i])});
  return t;
}

Table xy_adiabatic(const Params& p) {
  const double kappa = p.real("kappa", 0.01);
  require(kappa > 0.0, "--kappa must be positive");
  const long long modes = p.integer("modes", 1000);
  require(modes >= 1 && modes <= 1000000, "--modes must lie in [1, 1e6]");
  const double tmax = p.real("tmax", 12.0 / kappa);
  const long long points = p.integer("points", 1000);
  require(points >= 2 && points <= 1000000, "--points must lie in [2, 1e6]");
  const AdiabaticTrace tr = adiabatic_passage(kappa, static_cast<int>(modes), tmax, p.real("gamma", 1.0),
                                              p.real("field", 1.0), static_cast<int>(points));
  Table t;
  t.columns = {"t", "g", "purity", "static_purity"};
  for (std::size_t i = 0; i < tr.t.size(); ++i) t.add_row({tr.t[i], tr.g[i], tr.purity[i], tr.static_curve[i]});
  return t;
}

// ---- metric-extremes -----------------------------------------------------------

Table metric_extremes(const Params& p) {
  const std::string which = p.text("metric", "all");
  std::vector<Metric> metrics;
  if (which == "all")
    metrics = {Metric::kBures, Metric::kHilbertSchmidt};
  else
    metrics = {parse_metric(which)};
  AnnealOptions opts;
  opts.steps = static_cast<int>(p.integer("steps", opts.steps));
  opts.walks = static_cast<int>(p.integer("walks", opts.walks));
  opts.threads = p.threads();
  require(opts.steps >= 1 && opts.steps <= 100000000, "--steps must lie in [1, 1e8]");
  require(opts.walks >= 2 && opts.walks <= 10000, "--walks must lie in [2, 10000]");
  Table t;
  t.columns = {"metric", "extremum", "best", "witness", "mean", "std_error", "half_width", "samples", "converged"};
  for (Metric m : metrics) {
    const ExtremeSearch lo = min_distance_to_mm(m, p.seed(), opts);
    const ExtremeSearch hi = max_distance_in_sep(m, p.seed() + 1, opts);
    std::vector<Cell> r1{metric_name(m), std::string("min"), lo.best, distance_to_mixed(min_witness_state(), m)};
    push_estimate(r1, lo.walks);
    r1.emplace_back(static_cast<long long>(lo.converged));
    t.add_row(std::move(r1));
    std::vector<Cell> r2{metric_name(m), std::string("max"), hi.best, distance_to_mixed(max_witness_state(), m)};
    push_estimate(r2, hi.walks);
    r2.emplace_back(static_cast<long long>(hi.converged));
    t.add_row(std::move(r2));
  }
  return t;
}

// ---- maxent-scan ---------------------------------------------------------------

Table maxent_scan(const Params& p) {
  const long long points = p.integer("points", 200);
  require(points >= 2 && points <= 1000000, "--points must lie in [2, 1e6]");
  const double b_max = 2.0 * std::sqrt(2.0);
  Table t;
  t.columns = {"b", "ppt_min_eig", "ppt_separable", "threshold_separable"};
  for (long long i = 0; i < points; ++i) {
    const double b = -b_max + 2.0 * b_max * static_cast<double>(i) / static_cast<double>(points - 1);
    const EigCriterion c = ppt(rho_ms_chsh(b), {2, 2});
    t.add_row({b, c.min_eig, static_cast<long long>(c.pass), static_cast<long long>(std::abs(b) < std::sqrt(2.0))});
  }
  return t;
}

struct Entry {
  std::string name;
  std::vector<std::string> keys;
  Table (*run)(const Params&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"survey-sep", {"dims", "measure", "samples", "seed", "q", "alpha", "threads"}, survey_sep},
      {"survey-qcond", {"dims", "measure", "samples", "seed", "q", "alpha", "threads"}, survey_qcond},
      {"dist-r", {"measure", "samples", "seed", "bins", "alpha", "threads"}, dist_r},
      {"dist-lmax", {"measure", "samples", "seed", "bins", "alpha", "threads"}, dist_lmax},
      {"survey-gates", {"gate", "qubits", "inputs", "measure", "samples", "seed", "alpha", "threads"}, survey_gates},
      {"speed-scan", {"family", "samples", "seed", "alpha", "threads"}, speed_scan},
      {"grover-trace", {"n", "k", "iters", "pivot"}, grover_trace},
      {"xy-evolve", {"g0", "h0", "hf", "gamma", "schedule", "kappa", "modes", "tmax", "points"}, xy_evolve},
      {"xy-adiabatic", {"kappa", "modes", "tmax", "gamma", "field", "points"}, xy_adiabatic},
      {"metric-extremes", {"metric", "steps", "walks", "seed", "threads"}, metric_extremes},
      {"maxent-scan", {"points"}, maxent_scan},
  };
  return entries;
}

const Entry& find_entry(const std::string& name) {
  for (const Entry& e : registry())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown survey '" + name + "'");
}

}  // namespace

const std::vector<std::string>& survey_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& survey_params(const std::string& name) { return find_entry(name).keys; }

Table run_survey(const std::string& name, const ParamMap& params) {
  const Entry& e = find_entry(name);
  for (const auto& [key, value] : params) {
    if (std::find(e.keys.begin(), e.keys.end(), key) == e.keys.end())
      throw std::invalid_argument("survey '" + name + "' takes no parameter '" + key + "'");
  }
  return e.run(Params(params));
}

}  // namespace qent

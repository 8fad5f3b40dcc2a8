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

#include "qent/qent.h"

#include <exception>
#include <new>
#include <string>

#include "qent/entmeas.hpp"
#include "qent/error.hpp"
#include "qent/families.hpp"
#include "qent/qmat.hpp"
#include "qent/randgen.hpp"
#include "qent/rng.hpp"
#include "qent/sepcrit.hpp"
#include "qent/surveys.hpp"

struct qent_rng {
  qent::Rng rng;
};

struct qent_state {
  qent::Dims dims;
  qent::CMat rho;
};

struct qent_table {
  qent::Table table;
};

namespace {

thread_local std::string g_last_error;

qent_status fail(qent_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
qent_status guarded(Fn fn) {
  try {
    fn();
    g_last_error.clear();
    return QENT_OK;
  } catch (const qent::DomainError& e) {
    return fail(QENT_ERR_DOMAIN, e.what());
  } catch (const qent::ConvergenceError& e) {
    return fail(QENT_ERR_CONVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QENT_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QENT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QENT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QENT_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw std::invalid_argument(std::string(name) + " must not be null");
}

qent::Dims to_dims(const int* dims, size_t n) {
  need(dims, "dims");
  qent::require(n >= 1, "dims must list at least one factor");
  return qent::Dims(dims, dims + n);
}

void check_bipartite(const qent_state* s) {
  need(s, "state");
  qent::require(s->dims.size() == 2, "operation needs a bipartite state");
}

qent_status emit_state(qent::Dims dims, qent::CMat rho, qent_state** out) {
  return guarded([&] {
    need(out, "out");
    *out = new qent_state{std::move(dims), std::move(rho)};
  });
}

const qent::Cell* cell_at(const qent_table* t, size_t row, size_t col) {
  if (t == nullptr || row >= t->table.rows.size() || col >= t->table.columns.size()) return nullptr;
  return &t->table.rows[row][col];
}

}  // namespace

extern "C" {

const char* qent_version(void) { return "1.0.0"; }

const char* qent_last_error(void) { return g_last_error.c_str(); }

qent_status qent_rng_create(uint64_t seed, uint64_t stream, qent_rng** out) {
  return guarded([&] {
    need(out, "out");
    *out = new qent_rng{qent::Rng(seed, stream)};
  });
}

void qent_rng_destroy(qent_rng* rng) { delete rng; }

qent_status qent_state_from_matrix(const int* dims, size_t n_dims, const double* re, const double* im,
                                   qent_state** out) {
  qent::Dims d;
  qent::CMat rho;
  const qent_status st = guarded([&] {
    d = to_dims(dims, n_dims);
    need(re, "re");
    need(im, "im");
    const int n = qent::total_dim(d);
    rho.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rho(i, j) = qent::cplx(re[i * n + j], im[i * n + j]);
    qent::validate_density(rho, d);
  });
  if (st != QENT_OK) return st;
  return emit_state(std::move(d), std::move(rho), out);
}

qent_status qent_state_sample_mixed(const int* dims, size_t n_dims, const char* measure, qent_rng* rng,
                                    qent_state** out) {
  qent::Dims d;
  qent::CMat rho;
  const qent_status st = guarded([&] {
    d = to_dims(dims, n_dims);
    need(measure, "measure");
    need(rng, "rng");
    rho = qent::sample_mixed_state(d, qent::SimplexMeasure::parse(measure), rng->rng);
  });
  if (st != QENT_OK) return st;
  return emit_state(std::move(d), std::move(rho), out);
}

qent_status qent_state_sample_pure(const int* dims, size_t n_dims, qent_rng* rng, qent_state** out) {
  qent::Dims d;
  qent::CMat rho;
  const qent_status st = guarded([&] {
    d = to_dims(dims, n_dims);
    need(rng, "rng");
    rho = qent::projector(qent::sample_pure_state(d, rng->rng));
  });
  if (st != QENT_OK) return st;
  return emit_state(std::move(d), std::move(rho), out);
}

qent_status qent_state_sample_fixed_r(double r_target, qent_rng* rng, qent_state** out) {
  qent::CMat rho;
  const qent_status st = guarded([&] {
    need(rng, "rng");
    rho = qent::sample_fixed_R(r_target, rng->rng);
  });
  if (st != QENT_OK) return st;
  return emit_state({2, 2}, std::move(rho), out);
}

qent_status qent_state_werner(double x, qent_state** out) {
  qent::CMat rho;
  const qent_status st = guarded([&] { rho = qent::werner(x); });
  if (st != QENT_OK) return st;
  return emit_state({2, 2}, std::move(rho), out);
}

void qent_state_destroy(qent_state* state) { delete state; }

qent_status qent_state_dim(const qent_state* state, size_t* dim) {
  return guarded([&] {
    need(state, "state");
    need(dim, "dim");
    *dim = static_cast<size_t>(state->rho.rows());
  });
}

qent_status qent_state_matrix(const qent_state* state, double* re, double* im) {
  return guarded([&] {
    need(state, "state");
    need(re, "re");
    need(im, "im");
    const auto n = state->rho.rows();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        re[i * n + j] = state->rho(i, j).real();
        im[i * n + j] = state->rho(i, j).imag();
      }
  });
}

qent_status qent_ppt(const qent_state* state, int* pass, double* min_eig) {
  return guarded([&] {
    check_bipartite(state);
    const auto r = qent::ppt(state->rho, state->dims);
    if (pass) *pass = r.pass;
    if (min_eig) *min_eig = r.min_eig;
  });
}

qent_status qent_reduction(const qent_state* state, int* pass, double* min_eig) {
  return guarded([&] {
    check_bipartite(state);
    const auto r = qent::reduction(state->rho, state->dims);
    if (pass) *pass = r.pass;
    if (min_eig) *min_eig = r.min_eig;
  });
}

qent_status qent_majorization(const qent_state* state, int* pass) {
  return guarded([&] {
    check_bipartite(state);
    need(pass, "pass");
    *pass = qent::majorization(state->rho, state->dims).pass();
  });
}

qent_status qent_q_entropic(const qent_state* state, const char* q, int* pass) {
  return guarded([&] {
    check_bipartite(state);
    need(q, "q");
    need(pass, "pass");
    *pass = qent::q_entropic(state->rho, state->dims, qent::QParam::parse(q)).pass;
  });
}

#define QENT_SCALAR(name, expr)                            qent_status name(const qent_state* state, double* out) {     return guarded([&] {                                       need(state, "state");                                    need(out, "out");                                        *out = (expr);                                         });                                                    }

QENT_SCALAR(qent_concurrence, qent::concurrence(state->rho))
QENT_SCALAR(qent_eof, qent::eof(state->rho))
QENT_SCALAR(qent_purity, qent::purity(state->rho))
QENT_SCALAR(qent_participation_ratio, qent::participation_ratio(state->rho))
QENT_SCALAR(qent_lambda_max, qent::lambda_max(state->rho))

#undef QENT_SCALAR

qent_status qent_renyi(const qent_state* state, const char* q, double* out) {
  return guarded([&] {
    need(state, "state");
    need(q, "q");
    need(out, "out");
    *out = qent::renyi(state->rho, qent::QParam::parse(q));
  });
}

qent_status qent_tsallis(const qent_state* state, const char* q, double* out) {
  return guarded([&] {
    need(state, "state");
    need(q, "q");
    need(out, "out");
    *out = qent::tsallis(state->rho, qent::QParam::parse(q));
  });
}

qent_status qent_conditional_q(const qent_state* state, const char* q, qent_side side, qent_family family,
                               double* out) {
  return guarded([&] {
    check_bipartite(state);
    need(q, "q");
    need(out, "out");
    const auto s = side == QENT_B_GIVEN_A ? qent::CondSide::kBgivenA : qent::CondSide::kAgivenB;
    const auto f = family == QENT_TSALLIS ? qent::EntropyFamily::kTsallis : qent::EntropyFamily::kRenyi;
    *out = qent::conditional_q(state->rho, state->dims, qent::QParam::parse(q), s, f);
  });
}

#define QENT_PAIR(name, fn)                                                     qent_status name(const qent_state* a, const qent_state* b, double* out) {       return guarded([&] {                                                            need(a, "a");                                                                 need(b, "b");                                                                 need(out, "out");                                                             *out = fn(a->rho, b->rho);                                                  });                                                                         }

QENT_PAIR(qent_fidelity, qent::fidelity)
QENT_PAIR(qent_bures_distance, qent::bures_distance)
QENT_PAIR(qent_hs_distance, qent::hs_distance)

#undef QENT_PAIR

size_t qent_survey_count(void) { return qent::survey_names().size(); }

const char* qent_survey_name(size_t index) {
  const auto& names = qent::survey_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

const char* qent_survey_param(const char* survey, size_t index) {
  if (survey == nullptr) return nullptr;
  try {
    const auto& keys = qent::survey_params(survey);
    return index < keys.size() ? keys[index].c_str() : nullptr;
  } catch (const std::exception&) {
    return nullptr;
  }
}

qent_status qent_survey_run(const char* survey, const char* const* keys, const char* const* values,
                            size_t n_params, qent_table** out) {
  return guarded([&] {
    need(survey, "survey");
    need(out, "out");
    qent::ParamMap params;
    for (size_t i = 0; i < n_params; ++i) {
      need(keys, "keys");
      need(values, "values");
      need(keys[i], "key");
      need(values[i], "value");
      params[keys[i]] = values[i];
    }
    auto* t = new qent_table{qent::run_survey(survey, params)};
    *out = t;
  });
}

size_t qent_table_columns(const qent_table* table) { return table ? table->table.columns.size() : 0; }

size_t qent_table_rows(const qent_table* table) { return table ? table->table.rows.size() : 0; }

const char* qent_table_column_name(const qent_table* table, size_t col) {
  if (table == nullptr || col >= table->table.columns.size()) return nullptr;
  return table->table.columns[col].c_str();
}

qent_cell_kind qent_table_cell_kind(const qent_table* table, size_t row, size_t col) {
  const qent::Cell* c = cell_at(table, row, col);
  if (c == nullptr) return QENT_CELL_EMPTY;
  switch (c->index()) {
    case 1:
      return QENT_CELL_INT;
    case 2:
      return QENT_CELL_REAL;
    case 3:
      return QENT_CELL_TEXT;
    default:
      return QENT_CELL_EMPTY;
  }
}

qent_status qent_table_cell_int(const qent_table* table, size_t row, size_t col, long long* out) {
  const qent::Cell* c = cell_at(table, row, col);
  if (c == nullptr || out == nullptr) return fail(QENT_ERR_ARGUMENT, "cell index out of range");
  if (const auto* v = std::get_if<long long>(c)) {
    *out = *v;
    return QENT_OK;
  }
  return fail(QENT_ERR_ARGUMENT, "cell does not hold an integer");
}

qent_status qent_table_cell_real(const qent_table* table, size_t row, size_t col, double* out) {
  const qent::Cell* c = cell_at(table, row, col);
  if (c == nullptr || out == nullptr) return fail(QENT_ERR_ARGUMENT, "cell index out of range");
  if (const auto* v = std::get_if<double>(c)) {
    *out = *v;
    return QENT_OK;
  }
  if (const auto* v = std::get_if<long long>(c)) {
    *out = static_cast<double>(*v);
    return QENT_OK;
  }
  return fail(QENT_ERR_ARGUMENT, "cell does not hold a number");
}

const char* qent_table_cell_text(const qent_table* table, size_t row, size_t col) {
  const qent::Cell* c = cell_at(table, row, col);
  if (c == nullptr) return nullptr;
  if (const auto* v = std::get_if<std::string>(c)) return v->c_str();
  return nullptr;
}

void qent_table_destroy(qent_table* table) { delete table; }

}  // extern "C"

#include "qcluster/qcluster.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qcluster/explorer.hpp"
#include "qcluster/serialize.hpp"

struct qcl_seed {
  qcl::QuantumSeed seed;
  std::string name;
  std::string description;
};

struct qcl_report {
  qcl::ExplorationReport report;
};

namespace {

thread_local std::string last_error;

qcl_status status_for(qcl::ErrorCode code) {
  using qcl::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QCL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return QCL_ERR_PARSE;
    case ErrorCode::IndexOutOfRange: return QCL_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::DimensionMismatch: return QCL_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotSkewSymmetric: return QCL_ERR_NOT_SKEW_SYMMETRIC;
    case ErrorCode::NotBlockDiagonal: return QCL_ERR_NOT_BLOCK_DIAGONAL;
    case ErrorCode::NonPositiveD: return QCL_ERR_NON_POSITIVE_D;
    case ErrorCode::SingularC: return QCL_ERR_SINGULAR_C;
    case ErrorCode::NotSkewSymmetrizable: return QCL_ERR_NOT_SKEW_SYMMETRIZABLE;
    case ErrorCode::NotDivisible: return QCL_ERR_NOT_DIVISIBLE;
    case ErrorCode::DivisionByZero: return QCL_ERR_DIVISION_BY_ZERO;
    case ErrorCode::NotQCommuting: return QCL_ERR_NOT_Q_COMMUTING;
    case ErrorCode::NonIntegerExponent: return QCL_ERR_NON_INTEGER_EXPONENT;
    case ErrorCode::TorusMismatch: return QCL_ERR_TORUS_MISMATCH;
    case ErrorCode::Overflow: return QCL_ERR_OVERFLOW;
    case ErrorCode::Integrity: return QCL_ERR_INTEGRITY;
  }
  return QCL_ERR_INTERNAL;
}

template <typename F>
qcl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QCL_OK;
  } catch (const qcl::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QCL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QCL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) qcl::fail(qcl::ErrorCode::InvalidArgument, what);
}

qcl::ExploreOptions to_options(const qcl_explore_options* options) {
  require(options != nullptr, "null options");
  qcl::ExploreOptions out;
  out.depth = options->depth;
  out.budget = options->budget ? options->budget : qcl::kDefaultNodeBudget;
  out.jobs = options->jobs ? options->jobs : 1;
  out.count_up_to_permutation = options->count_up_to_permutation != 0;
  return out;
}

}  // namespace

extern "C" {

const char* qcl_status_name(qcl_status status) {
  switch (status) {
    case QCL_OK: return "Ok";
    case QCL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case QCL_ERR_PARSE: return "ParseError";
    case QCL_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case QCL_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case QCL_ERR_NOT_SKEW_SYMMETRIC: return "NotSkewSymmetric";
    case QCL_ERR_NOT_BLOCK_DIAGONAL: return "NotBlockDiagonal";
    case QCL_ERR_NON_POSITIVE_D: return "NonPositiveD";
    case QCL_ERR_SINGULAR_C: return "SingularC";
    case QCL_ERR_NOT_SKEW_SYMMETRIZABLE: return "NotSkewSymmetrizable";
    case QCL_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case QCL_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case QCL_ERR_NOT_Q_COMMUTING: return "NotQCommuting";
    case QCL_ERR_NON_INTEGER_EXPONENT: return "NonIntegerExponent";
    case QCL_ERR_TORUS_MISMATCH: return "TorusMismatch";
    case QCL_ERR_OVERFLOW: return "Overflow";
    case QCL_ERR_INTEGRITY: return "IntegrityError";
    case QCL_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* qcl_last_error(void) { return last_error.c_str(); }

void qcl_string_free(char* s) { std::free(s); }

uint64_t qcl_default_budget(void) { return qcl::kDefaultNodeBudget; }

qcl_status qcl_seed_from_json(const char* json, qcl_seed** out) {
  return guarded([&] {
    require(json && out, "null argument");
    qcl::SeedFile file = qcl::seed_from_text(json);
    *out = new qcl_seed{std::move(file.seed), std::move(file.name), std::move(file.description)};
  });
}

qcl_status qcl_seed_to_json(const qcl_seed* seed, char** out) {
  return guarded([&] {
    require(seed && out, "null argument");
    *out = dup_string(qcl::seed_to_json(seed->seed, seed->name, seed->description).dump(2));
  });
}

void qcl_seed_free(qcl_seed* seed) { delete seed; }

qcl_status qcl_seed_rank(const qcl_seed* seed, size_t* m, size_t* n) {
  return guarded([&] {
    require(seed && m && n, "null argument");
    *m = seed->seed.m();
    *n = seed->seed.n();
  });
}

qcl_status qcl_seed_mutate(const qcl_seed* seed, size_t k, qcl_seed** out) {
  return guarded([&] {
    require(seed && out, "null argument");
    if (k == 0) qcl::fail(qcl::ErrorCode::IndexOutOfRange, "mutation indices start at 1");
    *out = new qcl_seed{qcl::mutate_seed(seed->seed, k - 1), seed->name, seed->description};
  });
}

qcl_status qcl_seed_mutate_word(const qcl_seed* seed, const char* word, qcl_seed** out) {
  return guarded([&] {
    require(seed && word && out, "null argument");
    *out = new qcl_seed{qcl::mutate_word(seed->seed, qcl::parse_word(word)), seed->name, seed->description};
  });
}

qcl_status qcl_seed_equal(const qcl_seed* a, const qcl_seed* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = a->seed == b->seed ? 1 : 0;
  });
}

qcl_status qcl_seed_is_integrable(const qcl_seed* seed, int* out) {
  return guarded([&] {
    require(seed && out, "null argument");
    *out = qcl::is_integrable(seed->seed) ? 1 : 0;
  });
}

qcl_status qcl_seed_is_sign_coherent(const qcl_seed* seed, int* out) {
  return guarded([&] {
    require(seed && out, "null argument");
    *out = qcl::is_sign_coherent(seed->seed.B()).coherent() ? 1 : 0;
  });
}

qcl_status qcl_seed_variables_text(const qcl_seed* seed, char** out) {
  return guarded([&] {
    require(seed && out, "null argument");
    std::string text;
    const auto& vars = seed->seed.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      text += "X'" + std::to_string(i + 1) + " = " + vars[i].to_string() + "\n";
    }
    *out = dup_string(text);
  });
}

qcl_status qcl_seed_duplicate(const qcl_seed* seed, qcl_seed** out) {
  return guarded([&] {
    require(seed && out, "null argument");
    qcl::DuplicatedSeed dup = qcl::duplicate_seed(seed->seed);
    const std::string name = seed->name.empty() ? std::string() : seed->name + " (duplicated)";
    *out = new qcl_seed{dup.seed(), name, seed->description};
  });
}

qcl_status qcl_check_compatible_json(const char* seed_json, char** d_json) {
  return guarded([&] {
    require(seed_json && d_json, "null argument");
    const auto raw = qcl::raw_exchange_from_json(qcl::parse_json(seed_json));
    const qcl::Diagonal D = qcl::check_compatible(raw.B, raw.Lambda);
    *d_json = dup_string(qcl::Json(D).dump());
  });
}

qcl_status qcl_lambda_from_bcd_json(const char* json, char** out) {
  return guarded([&] {
    require(json && out, "null argument");
    const qcl::Json j = qcl::parse_json(json);
    if (!j.is_object() || !j.contains("B") || !j.contains("C") || !j.contains("D")) {
      qcl::fail(qcl::ErrorCode::Parse, "input needs 'B', 'C' and 'D'");
    }
    const qcl::RationalMatrix B = qcl::rational_matrix_from_json(j["B"], "B");
    const qcl::RationalMatrix C = qcl::rational_matrix_from_json(j["C"], "C");
    std::vector<qcl::Rational> D;
    const auto& dj = j["D"];
    if (!dj.is_array()) qcl::fail(qcl::ErrorCode::Parse, "'D' must be a list of diagonal entries or a matrix");
    if (!dj.empty() && dj[0].is_array()) {
      const qcl::RationalMatrix Dm = qcl::rational_matrix_from_json(dj, "D");
      if (!Dm.square()) qcl::fail(qcl::ErrorCode::DimensionMismatch, "D must be square");
      for (std::size_t i = 0; i < Dm.rows(); ++i) {
        for (std::size_t k = 0; k < Dm.cols(); ++k)
          if (i != k && Dm(i, k) != 0) qcl::fail(qcl::ErrorCode::InvalidArgument, "D must be diagonal");
        D.push_back(Dm(i, i));
      }
    } else {
      for (const auto& x : dj) D.push_back(qcl::rational_from_json(x));
    }
    const qcl::RationalMatrix lambda = qcl::lambda_from_bcd(B, C, D);
    const std::size_t n = B.rows();
    qcl::Json result = qcl::Json::object();
    result["Lambda"] = qcl::matrix_to_json(lambda);
    result["Lambda1"] = qcl::matrix_to_json(lambda.block(0, n, n, n));
    result["Lambda2"] = qcl::matrix_to_json(lambda.block(n, n, n, n));
    *out = dup_string(result.dump());
  });
}

qcl_status qcl_explore(const qcl_seed* root, const qcl_explore_options* options, qcl_report** out) {
  return guarded([&] {
    require(root && out, "null argument");
    *out = new qcl_report{qcl::explore(root->seed, to_options(options))};
  });
}

qcl_status qcl_explore_matrix_json(const char* seed_json, const qcl_explore_options* options, qcl_report** out) {
  return guarded([&] {
    require(seed_json && out, "null argument");
    const qcl::IntMatrix B = qcl::exchange_matrix_from_json(qcl::parse_json(seed_json));
    *out = new qcl_report{qcl::check_total_sign_coherence(B, to_options(options))};
  });
}

qcl_status qcl_report_to_json(const qcl_report* report, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = dup_string(report->report.to_json());
  });
}

int qcl_report_exit_code(const qcl_report* report) { return report ? report->report.exit_code() : 2; }

void qcl_report_free(qcl_report* report) { delete report; }

qcl_status qcl_periodicity_scan(const qcl_seed* seed, const char* word, char** out) {
  return guarded([&] {
    require(seed && word && out, "null argument");
    const qcl::PeriodicityResult r = qcl::periodicity_scan(seed->seed, qcl::parse_word(word));
    qcl::Json perm = qcl::Json::array();
    for (std::size_t s : r.permutation) perm.push_back(s + 1);
    *out = dup_string(qcl::Json{{"returnsToStart", r.returns_to_start},
                                {"upToPermutation", r.up_to_permutation},
                                {"permutation", perm}}
                          .dump());
  });
}

}  // extern "C"

#include "hecke/hecke.h"

#include "hecke/error.hpp"
#include "hecke/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct hk_analysis {
  hecke::AnalysisReport report;
};

struct hk_document {
  hecke::ReportDocument doc;
};

namespace {

thread_local std::string last_error;

hk_status to_status(hecke::ErrorCode c) { return static_cast<hk_status>(static_cast<int>(c) + 1); }

template <class F>
hk_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HK_OK;
  } catch (const hecke::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HK_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) hecke::fail(hecke::ErrorCode::InvalidArgument, what);
}

void fill(const hecke::AnalysisReport& r, hk_summary* out) {
  out->q = r.q;
  out->p = r.p;
  out->e = r.e;
  out->k = r.k;
  out->m = r.m;
  out->j = r.j;
  out->n = r.n;
  out->dim_level1 = r.dim_level1;
  out->dim_old = r.dim_old;
  out->dim_new = r.dim_new;
  out->tt_injective = r.tt_injective;
  out->tt_injective_crosscheck = r.tt_injective_crosscheck;
  out->direct_sum = r.direct_sum;
  out->direct_sum_crosscheck = r.direct_sum_crosscheck;
  out->has_dirsum_det_tvaluation = r.dirsum_det_tvaluation.has_value();
  out->dirsum_det_tvaluation = r.dirsum_det_tvaluation.value_or(0);
  out->zero_count = r.zero_count;
  out->identity_failures = r.identity_failures();
  out->theorem_violation = r.theorem_violation();
}

}  // namespace

extern "C" {

const char* hk_last_error(void) { return last_error.c_str(); }

const char* hk_status_name(hk_status status) {
  if (status == HK_OK) return "Ok";
  if (status < HK_OK || status > HK_ERR_INTERNAL) return "Unknown";
  return hecke::error_code_name(static_cast<hecke::ErrorCode>(status - 1)).data();
}

hk_status hk_parse_format(const char* name, hk_format* out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = hecke::parse_format(name) == hecke::Format::Json ? HK_FORMAT_JSON : HK_FORMAT_CSV;
  });
}

hk_status hk_analyze(int64_t q, int64_t k, int64_t m, hk_analysis** out) {
  return guarded([&] {
    require(out, "null output handle");
    *out = nullptr;
    *out = new hk_analysis{hecke::analyze(q, k, m)};
  });
}

void hk_analysis_free(hk_analysis* a) { delete a; }

hk_status hk_analysis_summary(const hk_analysis* a, hk_summary* out) {
  return guarded([&] {
    require(a && out, "null argument");
    fill(a->report, out);
  });
}

size_t hk_analysis_identity_count(const hk_analysis* a) { return a ? a->report.identities.size() : 0; }

hk_status hk_analysis_identity(const hk_analysis* a, size_t index, const char** name, int* state) {
  return guarded([&] {
    require(a && name && state, "null argument");
    if (index >= a->report.identities.size()) hecke::fail(hecke::ErrorCode::IndexOutOfRange, "identity index out of range");
    const auto& r = a->report.identities[index];
    *name = r.name.c_str();
    *state = r.passed ? (*r.passed ? HK_IDENTITY_PASSED : HK_IDENTITY_FAILED) : HK_IDENTITY_NOT_EVALUATED;
  });
}

size_t hk_analysis_slope_count(const hk_analysis* a) { return a ? a->report.slopes.size() : 0; }

hk_status hk_analysis_slope(const hk_analysis* a, size_t index, int64_t* num, int64_t* den, size_t* mult) {
  return guarded([&] {
    require(a && num && den && mult, "null argument");
    if (index >= a->report.slopes.size()) hecke::fail(hecke::ErrorCode::IndexOutOfRange, "slope index out of range");
    const auto& s = a->report.slopes[index];
    *num = s.slope.num;
    *den = s.slope.den;
    *mult = s.multiplicity;
  });
}

hk_status hk_analyze_document(int64_t q, int64_t k, int64_t m, hk_document** out) {
  return guarded([&] {
    require(out, "null output handle");
    *out = nullptr;
    *out = new hk_document{hecke::analyze_document(q, k, m)};
  });
}

hk_status hk_sweep(const hk_sweep_spec* spec, hk_document** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    require(spec->q_list || spec->q_count == 0, "null q list");
    require(spec->m_list || spec->m_count == 0, "null m list");
    *out = nullptr;
    hecke::SweepSpec s;
    s.q_list.assign(spec->q_list, spec->q_list + spec->q_count);
    s.k_min = spec->k_min;
    s.k_max = spec->k_max;
    if (spec->m_count) s.m_list = std::vector<std::int64_t>(spec->m_list, spec->m_list + spec->m_count);
    if (spec->n_cap) s.n_cap = spec->n_cap;
    s.jobs = spec->jobs ? spec->jobs : 1;
    *out = new hk_document{hecke::run_sweep(s)};
  });
}

hk_status hk_document_parse_json(const char* data, size_t len, hk_document** out) {
  return guarded([&] {
    require(data && out, "null argument");
    *out = nullptr;
    *out = new hk_document{hecke::parse_report_json(std::string_view(data, len))};
  });
}

void hk_document_free(hk_document* doc) { delete doc; }

size_t hk_document_entry_count(const hk_document* doc) { return doc ? doc->doc.entries.size() : 0; }

hk_status hk_document_entry(const hk_document* doc, size_t index, hk_summary* out) {
  return guarded([&] {
    require(doc && out, "null argument");
    if (index >= doc->doc.entries.size()) hecke::fail(hecke::ErrorCode::IndexOutOfRange, "entry index out of range");
    fill(doc->doc.entries[index], out);
  });
}

size_t hk_document_skipped_count(const hk_document* doc) { return doc ? doc->doc.skipped.size() : 0; }

hk_status hk_document_skipped(const hk_document* doc, size_t index, int64_t* q, int64_t* k, int64_t* m,
                              const char** reason) {
  return guarded([&] {
    require(doc && q && k && m && reason, "null argument");
    if (index >= doc->doc.skipped.size()) hecke::fail(hecke::ErrorCode::IndexOutOfRange, "skipped index out of range");
    const auto& s = doc->doc.skipped[index];
    *q = s.q;
    *k = s.k;
    *m = s.m;
    *reason = s.reason.c_str();
  });
}

hk_status hk_document_summary(const hk_document* doc, hk_sweep_summary* out) {
  return guarded([&] {
    require(doc && out, "null argument");
    const auto s = hecke::summarize(doc->doc);
    *out = hk_sweep_summary{s.analyzed,           s.skipped,           s.tt_injective_false, s.direct_sum_false,
                            s.criterion_mismatches, s.identity_failures, s.theorem_violations};
  });
}

int hk_document_equal(const hk_document* a, const hk_document* b) { return a && b && a->doc == b->doc; }

hk_status hk_document_serialize(const hk_document* doc, hk_format format, char** buf, size_t* len) {
  return guarded([&] {
    require(doc && buf && len, "null argument");
    *buf = nullptr;
    *len = 0;
    if (format != HK_FORMAT_JSON && format != HK_FORMAT_CSV)
      hecke::fail(hecke::ErrorCode::UnsupportedFormat, "unsupported format code " + std::to_string(static_cast<int>(format)));
    const std::string s =
        hecke::serialize_report(doc->doc, format == HK_FORMAT_JSON ? hecke::Format::Json : hecke::Format::Csv);
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    *buf = out;
    *len = s.size();
  });
}

void hk_buffer_free(char* buf) { std::free(buf); }

}  // extern "C"

#include "gexp/gexp.h"

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bracket.hpp"
#include "error.hpp"
#include "formats.hpp"
#include "group.hpp"
#include "pipeline.hpp"
#include "report.hpp"

namespace {

thread_local std::string g_err;

gexp_rc from_errc(gexp::errc c) {
  switch (c) {
    case gexp::errc::check_failed:
      return GEXP_CHECK_FAILED;
    case gexp::errc::invalid:
      return GEXP_INVALID;
    case gexp::errc::cap_exceeded:
      return GEXP_CAP_EXCEEDED;
    case gexp::errc::internal:
      return GEXP_INTERNAL;
  }
  return GEXP_INTERNAL;
}

template <typename F>
gexp_rc guarded(F&& body) {
  try {
    g_err.clear();
    return body();
  } catch (const gexp::Error& e) {
    g_err = e.what();
    return from_errc(e.code());
  } catch (const std::exception& e) {
    g_err = e.what();
    return GEXP_INTERNAL;
  }
}

}  // namespace

struct gexp_algebra {
  gexp::bracket::BracketAlgebra alg;
};

struct gexp_group {
  std::unique_ptr<const gexp::grp::BracketGroup> g;
};

struct gexp_report {
  std::string text;
  std::string json_text;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> checks;  // id, status
};

namespace {

gexp_report* make_report(const gexp::report::Rendered& r) {
  auto* out = new gexp_report;
  out->text = r.text;
  out->json_text = r.json_text;
  out->passed = r.ok;
  for (const auto& c : r.checks)
    out->checks.emplace_back(c.id, gexp::report::status_name(c.status));
  return out;
}

}  // namespace

extern "C" {

const char* gexp_last_error(void) { return g_err.c_str(); }

const char* gexp_version(void) { return "1.0.0"; }

gexp_rc gexp_algebra_sl2(uint32_t p, gexp_algebra** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(out != nullptr, gexp::errc::invalid, "out is NULL");
    *out = nullptr;
    auto f = gexp::fpla::PrimeField::make(p);
    *out = new gexp_algebra{gexp::bracket::BracketAlgebra::sl2(f)};
    return GEXP_OK;
  });
}

gexp_rc gexp_algebra_zero(uint32_t p, uint32_t dim, gexp_algebra** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(out != nullptr, gexp::errc::invalid, "out is NULL");
    *out = nullptr;
    auto f = gexp::fpla::PrimeField::make(p);
    *out = new gexp_algebra{gexp::bracket::BracketAlgebra::zero(f, dim)};
    return GEXP_OK;
  });
}

gexp_rc gexp_algebra_from_text(const char* text, gexp_algebra** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(out != nullptr && text != nullptr, gexp::errc::invalid,
                  "text or out is NULL");
    *out = nullptr;
    *out = new gexp_algebra{gexp::formats::parse_algebra_text(text)};
    return GEXP_OK;
  });
}

void gexp_algebra_free(gexp_algebra* a) { delete a; }

gexp_rc gexp_algebra_p(const gexp_algebra* a, uint32_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(a != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = a->alg.field().p();
    return GEXP_OK;
  });
}

gexp_rc gexp_algebra_dim(const gexp_algebra* a, uint32_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(a != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = a->alg.dim();
    return GEXP_OK;
  });
}

gexp_rc gexp_algebra_validate(const gexp_algebra* a, int* alternating, int* jacobi) {
  return guarded([&]() -> gexp_rc {
    gexp::require(a != nullptr && alternating != nullptr && jacobi != nullptr,
                  gexp::errc::invalid, "NULL argument");
    auto checks = a->alg.validate();
    *alternating = checks.alternating ? 1 : 0;
    *jacobi = checks.jacobi ? 1 : 0;
    return GEXP_OK;
  });
}

gexp_rc gexp_algebra_subalgebra_count(const gexp_algebra* a, uint32_t k, uint64_t cap,
                                      uint64_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(a != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    const auto caps = gexp::pipeline::make_caps(cap);
    *out = a->alg.subalgebras_of_dim(k, caps.enumeration).size();
    return GEXP_OK;
  });
}

gexp_rc gexp_group_build(const gexp_algebra* a, uint64_t cap, gexp_group** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(a != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = nullptr;
    const auto caps = gexp::pipeline::make_caps(cap);
    *out = new gexp_group{gexp::grp::BracketGroup::build(a->alg, caps.enumeration)};
    return GEXP_OK;
  });
}

void gexp_group_free(gexp_group* g) { delete g; }

gexp_rc gexp_group_order(const gexp_group* g, uint64_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(g != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = g->g->order();
    return GEXP_OK;
  });
}

gexp_rc gexp_group_exponent(const gexp_group* g, uint32_t threads, uint64_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(g != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = g->g->exponent(threads == 0 ? 1 : threads);
    return GEXP_OK;
  });
}

gexp_rc gexp_group_center_size(const gexp_group* g, uint64_t* out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(g != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = gexp::grp::center_size(*g->g);
    return GEXP_OK;
  });
}

void gexp_verify_options_init(gexp_verify_options* opt) {
  if (opt == nullptr) return;
  gexp::pipeline::VerifyOptions d;
  opt->p = d.p;
  opt->cap = d.cap;
  opt->seed = d.seed;
  opt->threads = d.threads;
}

gexp_rc gexp_verify_counterexample(const gexp_verify_options* opt, gexp_report** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(opt != nullptr && out != nullptr, gexp::errc::invalid, "NULL argument");
    *out = nullptr;
    gexp::pipeline::VerifyOptions o;
    o.p = opt->p;
    o.cap = opt->cap;
    o.seed = opt->seed;
    o.threads = opt->threads == 0 ? 1 : opt->threads;
    auto rep = gexp::pipeline::verify_counterexample(o);
    auto rendered = gexp::report::render(rep);
    *out = make_report(rendered);
    return rendered.ok ? GEXP_OK : GEXP_CHECK_FAILED;
  });
}

gexp_rc gexp_cohomology(const char* group_spec, uint32_t max_degree, uint64_t cap,
                        gexp_report** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(group_spec != nullptr && out != nullptr, gexp::errc::invalid,
                  "NULL argument");
    *out = nullptr;
    auto rendered = gexp::pipeline::run_cohomology(group_spec, max_degree, cap);
    *out = make_report(rendered);
    return rendered.ok ? GEXP_OK : GEXP_CHECK_FAILED;
  });
}

gexp_rc gexp_group_info(const char* algebra_spec, uint32_t p, uint32_t threads, uint64_t cap,
                        gexp_report** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(algebra_spec != nullptr && out != nullptr, gexp::errc::invalid,
                  "NULL argument");
    *out = nullptr;
    auto rendered = gexp::pipeline::run_group_info(algebra_spec, p,
                                                   threads == 0 ? 1 : threads, cap);
    *out = make_report(rendered);
    return rendered.ok ? GEXP_OK : GEXP_CHECK_FAILED;
  });
}

gexp_rc gexp_subalgebras(const char* algebra_spec, uint32_t p, int32_t dim, uint64_t cap,
                         gexp_report** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(algebra_spec != nullptr && out != nullptr, gexp::errc::invalid,
                  "NULL argument");
    *out = nullptr;
    auto rendered = gexp::pipeline::run_subalgebras(algebra_spec, p, dim, cap);
    *out = make_report(rendered);
    return rendered.ok ? GEXP_OK : GEXP_CHECK_FAILED;
  });
}

gexp_rc gexp_snf_file(const char* matrix_path, uint64_t cap, gexp_report** out) {
  return guarded([&]() -> gexp_rc {
    gexp::require(matrix_path != nullptr && out != nullptr, gexp::errc::invalid,
                  "NULL argument");
    *out = nullptr;
    auto rendered = gexp::pipeline::run_snf(matrix_path, cap);
    *out = make_report(rendered);
    return rendered.ok ? GEXP_OK : GEXP_CHECK_FAILED;
  });
}

void gexp_report_free(gexp_report* r) { delete r; }

const char* gexp_report_text(const gexp_report* r) {
  return r == nullptr ? "" : r->text.c_str();
}

const char* gexp_report_json(const gexp_report* r) {
  return r == nullptr ? "" : r->json_text.c_str();
}

int gexp_report_passed(const gexp_report* r) {
  return (r != nullptr && r->passed) ? 1 : 0;
}

size_t gexp_report_check_count(const gexp_report* r) {
  return r == nullptr ? 0 : r->checks.size();
}

const char* gexp_report_check_id(const gexp_report* r, size_t i) {
  if (r == nullptr || i >= r->checks.size()) return nullptr;
  return r->checks[i].first.c_str();
}

const char* gexp_report_check_status(const gexp_report* r, size_t i) {
  if (r == nullptr || i >= r->checks.size()) return nullptr;
  return r->checks[i].second.c_str();
}

}  // extern "C"

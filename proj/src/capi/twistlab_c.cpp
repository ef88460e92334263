#include "twistlab/twistlab.h"

#include "report/commands.hpp"
#include "superlie/algebra.hpp"

#include <cstring>

using twistlab::Json;

struct tl_session {
  unsigned threads = 1;
  std::string error;
};

struct tl_algebra {
  twistlab::superlie::SuperLieAlgebra alg;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tl_status status_of(twistlab::ErrorKind k) {
  switch (k) {
    case twistlab::ErrorKind::InvalidArgument: return TL_USAGE;
    case twistlab::ErrorKind::Precondition: return TL_PRECONDITION;
    case twistlab::ErrorKind::Internal: return TL_INTERNAL;
  }
  return TL_INTERNAL;
}

// Runs f, mapping exceptions onto status codes and the session's error text.
template <class F>
tl_status guarded(tl_session* s, F f) {
  if (!s) return TL_USAGE;
  s->error.clear();
  try {
    return f();
  } catch (const twistlab::Error& e) {
    s->error = e.what();
    return status_of(e.kind());
  } catch (const Json::exception& e) {
    s->error = std::string("invalid JSON: ") + e.what();
    return TL_USAGE;
  } catch (const std::bad_alloc&) {
    s->error = "out of memory";
    return TL_INTERNAL;
  } catch (const std::exception& e) {
    s->error = e.what();
    return TL_INTERNAL;
  }
}

Json parse_params(const char* text) {
  if (!text || !*text) return Json::object();
  return Json::parse(text);
}

}  // namespace

extern "C" {

const char* tl_version(void) { return twistlab::report::kToolVersion; }

tl_session* tl_session_new(void) { return new (std::nothrow) tl_session; }

void tl_session_free(tl_session* s) { delete s; }

tl_status tl_session_set_threads(tl_session* s, unsigned threads) {
  return guarded(s, [&] {
    if (threads == 0) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "thread count must be positive");
    s->threads = threads;
    return TL_OK;
  });
}

const char* tl_last_error(const tl_session* s) { return s ? s->error.c_str() : "no session"; }

tl_status tl_run(tl_session* s, const char* command, const char* params_json, char** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!command || !out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_run: null argument");
    auto env = twistlab::report::run_command(command, parse_params(params_json), s->threads);
    *out = dup(env.to_json().dump(2) + "\n");
    if (!env.passed()) {
      s->error = env.command + ": one or more checks failed";
      return TL_INTERNAL;
    }
    return TL_OK;
  });
}

tl_status tl_render_table(tl_session* s, const char* report_json, char** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!report_json || !out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_render_table: null argument");
    *out = dup(twistlab::report::render_table(Json::parse(report_json)));
    return TL_OK;
  });
}

void tl_string_free(char* p) { std::free(p); }

tl_status tl_algebra_build(tl_session* s, const char* params_json, tl_algebra** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_algebra_build: null argument");
    *out = new tl_algebra{twistlab::report::algebra_from_params(parse_params(params_json))};
    return TL_OK;
  });
}

void tl_algebra_free(tl_algebra* a) { delete a; }

size_t tl_algebra_dim(const tl_algebra* a) { return a ? a->alg.dim() : 0; }

size_t tl_algebra_odd_dim(const tl_algebra* a) { return a ? a->alg.odd_dim() : 0; }

tl_status tl_algebra_label(tl_session* s, const tl_algebra* a, size_t index, char** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!a || !out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_algebra_label: null argument");
    if (index >= a->alg.dim()) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "basis index out of range");
    *out = dup(a->alg.label(index).name);
    return TL_OK;
  });
}

tl_status tl_algebra_bracket(tl_session* s, const tl_algebra* a, const char* x, const char* y, char** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!a || !x || !y || !out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_algebra_bracket: null argument");
    namespace sl = twistlab::superlie;
    auto v = a->alg.bracket(sl::parse_element(a->alg, x), sl::parse_element(a->alg, y));
    *out = dup(sl::format_element(a->alg, v));
    return TL_OK;
  });
}

tl_status tl_algebra_jacobi(tl_session* s, const tl_algebra* a, int* ok) {
  return guarded(s, [&] {
    if (!a || !ok) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_algebra_jacobi: null argument");
    *ok = twistlab::superlie::jacobi_check(a->alg, s->threads).ok() ? 1 : 0;
    return TL_OK;
  });
}

tl_status tl_algebra_to_json(tl_session* s, const tl_algebra* a, char** out) {
  if (out) *out = nullptr;
  return guarded(s, [&] {
    if (!a || !out) twistlab::fail(twistlab::ErrorKind::InvalidArgument, "tl_algebra_to_json: null argument");
    *out = dup(twistlab::superlie::to_json(a->alg).dump());
    return TL_OK;
  });
}

}  // extern "C"

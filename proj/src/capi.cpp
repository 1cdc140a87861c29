#include "tiedbraid/tiedbraid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "tiedbraid/document.hpp"
#include "tiedbraid/draw.hpp"
#include "tiedbraid/equivalence.hpp"
#include "tiedbraid/moves.hpp"
#include "tiedbraid/rewriting.hpp"
#include "tiedbraid/semantics.hpp"
#include "tiedbraid/suite.hpp"

using namespace tiedbraid;

struct tb_context {
  Context value;
};
struct tb_word {
  TiedWord value;
};
struct tb_document {
  Document value;
};

namespace {
  thread_local std::string last_error;

  tb_status status_of(ErrorCode code) {
    return static_cast<tb_status>(static_cast<int>(code) + 1);
  }

  tb_status fail(tb_status status, std::string message) {
    last_error = std::move(message);
    return status;
  }

  // Runs body, turning exceptions into status codes.
  template <typename F>
  tb_status guarded(F&& body) {
    try {
      last_error.clear();
      return body();
    } catch (Error const& e) {
      return fail(status_of(e.code()), e.what());
    } catch (std::bad_alloc const&) {
      return fail(TB_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
      return fail(TB_INTERNAL, e.what());
    }
  }

  char* dup(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  tb_status null_argument() {
    return fail(TB_INVALID_ARGUMENT, "null argument");
  }

  tb_verdict verdict_of(Equality e) {
    switch (e) {
      case Equality::Equal: return TB_EQUAL;
      case Equality::Differ: return TB_DIFFER;
      case Equality::Undecided: break;
    }
    return TB_UNDECIDED;
  }

  tb_verdict verdict_of(SuiteReport const& r) {
    return r.failures > 0 ? TB_DIFFER : r.undecided > 0 ? TB_UNDECIDED : TB_EQUAL;
  }

  std::string semantics_report(TiedWord const& w) {
    auto const         sem = scan_semantics(w);
    std::ostringstream out;
    out << "perm=" << render(sem.perm) << '\n' << "partition=" << render(sem.partition) << '\n';
    for (std::size_t m = 0; m < sem.winding.size() && w.context().g() > 0; ++m) {
      out << "winding.M" << m + 1 << '=';
      for (std::size_t k = 0; k < sem.winding[m].size(); ++k) {
        out << (k ? "," : "") << sem.winding[m][k];
      }
      out << '\n';
    }
    return out.str();
  }

  template <typename F>
  tb_status equality(tb_word const* a, tb_word const* b, tb_verdict* out, char** witness, F&& f) {
    if (a == nullptr || b == nullptr || out == nullptr) {
      return null_argument();
    }
    return guarded([&] {
      auto const r = f(a->value, b->value);
      if (witness != nullptr) {
        *witness = dup(r.witness);
      }
      *out = verdict_of(r.outcome);
      return TB_OK;
    });
  }
}  // namespace

extern "C" {

char const* tb_status_string(tb_status status) {
  switch (status) {
    case TB_OK: return "Ok";
    case TB_INVALID_ARGUMENT: return "InvalidArgument";
    case TB_INTERNAL: return "Internal";
    default: break;
  }
  if (status > TB_OK && status < TB_INVALID_ARGUMENT) {
    return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "Unknown";
}

char const* tb_last_error(void) {
  return last_error.c_str();
}

void tb_string_free(char* s) {
  std::free(s);
}

tb_status tb_context_parse(char const* header, tb_context** out) {
  if (header == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_context{Context::parse(header)};
    return TB_OK;
  });
}

void tb_context_free(tb_context* ctx) {
  delete ctx;
}

tb_status tb_context_header(tb_context const* ctx, char** out) {
  if (ctx == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = dup(ctx->value.header());
    return TB_OK;
  });
}

int tb_context_n(tb_context const* ctx) {
  return ctx ? ctx->value.n() : 0;
}

int tb_context_g(tb_context const* ctx) {
  return ctx ? ctx->value.g() : 0;
}

tb_status tb_document_load(char const* text, tb_context const* override_ctx, tb_document** out) {
  if (text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    std::optional<Context> ctx;
    if (override_ctx != nullptr) {
      ctx = override_ctx->value;
    }
    *out = new tb_document{load_document(text, ctx)};
    return TB_OK;
  });
}

void tb_document_free(tb_document* doc) {
  delete doc;
}

size_t tb_document_size(tb_document const* doc) {
  return doc ? doc->value.words.size() : 0;
}

tb_status tb_document_context(tb_document const* doc, tb_context** out) {
  if (doc == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_context{doc->value.ctx};
    return TB_OK;
  });
}

tb_status tb_document_word(tb_document const* doc, size_t index, tb_word** out) {
  if (doc == nullptr || out == nullptr) {
    return null_argument();
  }
  if (index >= doc->value.words.size()) {
    return fail(TB_INVALID_ARGUMENT, "word index past the end of the document");
  }
  return guarded([&] {
    *out = new tb_word{doc->value.words[index]};
    return TB_OK;
  });
}

tb_status tb_word_parse(char const* text, tb_context const* ctx, tb_word** out) {
  if (text == nullptr || ctx == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_word{parse(text, ctx->value)};
    return TB_OK;
  });
}

void tb_word_free(tb_word* w) {
  delete w;
}

tb_status tb_word_context(tb_word const* w, tb_context** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_context{w->value.context()};
    return TB_OK;
  });
}

tb_status tb_word_render(tb_word const* w, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = dup(render(w->value));
    return TB_OK;
  });
}

tb_status tb_word_validate(tb_word const* w, char** out, size_t* count) {
  if (w == nullptr || out == nullptr || count == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const         violations = validate(w->value);
    std::ostringstream text;
    for (auto const& v : violations) {
      text << "position=" << v.position << " code=" << to_string(v.code) << ' ' << v.message
           << '\n';
    }
    *out   = dup(text.str());
    *count = violations.size();
    return TB_OK;
  });
}

tb_status tb_word_compose(tb_word const* a, tb_word const* b, tb_word** out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_word{compose(a->value, b->value)};
    return TB_OK;
  });
}

tb_status tb_word_expand(tb_word const* w, tb_word** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new tb_word{expand_generalized(w->value)};
    return TB_OK;
  });
}

tb_status tb_normal_form(tb_word const* w, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const nf = normal_form(w->value);
    *out = dup("braid=" + render(nf.braid_part) + "\nties=" + render(nf.tie_part)
               + "\nreconstruction=" + render(reconstruction(nf)) + "\n");
    return TB_OK;
  });
}

tb_status tb_semantics(tb_word const* w, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = dup(semantics_report(w->value));
    return TB_OK;
  });
}

tb_status tb_closure_report(tb_word const* w, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = dup(closure_report(closure_summary(w->value)));
    return TB_OK;
  });
}

tb_status tb_closure_record(tb_word const* w, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = dup(closure_record(closure_summary(w->value)));
    return TB_OK;
  });
}

tb_status tb_essential(tb_word const* w, size_t tie_index, int* out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = essential(w->value, tie_index) ? 1 : 0;
    return TB_OK;
  });
}


tb_status tb_braid_equal(tb_word const* a, tb_word const* b, uint64_t budget, tb_verdict* out,
                         char** witness) {
  return equality(a, b, out, witness, [&](auto const& x, auto const& y) {
    return braid_equal(x, y, budget);
  });
}

tb_status tb_monoid_equal(tb_word const* a, tb_word const* b, uint64_t budget, tb_verdict* out,
                          char** witness) {
  return equality(a, b, out, witness, [&](auto const& x, auto const& y) {
    return monoid_equal(x, y, budget);
  });
}

tb_status tb_move_apply(char const* name, tb_word const* const* words, size_t nwords,
                        int const* args, size_t nargs, tb_word** out, char** report,
                        size_t* diff_count) {
  if (name == nullptr || (words == nullptr && nwords > 0) || (args == nullptr && nargs > 0)
      || out == nullptr || report == nullptr || diff_count == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    std::vector<TiedWord> ws;
    for (size_t k = 0; k < nwords; ++k) {
      if (words[k] == nullptr) {
        return null_argument();
      }
      ws.push_back(words[k]->value);
    }
    auto const m = apply_move(name, ws, std::vector<int>(args, args + nargs));
    auto const before = closure_summary(m.before), after = closure_summary(m.after);
    auto const diff = closure_diff(before, after, m.map);

    std::ostringstream text;
    text << "move=" << m.name << '\n';
    if (!m.note.empty()) {
      text << "criterion=" << m.note << '\n';
    }
    text << "ctx=" << m.after.context().header() << '\n'
         << "before=" << closure_record(before) << '\n'
         << "after=" << closure_record(after) << '\n'
         << "diff=" << diff.size() << '\n';
    for (auto const& d : diff) {
      text << "diff.item=" << d << '\n';
    }
    *out        = new tb_word{m.after};
    *report     = dup(text.str());
    *diff_count = diff.size();
    return TB_OK;
  });
}

tb_status tb_relations(tb_context const* ctx, int identities, char** out) {
  if (ctx == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const list = identities ? derived_identities(ctx->value) : relation_catalog(ctx->value);
    std::ostringstream text;
    for (auto const* rel : list) {
      text << rel->id << "  " << rel->pattern;
      if (!rel->guard_text.empty()) {
        text << "  [" << rel->guard_text << ']';
      }
      text << '\n';
    }
    *out = dup(text.str());
    return TB_OK;
  });
}

tb_status tb_check(tb_context const* ctx, char const* which, uint64_t budget, char** report,
                   tb_verdict* out) {
  if (ctx == nullptr || which == nullptr || report == nullptr || out == nullptr) {
    return null_argument();
  }
  std::string const kind = which;
  if (kind != "relations" && kind != "identities" && kind != "tbbm") {
    return fail(TB_INVALID_ARGUMENT, "unknown suite " + kind);
  }
  return guarded([&] {
    auto const r = kind == "relations"    ? check_relations(ctx->value, budget)
                   : kind == "identities" ? check_identities(ctx->value, budget)
                                          : check_band(ctx->value, budget);
    *report = dup(r.text);
    *out    = verdict_of(r);
    return TB_OK;
  });
}

tb_status tb_fuzz(uint64_t seed, int cases, int max_length, uint64_t budget,
                  tb_context const* ctx, char** report, tb_verdict* out) {
  if (report == nullptr || out == nullptr) {
    return null_argument();
  }
  if (cases < 0 || max_length < 0) {
    return fail(TB_INVALID_ARGUMENT, "negative case count or length");
  }
  return guarded([&] {
    FuzzOptions options;
    options.seed       = seed;
    options.cases      = cases;
    options.max_length = max_length;
    options.budget     = budget;
    if (ctx != nullptr) {
      options.ctx = ctx->value;
    }
    auto const r = fuzz(options);
    *report      = dup(r.text);
    *out         = verdict_of(r);
    return TB_OK;
  });
}

tb_status tb_draw(tb_word const* w, tb_format format, char** out) {
  if (w == nullptr || out == nullptr) {
    return null_argument();
  }
  if (format != TB_ASCII && format != TB_SVG) {
    return fail(TB_INVALID_ARGUMENT, "unknown format");
  }
  return guarded([&] {
    *out = dup(draw(w->value, format == TB_ASCII ? DrawFormat::Ascii : DrawFormat::Svg));
    return TB_OK;
  });
}

}  // extern "C"

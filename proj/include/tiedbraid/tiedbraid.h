/* C interface to the tied braid kernel.
 *
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function.  Strings returned through `char**` are
 * allocated by the library and released with tb_string_free.  Every
 * function returning tb_status leaves its outputs untouched on failure
 * and records a message retrievable with tb_last_error (per thread).
 */
#ifndef TIEDBRAID_H
#define TIEDBRAID_H

#include <stddef.h>
#include <stdint.h>

#if defined(TB_BUILDING_LIBRARY)
#define TB_API __attribute__((visibility("default")))
#else
#define TB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
  TB_OK = 0,
  TB_INVALID_CONTEXT,
  TB_UNKNOWN_TOKEN,
  TB_INDEX_OUT_OF_RANGE,
  TB_MALFORMED_INDEX_PAIR,
  TB_ALPHABET_FORBIDDEN,
  TB_CONTEXT_MISMATCH,
  TB_TIE_TOKEN_PRESENT,
  TB_NO_MATCH,
  TB_BAD_INSTANTIATION,
  TB_NOT_A_TIE,
  TB_FLAVOR_FORBIDDEN,
  TB_NOT_DESTABILIZABLE,
  TB_TIE_WOULD_BE_ESSENTIAL,
  TB_NO_JUSTIFYING_FIXED_TIE,
  TB_INVALID_ARGUMENT, /* null handle, bad enum value */
  TB_INTERNAL
} tb_status;

/* Outcome of a decision: equal / all checks passed, a separating witness
 * or failed check, or the step budget ran out. */
typedef enum tb_verdict { TB_EQUAL = 0, TB_DIFFER = 1, TB_UNDECIDED = 2 } tb_verdict;

typedef enum tb_format { TB_ASCII = 0, TB_SVG = 1 } tb_format;

typedef struct tb_context  tb_context;
typedef struct tb_word     tb_word;
typedef struct tb_document tb_document;

TB_API char const* tb_status_string(tb_status status);
TB_API char const* tb_last_error(void);
TB_API void        tb_string_free(char* s);

/* Contexts.  "%ctx g=1 n=3 M=lens p=2" (the "%ctx" prefix is optional). */
TB_API tb_status tb_context_parse(char const* header, tb_context** out);
TB_API void      tb_context_free(tb_context* ctx);
TB_API tb_status tb_context_header(tb_context const* ctx, char** out);
/* 0 for NULL. */
TB_API int       tb_context_n(tb_context const* ctx);
TB_API int       tb_context_g(tb_context const* ctx);

/* Word files.  `override_ctx` may be NULL. */
TB_API tb_status tb_document_load(char const* text, tb_context const* override_ctx,
                                  tb_document** out);
TB_API void      tb_document_free(tb_document* doc);
TB_API size_t    tb_document_size(tb_document const* doc);
TB_API tb_status tb_document_context(tb_document const* doc, tb_context** out);
TB_API tb_status tb_document_word(tb_document const* doc, size_t index, tb_word** out);

/* Words. */
TB_API tb_status tb_word_parse(char const* text, tb_context const* ctx, tb_word** out);
TB_API void      tb_word_free(tb_word* w);
TB_API tb_status tb_word_context(tb_word const* w, tb_context** out);
TB_API tb_status tb_word_render(tb_word const* w, char** out);
/* One line per violation, "position=<p> code=<code> <message>"; empty when
 * valid.  *count receives the number of violations. */
TB_API tb_status tb_word_validate(tb_word const* w, char** out, size_t* count);
TB_API tb_status tb_word_compose(tb_word const* a, tb_word const* b, tb_word** out);
TB_API tb_status tb_word_expand(tb_word const* w, tb_word** out);

/* "braid=<word>\nties=<partition>\nreconstruction=<word>\n" */
TB_API tb_status tb_normal_form(tb_word const* w, char** out);
TB_API tb_status tb_semantics(tb_word const* w, char** out);
TB_API tb_status tb_closure_report(tb_word const* w, char** out);
TB_API tb_status tb_closure_record(tb_word const* w, char** out);
/* `tie_index` is the 1-based position of a tie letter. */
TB_API tb_status tb_essential(tb_word const* w, size_t tie_index, int* out);

/* Equality.  *witness (may be NULL) names the separating invariant, or
 * "budget" when undecided, or "" when equal. */
TB_API tb_status tb_braid_equal(tb_word const* a, tb_word const* b, uint64_t budget,
                                tb_verdict* out, char** witness);
TB_API tb_status tb_monoid_equal(tb_word const* a, tb_word const* b, uint64_t budget,
                                 tb_verdict* out, char** witness);

/* Moves by name (conjugate, loop-conjugate, stabilize, destabilize, lmove,
 * add-tie, add-fixed-tie, tbbm) applied to `nwords` words.  *report lists
 * the move, the closure of the word before and after and the differences
 * between them; *diff_count is 0 when the closure invariants survived. */
TB_API tb_status tb_move_apply(char const* name, tb_word const* const* words, size_t nwords,
                               int const* args, size_t nargs, tb_word** out, char** report,
                               size_t* diff_count);

/* The gated relation catalog, one relation per line. */
TB_API tb_status tb_relations(tb_context const* ctx, int identities, char** out);

/* Suites: which = "relations", "identities" or "tbbm". */
TB_API tb_status tb_check(tb_context const* ctx, char const* which, uint64_t budget,
                          char** report, tb_verdict* out);
/* `ctx` may be NULL for random contexts of every flavor. */
TB_API tb_status tb_fuzz(uint64_t seed, int cases, int max_length, uint64_t budget,
                         tb_context const* ctx, char** report, tb_verdict* out);

TB_API tb_status tb_draw(tb_word const* w, tb_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TIEDBRAID_H */

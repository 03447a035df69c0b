/* C interface to the nested term graph toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns an ntg_status; on failure
 * ntg_last_error() describes the problem. Strings returned through char**
 * out-parameters are heap allocated and released with ntg_string_free.
 * Such out-parameters may be NULL when the caller does not need them.
 */
#ifndef NTG_NTG_H
#define NTG_NTG_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(NTG_BUILDING)
#define NTG_API __declspec(dllexport)
#else
#define NTG_API __declspec(dllimport)
#endif
#else
#define NTG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ntg_rgs ntg_rgs; /* recursive graph specification */
typedef struct ntg_fo ntg_fo;   /* first-order term graph */

typedef enum ntg_status {
  NTG_OK = 0,
  NTG_NO = 1,       /* the queried property does not hold */
  NTG_UNKNOWN = 2,  /* undecided within the given depth bound */
  NTG_DISAGREE = 3, /* two decision procedures gave different answers */
  NTG_E_PARSE = 10,
  NTG_E_INVALID = 11,      /* parsed, but not a valid specification */
  NTG_E_PRECONDITION = 12, /* e.g. an ntg was required */
  NTG_E_DEPTH = 13,        /* cyclic input needs a depth bound */
  NTG_E_ARG = 14,
  NTG_E_INTERNAL = 15
} ntg_status;

typedef enum ntg_bisim_method {
  NTG_BISIM_NESTED = 0,
  NTG_BISIM_FIRSTORDER = 1,
  NTG_BISIM_BOTH = 2
} ntg_bisim_method;

typedef enum ntg_hom_level {
  NTG_HOM_NTG = 0,
  NTG_HOM_SNTG = 1,
  NTG_HOM_FIRSTORDER = 2,
  NTG_HOM_NESTED = 3
} ntg_hom_level;

NTG_API const char* ntg_version(void);
/* Message of the last failing call on this thread. */
NTG_API const char* ntg_last_error(void);
NTG_API const char* ntg_status_name(ntg_status s);
NTG_API void ntg_string_free(char* s);

NTG_API ntg_status ntg_rgs_parse(const char* text, ntg_rgs** out);
/* Parses without requiring validity; NTG_NO when validation fails. The
 * report lists violations and warnings. */
NTG_API ntg_status ntg_rgs_check(const char* text, char** report);
NTG_API void ntg_rgs_free(ntg_rgs* r);
NTG_API size_t ntg_rgs_definition_count(const ntg_rgs* r);
NTG_API ntg_status ntg_rgs_print(const ntg_rgs* r, char** out);
NTG_API ntg_status ntg_rgs_deps(const ntg_rgs* r, char** out);
NTG_API ntg_status ntg_rgs_is_ntg(const ntg_rgs* r, char** reason);
/* depth < 0 means no bound. */
NTG_API ntg_status ntg_rgs_unfold(const ntg_rgs* r, long depth, ntg_rgs** out, int* truncated);
NTG_API ntg_status ntg_rgs_sntg(const ntg_rgs* r, char** out);
NTG_API ntg_status ntg_rgs_interpret(const ntg_rgs* r, ntg_fo** out);
NTG_API ntg_status ntg_rgs_collapse(const ntg_rgs* r, ntg_rgs** out);
/* interpret, print, parse, represent, then compare with the input. */
NTG_API ntg_status ntg_rgs_roundtrip(const ntg_rgs* r, char** report);
NTG_API ntg_status ntg_rgs_isomorphic(const ntg_rgs* a, const ntg_rgs* b);
NTG_API ntg_status ntg_rgs_dot(const ntg_rgs* r, int sntg_view, char** out);

NTG_API ntg_status ntg_bisim(const ntg_rgs* a, const ntg_rgs* b, ntg_bisim_method method, long depth,
                             char** report);
NTG_API ntg_status ntg_hom(const ntg_rgs* a, const ntg_rgs* b, ntg_hom_level level, char** report);

NTG_API ntg_status ntg_fo_parse(const char* text, ntg_fo** out);
NTG_API void ntg_fo_free(ntg_fo* g);
NTG_API size_t ntg_fo_size(const ntg_fo* g);
NTG_API ntg_status ntg_fo_print(const ntg_fo* g, char** out);
NTG_API ntg_status ntg_fo_is_member(const ntg_fo* g, char** reason);
NTG_API ntg_status ntg_fo_represent(const ntg_fo* g, ntg_rgs** out);
/* Plain bisimulation collapse. The result can fall outside the RG class. */
NTG_API ntg_status ntg_fo_collapse(const ntg_fo* g, ntg_fo** out);
/* Collapse that keeps an RG member inside the class; NTG_E_PRECONDITION
 * for non-members. */
NTG_API ntg_status ntg_fo_rg_collapse(const ntg_fo* g, ntg_fo** out);
NTG_API ntg_status ntg_fo_bisimilar(const ntg_fo* a, const ntg_fo* b);
NTG_API ntg_status ntg_fo_dot(const ntg_fo* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NTG_NTG_H */

/*
 * C interface to the virtual-graph derivative engine.
 *
 * All objects are opaque handles created by a vg_*_create/parse/compute call
 * and released with the matching vg_*_destroy. Strings returned as
 * `const char*` are owned by the handle they came from and stay valid until
 * that handle is destroyed. Functions returning vg_status set a thread-local
 * message readable with vg_last_error() on failure.
 */
#ifndef VGRAPH_VGRAPH_H
#define VGRAPH_VGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VGRAPH_BUILDING)
#    define VG_API __declspec(dllexport)
#  else
#    define VG_API __declspec(dllimport)
#  endif
#else
#  define VG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vg_status {
  VG_OK = 0,
  VG_ERROR_INVALID_ARGUMENT = 1,
  VG_ERROR_PARSE = 2,
  VG_ERROR_ORDER_LIMIT = 3,
  VG_ERROR_UNSUPPORTED_STYLE = 4,
  VG_ERROR_INTERNAL = 5
} vg_status;

typedef enum vg_regime { VG_REGIME_COMPOSITE = 0, VG_REGIME_INVERSE = 1, VG_REGIME_ODE = 2 } vg_regime;

typedef enum vg_style { VG_STYLE_TEXT = 0, VG_STYLE_LATEX = 1, VG_STYLE_MACHINE = 2 } vg_style;

#define VG_DEFAULT_MAX_ORDER 10u

typedef struct vg_skeleton vg_skeleton;
typedef struct vg_graph_set vg_graph_set;
typedef struct vg_formula vg_formula;
typedef struct vg_report vg_report;

VG_API const char* vg_version(void);
VG_API const char* vg_last_error(void);
/* Byte offset of the last VG_ERROR_PARSE, or (size_t)-1. */
VG_API size_t vg_last_error_position(void);

VG_API vg_status vg_regime_from_string(const char* text, vg_regime* out);
VG_API vg_status vg_style_from_string(const char* text, vg_style* out);

VG_API vg_status vg_skeleton_parse(const char* text, vg_skeleton** out);
VG_API const char* vg_skeleton_text(const vg_skeleton* skeleton);
VG_API void vg_skeleton_destroy(vg_skeleton* skeleton);

/* Canonical weighted graphs of one order, in natural order. `skeleton` is
 * required for VG_REGIME_COMPOSITE and ignored otherwise. Orders above
 * `max_order` fail with VG_ERROR_ORDER_LIMIT. */
VG_API vg_status vg_enumerate(vg_regime regime, unsigned order, const vg_skeleton* skeleton,
                              unsigned max_order, vg_graph_set** out);
VG_API void vg_graph_set_destroy(vg_graph_set* set);
VG_API size_t vg_graph_set_size(const vg_graph_set* set);
/* Per-graph fields; NULL / 0 when `index` is out of range. Numbers are decimal strings. */
VG_API const char* vg_graph_tree(const vg_graph_set* set, size_t index);
VG_API const char* vg_graph_symmetry(const vg_graph_set* set, size_t index);
VG_API const char* vg_graph_complexity(const vg_graph_set* set, size_t index);
VG_API const char* vg_graph_weight(const vg_graph_set* set, size_t index);
VG_API int vg_graph_sign(const vg_graph_set* set, size_t index);
VG_API vg_status vg_graph_term(const vg_graph_set* set, size_t index, vg_style style, const char** out);
/* Whole-set renderings used by the command-line tool. */
VG_API vg_status vg_graph_set_listing(const vg_graph_set* set, vg_style style, const char** out);
VG_API vg_status vg_graph_set_table(const vg_graph_set* set, vg_style style, const char** out);

VG_API vg_status vg_formula_compute(vg_regime regime, unsigned order, const vg_skeleton* skeleton,
                                    unsigned max_order, vg_formula** out);
/* One newline-terminated line for text/latex; a JSON document for machine. */
VG_API vg_status vg_formula_render(const vg_formula* formula, vg_style style, const char** out);
VG_API void vg_formula_destroy(vg_formula* formula);

VG_API vg_status vg_verify(vg_regime regime, unsigned order, const vg_skeleton* skeleton, unsigned max_order,
                           unsigned trials, uint64_t seed, vg_report** out);
VG_API int vg_report_passed(const vg_report* report);
VG_API const char* vg_report_text(const vg_report* report);
VG_API const char* vg_report_json(const vg_report* report);
VG_API void vg_report_destroy(vg_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VGRAPH_VGRAPH_H */

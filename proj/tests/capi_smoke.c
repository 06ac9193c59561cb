/* Compiled as C to keep the public header C-clean. */
#include <stdio.h>
#include <string.h>

#include "vgraph/vgraph.h"

int main(void) {
  vg_graph_set* set = NULL;
  const char* table = NULL;
  if (vg_enumerate(VG_REGIME_ODE, 4, NULL, VG_DEFAULT_MAX_ORDER, &set) != VG_OK) {
    fprintf(stderr, "enumerate: %s\n", vg_last_error());
    return 1;
  }
  if (vg_graph_set_size(set) != 4 || strcmp(vg_graph_weight(set, 2), "3") != 0) return 1;
  if (vg_graph_set_table(set, VG_STYLE_TEXT, &table) != VG_OK) return 1;
  fputs(table, stdout);
  vg_graph_set_destroy(set);
  return 0;
}

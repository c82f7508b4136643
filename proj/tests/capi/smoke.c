/* Plain C consumer of the shared library. */
#include "vergen.h"

#include <stdio.h>
#include <string.h>

int main(void) {
    vg_polytope* cube = NULL;
    char* out = NULL;
    vg_config cfg;
    int ok;

    vg_config_default(&cfg);
    if (vg_generate("cube", 3, 1, &cube) != VG_OK) return 1;
    if (vg_check_vg(cube, "1/2", &cfg, &out) != VG_OK) return 1;
    ok = strstr(out, "\"verdict\":true") != NULL;
    printf("%s\n", out);
    vg_string_free(out);
    vg_polytope_destroy(cube);

    if (vg_polytope_from_json("{\"vertices\": 3}", &cube) != VG_ERR_PARSE) return 1;
    printf("error: %s\n", vg_last_error());
    return ok ? 0 : 1;
}

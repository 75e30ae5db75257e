#include <stdio.h>
#include "secdom.h"

int main(void) {
    SdGraph *g = NULL;
    if (sd_build_extremal(2, &g) != SD_STATUS_OK) {
        fprintf(stderr, "%s\n", sd_last_error());
        return 2;
    }
    size_t value = 0;
    uint64_t set = 0;
    sd_gamma_s(g, &value, &set);
    char *g6 = NULL;
    sd_graph_to_graph6(g, &g6);
    printf("%s gamma_s=%zu set=%#llx\n", g6, value, (unsigned long long)set);
    sd_string_free(g6);
    sd_graph_free(g);
    return value == 3 ? 0 : 1;
}

#include <stdio.h>
#include <string.h>

#include "dpdp.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    int64_t pos[6] = {1, 2, 3, 4, 5, 6};
    DpdpGlws *g = NULL;
    CHECK(dpdp_glws_solve(pos, 6, "quad:C=10", true, &g) == DPDP_STATUS_OK);
    int64_t v = 0;
    size_t d = 0, rounds = 0;
    CHECK(dpdp_glws_state(g, 6, &v, &d) == DPDP_STATUS_OK);
    CHECK(v == 38 && d == 3);
    CHECK(dpdp_glws_rounds(g, &rounds) == DPDP_STATUS_OK && rounds == 2);
    dpdp_glws_free(g);

    size_t k = 0;
    const char *a = "abcb", *b = "bca";
    CHECK(dpdp_lcs((const uint8_t *)a, 4, (const uint8_t *)b, 3, &k, NULL) == DPDP_STATUS_OK);
    CHECK(k == 2);

    CHECK(dpdp_glws_solve(pos, 6, "nope", true, &g) == DPDP_STATUS_INVALID_INPUT);
    char msg[128];
    CHECK(dpdp_last_error(msg, sizeof msg) > 0 && strlen(msg) > 0);

    puts("ok");
    return 0;
}

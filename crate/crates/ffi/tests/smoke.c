#include <stdio.h>
#include <string.h>

#include "spin_chains.h"

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            const char *msg = spin_last_error_message();                   \
            fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,         \
                    msg ? msg : "no error");                               \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    SpinChainSet *cs = NULL;
    CHECK(spin_chain_set_from_json("{\"chains\":[[10,8],[9,7,5,3,1],[6],[4]]}", &cs) ==
          SPIN_STATUS_OK);

    size_t s[9];
    size_t len = 0;
    CHECK(spin_chain_set_involution(cs, s, 9, &len) == SPIN_STATUS_OK);
    size_t want_s[9] = {3, 9, 1, 8, 5, 6, 7, 4, 2};
    CHECK(len == 9 && memcmp(s, want_s, sizeof s) == 0);

    SpinComputation *r = NULL;
    CHECK(spin_compute(cs, &r) == SPIN_STATUS_OK);
    int64_t tau[9];
    CHECK(spin_computation_tau(r, tau, 9, &len) == SPIN_STATUS_OK);
    int64_t want_tau[9] = {20, 18, 16, 14, 10, 10, 8, 6, 4};
    CHECK(memcmp(tau, want_tau, sizeof tau) == 0);
    bool holds = false;
    CHECK(spin_computation_identity_holds(r, &holds) == SPIN_STATUS_OK && holds);
    spin_computation_free(r);
    spin_chain_set_free(cs);

    CHECK(spin_chain_set_from_json("{\"chains\":[[5,2]]}", &cs) == SPIN_STATUS_INVALID_CHAIN_SET);
    CHECK(cs == NULL && spin_last_error_message() != NULL);

    size_t count = 0;
    CHECK(spin_scattered_count(10, &count) == SPIN_STATUS_OK && count == 256);

    printf("ok\n");
    return 0;
}

/* The public header must be usable from plain C. */
#include <stdio.h>
#include <string.h>

#include "zeroprod/zeroprod.h"

int main(void) {
  zp_context* ctx = NULL;
  zp_ring* ring = NULL;
  zp_prob* prob = NULL;
  zp_rational* value = NULL;
  char* text = NULL;
  int ok = 0;

  if (zp_context_new(&ctx) != ZP_OK) return 1;
  if (zp_ring_parse(ctx, "Zn(4)xZn(25)", &ring) == ZP_OK &&
      zp_prob_compute(ctx, ring, 0, &prob) == ZP_OK &&
      zp_prob_value(ctx, prob, &value) == ZP_OK &&
      zp_rational_text(ctx, value, &text) == ZP_OK) {
    ok = strcmp(text, "13/250") == 0;
    printf("%s\n", text);
  }
  zp_string_free(text);
  zp_rational_free(value);
  zp_prob_free(prob);
  zp_ring_free(ring);

  if (ok) ok = zp_ring_zn(ctx, 1, &ring) == ZP_ERR_EXCLUDED_RING;
  zp_context_free(ctx);
  return ok ? 0 : 1;
}

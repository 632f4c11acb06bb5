#include <stdio.h>
#include <string.h>
#include "capelli.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              cap_last_error());                                     \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  CapElement *bt = NULL, *expected = NULL, *h = NULL;
  CHECK(cap_bitableau(CAP_BITAB_KIND_DET, "[[1],[2]]", "[[2],[1]]", 2, &bt) == CAP_STATUS_OK);
  CHECK(cap_element_parse("-e[1,2]e[2,1] + e[1,1]", &expected) == CAP_STATUS_OK);
  bool eq = false;
  CHECK(cap_element_equal(bt, expected, &eq) == CAP_STATUS_OK && eq);

  CHECK(cap_compute("Hk", 2, 2, &h) == CAP_STATUS_OK);
  bool central = false;
  CHECK(cap_element_is_central(h, 2, &central) == CAP_STATUS_OK && central);
  CapSymPoly *chi = NULL;
  CHECK(cap_harish_chandra(h, 2, &chi) == CAP_STATUS_OK);
  char *text = NULL;
  CHECK(cap_sympoly_to_text(chi, &text) == CAP_STATUS_OK);
  CHECK(strcmp(text, "x1*x2 + x2") == 0);
  cap_string_free(text);

  CapElement *bad = NULL;
  CHECK(cap_compute("Hk", 2, 7, &bad) == CAP_STATUS_INVALID_ARGUMENT);
  CHECK(strlen(cap_last_error()) > 0);

  cap_sympoly_free(chi);
  cap_element_free(h);
  cap_element_free(expected);
  cap_element_free(bt);
  puts("ok");
  return 0;
}

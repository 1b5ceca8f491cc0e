/* The C interface exercised from plain C. */
#include "afflim/afflim.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static int contains(const char* doc, const char* needle) { return doc && strstr(doc, needle) != NULL; }

int main(void) {
  afflim_rootsys* rs = NULL;
  char* out = NULL;

  EXPECT(afflim_rootsys_new("Q9", &rs) == AFFLIM_ERR_INVALID_ARGUMENT);
  EXPECT(rs == NULL);
  EXPECT(strlen(afflim_last_error()) > 0);
  EXPECT(afflim_rootsys_new("E9", &rs) == AFFLIM_ERR_INVALID_RANK);

  EXPECT(afflim_rootsys_new("C3", &rs) == AFFLIM_OK);
  EXPECT(afflim_rootsys_rank(rs) == 3);

  EXPECT(afflim_info_json(rs, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"minuscule\":[1]"));
  afflim_string_free(out);

  EXPECT(afflim_word_json(rs, 3, 2, NULL, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"certified\":3"));
  afflim_string_free(out);

  EXPECT(afflim_word_json(rs, 4, 2, NULL, &out) == AFFLIM_ERR_INDEX_OUT_OF_RANGE);
  EXPECT(out == NULL);
  EXPECT(afflim_word_json(rs, 1, 2, "sideways", &out) == AFFLIM_ERR_INVALID_ARGUMENT);
  EXPECT(afflim_word_json(rs, 1, 2, "seeded:4", &out) == AFFLIM_OK);
  afflim_string_free(out);

  EXPECT(afflim_minimal_json(rs, 1, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"counts\":[6,12,8]"));
  EXPECT(!contains(out, "classes"));
  afflim_string_free(out);

  EXPECT(afflim_heavy_json(rs, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"graph_node\":3"));
  afflim_string_free(out);

  EXPECT(afflim_coxeter_json(rs, "3 2 1 0", &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"node\":3"));
  afflim_string_free(out);
  EXPECT(afflim_coxeter_json(rs, "0 1 1 2", &out) == AFFLIM_ERR_NOT_PERMUTATION);

  EXPECT(afflim_fc_json(rs, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"fc_nodes\":[1,3]"));
  afflim_string_free(out);

  EXPECT(afflim_fc_word_json(rs, "1 1", 0, &out) == AFFLIM_ERR_NOT_REDUCED_INPUT);
  EXPECT(strcmp(afflim_status_name(AFFLIM_ERR_NOT_REDUCED_INPUT), "NotReducedInput") == 0);
  EXPECT(afflim_fc_word_json(rs, "(0 1 2 3)", 0, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"verdict\":\"FC\""));
  afflim_string_free(out);

  EXPECT(afflim_density_json(rs, "(0 1 2 3)", -1, 0, &out) == AFFLIM_ERR_NO_BRANCH_NODE);
  afflim_rootsys_free(rs);

  EXPECT(afflim_rootsys_new("D5", &rs) == AFFLIM_OK);
  EXPECT(afflim_density_json(rs, "(2 0 1 2 3 4 5 3)", -1, 0, &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"budget_exceeded\":false"));
  afflim_string_free(out);
  afflim_rootsys_free(rs);

  EXPECT(afflim_tables_json(2, "B4", &out) == AFFLIM_OK);
  EXPECT(contains(out, "\"exponent\":2"));
  afflim_string_free(out);
  EXPECT(afflim_tables_json(4, NULL, &out) == AFFLIM_ERR_INVALID_ARGUMENT);

  afflim_verify_options opts;
  afflim_verify_options_init(&opts);
  opts.type = "B3";
  opts.criterion = 1;
  int passed = 0;
  EXPECT(afflim_verify_json(&opts, &passed, &out) == AFFLIM_OK);
  EXPECT(passed == 1);
  EXPECT(!contains(out, "seconds"));
  afflim_string_free(out);

  EXPECT(afflim_info_json(NULL, &out) == AFFLIM_ERR_INVALID_ARGUMENT);
  EXPECT(afflim_info_json(NULL, NULL) == AFFLIM_ERR_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}

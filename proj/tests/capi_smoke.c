/* Copyright (c) 2026 The zonoid authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0.txt
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiles the public header as C11 and exercises a few entry points. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "zonoid/zonoid.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

int main(void) {
  const double gens[] = {1.0, 0.0, 0.0, 1.0};
  zn_zonotope *K = NULL;
  double v = 0.0;
  EXPECT(zn_zonotope_new(2, gens, 2, &K) == ZN_OK);
  EXPECT(zn_volume(K, &v) == ZN_OK && fabs(v - 1.0) < 1e-15);
  EXPECT(zn_volume(NULL, &v) == ZN_ERR_NULL_POINTER);
  EXPECT(strlen(zn_last_error()) > 0);
  EXPECT(strcmp(zn_status_name(ZN_ERR_SCHEMA), "schema") == 0);
  zn_zonotope_free(K);
  return failures == 0 ? 0 : 1;
}

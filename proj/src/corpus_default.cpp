#include "hyspec/verifier.hpp"

namespace hyspec {

const char* default_corpus_json() {
  return R"corpus({
  "rings": [
    {
      "name": "Z12",
      "dsl": "Z12"
    },
    {
      "name": "Z4",
      "dsl": "Z4"
    },
    {
      "name": "Z30",
      "dsl": "Z30"
    },
    {
      "name": "F2xF2",
      "dsl": "Z2 x Z2"
    },
    {
      "name": "F2xF2xF2",
      "dsl": "Z2 x Z2 x Z2"
    },
    {
      "name": "GF4",
      "dsl": "GF(4)"
    },
    {
      "name": "Z4xZ9",
      "dsl": "Z4 x Z9"
    },
    {
      "name": "F2-dual-numbers-2vars",
      "tables": {
        "count": 8,
        "add": [
          [
            0,
            1,
            2,
            3,
            4,
            5,
            6,
            7
          ],
          [
            1,
            0,
            3,
            2,
            5,
            4,
            7,
            6
          ],
          [
            2,
            3,
            0,
            1,
            6,
            7,
            4,
            5
          ],
          [
            3,
            2,
            1,
            0,
            7,
            6,
            5,
            4
          ],
          [
            4,
            5,
            6,
            7,
            0,
            1,
            2,
            3
          ],
          [
            5,
            4,
            7,
            6,
            1,
            0,
            3,
            2
          ],
          [
            6,
            7,
            4,
            5,
            2,
            3,
            0,
            1
          ],
          [
            7,
            6,
            5,
            4,
            3,
            2,
            1,
            0
          ]
        ],
        "mul": [
          [
            0,
            0,
            0,
            0,
            0,
            0,
            0,
            0
          ],
          [
            0,
            1,
            2,
            3,
            4,
            5,
            6,
            7
          ],
          [
            0,
            2,
            0,
            2,
            0,
            2,
            0,
            2
          ],
          [
            0,
            3,
            2,
            1,
            4,
            7,
            6,
            5
          ],
          [
            0,
            4,
            0,
            4,
            0,
            4,
            0,
            4
          ],
          [
            0,
            5,
            2,
            7,
            4,
            1,
            6,
            3
          ],
          [
            0,
            6,
            0,
            6,
            0,
            6,
            0,
            6
          ],
          [
            0,
            7,
            2,
            5,
            4,
            3,
            6,
            1
          ]
        ],
        "zero": 0,
        "one": 1
      }
    },
    {
      "name": "Z2[x]/(x^2)",
      "dsl": "Z2[x]/(x^2)"
    }
  ],
  "subspaces": [],
  "checks": [],
  "seed": 20260823
}
)corpus";
}

}  // namespace hyspec

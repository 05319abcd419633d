#pragma once
// Generated from data/knot_tables.json; regenerated and checked against the
// source file at configure time. Do not edit by hand.

namespace vknot::detail {

inline const char* embedded_knot_tables_json() {
  return R"vkezn({
 "version": 1,
 "knots": [
  {
   "name": "3.6",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      1,
      -1
     ],
     [
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0
     ],
     [
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "4.99",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      -1,
      0
     ],
     [
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      1
     ],
     [
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "4.105",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      1,
      0
     ],
     [
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      1
     ],
     [
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -2,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "4.108",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      -1,
      0
     ],
     [
      1,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      1
     ],
     [
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     3,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": [
    "alexander_negated_in_source"
   ]
  },
  {
   "name": "5.2012",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      -1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      -1,
      1
     ],
     [
      1,
      1,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      1
     ],
     [
      0,
      -1,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "5.2025",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      -1,
      1
     ],
     [
      1,
      1,
      1,
      1
     ],
     [
      0,
      -1,
      0,
      1
     ],
     [
      0,
      0,
      -1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "5.2080",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      -1,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      -1
     ],
     [
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      1,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "5.2133",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      -1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      -1,
      1
     ],
     [
      1,
      1,
      1,
      0
     ],
     [
      0,
      -1,
      -1,
      1
     ],
     [
      0,
      -1,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "5.2160",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      1
     ],
     [
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      -1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      1,
      1,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "5.2331",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      -1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     0,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": [
    "reversed_inferred",
    "omega_set_union_mismatch"
   ]
  },
  {
   "name": "5.2426",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      -1,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      -1
     ],
     [
      1,
      1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      1,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "5.2433",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      1,
      0,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      0,
      1
     ],
     [
      1,
      1,
      1,
      0
     ],
     [
      1,
      -1,
      1,
      1
     ],
     [
      0,
      -1,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     4,
     -2,
     1
    ]
   },
   "graded_genus": 2,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "5.2437",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      2,
      -2
     ],
     [
      -1,
      2
     ]
    ],
    "vminus": [
     [
      2,
      -1
     ],
     [
      -2,
      2
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     2,
     -3,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "5.2439",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      -1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": [
    "reversed_inferred"
   ]
  },
  {
   "name": "5.2445",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      -1,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      -1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -1,
     1,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.72507",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      1,
      -1,
      1
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      0,
      0,
      -1,
      1
     ],
     [
      1,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": [
    "pair_reconstructed"
   ]
  },
  {
   "name": "6.72557",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      -1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.72692",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.72695",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      1,
      1,
      1,
      1
     ],
     [
      -1,
      1,
      -1,
      0
     ]
    ],
    "vminus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      -1,
      1,
      1
     ],
     [
      1,
      0,
      1,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.72938",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      1,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      1,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.72944",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      -1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     -1,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.72975",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.73007",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.73053",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      1,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.73583",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ],
     [
      0,
      1,
      0,
      0
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      0,
      1
     ],
     [
      -1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 1,
   "omega_set": [
    1
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.75341",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      1,
      0
     ],
     [
      1,
      -1,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": [
    "vminus_mislabeled_in_source"
   ]
  },
  {
   "name": "6.75348",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      0,
      0
     ],
     [
      -1,
      0,
      0,
      -1
     ],
     [
      0,
      -1,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": 1,
    "coeffs": [
     2,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 1,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": [
    "omega_set_union_mismatch"
   ]
  },
  {
   "name": "6.76479",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.77833",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      1,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      -1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      1,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.77844",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      -1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": 0,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.77905",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     3,
     -1
    ]
   },
   "graded_genus": 1,
   "sigma": 1,
   "omega_set": [
    1
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.77908",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      1,
      -1,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      -1,
      1,
      -1,
      0
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      -1,
      0
     ],
     [
      1,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -2,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": -1,
   "omega_set": [
    -1,
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.77985",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": -1,
   "omega_set": [
    -1
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.78358",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      1,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     3,
     -1
    ]
   },
   "graded_genus": 1,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.79342",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      1,
      1,
      1
     ],
     [
      -1,
      0,
      0,
      -1
     ],
     [
      -1,
      1,
      1,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     3,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.85091",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.85103",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     2,
     -1,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": -1,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.85613",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      -1,
      0,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     2,
     -2,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.85774",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      1
     ],
     [
      -1,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      -1,
      0,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     0,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87188",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ],
     [
      0,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      -1,
      1
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     3,
     -3,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87262",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      1,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      1,
      1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      1,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -2,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 2,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.87269",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      -1,
      0,
      -1
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -4,
     4
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.87310",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      -1,
      -1
     ],
     [
      0,
      1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      -1,
      -1,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     2,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": [
    "omega_set_union_mismatch"
   ]
  },
  {
   "name": "6.87319",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      1
     ],
     [
      -1,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      -1,
      1
     ],
     [
      -1,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     3
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": [
    "reversed_inferred"
   ]
  },
  {
   "name": "6.87369",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      1,
      1
     ],
     [
      -1,
      -1,
      -1,
      -1
     ],
     [
      -1,
      0,
      -1,
      0
     ],
     [
      -1,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      -1,
      -1,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      -1,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": -2,
   "omega_set": [
    -2,
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87548",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      -1
     ],
     [
      0,
      0,
      1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -1,
     1,
     2,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87846",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      -1,
      0
     ],
     [
      1,
      1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      1,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     2,
     -1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87857",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      2,
      0
     ],
     [
      0,
      -1
     ]
    ],
    "vminus": [
     [
      2,
      1
     ],
     [
      -1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -2,
     4,
     -1
    ]
   },
   "graded_genus": 1,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87859",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     3
    ]
   },
   "graded_genus": 1,
   "sigma": 0,
   "omega_set": [
    -2,
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.87875",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     1,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": -1,
   "omega_set": [
    -2,
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.89156",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -1,
     -1,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.89187",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 4,
   "omega_set": [
    0,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": [
    "pair_swapped_in_source"
   ]
  },
  {
   "name": "6.89198",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     3,
     -2,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": [
    "pair_swapped_in_source"
   ]
  },
  {
   "name": "6.89623",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      0,
      -1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      -1,
      -1,
      0,
      0
     ],
     [
      1,
      1,
      -1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      -1,
      0,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.89812",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     2,
     -2,
     0,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.89815",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      1
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": []
  },
  {
   "name": "6.90099",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      1,
      -1,
      0,
      0,
      1,
      0
     ],
     [
      1,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      0,
      1,
      -1
     ],
     [
      0,
      0,
      0,
      0,
      1,
      0
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -3,
    "coeffs": [
     1,
     0,
     -1,
     0,
     1
    ]
   },
   "graded_genus": 2,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90109",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      1,
      1
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      1,
      0
     ],
     [
      -1,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     5,
     -4,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90115",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ],
     [
      1,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      1,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     4,
     -5,
     4,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90139",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      -1
     ],
     [
      1,
      1,
      1,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -4,
     7,
     -6,
     3
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90146",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      1,
      1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      -1,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      -1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ],
    "vminus": [
     [
      1,
      1,
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      1,
      0,
      0,
      -1
     ],
     [
      0,
      0,
      -1,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      1,
      0,
      -1
     ],
     [
      0,
      1,
      1,
      0,
      1,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -5,
     9,
     -5,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90147",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      1,
      1
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      1,
      0
     ],
     [
      -1,
      1,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     2,
     -5,
     6,
     -3,
     1
    ]
   },
   "graded_genus": 2,
   "sigma": 4,
   "omega_set": [
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90150",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      1
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      1,
      1,
      1,
      1
     ],
     [
      0,
      1,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      1
     ],
     [
      1,
      -1,
      1,
      1
     ],
     [
      1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     4,
     -6,
     5,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90167",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      1,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      0,
      1
     ],
     [
      1,
      1,
      -1,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     2,
     -4,
     4,
     -2,
     1
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90172",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      1,
      -1,
      -1,
      0
     ],
     [
      -1,
      1,
      1,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      1,
      -1
     ],
     [
      -1,
      1,
      -1,
      1
     ],
     [
      0,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     5,
     -3,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90185",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      1
     ],
     [
      -1,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      1,
      0
     ],
     [
      -1,
      0,
      -1,
      1
     ]
    ],
    "vminus": [
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -3,
     6,
     -6,
     3
    ]
   },
   "graded_genus": 2,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90194",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      -1,
      0,
      -1,
      -1
     ],
     [
      -1,
      -1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0
     ],
     [
      -1,
      -1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      -1,
      -1,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -5,
     8,
     -4,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90195",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      -1,
      0
     ],
     [
      1,
      1,
      0,
      -1
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -2,
     3,
     -3,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 4,
   "omega_set": [
    0,
    2,
    4
   ],
   "slice_genus": [
    2,
    2
   ],
   "notes": []
  },
  {
   "name": "6.90209",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      0,
      -1,
      1,
      0
     ],
     [
      -1,
      0,
      1,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      0,
      0,
      -1
     ],
     [
      0,
      1,
      -1,
      0
     ],
     [
      -1,
      0,
      1,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     3,
     -3,
     3,
     -1
    ]
   },
   "graded_genus": 0,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": [
    "alexander_negated_in_source"
   ]
  },
  {
   "name": "6.90214",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      2,
      0
     ],
     [
      0,
      1
     ]
    ],
    "vminus": [
     [
      2,
      1
     ],
     [
      -1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     2,
     -4,
     3
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90217",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      1,
      0
     ],
     [
      0,
      0,
      0,
      1
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      0
     ],
     [
      0,
      -1,
      0,
      0
     ],
     [
      -1,
      0,
      1,
      -1
     ],
     [
      0,
      0,
      1,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     1,
     -3,
     4,
     -1
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90219",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 2,
    "vplus": [
     [
      1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      -1,
      0
     ],
     [
      0,
      1,
      0,
      1
     ],
     [
      0,
      0,
      0,
      -1
     ]
    ],
    "vminus": [
     [
      1,
      1,
      0,
      0
     ],
     [
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      1,
      -1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     -1,
     3,
     -3,
     2
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90227",
   "classical": true,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      -1,
      0
     ],
     [
      1,
      2
     ]
    ],
    "vminus": [
     [
      -1,
      1
     ],
     [
      0,
      2
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     -2,
     5,
     -2
    ]
   },
   "graded_genus": 0,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    0,
    0
   ],
   "notes": [
    "alexander_corrected_from_pair"
   ]
  },
  {
   "name": "6.90228",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 1,
    "vplus": [
     [
      2,
      1
     ],
     [
      1,
      2
     ]
    ],
    "vminus": [
     [
      2,
      2
     ],
     [
      0,
      2
     ]
    ]
   },
   "alexander": {
    "lo": -1,
    "coeffs": [
     3,
     -6,
     4
    ]
   },
   "graded_genus": 1,
   "sigma": 2,
   "omega_set": [
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90232",
   "classical": false,
   "reversed": true,
   "pair": {
    "g": 2,
    "vplus": [
     [
      0,
      0,
      0,
      0
     ],
     [
      1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      0
     ],
     [
      1,
      0,
      1,
      1
     ]
    ],
    "vminus": [
     [
      0,
      1,
      1,
      1
     ],
     [
      0,
      1,
      0,
      0
     ],
     [
      -1,
      0,
      -1,
      1
     ],
     [
      0,
      0,
      0,
      1
     ]
    ]
   },
   "alexander": {
    "lo": -2,
    "coeffs": [
     1,
     -4,
     6,
     -2
    ]
   },
   "graded_genus": 1,
   "sigma": 0,
   "omega_set": [
    0
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  },
  {
   "name": "6.90235",
   "classical": false,
   "reversed": false,
   "pair": {
    "g": 3,
    "vplus": [
     [
      -1,
      0,
      0,
      0,
      0,
      -1
     ],
     [
      -1,
      -1,
      -1,
      0,
      0,
      0
     ],
     [
      0,
      1,
      0,
      -1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      1,
      -1,
      0
     ],
     [
      0,
      0,
      0,
      0,
      1,
      0
     ],
     [
      1,
      0,
      0,
      0,
      1,
      0
     ]
    ],
    "vminus": [
     [
      -1,
      0,
      0,
      0,
      0,
      0
     ],
     [
      -1,
      -1,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     [
      0,
      0,
      -1,
      1,
      0,
      0
     ],
     [
      0,
      0,
      0,
      -1,
      1,
      1
     ],
     [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    ]
   },
   "alexander": {
    "lo": -3,
    "coeffs": [
     1,
     -3,
     5,
     -3,
     1
    ]
   },
   "graded_genus": 0,
   "sigma": -2,
   "omega_set": [
    -2,
    0,
    2
   ],
   "slice_genus": [
    1,
    1
   ],
   "notes": []
  }
 ]
}
)vkezn";
}

}  // namespace vknot::detail

"""Frozen acoustic stencil tables (generated by tools/derive_stencils.py).

For each node geometry, STENCILS[name] has shape (6, 3, 3, 5): six
coupling matrices (uu, uv, up, vv, vp, pp), 3x3 nodal entries, and
ascending coefficients of the degree-4 polynomial in nu = c*tau/h.
Matrix rows index the cell-local x node (-1, 0, +1), columns the
local y node.  Do not edit by hand.
"""

import numpy as np

MATRIX_KEYS = ('uu', 'uv', 'up', 'vv', 'vp', 'pp')

STENCILS = {
    "edge_v_right": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01], [5.00000000000000000e-01, -1.50000000000000000e+00, 1.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -1.33333333333333326e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 3.33333333333333315e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -5.00000000000000000e-01], [-5.00000000000000000e-01, 1.50000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, 2.66666666666666652e+00, -2.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 1.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.33333333333333315e-01, -5.00000000000000000e-01], [0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, -6.66666666666666630e-01, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.33333333333333315e-01, -5.00000000000000000e-01]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01], [5.00000000000000000e-01, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01], [5.00000000000000000e-01, -1.50000000000000000e+00, -1.00000000000000000e+00, 3.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -4.00000000000000000e+00, 2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 1.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01]],
        ],
    ]),
    "edge_v_left": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 3.33333333333333315e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -1.33333333333333326e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01], [5.00000000000000000e-01, -1.50000000000000000e+00, 1.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 5.00000000000000000e-01], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 6.66666666666666630e-01, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -2.66666666666666652e+00, 2.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -1.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 5.00000000000000000e-01], [5.00000000000000000e-01, -1.50000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 5.00000000000000000e-01]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01], [5.00000000000000000e-01, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 1.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -4.00000000000000000e+00, 2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01], [5.00000000000000000e-01, -1.50000000000000000e+00, -1.00000000000000000e+00, 3.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01]],
        ],
    ]),
    "edge_h_top": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01]],
            [[5.00000000000000000e-01, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # up
            [[0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01]],
            [[5.00000000000000000e-01, -1.50000000000000000e+00, 1.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -1.33333333333333326e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 3.33333333333333315e-01, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.33333333333333315e-01, -5.00000000000000000e-01]],
            [[-5.00000000000000000e-01, 1.50000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, 2.66666666666666652e+00, -2.00000000000000000e+00], [0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, -6.66666666666666630e-01, 1.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.33333333333333315e-01, -5.00000000000000000e-01]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01]],
            [[5.00000000000000000e-01, -1.50000000000000000e+00, -1.00000000000000000e+00, 3.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -4.00000000000000000e+00, 2.66666666666666652e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 1.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01]],
        ],
    ]),
    "edge_h_bottom": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00, 1.33333333333333326e+00], [5.00000000000000000e-01, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.00000000000000000e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+00, 3.33333333333333315e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -2.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 5.00000000000000000e-01, -7.50000000000000000e-01, 3.33333333333333315e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, -5.00000000000000000e-01, 7.50000000000000000e-01, -3.33333333333333315e-01, 0.00000000000000000e+00]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 3.33333333333333315e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -1.33333333333333326e+00, 1.33333333333333326e+00], [5.00000000000000000e-01, -1.50000000000000000e+00, 1.00000000000000000e+00, 1.00000000000000000e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66666666666666657e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 3.33333333333333315e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 6.66666666666666630e-01, -1.00000000000000000e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -2.66666666666666652e+00, 2.00000000000000000e+00], [5.00000000000000000e-01, -1.50000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.33333333333333315e-01, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 5.00000000000000000e-01]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01]],
            [[0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, 1.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 2.00000000000000000e+00, -2.00000000000000000e+00, -4.00000000000000000e+00, 2.66666666666666652e+00], [5.00000000000000000e-01, -1.50000000000000000e+00, -1.00000000000000000e+00, 3.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, -1.50000000000000000e+00, 6.66666666666666630e-01]],
        ],
    ]),
    "vertex_ne": np.array([
        [  # uu
            [[2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.12500000000000000e+00, -1.00000000000000000e+00, 2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.66666666666666674e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -6.66666666666666630e-01, 2.12206590789193794e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.66666666666666674e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -2.66666666666666652e+00, 8.48826363156775177e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -4.24413181578387588e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -6.66666666666666630e-01, 2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.33333333333333315e-01, 2.12206590789193794e-01]],
        ],
        [  # up
            [[0.00000000000000000e+00, 7.50000000000000000e-01, -1.62500000000000000e+00, 1.13661977236758127e+00, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.84882636315677518e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 7.12206590789193794e-01, -2.50000000000000000e-01]],
            [[0.00000000000000000e+00, -1.00000000000000000e+00, 2.50000000000000000e+00, -1.93990621140182928e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 3.03098605964688339e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.09107984824505433e+00, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 2.50000000000000000e-01, -8.75000000000000000e-01, 8.03286439034248012e-01, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.18215969649010844e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.78873257455860424e-01, -2.50000000000000000e-01]],
        ],
        [  # vv
            [[2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 7.50000000000000000e-01, -1.62500000000000000e+00, 1.13661977236758127e+00, -2.50000000000000000e-01], [0.00000000000000000e+00, -1.00000000000000000e+00, 2.50000000000000000e+00, -1.93990621140182928e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 2.50000000000000000e-01, -8.75000000000000000e-01, 8.03286439034248012e-01, -2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.84882636315677518e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 3.03098605964688339e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.18215969649010844e+00, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 7.12206590789193794e-01, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.09107984824505433e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.78873257455860424e-01, -2.50000000000000000e-01]],
        ],
        [  # pp
            [[2.50000000000000000e-01, -1.50000000000000000e+00, 2.43239448782705825e+00, -1.50000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.54647908947032553e+00, -4.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.59154943091895346e-01, -5.00000000000000000e-01, 3.33333333333333315e-01]],
        ],
    ]),
    "vertex_nw": np.array([
        [  # uu
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01]],
            [[2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 6.66666666666666630e-01, -2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.33333333333333315e-01, -2.12206590789193794e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.66666666666666674e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.66666666666666652e+00, -8.48826363156775177e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 4.24413181578387588e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -1.12500000000000000e+00, 1.00000000000000000e+00, -2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.66666666666666674e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 6.66666666666666630e-01, -2.12206590789193794e-01]],
        ],
        [  # up
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 8.75000000000000000e-01, -8.03286439034248012e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.18215969649010844e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.78873257455860424e-01, 2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 1.93990621140182928e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -3.03098605964688339e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.09107984824505433e+00, -5.00000000000000000e-01]],
            [[0.00000000000000000e+00, -7.50000000000000000e-01, 1.62500000000000000e+00, -1.13661977236758127e+00, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.84882636315677518e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -7.12206590789193794e-01, 2.50000000000000000e-01]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01]],
            [[2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 7.12206590789193794e-01, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.09107984824505433e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.78873257455860424e-01, -2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.84882636315677518e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 3.03098605964688339e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.18215969649010844e+00, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 7.50000000000000000e-01, -1.62500000000000000e+00, 1.13661977236758127e+00, -2.50000000000000000e-01], [0.00000000000000000e+00, -1.00000000000000000e+00, 2.50000000000000000e+00, -1.93990621140182928e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 2.50000000000000000e-01, -8.75000000000000000e-01, 8.03286439034248012e-01, -2.50000000000000000e-01]],
        ],
        [  # pp
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.59154943091895346e-01, -5.00000000000000000e-01, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.54647908947032553e+00, -4.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01]],
            [[2.50000000000000000e-01, -1.50000000000000000e+00, 2.43239448782705825e+00, -1.50000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01]],
        ],
    ]),
    "vertex_sw": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.33333333333333315e-01, 2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -6.66666666666666630e-01, 2.12206590789193794e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.00000000000000000e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -2.66666666666666652e+00, 8.48826363156775177e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.66666666666666674e+00, -4.24413181578387588e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -6.66666666666666630e-01, 2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.66666666666666674e+00, -4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.12500000000000000e+00, -1.00000000000000000e+00, 2.12206590789193794e-01]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.78873257455860424e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.18215969649010844e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 8.75000000000000000e-01, -8.03286439034248012e-01, 2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.09107984824505433e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -3.03098605964688339e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 1.93990621140182928e+00, -5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -7.12206590789193794e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.84882636315677518e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, -7.50000000000000000e-01, 1.62500000000000000e+00, -1.13661977236758127e+00, 2.50000000000000000e-01]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.78873257455860424e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.09107984824505433e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -7.12206590789193794e-01, 2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.18215969649010844e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -3.03098605964688339e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.84882636315677518e+00, -5.00000000000000000e-01]],
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 8.75000000000000000e-01, -8.03286439034248012e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 1.93990621140182928e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, -7.50000000000000000e-01, 1.62500000000000000e+00, -1.13661977236758127e+00, 2.50000000000000000e-01]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.59154943091895346e-01, -5.00000000000000000e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.54647908947032553e+00, -4.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [2.50000000000000000e-01, -1.50000000000000000e+00, 2.43239448782705825e+00, -1.50000000000000000e+00, 3.33333333333333315e-01]],
        ],
    ]),
    "vertex_se": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01], [2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 6.66666666666666630e-01, -2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.66666666666666674e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.12500000000000000e+00, 1.00000000000000000e+00, -2.12206590789193794e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 2.66666666666666652e+00, -8.48826363156775177e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.66666666666666674e+00, 4.24413181578387588e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.33333333333333315e-01, -2.12206590789193794e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.00000000000000000e+00, 4.24413181578387588e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 6.66666666666666630e-01, -2.12206590789193794e-01]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.75000000000000000e-01, 7.12206590789193794e-01, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.50000000000000000e+00, -1.84882636315677518e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 7.50000000000000000e-01, -1.62500000000000000e+00, 1.13661977236758127e+00, -2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.09107984824505433e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -2.00000000000000000e+00, 3.03098605964688339e+00, -1.00000000000000000e+00], [0.00000000000000000e+00, -1.00000000000000000e+00, 2.50000000000000000e+00, -1.93990621140182928e+00, 5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -1.25000000000000000e-01, 3.78873257455860424e-01, -2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, -1.18215969649010844e+00, 5.00000000000000000e-01], [0.00000000000000000e+00, 2.50000000000000000e-01, -8.75000000000000000e-01, 8.03286439034248012e-01, -2.50000000000000000e-01]],
        ],
        [  # vv
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 7.38732414637843005e-01, -5.83333333333333370e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -1.95492965855137202e+00, 1.33333333333333326e+00, -3.33333333333333315e-01], [2.50000000000000000e-01, -7.50000000000000000e-01, 1.21619724391352912e+00, -7.50000000000000000e-01, 1.66666666666666657e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 8.33333333333333370e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 1.27323954473516276e+00, -2.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -9.54929658551372018e-01, 1.16666666666666674e+00, -3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 7.95774715459476728e-02, -2.50000000000000000e-01, 1.66666666666666657e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -3.18309886183790691e-01, 6.66666666666666630e-01, -3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.38732414637843005e-01, -4.16666666666666685e-01, 1.66666666666666657e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 8.75000000000000000e-01, -8.03286439034248012e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 1.93990621140182928e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, -7.50000000000000000e-01, 1.62500000000000000e+00, -1.13661977236758127e+00, 2.50000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.18215969649010844e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, -3.03098605964688339e+00, 1.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -1.50000000000000000e+00, 1.84882636315677518e+00, -5.00000000000000000e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.25000000000000000e-01, -3.78873257455860424e-01, 2.50000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 1.09107984824505433e+00, -5.00000000000000000e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 3.75000000000000000e-01, -7.12206590789193794e-01, 2.50000000000000000e-01]],
        ],
        [  # pp
            [[0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01], [2.50000000000000000e-01, -1.50000000000000000e+00, 2.43239448782705825e+00, -1.50000000000000000e+00, 3.33333333333333315e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.54647908947032553e+00, -4.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 1.00000000000000000e+00, -2.90985931710274404e+00, 2.50000000000000000e+00, -6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 1.59154943091895346e-01, -5.00000000000000000e-01, 3.33333333333333315e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, -6.36619772367581382e-01, 1.50000000000000000e+00, -6.66666666666666630e-01], [0.00000000000000000e+00, -2.50000000000000000e-01, 9.77464829275686009e-01, -1.00000000000000000e+00, 3.33333333333333315e-01]],
        ],
    ]),
    "center": np.array([
        [  # uu
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [1.00000000000000000e+00, 0.00000000000000000e+00, -4.00000000000000000e+00, 0.00000000000000000e+00, 2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01]],
        ],
        [  # uv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, -5.00000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 5.00000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00]],
        ],
        [  # up
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00]],
        ],
        [  # vv
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [1.00000000000000000e+00, 0.00000000000000000e+00, -4.00000000000000000e+00, 0.00000000000000000e+00, 2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01]],
        ],
        [  # vp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, -1.33333333333333326e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00, 0.00000000000000000e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.66666666666666630e-01, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -6.66666666666666630e-01, 0.00000000000000000e+00]],
        ],
        [  # pp
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00], [1.00000000000000000e+00, 0.00000000000000000e+00, -8.00000000000000000e+00, 0.00000000000000000e+00, 5.33333333333333304e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00]],
            [[0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 2.00000000000000000e+00, 0.00000000000000000e+00, -2.66666666666666652e+00], [0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.33333333333333326e+00]],
        ],
    ]),
}

"""Frozen reference grids for the reproduction tests.

Critical-value grids are keyed by (alpha, m, rho) and hold 3-decimal
reference values; the max-level grid is keyed by (m, rho) and holds
percent-scale values.  These constants are test fixtures: they are never
imported by the library itself.
"""

CV_TABLE_K1_ALPHAS = (0.01, 0.05)
CV_TABLE_MS = (5, 10, 15, 20, 25, 50)
CV_TABLE_RHOS = tuple(round(0.2 * i, 1) for i in range(1, 26))

MAX_ALPHA_MS = (5, 10, 20, 25, 50)
MAX_ALPHA_RHOS = (0.1, 0.2, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 10.0)

CV_TABLE_K1 = {
    (0.01, 5, 0.2): 2.256,
    (0.01, 10, 0.2): 1.216,
    (0.01, 15, 0.2): 0.972,
    (0.01, 20, 0.2): 0.858,
    (0.01, 25, 0.2): 0.791,
    (0.01, 50, 0.2): 0.656,
    (0.05, 5, 0.2): 1.36,
    (0.05, 10, 0.2): 0.846,
    (0.05, 15, 0.2): 0.7,
    (0.05, 20, 0.2): 0.628,
    (0.05, 25, 0.2): 0.584,
    (0.05, 50, 0.2): 0.492,
    (0.01, 5, 0.4): 2.762,
    (0.01, 10, 0.4): 1.657,
    (0.01, 15, 0.4): 1.417,
    (0.01, 20, 0.4): 1.311,
    (0.01, 25, 0.4): 1.251,
    (0.01, 50, 0.4): 1.137,
    (0.05, 5, 0.4): 1.666,
    (0.05, 10, 0.4): 1.153,
    (0.05, 15, 0.4): 1.021,
    (0.05, 20, 0.4): 0.959,
    (0.05, 25, 0.4): 0.923,
    (0.05, 50, 0.4): 0.853,
    (0.01, 5, 0.6): 3.445,
    (0.01, 10, 0.6): 2.204,
    (0.01, 15, 0.6): 1.944,
    (0.01, 20, 0.6): 1.832,
    (0.01, 25, 0.6): 1.769,
    (0.01, 50, 0.6): 1.652,
    (0.05, 5, 0.6): 2.078,
    (0.05, 10, 0.6): 1.534,
    (0.05, 15, 0.6): 1.401,
    (0.05, 20, 0.6): 1.34,
    (0.05, 25, 0.6): 1.305,
    (0.05, 50, 0.6): 1.239,
    (0.01, 5, 0.8): 4.22,
    (0.01, 10, 0.8): 2.796,
    (0.01, 15, 0.8): 2.502,
    (0.01, 20, 0.8): 2.376,
    (0.01, 25, 0.8): 2.306,
    (0.01, 50, 0.8): 2.177,
    (0.05, 5, 0.8): 2.545,
    (0.05, 10, 0.8): 1.946,
    (0.05, 15, 0.8): 1.803,
    (0.05, 20, 0.8): 1.739,
    (0.05, 25, 0.8): 1.702,
    (0.05, 50, 0.8): 1.633,
    (0.01, 5, 1.0): 5.044,
    (0.01, 10, 1.0): 3.408,
    (0.01, 15, 1.0): 3.074,
    (0.01, 20, 1.0): 2.932,
    (0.01, 25, 1.0): 2.852,
    (0.01, 50, 1.0): 2.707,
    (0.05, 5, 1.0): 3.041,
    (0.05, 10, 1.0): 2.373,
    (0.05, 15, 1.0): 2.215,
    (0.05, 20, 1.0): 2.145,
    (0.05, 25, 1.0): 2.105,
    (0.05, 50, 1.0): 2.03,
    (0.01, 5, 1.2): 5.896,
    (0.01, 10, 1.2): 4.033,
    (0.01, 15, 1.2): 3.654,
    (0.01, 20, 1.2): 3.492,
    (0.01, 25, 1.2): 3.403,
    (0.01, 50, 1.2): 3.238,
    (0.05, 5, 1.2): 3.556,
    (0.05, 10, 1.2): 2.807,
    (0.05, 15, 1.2): 2.633,
    (0.05, 20, 1.2): 2.555,
    (0.05, 25, 1.2): 2.511,
    (0.05, 50, 1.2): 2.428,
    (0.01, 5, 1.4): 6.767,
    (0.01, 10, 1.4): 4.664,
    (0.01, 15, 1.4): 4.238,
    (0.01, 20, 1.4): 4.056,
    (0.01, 25, 1.4): 3.955,
    (0.01, 50, 1.4): 3.771,
    (0.05, 5, 1.4): 4.081,
    (0.05, 10, 1.4): 3.247,
    (0.05, 15, 1.4): 3.053,
    (0.05, 20, 1.4): 2.967,
    (0.05, 25, 1.4): 2.919,
    (0.05, 50, 1.4): 2.828,
    (0.01, 5, 1.6): 7.649,
    (0.01, 10, 1.6): 5.3,
    (0.01, 15, 1.6): 4.825,
    (0.01, 20, 1.6): 4.622,
    (0.01, 25, 1.6): 4.51,
    (0.01, 50, 1.6): 4.305,
    (0.05, 5, 1.6): 4.613,
    (0.05, 10, 1.6): 3.689,
    (0.05, 15, 1.6): 3.476,
    (0.05, 20, 1.6): 3.381,
    (0.05, 25, 1.6): 3.328,
    (0.05, 50, 1.6): 3.228,
    (0.01, 5, 1.8): 8.539,
    (0.01, 10, 1.8): 5.939,
    (0.01, 15, 1.8): 5.413,
    (0.01, 20, 1.8): 5.189,
    (0.01, 25, 1.8): 5.065,
    (0.01, 50, 1.8): 4.839,
    (0.05, 5, 1.8): 5.15,
    (0.05, 10, 1.8): 4.134,
    (0.05, 15, 1.8): 3.9,
    (0.05, 20, 1.8): 3.796,
    (0.05, 25, 1.8): 3.738,
    (0.05, 50, 1.8): 3.628,
    (0.01, 5, 2.0): 9.436,
    (0.01, 10, 2.0): 6.58,
    (0.01, 15, 2.0): 6.003,
    (0.01, 20, 2.0): 5.758,
    (0.01, 25, 2.0): 5.622,
    (0.01, 50, 2.0): 5.373,
    (0.05, 5, 2.0): 5.69,
    (0.05, 10, 2.0): 4.581,
    (0.05, 15, 2.0): 4.325,
    (0.05, 20, 2.0): 4.212,
    (0.05, 25, 2.0): 4.148,
    (0.05, 50, 2.0): 4.029,
    (0.01, 5, 2.2): 10.336,
    (0.01, 10, 2.2): 7.223,
    (0.01, 15, 2.2): 6.594,
    (0.01, 20, 2.2): 6.326,
    (0.01, 25, 2.2): 6.179,
    (0.01, 50, 2.2): 5.908,
    (0.05, 5, 2.2): 6.233,
    (0.05, 10, 2.2): 5.028,
    (0.05, 15, 2.2): 4.751,
    (0.05, 20, 2.2): 4.628,
    (0.05, 25, 2.2): 4.559,
    (0.05, 50, 2.2): 4.43,
    (0.01, 5, 2.4): 11.24,
    (0.01, 10, 2.4): 7.867,
    (0.01, 15, 2.4): 7.186,
    (0.01, 20, 2.4): 6.896,
    (0.01, 25, 2.4): 6.736,
    (0.01, 50, 2.4): 6.443,
    (0.05, 5, 2.4): 6.778,
    (0.05, 10, 2.4): 5.476,
    (0.05, 15, 2.4): 5.177,
    (0.05, 20, 2.4): 5.045,
    (0.05, 25, 2.4): 4.971,
    (0.05, 50, 2.4): 4.831,
    (0.01, 5, 2.6): 12.146,
    (0.01, 10, 2.6): 8.512,
    (0.01, 15, 2.6): 7.778,
    (0.01, 20, 2.6): 7.466,
    (0.01, 25, 2.6): 7.294,
    (0.01, 50, 2.6): 6.978,
    (0.05, 5, 2.6): 7.325,
    (0.05, 10, 2.6): 5.925,
    (0.05, 15, 2.6): 5.604,
    (0.05, 20, 2.6): 5.462,
    (0.05, 25, 2.6): 5.382,
    (0.05, 50, 2.6): 5.233,
    (0.01, 5, 2.8): 13.055,
    (0.01, 10, 2.8): 9.157,
    (0.01, 15, 2.8): 8.371,
    (0.01, 20, 2.8): 8.036,
    (0.01, 25, 2.8): 7.851,
    (0.01, 50, 2.8): 7.513,
    (0.05, 5, 2.8): 7.873,
    (0.05, 10, 2.8): 6.374,
    (0.05, 15, 2.8): 6.031,
    (0.05, 20, 2.8): 5.879,
    (0.05, 25, 2.8): 5.794,
    (0.05, 50, 2.8): 5.634,
    (0.01, 5, 3.0): 13.965,
    (0.01, 10, 3.0): 9.804,
    (0.01, 15, 3.0): 8.964,
    (0.01, 20, 3.0): 8.607,
    (0.01, 25, 3.0): 8.409,
    (0.01, 50, 3.0): 8.049,
    (0.05, 5, 3.0): 8.421,
    (0.05, 10, 3.0): 6.824,
    (0.05, 15, 3.0): 6.458,
    (0.05, 20, 3.0): 6.296,
    (0.05, 25, 3.0): 6.205,
    (0.05, 50, 3.0): 6.035,
    (0.01, 5, 3.2): 14.876,
    (0.01, 10, 3.2): 10.45,
    (0.01, 15, 3.2): 9.557,
    (0.01, 20, 3.2): 9.177,
    (0.01, 25, 3.2): 8.968,
    (0.01, 50, 3.2): 8.584,
    (0.05, 5, 3.2): 8.971,
    (0.05, 10, 3.2): 7.274,
    (0.05, 15, 3.2): 6.886,
    (0.05, 20, 3.2): 6.714,
    (0.05, 25, 3.2): 6.617,
    (0.05, 50, 3.2): 6.437,
    (0.01, 5, 3.4): 15.789,
    (0.01, 10, 3.4): 11.097,
    (0.01, 15, 3.4): 10.15,
    (0.01, 20, 3.4): 9.748,
    (0.01, 25, 3.4): 9.526,
    (0.01, 50, 3.4): 9.12,
    (0.05, 5, 3.4): 9.521,
    (0.05, 10, 3.4): 7.725,
    (0.05, 15, 3.4): 7.313,
    (0.05, 20, 3.4): 7.132,
    (0.05, 25, 3.4): 7.029,
    (0.05, 50, 3.4): 6.838,
    (0.01, 5, 3.6): 16.702,
    (0.01, 10, 3.6): 11.744,
    (0.01, 15, 3.6): 10.744,
    (0.01, 20, 3.6): 10.319,
    (0.01, 25, 3.6): 10.085,
    (0.01, 50, 3.6): 9.655,
    (0.05, 5, 3.6): 10.072,
    (0.05, 10, 3.6): 8.175,
    (0.05, 15, 3.6): 7.741,
    (0.05, 20, 3.6): 7.549,
    (0.05, 25, 3.6): 7.441,
    (0.05, 50, 3.6): 7.24,
    (0.01, 5, 3.8): 17.616,
    (0.01, 10, 3.8): 12.392,
    (0.01, 15, 3.8): 11.338,
    (0.01, 20, 3.8): 10.89,
    (0.01, 25, 3.8): 10.643,
    (0.01, 50, 3.8): 10.191,
    (0.05, 5, 3.8): 10.623,
    (0.05, 10, 3.8): 8.626,
    (0.05, 15, 3.8): 8.169,
    (0.05, 20, 3.8): 7.967,
    (0.05, 25, 3.8): 7.854,
    (0.05, 50, 3.8): 7.642,
    (0.01, 5, 4.0): 18.531,
    (0.01, 10, 4.0): 13.04,
    (0.01, 15, 4.0): 11.932,
    (0.01, 20, 4.0): 11.462,
    (0.01, 25, 4.0): 11.202,
    (0.01, 50, 4.0): 10.727,
    (0.05, 5, 4.0): 11.175,
    (0.05, 10, 4.0): 9.077,
    (0.05, 15, 4.0): 8.597,
    (0.05, 20, 4.0): 8.385,
    (0.05, 25, 4.0): 8.266,
    (0.05, 50, 4.0): 8.043,
    (0.01, 5, 4.2): 19.447,
    (0.01, 10, 4.2): 13.688,
    (0.01, 15, 4.2): 12.526,
    (0.01, 20, 4.2): 12.033,
    (0.01, 25, 4.2): 11.76,
    (0.01, 50, 4.2): 11.262,
    (0.05, 5, 4.2): 11.727,
    (0.05, 10, 4.2): 9.528,
    (0.05, 15, 4.2): 9.025,
    (0.05, 20, 4.2): 8.803,
    (0.05, 25, 4.2): 8.678,
    (0.05, 50, 4.2): 8.445,
    (0.01, 5, 4.4): 20.362,
    (0.01, 10, 4.4): 14.336,
    (0.01, 15, 4.4): 13.121,
    (0.01, 20, 4.4): 12.604,
    (0.01, 25, 4.4): 12.319,
    (0.01, 50, 4.4): 11.798,
    (0.05, 5, 4.4): 12.279,
    (0.05, 10, 4.4): 9.979,
    (0.05, 15, 4.4): 9.453,
    (0.05, 20, 4.4): 9.221,
    (0.05, 25, 4.4): 9.091,
    (0.05, 50, 4.4): 8.847,
    (0.01, 5, 4.6): 21.279,
    (0.01, 10, 4.6): 14.985,
    (0.01, 15, 4.6): 13.715,
    (0.01, 20, 4.6): 13.176,
    (0.01, 25, 4.6): 12.878,
    (0.01, 50, 4.6): 12.334,
    (0.05, 5, 4.6): 12.832,
    (0.05, 10, 4.6): 10.43,
    (0.05, 15, 4.6): 9.882,
    (0.05, 20, 4.6): 9.639,
    (0.05, 25, 4.6): 9.503,
    (0.05, 50, 4.6): 9.248,
    (0.01, 5, 4.8): 22.195,
    (0.01, 10, 4.8): 15.633,
    (0.01, 15, 4.8): 14.31,
    (0.01, 20, 4.8): 13.747,
    (0.01, 25, 4.8): 13.437,
    (0.01, 50, 4.8): 12.869,
    (0.05, 5, 4.8): 13.385,
    (0.05, 10, 4.8): 10.882,
    (0.05, 15, 4.8): 10.31,
    (0.05, 20, 4.8): 10.057,
    (0.05, 25, 4.8): 9.915,
    (0.05, 50, 4.8): 9.65,
    (0.01, 5, 5.0): 23.112,
    (0.01, 10, 5.0): 16.282,
    (0.01, 15, 5.0): 14.904,
    (0.01, 20, 5.0): 14.319,
    (0.01, 25, 5.0): 13.996,
    (0.01, 50, 5.0): 13.405,
    (0.05, 5, 5.0): 13.938,
    (0.05, 10, 5.0): 11.333,
    (0.05, 15, 5.0): 10.738,
    (0.05, 20, 5.0): 10.476,
    (0.05, 25, 5.0): 10.328,
    (0.05, 50, 5.0): 10.052,
}

CV_TABLE_K2 = {
    (0.01, 5, 0.2): 2.26,
    (0.01, 10, 0.2): 1.224,
    (0.01, 15, 0.2): 0.984,
    (0.01, 20, 0.2): 0.869,
    (0.01, 25, 0.2): 0.8,
    (0.01, 50, 0.2): 0.661,
    (0.05, 5, 0.2): 1.365,
    (0.05, 10, 0.2): 0.86,
    (0.05, 15, 0.2): 0.711,
    (0.05, 20, 0.2): 0.636,
    (0.05, 25, 0.2): 0.59,
    (0.05, 50, 0.2): 0.496,
    (0.01, 5, 0.4): 2.82,
    (0.01, 10, 0.4): 1.722,
    (0.01, 15, 0.4): 1.46,
    (0.01, 20, 0.4): 1.341,
    (0.01, 25, 0.4): 1.274,
    (0.01, 50, 0.4): 1.148,
    (0.05, 5, 0.4): 1.729,
    (0.05, 10, 0.4): 1.2,
    (0.05, 15, 0.4): 1.051,
    (0.05, 20, 0.4): 0.981,
    (0.05, 25, 0.4): 0.94,
    (0.05, 50, 0.4): 0.861,
    (0.01, 5, 0.6): 3.652,
    (0.01, 10, 0.6): 2.328,
    (0.01, 15, 0.6): 2.017,
    (0.01, 20, 0.6): 1.882,
    (0.01, 25, 0.6): 1.807,
    (0.01, 50, 0.6): 1.669,
    (0.05, 5, 0.6): 2.264,
    (0.05, 10, 0.6): 1.616,
    (0.05, 15, 0.6): 1.45,
    (0.05, 20, 0.6): 1.375,
    (0.05, 25, 0.6): 1.332,
    (0.05, 50, 0.6): 1.251,
    (0.01, 5, 0.8): 4.668,
    (0.01, 10, 0.8): 2.977,
    (0.01, 15, 0.8): 2.604,
    (0.01, 20, 0.8): 2.445,
    (0.01, 25, 0.8): 2.358,
    (0.01, 50, 0.8): 2.2,
    (0.05, 5, 0.8): 2.849,
    (0.05, 10, 0.8): 2.061,
    (0.05, 15, 0.8): 1.87,
    (0.05, 20, 0.8): 1.786,
    (0.05, 25, 0.8): 1.738,
    (0.05, 50, 0.8): 1.649,
    (0.01, 5, 1.0): 5.724,
    (0.01, 10, 1.0): 3.644,
    (0.01, 15, 1.0): 3.204,
    (0.01, 20, 1.0): 3.019,
    (0.01, 25, 1.0): 2.918,
    (0.01, 50, 1.0): 2.736,
    (0.05, 5, 1.0): 3.459,
    (0.05, 10, 1.0): 2.521,
    (0.05, 15, 1.0): 2.301,
    (0.05, 20, 1.0): 2.205,
    (0.05, 25, 1.0): 2.151,
    (0.05, 50, 1.0): 2.051,
    (0.01, 5, 1.2): 6.794,
    (0.01, 10, 1.2): 4.323,
    (0.01, 15, 1.2): 3.811,
    (0.01, 20, 1.2): 3.598,
    (0.01, 25, 1.2): 3.482,
    (0.01, 50, 1.2): 3.273,
    (0.05, 5, 1.2): 4.082,
    (0.05, 10, 1.2): 2.988,
    (0.05, 15, 1.2): 2.737,
    (0.05, 20, 1.2): 2.627,
    (0.05, 25, 1.2): 2.566,
    (0.05, 50, 1.2): 2.454,
    (0.01, 5, 1.4): 7.874,
    (0.01, 10, 1.4): 5.007,
    (0.01, 15, 1.4): 4.423,
    (0.01, 20, 1.4): 4.18,
    (0.01, 25, 1.4): 4.049,
    (0.01, 50, 1.4): 3.812,
    (0.05, 5, 1.4): 4.713,
    (0.05, 10, 1.4): 3.46,
    (0.05, 15, 1.4): 3.176,
    (0.05, 20, 1.4): 3.052,
    (0.05, 25, 1.4): 2.984,
    (0.05, 50, 1.4): 2.858,
    (0.01, 5, 1.6): 8.96,
    (0.01, 10, 1.6): 5.696,
    (0.01, 15, 1.6): 5.037,
    (0.01, 20, 1.6): 4.765,
    (0.01, 25, 1.6): 4.617,
    (0.01, 50, 1.6): 4.351,
    (0.05, 5, 1.6): 5.35,
    (0.05, 10, 1.6): 3.935,
    (0.05, 15, 1.6): 3.616,
    (0.05, 20, 1.6): 3.479,
    (0.05, 25, 1.6): 3.403,
    (0.05, 50, 1.6): 3.262,
    (0.01, 5, 1.8): 10.049,
    (0.01, 10, 1.8): 6.387,
    (0.01, 15, 1.8): 5.653,
    (0.01, 20, 1.8): 5.35,
    (0.01, 25, 1.8): 5.186,
    (0.01, 50, 1.8): 4.892,
    (0.05, 5, 1.8): 5.99,
    (0.05, 10, 1.8): 4.411,
    (0.05, 15, 1.8): 4.058,
    (0.05, 20, 1.8): 3.906,
    (0.05, 25, 1.8): 3.822,
    (0.05, 50, 1.8): 3.667,
    (0.01, 5, 2.0): 11.142,
    (0.01, 10, 2.0): 7.08,
    (0.01, 15, 2.0): 6.27,
    (0.01, 20, 2.0): 5.936,
    (0.01, 25, 2.0): 5.756,
    (0.01, 50, 2.0): 5.432,
    (0.05, 5, 2.0): 6.633,
    (0.05, 10, 2.0): 4.889,
    (0.05, 15, 2.0): 4.501,
    (0.05, 20, 2.0): 4.334,
    (0.05, 25, 2.0): 4.242,
    (0.05, 50, 2.0): 4.072,
    (0.01, 5, 2.2): 12.236,
    (0.01, 10, 2.2): 7.775,
    (0.01, 15, 2.2): 6.888,
    (0.01, 20, 2.2): 6.524,
    (0.01, 25, 2.2): 6.326,
    (0.01, 50, 2.2): 5.973,
    (0.05, 5, 2.2): 7.278,
    (0.05, 10, 2.2): 5.368,
    (0.05, 15, 2.2): 4.945,
    (0.05, 20, 2.2): 4.763,
    (0.05, 25, 2.2): 4.662,
    (0.05, 50, 2.2): 4.477,
    (0.01, 5, 2.4): 13.332,
    (0.01, 10, 2.4): 8.47,
    (0.01, 15, 2.4): 7.507,
    (0.01, 20, 2.4): 7.111,
    (0.01, 25, 2.4): 6.897,
    (0.01, 50, 2.4): 6.513,
    (0.05, 5, 2.4): 7.924,
    (0.05, 10, 2.4): 5.848,
    (0.05, 15, 2.4): 5.389,
    (0.05, 20, 2.4): 5.192,
    (0.05, 25, 2.4): 5.083,
    (0.05, 50, 2.4): 4.883,
    (0.01, 5, 2.6): 14.429,
    (0.01, 10, 2.6): 9.166,
    (0.01, 15, 2.6): 8.126,
    (0.01, 20, 2.6): 7.699,
    (0.01, 25, 2.6): 7.468,
    (0.01, 50, 2.6): 7.054,
    (0.05, 5, 2.6): 8.572,
    (0.05, 10, 2.6): 6.329,
    (0.05, 15, 2.6): 5.834,
    (0.05, 20, 2.6): 5.621,
    (0.05, 25, 2.6): 5.504,
    (0.05, 50, 2.6): 5.288,
    (0.01, 5, 2.8): 15.527,
    (0.01, 10, 2.8): 9.864,
    (0.01, 15, 2.8): 8.746,
    (0.01, 20, 2.8): 8.288,
    (0.01, 25, 2.8): 8.039,
    (0.01, 50, 2.8): 7.596,
    (0.05, 5, 2.8): 9.22,
    (0.05, 10, 2.8): 6.81,
    (0.05, 15, 2.8): 6.279,
    (0.05, 20, 2.8): 6.051,
    (0.05, 25, 2.8): 5.925,
    (0.05, 50, 2.8): 5.694,
    (0.01, 5, 3.0): 16.626,
    (0.01, 10, 3.0): 10.561,
    (0.01, 15, 3.0): 9.366,
    (0.01, 20, 3.0): 8.876,
    (0.01, 25, 3.0): 8.611,
    (0.01, 50, 3.0): 8.137,
    (0.05, 5, 3.0): 9.869,
    (0.05, 10, 3.0): 7.291,
    (0.05, 15, 3.0): 6.724,
    (0.05, 20, 3.0): 6.481,
    (0.05, 25, 3.0): 6.346,
    (0.05, 50, 3.0): 6.1,
    (0.01, 5, 3.2): 17.726,
    (0.01, 10, 3.2): 11.259,
    (0.01, 15, 3.2): 9.987,
    (0.01, 20, 3.2): 9.465,
    (0.01, 25, 3.2): 9.183,
    (0.01, 50, 3.2): 8.678,
    (0.05, 5, 3.2): 10.519,
    (0.05, 10, 3.2): 7.773,
    (0.05, 15, 3.2): 7.169,
    (0.05, 20, 3.2): 6.911,
    (0.05, 25, 3.2): 6.767,
    (0.05, 50, 3.2): 6.505,
    (0.01, 5, 3.4): 18.826,
    (0.01, 10, 3.4): 11.957,
    (0.01, 15, 3.4): 10.607,
    (0.01, 20, 3.4): 10.054,
    (0.01, 25, 3.4): 9.754,
    (0.01, 50, 3.4): 9.22,
    (0.05, 5, 3.4): 11.169,
    (0.05, 10, 3.4): 8.254,
    (0.05, 15, 3.4): 7.614,
    (0.05, 20, 3.4): 7.34,
    (0.05, 25, 3.4): 7.189,
    (0.05, 50, 3.4): 6.911,
    (0.01, 5, 3.6): 19.926,
    (0.01, 10, 3.6): 12.656,
    (0.01, 15, 3.6): 11.228,
    (0.01, 20, 3.6): 10.643,
    (0.01, 25, 3.6): 10.326,
    (0.01, 50, 3.6): 9.761,
    (0.05, 5, 3.6): 11.819,
    (0.05, 10, 3.6): 8.736,
    (0.05, 15, 3.6): 8.06,
    (0.05, 20, 3.6): 7.771,
    (0.05, 25, 3.6): 7.61,
    (0.05, 50, 3.6): 7.317,
    (0.01, 5, 3.8): 21.027,
    (0.01, 10, 3.8): 13.355,
    (0.01, 15, 3.8): 11.849,
    (0.01, 20, 3.8): 11.232,
    (0.01, 25, 3.8): 10.898,
    (0.01, 50, 3.8): 10.302,
    (0.05, 5, 3.8): 12.47,
    (0.05, 10, 3.8): 9.219,
    (0.05, 15, 3.8): 8.506,
    (0.05, 20, 3.8): 8.201,
    (0.05, 25, 3.8): 8.032,
    (0.05, 50, 3.8): 7.723,
    (0.01, 5, 4.0): 22.128,
    (0.01, 10, 4.0): 14.054,
    (0.01, 15, 4.0): 12.47,
    (0.01, 20, 4.0): 11.821,
    (0.01, 25, 4.0): 11.471,
    (0.01, 50, 4.0): 10.844,
    (0.05, 5, 4.0): 13.121,
    (0.05, 10, 4.0): 9.701,
    (0.05, 15, 4.0): 8.952,
    (0.05, 20, 4.0): 8.631,
    (0.05, 25, 4.0): 8.454,
    (0.05, 50, 4.0): 8.129,
    (0.01, 5, 4.2): 23.229,
    (0.01, 10, 4.2): 14.753,
    (0.01, 15, 4.2): 13.092,
    (0.01, 20, 4.2): 12.411,
    (0.01, 25, 4.2): 12.043,
    (0.01, 50, 4.2): 11.386,
    (0.05, 5, 4.2): 13.772,
    (0.05, 10, 4.2): 10.184,
    (0.05, 15, 4.2): 9.398,
    (0.05, 20, 4.2): 9.061,
    (0.05, 25, 4.2): 8.875,
    (0.05, 50, 4.2): 8.535,
    (0.01, 5, 4.4): 24.331,
    (0.01, 10, 4.4): 15.452,
    (0.01, 15, 4.4): 13.713,
    (0.01, 20, 4.4): 13.0,
    (0.01, 25, 4.4): 12.615,
    (0.01, 50, 4.4): 11.927,
    (0.05, 5, 4.4): 14.424,
    (0.05, 10, 4.4): 10.666,
    (0.05, 15, 4.4): 9.844,
    (0.05, 20, 4.4): 9.492,
    (0.05, 25, 4.4): 9.297,
    (0.05, 50, 4.4): 8.941,
    (0.01, 5, 4.6): 25.432,
    (0.01, 10, 4.6): 16.152,
    (0.01, 15, 4.6): 14.334,
    (0.01, 20, 4.6): 13.59,
    (0.01, 25, 4.6): 13.187,
    (0.01, 50, 4.6): 12.469,
    (0.05, 5, 4.6): 15.075,
    (0.05, 10, 4.6): 11.149,
    (0.05, 15, 4.6): 10.29,
    (0.05, 20, 4.6): 9.922,
    (0.05, 25, 4.6): 9.719,
    (0.05, 50, 4.6): 9.347,
    (0.01, 5, 4.8): 26.534,
    (0.01, 10, 4.8): 16.851,
    (0.01, 15, 4.8): 14.956,
    (0.01, 20, 4.8): 14.18,
    (0.01, 25, 4.8): 13.76,
    (0.01, 50, 4.8): 13.01,
    (0.05, 5, 4.8): 15.727,
    (0.05, 10, 4.8): 11.632,
    (0.05, 15, 4.8): 10.736,
    (0.05, 20, 4.8): 10.353,
    (0.05, 25, 4.8): 10.141,
    (0.05, 50, 4.8): 9.753,
    (0.01, 5, 5.0): 27.636,
    (0.01, 10, 5.0): 17.551,
    (0.01, 15, 5.0): 15.578,
    (0.01, 20, 5.0): 14.769,
    (0.01, 25, 5.0): 14.332,
    (0.01, 50, 5.0): 13.552,
    (0.05, 5, 5.0): 16.379,
    (0.05, 10, 5.0): 12.115,
    (0.05, 15, 5.0): 11.182,
    (0.05, 20, 5.0): 10.783,
    (0.05, 25, 5.0): 10.562,
    (0.05, 50, 5.0): 10.159,
}

MAX_ALPHA_PERCENT = {
    (5, 0.1): 3.95,
    (5, 0.2): 4.418,
    (5, 0.5): 6.438,
    (5, 1.0): 9.456,
    (5, 2.0): 11.866,
    (5, 3.0): 12.505,
    (5, 4.0): 12.647,
    (5, 5.0): 12.693,
    (5, 10.0): 12.77,
    (10, 0.1): 3.911,
    (10, 0.2): 4.51,
    (10, 0.5): 7.313,
    (10, 1.0): 9.026,
    (10, 2.0): 9.404,
    (10, 3.0): 9.435,
    (10, 4.0): 9.48,
    (10, 5.0): 9.486,
    (10, 10.0): 9.504,
    (20, 0.1): 3.684,
    (20, 0.2): 4.615,
    (20, 0.5): 6.337,
    (20, 1.0): 6.711,
    (20, 2.0): 6.829,
    (20, 3.0): 6.85,
    (20, 4.0): 6.874,
    (20, 5.0): 6.866,
    (20, 10.0): 6.874,
    (25, 0.1): 3.491,
    (25, 0.2): 4.442,
    (25, 0.5): 6.068,
    (25, 1.0): 6.278,
    (25, 2.0): 6.354,
    (25, 3.0): 6.35,
    (25, 4.0): 6.357,
    (25, 5.0): 6.365,
    (25, 10.0): 6.389,
    (50, 0.1): 3.768,
    (50, 0.2): 4.663,
    (50, 0.5): 5.308,
    (50, 1.0): 5.33,
    (50, 2.0): 5.391,
    (50, 3.0): 5.437,
    (50, 4.0): 5.435,
    (50, 5.0): 5.436,
    (50, 10.0): 5.441,
}

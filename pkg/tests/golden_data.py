"""Hand-transcribed eigenvalue tables for n = 2..7.

Row labels are the eigenspace indices (halved), top row first; columns are the relations left-to-right.  These literals are the
reference the oracle output is compared against, so they must never be
regenerated from package code.
"""

GOLDEN_TABLES = {
    2: {
        "columns": ["[1,1]", "[2]"],
        "rows": [
            ("[2]", [1, 2], 1),
            ("[1,1]", [1, -1], 2),
        ],
    },
    3: {
        "columns": ["[1,1,1]", "[2,1]", "[3]"],
        "rows": [
            ("[3]", [1, 6, 8], 1),
            ("[2,1]", [1, 1, -2], 9),
            ("[1,1,1]", [1, -3, 2], 5),
        ],
    },
    4: {
        "columns": ["[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"],
        "rows": [
            ("[4]", [1, 12, 12, 32, 48], 1),
            ("[3,1]", [1, 5, -2, 4, -8], 20),
            ("[2,2]", [1, 2, 7, -8, -2], 14),
            ("[2,1,1]", [1, -1, -2, -2, 4], 56),
            ("[1,1,1,1]", [1, -6, 3, 8, -6], 14),
        ],
    },
    5: {
        "columns": [
            "[1,1,1,1,1]",
            "[2,1,1,1]",
            "[2,2,1]",
            "[3,1,1]",
            "[3,2]",
            "[4,1]",
            "[5]",
        ],
        "rows": [
            ("[5]", [1, 20, 60, 80, 160, 240, 384], 1),
            ("[4,1]", [1, 11, 6, 26, -20, 24, -48], 35),
            ("[3,2]", [1, 6, 11, -4, 20, -26, -8], 90),
            ("[3,1,1]", [1, 3, -10, 2, -4, -8, 16], 225),
            ("[2,2,1]", [1, 0, 5, -10, -10, 10, 4], 252),
            ("[2,1,1,1]", [1, -4, -3, 2, 10, 6, -12], 300),
            ("[1,1,1,1,1]", [1, -10, 15, 20, -20, -30, 24], 42),
        ],
    },
    6: {
        "columns": [
            "[1,1,1,1,1,1]",
            "[2,1,1,1,1]",
            "[2,2,1,1]",
            "[2,2,2]",
            "[3,1,1,1]",
            "[3,2,1]",
            "[3,3]",
            "[4,1,1]",
            "[4,2]",
            "[5,1]",
            "[6]",
        ],
        "rows": [
            ("[6]", [1, 30, 180, 120, 160, 960, 640, 720, 1440, 2304, 3840], 1),
            ("[5,1]", [1, 19, 48, -12, 72, 80, -64, 192, -144, 192, -384], 54),
            ("[4,2]", [1, 12, 27, 30, 16, 24, -8, -18, 108, -144, -48], 275),
            ("[4,1,1]", [1, 9, -12, -12, 22, -60, 16, 12, -24, -48, 96], 616),
            ("[3,3]", [1, 9, 33, -27, -8, 120, 136, -78, -114, -48, -24], 132),
            ("[3,2,1]", [1, 4, 3, -2, -8, 0, -24, -18, -4, 32, 16], 2673),
            ("[3,1,1,1]", [1, 0, -21, 6, 4, 12, 16, -6, 12, 24, -48], 1925),
            ("[2,2,2]", [1, 0, 15, 30, -20, -60, 40, 30, -60, 24, 0], 462),
            ("[2,2,1,1]", [1, -3, 3, -9, -8, 0, 4, 24, 24, -24, -12], 2640),
            ("[2,1,1,1,1]", [1, -8, 3, 6, 12, 20, -16, -6, -36, -24, 48], 1485),
            ("[1,1,1,1,1,1]", [1, -15, 45, -15, 40, -120, 40, -90, 90, 144, -120], 132),
        ],
    },
    7: {
        "columns": [
            "[1,1,1,1,1,1,1]",
            "[2,1,1,1,1,1]",
            "[2,2,1,1,1]",
            "[2,2,2,1]",
            "[3,1,1,1,1]",
            "[3,2,1,1]",
            "[3,2,2]",
            "[3,3,1]",
            "[4,1,1,1]",
            "[4,2,1]",
            "[4,3]",
            "[5,1,1]",
            "[5,2]",
            "[6,1]",
            "[7]",
        ],
        "rows": [
            (
                "[7]",
                [1, 42, 420, 840, 280, 3360, 3360, 4480, 1680, 10080, 13440, 8064, 16128, 26880, 46080],
                1,
            ),
            (
                "[6,1]",
                [1, 29, 160, 60, 150, 760, -280, 320, 640, 720, -1120, 1824, -1344, 1920, -3840],
                77,
            ),
            (
                "[5,2]",
                [1, 20, 79, 114, 60, 148, 368, -184, 118, 180, -112, -120, 816, -1104, -384],
                637,
            ),
            (
                "[5,1,1]",
                [1, 17, 16, -84, 66, -56, -136, -64, 160, -432, 224, 96, -192, -384, 768],
                1365,
            ),
            (
                "[4,3]",
                [1, 15, 69, 39, 10, 228, -42, 376, -102, 90, 588, -360, -504, -264, -144],
                1001,
            ),
            (
                "[4,2,1]",
                [1, 10, 9, 14, 10, -42, -52, -64, -22, 100, -112, -100, -24, 176, 96],
                12012,
            ),
            (
                "[4,1,1,1]",
                [1, 6, -39, -18, 22, -78, 84, 112, 6, -36, 48, -36, 72, 144, -288],
                7644,
            ),
            (
                "[3,3,1]",
                [1, 7, 21, -49, -14, 84, 14, 56, -70, -182, -196, 56, 168, 56, 48],
                6435,
            ),
            (
                "[3,2,2]",
                [1, 4, 15, 50, -20, -60, 80, -40, -10, -140, 80, 104, -144, 80, 0],
                9009,
            ),
            (
                "[3,2,1,1]",
                [1, 1, -9, -13, -8, 12, -16, -28, -4, 64, 68, 44, 12, -76, -48],
                42042,
            ),
            (
                "[3,1,1,1,1]",
                [1, -4, -29, 42, 12, 52, -16, 32, -14, -36, -112, 24, -48, -96, 192],
                14014,
            ),
            (
                "[2,2,2,1]",
                [1, -3, 15, 15, -20, -60, -60, 100, 60, 0, -60, -36, 108, -60, 0],
                12012,
            ),
            (
                "[2,2,1,1,1]",
                [1, -7, 7, -21, 0, 28, 56, -28, 28, 0, -28, -84, -84, 84, 48],
                21450,
            ),
            (
                "[2,1,1,1,1,1]",
                [1, -13, 25, 15, 30, -20, -70, -40, -50, -90, 140, 24, 168, 120, -240],
                7007,
            ),
            (
                "[1,1,1,1,1,1,1]",
                [1, -21, 105, -105, 70, -420, 210, 280, -210, 630, -420, 504, -504, -840, 720],
                429,
            ),
        ],
    },
}

# Reference column for the relation [3,2,1,1,1] of K_16, pinning the
# interpolation input at n = 8.
GOLDEN_32_COLUMN_N8 = [
    8960, 2960, 848, 440, 512, -28, -184, 608, 132, -132, -72,
    -52, 0, 96, -60, 68, 80, -160, -28, 32, -220, -1120,
]

"""Reference Schur states for d = 3, N = 3 in the compressed GT notation ``(x,y;k)``.

Each entry: (lambda, sigma path or None, gt, fock, Dynkin z, {digit string: integer weight}).
Amplitudes are the integer weights divided by their Euclidean norm. The mixed
sector copy ``T2`` is the add-a-box path (2, 1) and ``T1`` the path (1, 2).
"""
from __future__ import annotations

T1 = (1, 2)
T2 = (2, 1)

_SYM = (3, 0, 0)
_MIX = (2, 1, 0)
_ANTI = (1, 1, 1)

U3_TABLE = [
    (_SYM, (1, 1), "(0,0;0)", (0, 0, 3), (0, -3), {"222": 1}),
    (_SYM, (1, 1), "(1,0;0)", (0, 1, 2), (-1, -1), {"122": 1, "212": 1, "221": 1}),
    (_SYM, (1, 1), "(1,0;1)", (1, 0, 2), (1, -2), {"022": 1, "202": 1, "220": 1}),
    (_SYM, (1, 1), "(2,0;0)", (0, 2, 1), (-2, 1), {"112": 1, "121": 1, "211": 1}),
    (_SYM, (1, 1), "(2,0;1)", (1, 1, 1), (0, 0),
     {"012": 1, "021": 1, "102": 1, "120": 1, "201": 1, "210": 1}),
    (_SYM, (1, 1), "(2,0;2)", (2, 0, 1), (2, -1), {"002": 1, "020": 1, "200": 1}),
    (_SYM, (1, 1), "(3,0;0)", (0, 3, 0), (-3, 3), {"111": 1}),
    (_SYM, (1, 1), "(3,0;1)", (1, 2, 0), (-1, 2), {"011": 1, "101": 1, "110": 1}),
    (_SYM, (1, 1), "(3,0;2)", (2, 1, 0), (1, 1), {"001": 1, "010": 1, "100": 1}),
    (_SYM, (1, 1), "(3,0;3)", (3, 0, 0), (3, 0), {"000": 1}),
    (_MIX, T2, "(2,1;1)", (1, 2, 0), (-1, 2), {"110": 1, "101": -1}),
    (_MIX, T2, "(2,1;2)", (2, 1, 0), (1, 1), {"001": 1, "010": -1}),
    (_MIX, T2, "(2,0;0)", (0, 2, 1), (-2, 1), {"112": 1, "121": -1}),
    (_MIX, T2, "(2,0;2)", (2, 0, 1), (2, -1), {"002": 1, "020": -1}),
    (_MIX, T2, "(1,0;0)", (0, 1, 2), (-1, -1), {"122": 1, "212": -1}),
    (_MIX, T2, "(1,0;1)", (1, 0, 2), (1, -2), {"022": 1, "202": -1}),
    (_MIX, T2, "(2,0;1)", (1, 1, 1), (0, 0), {"012": 1, "120": -1}),
    (_MIX, T2, "(1,1;1)", (1, 1, 1), (0, 0), {"021": 1, "210": -1}),
    (_MIX, T1, "(2,1;1)", (1, 2, 0), (-1, 2), {"110": 1, "101": 1, "011": -2}),
    (_MIX, T1, "(2,1;2)", (2, 1, 0), (1, 1), {"001": 1, "010": 1, "100": -2}),
    (_MIX, T1, "(2,0;0)", (0, 2, 1), (-2, 1), {"112": 1, "121": 1, "211": -2}),
    (_MIX, T1, "(2,0;2)", (2, 0, 1), (2, -1), {"002": 1, "020": 1, "200": -2}),
    (_MIX, T1, "(1,0;0)", (0, 1, 2), (-1, -1), {"122": 1, "212": 1, "221": -2}),
    (_MIX, T1, "(1,0;1)", (1, 0, 2), (1, -2), {"022": 1, "202": 1, "220": -2}),
    (_MIX, T1, "(2,0;1)", (1, 1, 1), (0, 0), {"012": 1, "120": 1, "201": -2}),
    (_MIX, T1, "(1,1;1)", (1, 1, 1), (0, 0), {"021": 1, "210": 1, "102": -2}),
    (_ANTI, (2, 3), "(1,1;1)", (1, 1, 1), (0, 0),
     {"012": 1, "021": -1, "102": -1, "120": 1, "201": 1, "210": -1}),
]

SECTOR_COUNTS = {_SYM: 10, _MIX: 16, _ANTI: 1}

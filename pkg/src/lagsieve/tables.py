"""Exception sets and factor tables.

All pairs are transcribed verbatim; Omega is keyed (n, alpha), the
half-integer tables are keyed (u, n) with alpha = u + 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

# (n, alpha), integer alpha in [11, 50]: pairs where a linear factor occurs
OMEGA: frozenset[tuple[int, int]] = frozenset({
    (2, 14), (2, 23), (2, 34), (2, 47), (4, 14), (4, 20), (4, 23), (6, 44),
    (8, 41), (12, 24), (16, 16), (16, 20), (16, 24), (16, 29), (24, 24),
    (30, 24), (32, 32), (32, 48), (40, 24), (48, 24), (112, 48), (120, 24),
})

# the single integer-alpha pair that also admits a quadratic factor
OMEGA_QUADRATIC: frozenset[tuple[int, int]] = frozenset({(16, 24)})

# (u, n), alpha = u + 1/2: quadratic factor of psi(x^2)
OMEGA1: frozenset[tuple[int, int]] = frozenset({
    (2, 2), (2, 8), (2, 2**9), (6, 2**4), (9, 4), (9, 2**6), (10, 3), (10, 12),
    (10, 24), (10, 192), (16, 8), (21, 2**4), (24, 2**4), (30, 2**6), (35, 2**5),
    (35, 2**9), (37, 12), (37, 36), (37, 144), (44, 2**12),
})

# (u, n): the pair whose psi(x^2) may carry a degree-4 factor
OMEGA1_DEGREE4: frozenset[tuple[int, int]] = frozenset({(9, 4)})

# (u, n): half-integer pairs where degrees 1 and 2 are not settled by the
# generic Newton polygon argument
T0: frozenset[tuple[int, int]] = frozenset({
    (2, 2), (2, 8), (2, 2**9), (6, 2**4), (9, 4), (9, 2**6), (10, 3), (10, 12),
    (10, 24), (10, 192), (11, 2), (16, 2**3), (21, 2**4), (24, 2**4), (30, 2**6),
    (35, 2), (35, 2**5), (35, 2**9), (36, 2**6), (37, 12), (37, 36), (37, 144),
    (38, 2), (44, 2**12),
})

# generalized Schur polynomial exceptions, (n, alpha) per degree k
_T_K3 = {(7, 3), (8, 2), (12, 4), (46, 4), (14, 12), (17, 11), (53, 12)}
_T_K4 = {(18, 9), (18, 10), (56, 10), (16, 12), (17, 11), (38, 13), (39, 18)}
_T_K5 = {(17, 11), (19, 9), (40, 12)}
_T_K2_ALPHA_SUMS = {
    # alpha -> admissible n + alpha
    12: {169, 729}, 15: {289}, 16: {289}, 17: {513}, 18: {361, 513, 1216},
    19: {243}, 20: {243}, 21: {529, 121, 576}, 22: {121, 576},
    24: {325, 625, 676}, 27: {784}, 28: {145}, 29: {961}, 31: {243},
    32: {243, 289, 1089}, 33: {136, 256, 289, 5832}, 36: {1369},
    38: {325, 625, 676}, 39: {1025, 6561}, 40: {288},
}
_T_K2_SPECIAL_ALPHA = {13, 14, 19, 33}
_T_K2_SPECIAL_SUMS = {126, 225, 2401, 4375}
_T_K2_PAIRS = {(112, 9), (233, 10), (234, 9)}


def in_T(n: int, alpha: int, k: int) -> bool:
    """Membership of (n, alpha, k) in the Schur-polynomial exception list."""
    if k == 3:
        return (n, alpha) in _T_K3
    if k == 4:
        return (n, alpha) in _T_K4
    if k == 5:
        return (n, alpha) in _T_K5
    if k != 2:
        return False
    if n + alpha <= 100:
        return True
    if alpha in _T_K2_SPECIAL_ALPHA and n + alpha in _T_K2_SPECIAL_SUMS:
        return True
    if (n, alpha) in _T_K2_PAIRS:
        return True
    return n + alpha in _T_K2_ALPHA_SUMS.get(alpha, ())


def t_applies(alpha: int, k: int) -> bool:
    """Range where the Schur-polynomial exception list is complete."""
    return 0 <= alpha <= (40 if k == 2 else 50) and k >= 2


# (n, alpha, k) left after the prime criteria, settled by polygons
T1: frozenset[tuple[int, int, int]] = frozenset({
    (8, 13, 2), (6, 19, 2), (9, 19, 2), (8, 20, 2), (4, 21, 2), (12, 21, 2),
    (24, 22, 2), (16, 24, 2), (9, 27, 2), (18, 33, 2), (16, 34, 2), (9, 40, 2),
    (27, 38, 2), (14, 12, 3), (16, 12, 4),
})

# degree >= 3 exceptions for G(x^2), alpha = u + 1/2, keyed by degree
S_LEMMA25: frozenset[tuple[int, int]] = frozenset({
    (1, 121), (8, 59), (8, 114), (9, 4), (9, 113), (9, 163), (9, 554), (15, 23),
    (15, 107), (16, 106), (20, 102), (21, 101), (26, 155), (26, 287), (30, 92),
    (36, 86), (43, 1158), (44, 716),
})
HALF_HIGH_DEGREE_EXCEPTIONS: dict[int, frozenset[tuple[int, int]]] = {
    3: frozenset({(1, 12), (6, 7), (9, 113), (10, 3), (21, 101)}),
    4: S_LEMMA25,
    6: frozenset({(44, 79)}),
}

# linear factors x +- b for (n, alpha)
TABLE1: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((16, 16), (32, 32)),
    4: ((2, 14),),
    6: ((2, 34), (4, 14), (4, 20), (4, 23), (12, 24), (16, 20), (24, 24), (48, 24)),
    10: ((32, 48),),
    14: ((8, 41),),
    20: ((2, 23),),
    30: ((6, 44), (16, 29), (30, 24), (40, 24), (120, 24)),
    56: ((2, 47),),
    70: ((112, 48),),
    150: ((16, 24),),
}
TABLE1_QUADRATIC: dict[int, tuple[tuple[int, int], ...]] = {780: ((16, 24),)}

# quadratic factors x^2 +- b of psi(x^2) for (u, n)
TABLE2: dict[int, tuple[tuple[int, int], ...]] = {
    3: ((9, 4), (10, 3), (24, 2**4)),
    15: ((6, 2**4), (10, 12), (10, 192), (21, 2**4), (35, 2**5)),
    21: ((2, 2), (2, 8), (2, 2**9), (9, 2**6), (30, 2**6), (37, 36)),
    33: ((37, 12), (37, 144)),
    69: ((10, 24),),
    1095: ((35, 2**9),),
    7: ((16, 8),),
}

# the pair for which no factorization was found (n too large)
TABLE2_UNRESOLVED: frozenset[tuple[int, int]] = frozenset({(44, 2**12)})


@dataclass(frozen=True)
class ExceptionTables:
    Omega: frozenset = OMEGA
    Omega1: frozenset = OMEGA1
    T0: frozenset = T0
    T1: frozenset = T1
    S_lemma25: frozenset = S_LEMMA25

    def T_contains(self, n: int, alpha: int, k: int) -> bool:
        return in_T(n, alpha, k)


TABLES = ExceptionTables()

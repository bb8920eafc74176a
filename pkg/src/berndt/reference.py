"""Published closed-form constants, transcribed digit for digit.

These are the independent oracles the library is checked against; nothing in
the computational modules imports this file. Each monomial is
(coefficient, two_halves, gamma_exp, pi_halves) as in ``GammaPiExpr``.

G below stands for Gamma(1/4).
"""
from __future__ import annotations

from fractions import Fraction as F
from pathlib import Path

from .mpcore import GammaPiExpr, Term

# lemniscatic sums, keyed by (target, m); the series index is p = 4m - 3 except
# Cprime, whose numerator power is 4m - 4.
LEMNISCATIC_SUMS: dict[tuple[str, int], tuple] = {
    # sum (-1)^n n^p / (sinh(n pi) cosh^2(n pi))
    ("C", 2): ((F(15, 8192), -1, 10, -17), (F(-7, 65536), -1, 14, -21)),
    ("C", 3): ((F(-3969, 8388608), -1, 18, -29), (F(1809, 67108864), -1, 22, -33)),
    ("C", 4): ((F(5756751, 8589934592), -1, 26, -41), (F(-2630583, 68719476736), -1, 30, -45)),
    # sum (-1)^n n^(p-1) / (sinh^2(n pi) cosh(n pi))
    ("Cprime", 2): ((F(-1, 256), 0, 8, -14), (F(3, 4096), -1, 10, -15)),
    ("Cprime", 3): ((F(9, 16384), 0, 16, -26), (F(-441, 4194304), -1, 18, -27)),
    ("Cprime", 4): ((F(-567, 1048576), 0, 24, -38), (F(442827, 4294967296), -1, 26, -39)),
    # sum (-1)^n (2n-1)^p / (sinh^2((2n-1) pi/2) cosh((2n-1) pi/2))
    ("Cbar", 2): ((F(15, 256), -1, 10, -17), (F(-3, 256), 0, 12, -18), (F(7, 2048), -1, 14, -21)),
    ("Cbar", 3): ((F(-3969, 16384), -1, 18, -29), (F(189, 4096), 0, 20, -30),
                  (F(-1809, 131072), -1, 22, -33)),
    ("Cbar", 4): ((F(5756751, 1048576), -1, 26, -41), (F(-68607, 65536), 0, 28, -42),
                  (F(2630583, 8388608), -1, 30, -45)),
}

# q1..q5 of the mixed integral int x^(4m-3)/([cosh 2x - cos 2x][cosh x - cos x]) dx
MIXED_INTEGRAL_COEFFS: dict[int, tuple] = {
    2: (F(5, 1024), F(-15, 8192), F(3, 16384), F(-7, 65536), F(1, 65536)),
    3: (F(81, 16384), F(-3969, 2097152), F(189, 1048576), F(-1809, 16777216), F(17, 1048576)),
    4: (F(7371, 262144), F(-5756751, 536870912), F(68607, 67108864), F(-2630583, 4294967296),
        F(1539, 16777216)),
}

# zeta_4(4m-2, 3 | 2+2i, 2-2i, 1+i, 1-i) in the same five-monomial template,
# exactly as printed (the m = 3 fifth coefficient carries a digit slip).
BARNES_C4_COEFFS: dict[int, tuple] = {
    2: (F(1, 98304), F(-1, 262144), F(1, 2621440), F(-7, 31457280), F(1, 31457280)),
    3: (F(1, 293601280), F(-7, 5368709120), F(1, 8053063680), F(-67, 901943132160),
        F(17, 1522029235520)),
    4: (F(1, 885837004800), F(-71, 164926744166400), F(11, 268005959270400),
        F(-97429, 3962200101853593600), F(19, 5159114715955200)),
}


def _from_terms(terms) -> GammaPiExpr:
    return GammaPiExpr.normalize([Term(F(c), t, g, p) for c, t, g, p in terms])


def five_term_template(m: int, coeffs) -> GammaPiExpr:
    """q1 G^(8m-8)/pi^(2m-2) + q2 G^(8m-6)/(sqrt2 pi^(2m-3/2)) + q3 G^(8m-4)/pi^(2m-1)
    + q4 G^(8m-2)/(sqrt2 pi^(2m+1/2)) + q5 G^(8m)/pi^(2m+2)."""
    shape = ((0, 8 * m - 8, -(4 * m - 4)), (-1, 8 * m - 6, -(4 * m - 3)), (0, 8 * m - 4, -(4 * m - 2)),
             (-1, 8 * m - 2, -(4 * m + 1)), (0, 8 * m, -(4 * m + 4)))
    return _from_terms((c,) + s for c, s in zip(coeffs, shape))


def lemniscatic_sum(target: str, m: int) -> GammaPiExpr:
    return _from_terms(LEMNISCATIC_SUMS[(target, m)])


def mixed_integral(m: int) -> GammaPiExpr:
    return five_term_template(m, MIXED_INTEGRAL_COEFFS[m])


def barnes_c4(m: int) -> GammaPiExpr:
    return five_term_template(m, BARNES_C4_COEFFS[m])


# ---------------------------------------------------------------------------
# golden JSON files (written by scripts/write_golden_files.py)

DATA_DIR = Path(__file__).with_name("data")


def golden_name(kind: str, m: int) -> str:
    """kind is one of "C", "Cprime", "Cbar" or "mixed"."""
    return f"{kind}_m{m}.json"


def golden_items() -> dict[str, GammaPiExpr]:
    items = {golden_name(t, m): lemniscatic_sum(t, m) for t, m in LEMNISCATIC_SUMS}
    items.update({golden_name("mixed", m): mixed_integral(m) for m in MIXED_INTEGRAL_COEFFS})
    return items


def load_golden(kind: str, m: int) -> GammaPiExpr:
    return GammaPiExpr.from_json((DATA_DIR / golden_name(kind, m)).read_text())

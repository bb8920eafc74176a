"""Compare the lattice and Laplace routes for the mixed-integral lattice.

The lattice route converges slowly here (the shell tail decays like T^-2 over
about T^3 points), so its certified bound stays loose at any affordable budget.
"""
from __future__ import annotations

import argparse

import mpmath

from berndt.barnes import barnes_via_laplace, barnes_zeta, c4_params

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--prec", type=int, default=30)
    ap.add_argument("--budget", type=int, nargs="+", default=[500, 1500, 3000])
    a = ap.parse_args()
    p = c4_params(a.m)
    ref = barnes_via_laplace(p, a.prec)
    print(f"laplace  {mpmath.nstr(ref.value, a.prec)}  bound {mpmath.nstr(ref.error_bound, 3)}")
    for n in a.budget:
        r = barnes_zeta(p, a.prec, max_terms=n)
        err = abs(r.value - ref.value)
        print(f"lattice  budget {n:>6}  shells {r.shells:>3}  error {mpmath.nstr(err, 3)}"
              f"  bound {mpmath.nstr(r.error_bound, 3)}")

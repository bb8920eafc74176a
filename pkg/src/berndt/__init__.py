"""Certified high-precision evaluation of Berndt-type integrals, Ramanujan-type
hyperbolic series, Jacobi elliptic Maclaurin tables and Barnes multiple zeta
values, with exact Gamma(1/4)/pi closed forms."""

__version__ = "0.1.0"

from .mpcore import GammaPiExpr, Term, agm, expr_eval, gamma_quarter  # noqa: E402
from .elliptic import ellE, ellK, hyp2f1, modular_point  # noqa: E402
from .jacobi import PolyQ, SeriesU, jacobi_series, maclaurin_poly  # noqa: E402
from .hypseries import SeriesSpec, hyper_sum, verify_theta_identity, verify_transform  # noqa: E402
from .closedform import berndt_closed_form, berndt_coeffs, closed_series_half  # noqa: E402
from .quad import integrate_BI, integrate_mixed, verify_thm31  # noqa: E402
from .barnes import BarnesParams, barnes_via_laplace, barnes_zeta, verify_thm72  # noqa: E402

__all__ = [
    "GammaPiExpr", "Term", "agm", "expr_eval", "gamma_quarter",
    "ellE", "ellK", "hyp2f1", "modular_point",
    "PolyQ", "SeriesU", "jacobi_series", "maclaurin_poly",
    "SeriesSpec", "hyper_sum", "verify_theta_identity", "verify_transform",
    "berndt_closed_form", "berndt_coeffs", "closed_series_half",
    "integrate_BI", "integrate_mixed", "verify_thm31",
    "BarnesParams", "barnes_via_laplace", "barnes_zeta", "verify_thm72",
]

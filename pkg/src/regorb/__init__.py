"""regorb: regular orbits and base sizes of finite matrix groups.

Exact orbit and base computations for groups small enough to enumerate, and
sound inequality certificates (in exact integer arithmetic) for the regular
orbit question at any scale.
"""

__version__ = "0.1.0"

from .gfield import FieldSpec, FieldElement, Poly, make_field, factor_poly, mult_order, p_part_split  # noqa: F401

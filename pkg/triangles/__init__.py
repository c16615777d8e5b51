from triangles.prim import (
    PrimTriangle, DegenerateTriangle, NonPrimitiveTriangle,
    make_triangle, enumerate_primitive, partitions, primitive_scaling,
    hero_product, quartic_16_area_sq,
)
from triangles.kappa import kappa, search_by_kappa, WEITZENBOCK_MIN

__all__ = [
    "PrimTriangle", "DegenerateTriangle", "NonPrimitiveTriangle",
    "make_triangle", "enumerate_primitive", "partitions", "primitive_scaling",
    "hero_product", "quartic_16_area_sq",
    "kappa", "search_by_kappa", "WEITZENBOCK_MIN",
]

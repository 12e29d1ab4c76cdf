"""Exact lifts of Weyl groups into classical matrix groups.

Thin wrapper over the compiled extension: root data of the classical series,
verification suites run in exact cyclotomic arithmetic, and finite closures
of the named generator sets.
"""

try:
    from ._weylift import (  # noqa: F401
        cartan_matrix,
        catalog_names,
        closure_order,
        exp_quarter_turn,
        fundamental_group,
        inverse_cartan,
        root_count,
        root_datum_json,
        so3_lift,
        suite_names,
        theta_fixed_dimension,
        theta_fixed_weyl_order,
        verify,
        weyl_order,
    )
except ImportError:  # running against a build tree
    from _weylift import (  # noqa: F401
        cartan_matrix,
        catalog_names,
        closure_order,
        exp_quarter_turn,
        fundamental_group,
        inverse_cartan,
        root_count,
        root_datum_json,
        so3_lift,
        suite_names,
        theta_fixed_dimension,
        theta_fixed_weyl_order,
        verify,
        weyl_order,
    )

__all__ = [
    "cartan_matrix",
    "catalog_names",
    "closure_order",
    "exp_quarter_turn",
    "fundamental_group",
    "inverse_cartan",
    "root_count",
    "root_datum_json",
    "so3_lift",
    "suite_names",
    "theta_fixed_dimension",
    "theta_fixed_weyl_order",
    "verify",
    "weyl_order",
]

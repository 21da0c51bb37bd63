"""Cubical complexes, covering spaces and quaternion-group resolutions."""

from ._core import (
    abelianization,
    bar_resolution_homology,
    cayley_subquotient_matches,
    complex_json,
    cover_cell_counts,
    cover_is_tesseract,
    group_homology,
    hm_cell_counts,
    homology,
    homology_of_json,
    pi1_presents_quaternion_group,
    presents_quaternion_group,
    quaternion_names,
    quaternion_table,
    resolution_exactness_range,
    resolution_ranks,
    tesseract_cell_counts,
    todd_coxeter_order,
)

__all__ = [
    "abelianization",
    "bar_resolution_homology",
    "cayley_subquotient_matches",
    "complex_json",
    "cover_cell_counts",
    "cover_is_tesseract",
    "group_homology",
    "hm_cell_counts",
    "homology",
    "homology_of_json",
    "pi1_presents_quaternion_group",
    "presents_quaternion_group",
    "quaternion_names",
    "quaternion_table",
    "resolution_exactness_range",
    "resolution_ranks",
    "tesseract_cell_counts",
    "todd_coxeter_order",
]

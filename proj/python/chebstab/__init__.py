"""Chebyshev centres, Hausdorff/bottleneck metrics and stability campaigns."""

from ._chebstab import (
    CampaignConfig,
    CheckReport,
    InputError,
    Norm,
    box_dist_linf,
    box_hausdorff_linf,
    cheb_l2,
    cheb_linf,
    cheb_numeric_oracle,
    cheb_radius_linf,
    check_names,
    diameter,
    directed_hausdorff,
    dist,
    enclosing_balls_disjoint,
    farthest_dist,
    hausdorff,
    hausdorff_via_correspondence,
    midpoint,
    nnet_dist,
    nnet_dist_bruteforce,
    point_to_set_dist,
    run_check,
    run_cli,
)

__all__ = [
    "CampaignConfig",
    "CheckReport",
    "InputError",
    "Norm",
    "box_dist_linf",
    "box_hausdorff_linf",
    "cheb_l2",
    "cheb_linf",
    "cheb_numeric_oracle",
    "cheb_radius_linf",
    "check_names",
    "diameter",
    "directed_hausdorff",
    "dist",
    "enclosing_balls_disjoint",
    "farthest_dist",
    "hausdorff",
    "hausdorff_via_correspondence",
    "midpoint",
    "nnet_dist",
    "nnet_dist_bruteforce",
    "point_to_set_dist",
    "run_check",
    "run_cli",
]

"""Nef cones and Seshadri constants of projective bundles over surfaces.

All arithmetic is exact (:class:`fractions.Fraction`).  The modules are

``cones``
    polyhedral cones: double description, duality, redundancy removal;
``surfaces``
    catalogue surfaces with their intersection forms and curve cones;
``bundles``
    numerical vector bundles (decomposable, semistable with vanishing
    discriminant, or formal);
``nefcone``
    inequality systems for Nef(P(E)) and the dual curve generators;
``seshadri``
    Seshadri constants by closed form and by the cone route;
``cli``
    problem files in, reports out.
"""

from .bundles import (
    BundleModel,
    decomposable,
    deg_restriction,
    discriminant,
    formal,
    mu_min_restriction,
    pullback_blowup,
    pullback_ruling,
    semistable_delta0,
    slope_restriction,
    twist,
)
from .cones import (
    ConeH,
    ConeV,
    Halfspace,
    Ray,
    cones_equal,
    dual_of_rays,
    extremal_rays,
    halfspaces_of_rays,
    is_member,
    rays_of_dual,
    remove_redundant,
)
from .nefcone import CycleClass, DivisorClass, NefConeResult, nef_cone, nef_cone_decomposable, nef_cone_picard1, nef_cone_semistable, pair
from .seshadri import SeshadriResult, crosscheck, seshadri, seshadri_p2, seshadri_ruled, seshadri_sup_lambda
from .surfaces import NSClass, SurfaceModel, blow_up, intersect, projective_plane, ruled_surface

__all__ = [name for name in dir() if not name.startswith("_")]

"""Numerical braid monodromy of plane-curve covers."""
from .numerics import (
    DEFAULT_TOL, SEPARATION, Arc, ComplexPoint, PlaneCover, RootFindingError, Segment,
    TrackingError, polyline, polyroots, transport_fiber,
)
from .monodromy import (
    CERTIFIED, CUSP, HALF_TWIST, INCONCLUSIVE, NODE, OTHER, LoopSystem, LoopMonodromy,
    MonodromyData, SurjectivityCertificate, braid_monodromy, branch_points, classify_word,
    compose, free_reduce, invert_word, monodromy_of_cover, projection_cover,
    restrict_to_line_and_monodromy, sphere_return, surjectivity_certificate, word_permutation,
)

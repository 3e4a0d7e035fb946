"""Exception hierarchy for sphere-mirror calibration and stereo."""


class MirrorSphereError(Exception):
    """Base class for all library errors."""


# conic fitting / interrogation

class TooFewPoints(MirrorSphereError):
    """Fewer points than the fit requires."""


class DegenerateConfiguration(MirrorSphereError):
    """Points are collinear or do not determine an ellipse."""


class NotAnEllipse(MirrorSphereError):
    """Conic is not an ellipse (parabolic or hyperbolic)."""


class CircularAmbiguity(MirrorSphereError):
    """Axes are equal within tolerance, so the major axis is undefined."""


# sphere-center image estimation

class OutsideContour(MirrorSphereError):
    """Pixel that must lie on the mirror falls outside the contour."""


class CoincidentPoints(MirrorSphereError):
    """Two pixels expected to span a line coincide."""


class DegenerateLines(MirrorSphereError):
    """Line set is rank deficient (all parallel or coincident)."""


class ParallelLines(MirrorSphereError):
    """Two lines expected to intersect are parallel."""


# closed-form calibration

class CameraInsideSphere(MirrorSphereError):
    """Camera center is on or inside the mirror sphere (|B| <= 1)."""


class BehindCamera(MirrorSphereError):
    """3D point or direction has non-positive depth."""


class DegenerateCenterOnImageAxis(MirrorSphereError):
    """Sphere center lies on an image axis through the center image
    (b_x or b_y is zero), where the closed form divides by vanishing terms."""


class InfeasibleConic(MirrorSphereError):
    """Conic/center pair is not consistent with any sphere in front of
    the camera (a squared quantity came out negative beyond tolerance)."""


class CenterOutsideContour(MirrorSphereError):
    """Supplied sphere-center image does not lie inside the contour."""


# catadioptric stereo

class RayMissesSphere(MirrorSphereError):
    """Viewing ray does not intersect the mirror sphere."""


class ParallelRays(MirrorSphereError):
    """Direct and reflected rays are parallel; no triangulation."""


class BehindRay(MirrorSphereError):
    """Closest-approach point lies behind a ray origin."""


# synthetic-scene oracle

class NoVisibleReflection(MirrorSphereError):
    """World point has no mirror reflection visible from the camera."""


class DegenerateColinear(MirrorSphereError):
    """World point lies on the camera-to-sphere-center axis; the
    reflection point is not unique."""


# annotation / result files

class AnnotationError(MirrorSphereError):
    """Annotation, calibration or scene file fails to parse or violates
    its schema."""

from .groups import InternalInconsistency, h1, tate_minus1
from .profile import CohomologyProfile, ProfileEntry, h1_at, h1_profile, tate_minus1_at, tate_minus1_profile

__all__ = [
    "CohomologyProfile",
    "InternalInconsistency",
    "ProfileEntry",
    "h1",
    "h1_at",
    "h1_profile",
    "tate_minus1",
    "tate_minus1_at",
    "tate_minus1_profile",
]

import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", suppress_health_check=[HealthCheck.too_slow], deadline=None
)
settings.register_profile("dev", max_examples=25, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from quadgenus import disc_of_sqrt

settings.register_profile(
    "quadgenus",
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("quadgenus")

# fundamental discriminants (including the unit 1) of desk-friendly size
discriminants = st.integers(-600, 600).filter(bool).map(disc_of_sqrt)
field_discriminants = discriminants.filter(lambda d: d != 1)
nonzero = st.integers(-10**6, 10**6).filter(bool)

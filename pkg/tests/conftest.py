from hypothesis import HealthCheck, settings, strategies as st

from galrange.fields import parse_field_spec

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

QI = parse_field_spec("Q[sqrt=-1]")
Q5 = parse_field_spec("Q[sqrt=5]")
Q2 = parse_field_spec("Q[sqrt=2]")
F9 = parse_field_spec("F[3][sqrt=2]")
F25 = parse_field_spec("F[5]")
F49 = parse_field_spec("F[7]")
F16 = parse_field_spec("F[2^2][as=2]")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def finite_elements(L):
    elements = L.elements()
    return st.sampled_from(elements)


def rational_elements(L):
    return st.builds(lambda x, y: L(x, y), rationals, rationals)


def matrices(elements, n=2):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)

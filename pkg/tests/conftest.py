import math

from hypothesis import settings, strategies as st

from mckibben.geometry import BraidSpec

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

# self-consistent individual actuator
L_IND = 0.145
D_IND = 0.017
N_IND = 16.0
B_IND = math.hypot(L_IND, D_IND * math.pi * N_IND)
THETA_IND = math.atan2(D_IND * math.pi * N_IND, L_IND)
# full-precision reference values
B_FULL = 0.866728223
THETA_FULL = math.radians(80.3693712115)

REF_BRAID = BraidSpec(B_IND, N_IND)

braids = st.builds(
    BraidSpec,
    b=st.floats(0.01, 10.0),
    N=st.floats(0.5, 200.0),
)
angles = st.floats(math.radians(1.0), math.radians(89.0))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

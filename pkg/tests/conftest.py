from hypothesis import strategies as st

from infgon import Arc


def admissible_arcs(n: int, lo: int = -60, hi: int = 60, max_steps: int = 12):
    """Strategy for admissible arcs for modulus n with left endpoint in [lo, hi]."""
    d0 = 2 if n == 1 else n + 1
    return st.builds(
        lambda t, j: Arc(t, t + d0 + j * n),
        st.integers(lo, hi),
        st.integers(0, max_steps),
    )

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from gdaha.arith import I, ONE, u, x, x0, x1

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

VARS = (u, x, x0, x1)


@st.composite
def polys(draw, max_terms=3):
    out = ONE * 0
    for _ in range(draw(st.integers(1, max_terms))):
        c = draw(st.integers(-3, 3)) + draw(st.integers(-2, 2)) * I
        m = ONE
        for v in VARS:
            m = m * v ** draw(st.integers(0, 2))
        out = out + c * m
    return out


@st.composite
def ratfuncs(draw):
    num = draw(polys())
    den = draw(polys(2))
    if den.is_zero():
        den = ONE
    return num / den


@st.composite
def laurent(draw):
    """Symmetric-free Laurent polynomial in x with coefficients in x0, x1, u."""
    out = ONE * 0
    for _ in range(draw(st.integers(1, 3))):
        out = out + draw(polys(1)) * x ** draw(st.integers(-2, 2))
    return out


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, from the `criterion` user property."""
    rows = []
    for outcome in ("passed", "failed", "xfailed", "xpassed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when in ("call", "setup"):
                ok = outcome == "passed"
                rows.append((props["criterion"], "PASS" if ok else "FAIL", props.get("detail", "")))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, detail in sorted(rows):
        terminalreporter.write_line(f"{verdict}  {name}" + (f"  ({detail})" if detail else ""))

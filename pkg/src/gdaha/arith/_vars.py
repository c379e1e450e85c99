"""Variable layout shared by both polynomial kernels.

Exponent vectors are stored most-significant variable first, so that the
graded-lex order ``u < x < x0 < x1 < t0 < t1 < t2 < t3`` coincides with
plain tuple comparison after the total degree.
"""

# storage order (most significant first)
STORAGE = ("t3", "t2", "t1", "t0", "x1", "x0", "x", "u")
NVARS = len(STORAGE)
INDEX = {name: i for i, name in enumerate(STORAGE)}

# order used when printing a monomial
DISPLAY = ("u", "x", "x0", "x1", "t0", "t1", "t2", "t3")

U = INDEX["u"]
X = INDEX["x"]
X0 = INDEX["x0"]
X1 = INDEX["x1"]
PARAMS = tuple(INDEX[t] for t in ("t0", "t1", "t2", "t3"))


def grlex_key(exps):
    return (sum(exps), exps)

"""Pure-Python versions of the loops in ``_native.pyx``."""

NAME = "python"


def remap(parts, iu, ix, ix0, ix1, ux, u0, u1, flip):
    mapped = []
    lo_u = lo_x = None
    for t in parts:
        m = {}
        for key, c in t.items():
            ex = list(key)
            ex[iu] += ux * ex[ix] + u0 * ex[ix0] + u1 * ex[ix1]
            if flip:
                ex[ix] = -ex[ix]
            m[tuple(ex)] = c
            if lo_u is None:
                lo_u, lo_x = ex[iu], ex[ix]
            else:
                lo_u = min(lo_u, ex[iu])
                lo_x = min(lo_x, ex[ix])
        mapped.append(m)
    if not lo_u and not lo_x:
        return mapped
    out = []
    for m in mapped:
        n = {}
        for key, c in m.items():
            ex = list(key)
            ex[iu] -= lo_u
            ex[ix] -= lo_x
            n[tuple(ex)] = c
        out.append(n)
    return out


def eval_terms(terms, point, prime):
    s = 0
    for ex, (num, den) in terms.items():
        v = num * pow(den, -1, prime)
        for i, k in enumerate(ex):
            if k:
                v = v * pow(point[i], k, prime) % prime
        s += v
    return s % prime

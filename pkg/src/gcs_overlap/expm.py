"""Truncated-Taylor matrix exponentials with explicit remainder bounds.

Both routines split ``A`` into pieces of norm at most ``theta`` and pick the
Taylor degree ``m`` so that the Lagrange remainder of one piece,
``theta**(m+1) / (m+1)! * exp(theta)``, is below ``tol``.
"""

import math

import numpy as np

__all__ = ["expm", "expm_action", "taylor_degree"]


def taylor_degree(theta, tol=2.0 ** -53):
    """Smallest m with ``theta**(m+1)/(m+1)! * e**theta <= tol``."""
    if theta == 0:
        return 0
    m, bound = 0, theta * math.exp(theta)
    while bound > tol:
        m += 1
        bound *= theta / (m + 1)
    return m


def expm(a, tol=2.0 ** -53):
    """``exp(a)`` by scaling and squaring a truncated Taylor series.

    The matrix is scaled by ``2**-s`` so that its 1-norm is at most 1/2, the
    Taylor polynomial of degree :func:`taylor_degree` is evaluated by Horner's
    rule, and the result is squared ``s`` times.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expm needs a square matrix")
    norm = np.linalg.norm(a, 1)
    s = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    b = a / 2.0 ** s
    m = taylor_degree(norm / 2.0 ** s, tol)
    eye = np.eye(a.shape[0], dtype=np.result_type(a, float))
    out = eye.copy()
    for i in range(m, 0, -1):
        out = eye + (b @ out) / i
    for _ in range(s):
        out = out @ out
    return out


def expm_action(a, v, tol=2.0 ** -53):
    """``exp(a) @ v`` without forming ``exp(a)``.

    ``a`` is split into ``s = ceil(||a||_1)`` equal steps of norm at most 1;
    each step applies the degree-``m`` Taylor polynomial to the vector.
    """
    a = np.asarray(a)
    v = np.asarray(v, dtype=np.result_type(a, v, float))
    norm = np.linalg.norm(a, 1)
    if norm == 0:
        return v.copy()
    s = max(1, math.ceil(norm))
    b = a / s
    m = taylor_degree(norm / s, tol)
    for _ in range(s):
        term, acc = v, v
        for i in range(1, m + 1):
            term = (b @ term) / i
            acc = acc + term
        v = acc
    return v

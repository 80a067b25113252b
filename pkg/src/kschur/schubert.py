"""Pieri rules, homology structure constants, and the quantum Monk side.

The homology product xi_mu xi_lam is computed through the symmetric
function realization: k-Schur functions at t=1 in the homogeneous
basis multiply by concatenation, and the dual basis reads coefficients
back off.  The weak (cyclically decreasing) and horizontal strong
strip Pieri rules are implemented independently and must agree.

On the finite side, sh maps a permutation of S_n to a partition with
parts < n; the quantum Monk formula and the identification of
Gromov-Witten invariants with structure constants c^eta give the
cross-validation targets for the affine Monk and rectangle-Pieri
conjecture checkers.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .affine import cyclically_decreasing_of_length
from .cores import (
    NCore,
    c_inverse,
    c_map,
    conjugate,
    core_of,
    normalize,
    rect,
    rect_translation,
    strong_covers_down,
    union,
    w_core,
)
from .strips import (
    horizontal_strong_strips_from,
    marked_strong_covers,
    marked_tail_strips,
    ribbon_strong_strips,
)
from .symfun import bounded_partitions_of, kn1_matrix, kschur_to_h, _index


# -- affine Pieri rules ---------------------------------------------------


def weak_pieri(m: int, lam: NCore) -> dict:
    """xi_{c_{0,m}} xi_lam via cyclically decreasing left factors."""
    n = lam.n
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}")
    w = w_core(lam)
    target = w.length() + m
    out = {}
    for _word, v in cyclically_decreasing_of_length(n, m):
        u = v * w
        if u.length() == target and u.is_grassmannian():
            gamma = core_of(u)
            if gamma in out:
                raise AssertionError("weak Pieri term repeated")
            out[gamma] = 1
    return out


def horizontal_pieri(m: int, lam: NCore) -> dict:
    """The same product as a sum over horizontal strong (n-1-m)-strips."""
    n = lam.n
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}")
    return {s.nu: 1 for s in horizontal_strong_strips_from(lam, n - 1 - m)}


def strong_pieri_cohomology(m: int, lam: NCore) -> dict:
    """xi^{c_{0,m}} xi^lam: multiplicity = number of strong m-strips."""
    n = lam.n
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}")
    out = {}

    def walk(cur, floor_content, steps):
        if steps == m:
            out[cur] = out.get(cur, 0) + 1
            return
        for nxt, c in marked_strong_covers(cur):
            if floor_content is None or c > floor_content:
                walk(nxt, c, steps + 1)

    walk(lam, None, 0)
    return out


# -- homology structure constants -----------------------------------------


@lru_cache(maxsize=None)
def _kschur_h_row(n: int, bounded) -> dict:
    d = sum(bounded)
    Pn = bounded_partitions_of(d, n)
    row = kschur_to_h(n, d)[_index(Pn)[bounded]]
    return {mu: c for mu, c in zip(Pn, row) if not c.is_zero()}


@lru_cache(maxsize=None)
def _structure_constants(n: int, mu_b, lam_b) -> tuple:
    D = sum(mu_b) + sum(lam_b)
    prod: dict = {}
    for a, ca in _kschur_h_row(n, mu_b).items():
        for b, cb in _kschur_h_row(n, lam_b).items():
            key = union(a, b)
            prod[key] = prod.get(key, 0) + ca(1) * cb(1)
    PnD = bounded_partitions_of(D, n)
    idx = _index(PnD)
    kn1 = kn1_matrix(n, D)
    out = []
    for nu in PnD:
        row = kn1[idx[nu]]
        c = sum(row[idx[alpha]](1) * v for alpha, v in prod.items())
        if c:
            out.append((nu, c))
    return tuple(out)


def homology_structure_constants(mu: NCore, lam: NCore) -> dict:
    """Coefficients c^nu in xi_mu xi_lam = sum c^nu xi_nu (cores as keys)."""
    if mu.n != lam.n:
        raise ValueError("mismatched moduli")
    n = mu.n
    return {
        c_map(nu, n): c
        for nu, c in _structure_constants(n, c_inverse(mu), c_inverse(lam))
    }


# -- finite permutations and the sh map ------------------------------------


def check_permutation(w):
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")


def perm_length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_mult(u, v):
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def w0(n: int):
    return tuple(range(n, 0, -1))


def tau_fin(a: int, b: int, n: int):
    """The transposition of S_n swapping a and b, one-line notation."""
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = b, a
    return tuple(w)


def inv_vector(u):
    n = len(u)
    return [sum(1 for j in range(i + 1, n) if u[j] < u[i]) for i in range(n)]


def sh_map(w) -> tuple:
    """The partition of the Schubert index: columns C(n-i,2)+inv_i(w0 w)."""
    check_permutation(w)
    n = len(w)
    u = perm_mult(w0(n), w)
    inv = inv_vector(u)
    cols = [comb(n - i, 2) + inv[i - 1] for i in range(1, n + 1)]
    return conjugate(normalize(cols))


def box_shape(n: int) -> tuple:
    """The staircase-union shape (n-1, (n-2)^2, ..., 1^{n-1})."""
    parts = []
    for r in range(n - 1, 0, -1):
        parts.extend([r] * (n - r))
    return tuple(parts)


def in_box_family(lam, n: int) -> bool:
    """lam lies in P^n_box: box/lam is a vertical strip."""
    box = box_shape(n)
    lam = tuple(lam) + (0,) * (len(box) - len(lam))
    if len(lam) > len(box):
        return False
    return all(0 <= b - a <= 1 for a, b in zip(lam, box))


# -- quantum Monk -----------------------------------------------------------


def quantum_monk(r: int, w):
    """Terms of sigma_{s_r} * sigma_w as (permutation, d-vector) pairs.

    Classical terms carry the zero vector; the quantum term for
    tau_{c,d} carries ones in slots c..d-1 (the monomial q_c...q_{d-1}).
    """
    check_permutation(w)
    n = len(w)
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}")
    lw = perm_length(w)
    terms = []
    for a in range(1, r + 1):
        for b in range(r + 1, n + 1):
            wt = perm_mult(w, tau_fin(a, b, n))
            if perm_length(wt) == lw + 1:
                terms.append((wt, (0,) * (n - 1)))
            if perm_length(wt) == lw - 2 * (b - a) + 1:
                d = tuple(1 if a <= i < b else 0 for i in range(1, n))
                terms.append((wt, d))
    return sorted(terms)


#: counts calls where the eta column data was not a partition and the
#: 0-convention applied (the identification presupposes validity)
eta_invalid_count = 0


def gw_invariant(u, v, w, d) -> int:
    """The 3-point Gromov-Witten invariant <u, v, w>_d of the flag manifold.

    Realized as the structure constant c^eta_{sh(u), sh(v)}, where eta
    is built from sh(w0 w) by adding
        C(n+1-i, 2) - (n-i+1) d_i + (n-i) d_{i-1}
    cells to column i.  Invalid column data returns 0 (and is counted
    in eta_invalid_count).
    """
    global eta_invalid_count
    n = len(u)
    if len(v) != n or len(w) != n:
        raise ValueError("permutations must share n")
    for perm in (u, v, w):
        check_permutation(perm)
    d = tuple(d)
    if len(d) != n - 1 or any(x < 0 for x in d):
        raise ValueError("d must have n-1 nonnegative entries")
    out_perm = perm_mult(w0(n), w)
    base = conjugate(sh_map(out_perm))
    base = tuple(base) + (0,) * (n - 1 - len(base))
    cols = []
    for i in range(1, n):
        di = d[i - 1]
        dprev = d[i - 2] if i >= 2 else 0
        cols.append(base[i - 1] + comb(n + 1 - i, 2) - (n - i + 1) * di + (n - i) * dprev)
    if any(c < 0 for c in cols) or any(
        cols[i] < cols[i + 1] for i in range(len(cols) - 1)
    ):
        eta_invalid_count += 1
        return 0
    eta = conjugate(normalize(cols))
    sh_u, sh_v = sh_map(u), sh_map(v)
    if sum(eta) != sum(sh_u) + sum(sh_v):
        return 0
    constants = _structure_constants(n, sh_u, sh_v)
    return dict(constants).get(eta, 0)


# -- conjecture checkers -----------------------------------------------------


def _pad(parts, length):
    return tuple(parts) + (0,) * (length - len(parts))


def monk_cover_terms(r: int, lam, n: int):
    """Covers of R(r, lam) dropping a row where lam union R_r has length r."""
    core = c_map(lam, n)
    top = rect_translation(core, r)
    eta = union(lam, rect(r, n))
    rows = {i for i, p in enumerate(eta, start=1) if p == r}
    out = []
    for mu, _ribbons, _tau in strong_covers_down(top):
        mu_p = _pad(mu.parts, len(top.parts))
        if any(mu_p[i - 1] < top.parts[i - 1] for i in rows):
            out.append(c_inverse(mu))
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def _all_perms(n: int):
    from itertools import permutations

    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def sh_preimage(lam, n: int):
    """The permutation with sh(w) = lam, or None outside the image."""
    for w in _all_perms(n):
        if sh_map(w) == lam:
            return w
    return None


def _eta_of_monk_term(term_perm, d):
    """eta of the invariant attached to the quantum Monk term sigma_term q^d."""
    n = len(term_perm)
    base = _pad(conjugate(sh_map(term_perm)), n - 1)
    cols = []
    for i in range(1, n):
        di = d[i - 1]
        dprev = d[i - 2] if i >= 2 else 0
        cols.append(base[i - 1] + comb(n + 1 - i, 2) - (n - i + 1) * di + (n - i) * dprev)
    if any(c < 0 for c in cols) or any(
        cols[i] < cols[i + 1] for i in range(len(cols) - 1)
    ):
        return None
    return conjugate(normalize(cols))


def q_monomials_via_sh(r: int, lam, n: int):
    """dict nu -> d-vectors of the quantum Monk terms matching xi_nu.

    Only defined when lam = sh(w) for some w in S_n; each quantum Monk
    term sigma_{w tau} q^d names eta = nu union (all rectangles except
    R_r), and peeling the rectangles recovers the affine term nu.
    Multiple or missing d-vectors are reported as found.
    """
    lam = normalize(lam)
    w = sh_preimage(lam, n)
    if w is None:
        return None
    rects = [rect(rr, n) for rr in range(1, n) if rr != r]
    out: dict = {}
    for term, d in quantum_monk(r, w):
        eta = _eta_of_monk_term(term, d)
        if eta is None:
            continue
        peeled = list(eta)
        ok = True
        for rr in rects:
            for part in rr:
                if part in peeled:
                    peeled.remove(part)
                else:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.setdefault(normalize(peeled), []).append(d)
    return out


def affine_monk_check(r: int, lam, n: int) -> dict:
    """Both sides of the affine Monk conjecture for xi_{R'_r} xi_lam."""
    lam = normalize(lam)
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}")
    rp = normalize((r,) * (n - r - 1) + (r - 1,))
    lhs = sorted(
        ((c_inverse(nu), c) for nu, c in homology_structure_constants(
            c_map(rp, n), c_map(lam, n)).items()),
        reverse=True,
    )
    rhs = monk_cover_terms(r, lam, n)
    match = [p for p, c in lhs if c == 1] == rhs and all(c == 1 for _, c in lhs)
    return {
        "conjecture": "affine-monk",
        "n": n,
        "r": r,
        "lambda": list(lam),
        "match": match,
        "lhs": [[list(p), c] for p, c in lhs],
        "rhs": [list(p) for p in rhs],
    }


def rect_pieri_check(r: int, b: int, lam, n: int) -> dict:
    """xi_{(r^{n-1-r}, r-b)} xi_lam against ribbon strong strips."""
    lam = normalize(lam)
    if not 1 <= b < r < n:
        raise ValueError(f"need 1 <= b < r < n, got r={r}, b={b}")
    mu = normalize((r,) * (n - 1 - r) + (r - b,))
    core = c_map(lam, n)
    lhs = sorted(
        ((c_inverse(nu), c) for nu, c in homology_structure_constants(
            c_map(mu, n), core).items()),
        reverse=True,
    )
    strips = ribbon_strong_strips(core, r, b)
    rhs = sorted((c_inverse(s.nu) for s in strips), reverse=True)
    tail_reading = sorted((c_inverse(c) for c in marked_tail_strips(core, r, b)), reverse=True)
    match = [p for p, c in lhs if c == 1] == rhs and all(c == 1 for _, c in lhs)
    return {
        "conjecture": "rect-pieri",
        "n": n,
        "r": r,
        "b": b,
        "lambda": list(lam),
        "match": match,
        "lhs": [[list(p), c] for p, c in lhs],
        "rhs": [list(p) for p in rhs],
        "strong_strip_reading": [list(p) for p in tail_reading],
        "readings_agree": rhs == tail_reading,
    }

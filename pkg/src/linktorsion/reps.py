"""Constant matrix representations of link groups: build, validate,
search, transport along component deletion, and file I/O.

A representation assigns an invertible n x n matrix over an exact ring
to each Wirtinger generator so that every crossing relator multiplies
out to the identity.  Deleting a component of a link kills its meridian,
so a representation of the sublink group pulls back to the full link
group by sending every generator of the deleted component to the
identity matrix and transporting the rest along the arc map.
"""

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Ring, mat_coerce, mat_det, mat_identity, mat_inv, mat_is_identity, mat_mul)
from .diagram import longitude_word, wirtinger

__all__ = [
    "Representation", "InducedPair", "validate", "trivial_rep", "induce",
    "longitude_image", "search_reps", "is_nonabelian", "rep_to_json",
    "rep_from_json", "load_rep", "save_rep",
]


class Representation:
    """Images of the generators of one presentation, with cached determinants."""

    __slots__ = ("ring", "n", "images", "det_units")

    def __init__(self, ring, n, images):
        self.ring = ring
        self.n = n
        coerced = []
        for g, m in enumerate(images):
            cm = mat_coerce(ring, m)
            if len(cm) != n or any(len(row) != n for row in cm):
                raise ValueError("image of generator %d is not %dx%d" % (g, n, n))
            coerced.append(cm)
        self.images = tuple(coerced)
        self.det_units = tuple(mat_det(ring, m) for m in self.images)

    @property
    def num_generators(self):
        return len(self.images)

    @property
    def is_special_linear(self):
        return all(d == self.ring.one for d in self.det_units)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.ring == other.ring
                and self.n == other.n and self.images == other.images)

    def __repr__(self):
        return "<Representation n=%d over %r on %d generators>" % (
            self.n, self.ring, len(self.images))


def _char_coeffs(ring, m):
    """Trace, det, and (for 3x3) the middle characteristic coefficient.

    Equal coefficients are a necessary condition for two matrices to be
    conjugate; Wirtinger generators of one component must satisfy it.
    """
    n = len(m)
    tr = ring.zero
    for i in range(n):
        tr = ring.add(tr, m[i][i])
    coeffs = [tr, mat_det(ring, m)]
    if n == 3:
        mid = ring.zero
        for i in range(3):
            for j in range(i + 1, 3):
                minor = ring.sub(ring.mul(m[i][i], m[j][j]),
                                 ring.mul(m[i][j], m[j][i]))
                mid = ring.add(mid, minor)
        coeffs.append(mid)
    return tuple(coeffs)


def validate(rep, pres):
    """Check a representation against a presentation.

    Returns an empty list when everything holds, otherwise a list of
    human-readable violations: non-square/singular images, relators that
    do not multiply out to the identity, and generators of one component
    whose characteristic coefficients disagree (they must be conjugate).
    """
    if rep.num_generators != pres.num_generators:
        raise ValueError("representation has %d images for %d generators"
                         % (rep.num_generators, pres.num_generators))
    ring = rep.ring
    bad = []
    for g, d in enumerate(rep.det_units):
        if not ring.is_unit(d):
            bad.append("image of generator %d has non-unit determinant %s"
                       % (g, ring.render(d)))
    if bad:
        return bad
    inverses = [mat_inv(ring, m) for m in rep.images]
    for i, rel in enumerate(pres.relators):
        acc = mat_identity(ring, rep.n)
        for g, e in rel:
            step = rep.images[g] if e > 0 else inverses[g]
            for _ in range(abs(e)):
                acc = mat_mul(ring, acc, step)
        if not mat_is_identity(ring, acc):
            bad.append("relator %d does not map to the identity" % i)
    by_comp = {}
    for g, c in enumerate(pres.component_of):
        by_comp.setdefault(c, []).append(g)
    for c, gens in by_comp.items():
        coeffs = {_char_coeffs(ring, rep.images[g]) for g in gens}
        if len(coeffs) > 1:
            bad.append("generators of component %d are not conjugate" % c)
    return bad


def trivial_rep(pres, ring):
    """The 1-dimensional representation sending every generator to 1."""
    return Representation(ring, 1, [((ring.one,),)] * pres.num_generators)


@dataclass(frozen=True)
class InducedPair:
    """A sublink representation together with its pullback to the full link."""
    rho_L: Representation
    rho_Lp: Representation
    deletion: object  # DeletionResult


def induce(pres_L, deletion, rho_Lp):
    """Pull a sublink representation back to the full link group.

    Generators on the deleted component map to the identity (their
    meridian dies in the sublink group); all others transport along
    `deletion.arc_map`.  The result must validate on the full
    presentation — a failure here is a bug, not bad input.
    """
    pres_Lp = wirtinger(deletion.sub_diagram)
    bad = validate(rho_Lp, pres_Lp)
    if bad:
        raise ValueError("sublink representation invalid: " + "; ".join(bad))
    ring, n = rho_Lp.ring, rho_Lp.n
    ident = mat_identity(ring, n)
    images = []
    for g in range(pres_L.num_generators):
        if pres_L.component_of[g] == deletion.removed:
            images.append(ident)
        else:
            images.append(rho_Lp.images[deletion.arc_map[g]])
    rho_L = Representation(ring, n, images)
    bad = validate(rho_L, pres_L)
    assert not bad, "induced representation failed validation: %s" % "; ".join(bad)
    return InducedPair(rho_L=rho_L, rho_Lp=rho_Lp, deletion=deletion)


def longitude_image(pair, d, comp):
    """The constant matrix image of the longitude of component `comp`.

    Evaluates the uncorrected longitude word through the pulled-back
    representation.  Framing letters are meridians of `comp` itself and
    map to the identity, so the framing convention cannot matter.
    """
    ring, n = pair.rho_L.ring, pair.rho_L.n
    acc = mat_identity(ring, n)
    for g, e in longitude_word(d, comp):
        step = pair.rho_L.images[g] if e > 0 else mat_inv(ring, pair.rho_L.images[g])
        for _ in range(abs(e)):
            acc = mat_mul(ring, acc, step)
    return acc


def is_nonabelian(rep):
    """True if some pair of generator images fails to commute."""
    for a, b in itertools.combinations(set(rep.images), 2):
        if mat_mul(rep.ring, a, b) != mat_mul(rep.ring, b, a):
            return True
    return False


def _candidate_pool(ring, n, special_linear):
    """All invertible n x n matrices over F_p in lexicographic entry order."""
    out = []
    for flat in itertools.product(range(ring.p), repeat=n * n):
        m = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        d = mat_det(ring, m)
        if d == 0:
            continue
        if special_linear and d != ring.one:
            continue
        out.append(m)
    return out


def search_reps(pres, n, ring, kill_component=None, nonabelian=False,
                special_linear=False, limit=None):
    """Enumerate representations over a prime field by backtracking.

    Branches on the smallest unassigned generator (candidates in
    lexicographic order) and propagates through crossing relators:
    v = o^s u o^{-s} determines either endpoint of an underpass once the
    over-arc is known.  `kill_component` forces the identity on every
    generator of that component.  Enumeration order is deterministic;
    every result passes `validate`.
    """
    if ring.kind != "Fp":
        raise ValueError("representation search requires a prime field")
    if n not in (1, 2, 3):
        raise ValueError("representation search supports n in {1, 2, 3}")
    if kill_component is not None and not 0 <= kill_component < pres.num_components:
        raise ValueError("component index %r out of range" % (kill_component,))
    pool = _candidate_pool(ring, n, special_linear)
    ident = mat_identity(ring, n)
    num = pres.num_generators
    # relator ((v,1),(o,s),(u,-1),(o,-s)) pinned by the Wirtinger builder
    triples = []
    for rel in pres.relators:
        (v, _), (o, s), (u, _), _ = rel
        triples.append((v, o, s, u))

    def propagate(images):
        """Fill in forced generators; return False on contradiction."""
        changed = True
        while changed:
            changed = False
            for v, o, s, u in triples:
                ov = images.get(o)
                if ov is None:
                    continue
                conj = ov if s > 0 else mat_inv(ring, ov)
                conj_inv = mat_inv(ring, conj)
                uv, vv = images.get(u), images.get(v)
                if uv is not None:
                    want = mat_mul(ring, mat_mul(ring, conj, uv), conj_inv)
                    if vv is None:
                        images[v] = want
                        changed = True
                    elif vv != want:
                        return False
                elif vv is not None:
                    images[u] = mat_mul(ring, mat_mul(ring, conj_inv, vv), conj)
                    changed = True
        return True

    results = []

    def extend(images):
        if limit is not None and len(results) >= limit:
            return
        images = dict(images)
        if not propagate(images):
            return
        todo = [g for g in range(num) if g not in images]
        if not todo:
            rep = Representation(ring, n, [images[g] for g in range(num)])
            if nonabelian and not is_nonabelian(rep):
                return
            bad = validate(rep, pres)
            assert not bad, "search produced an invalid representation: %s" % bad
            results.append(rep)
            return
        g = todo[0]
        for m in pool:
            if limit is not None and len(results) >= limit:
                return
            child = dict(images)
            child[g] = m
            extend(child)

    seed = {}
    if kill_component is not None:
        for g in range(num):
            if pres.component_of[g] == kill_component:
                seed[g] = ident
    extend(seed)
    return results


# ---------------------------------------------------------------------------
# file format: JSON {ring, p?, n, images: {"<generator>": [[...], ...]}}
# entries are integers over Z and F_p, [numerator, denominator] pairs over Q


def _entry_to_json(ring, x):
    if ring.kind == "Q":
        f = Fraction(x)
        return [f.numerator, f.denominator]
    return int(x)


def _entry_from_json(ring, x):
    if ring.kind == "Q":
        if isinstance(x, list):
            if len(x) != 2:
                raise ValueError("rational entries are [numerator, denominator]")
            return Fraction(int(x[0]), int(x[1]))
        return Fraction(int(x))
    if not isinstance(x, int):
        raise ValueError("matrix entries over %r must be integers" % (ring,))
    return x


def ring_name(ring):
    return "F%d" % ring.p if ring.kind == "Fp" else ring.kind


def ring_from_name(name, p=None):
    """Parse a ring selector: 'Z', 'Q', or 'F<p>' (or 'Fp' + explicit p)."""
    if name == "Z":
        return Ring("Z")
    if name == "Q":
        return Ring("Q")
    if name == "Fp" and p is not None:
        return Ring("Fp", int(p))
    if name.startswith("F") and name[1:].isdigit():
        return Ring("Fp", int(name[1:]))
    raise ValueError("unknown ring %r (use Z, Q, or F<p>)" % (name,))


def rep_to_json(rep):
    obj = {"ring": ring_name(rep.ring), "n": rep.n, "images": {}}
    if rep.ring.kind == "Fp":
        obj["p"] = rep.ring.p
    for g, m in enumerate(rep.images):
        obj["images"][str(g)] = [[_entry_to_json(rep.ring, x) for x in row]
                                 for row in m]
    return obj


def rep_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("representation file must hold a JSON object")
    for key in ("ring", "n", "images"):
        if key not in obj:
            raise ValueError("representation file is missing %r" % key)
    ring = ring_from_name(obj["ring"], obj.get("p"))
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("matrix size must be a positive integer")
    images_obj = obj["images"]
    if not isinstance(images_obj, dict) or not images_obj:
        raise ValueError("images must be a non-empty object")
    try:
        labels = sorted(int(k) for k in images_obj)
    except ValueError:
        raise ValueError("generator labels must be integers")
    if labels != list(range(len(labels))):
        raise ValueError("generator labels must be 0..%d" % (len(labels) - 1))
    images = []
    for g in labels:
        rows = images_obj[str(g)]
        if (not isinstance(rows, list) or len(rows) != n
                or any(not isinstance(r, list) or len(r) != n for r in rows)):
            raise ValueError("image of generator %d is not an %dx%d matrix"
                             % (g, n, n))
        images.append(tuple(tuple(_entry_from_json(ring, x) for x in row)
                            for row in rows))
    return Representation(ring, n, images)


def save_rep(path, rep):
    with open(path, "w") as fh:
        json.dump(rep_to_json(rep), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_rep(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError("invalid JSON in %s: %s" % (path, e))
    return rep_from_json(obj)

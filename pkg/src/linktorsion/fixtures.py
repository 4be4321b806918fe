"""The bundled link corpus: several diagrams per link plus tabulated data.

Each fixture carries two genuinely different diagrams of the same link
(a braid closure and an alternate: a rotated braid word, a Markov
stabilization, or a hand-written PD code) together with its component
count and the full table of pairwise linking numbers.  The tabulated
numbers are independent reference data; linking_number() is checked
against them rather than the other way round.
"""

from .diagram import braid_to_pd, orient_and_sign, parse_pd


class LinkFixture:
    def __init__(self, name, pd_text, alt_pd_text, components, linking):
        self.name = name
        self.pd_text = pd_text
        self.alt_pd_text = alt_pd_text
        self.components = components
        self.linking = dict(linking)  # {(i, j): lk} for i < j, 0-based

    def diagram(self):
        return orient_and_sign(parse_pd(self.pd_text))

    def alt_diagram(self):
        return orient_and_sign(parse_pd(self.alt_pd_text))

    def lk(self, i, j):
        return self.linking[(min(i, j), max(i, j))]

    def __repr__(self):
        return "<LinkFixture %s>" % self.name


def _pd(word, strands):
    return str(braid_to_pd(word, strands))


CORPUS = [
    # 2-component unknotted circles with one clasp, lk = 1
    LinkFixture("hopf", _pd([1, 1], 2), "X[1,3,2,4] X[3,1,4,2]",
                2, {(0, 1): 1}),
    # (2,4) torus link: two circles with lk = 2
    LinkFixture("t24", _pd([1, 1, 1, 1], 2), _pd([1, 1, 1, 1, 2], 3),
                2, {(0, 1): 2}),
    # clasped pair with lk 0 (5 crossings)
    LinkFixture("whitehead", _pd([1, -2, 1, -2, 1], 3), _pd([-2, 1, -2, 1, 1], 3),
                2, {(0, 1): 0}),
    # three circles, pairwise unlinked but collectively linked
    LinkFixture("borromean", _pd([1, -2, 1, -2, 1, -2], 3),
                _pd([-2, 1, -2, 1, -2, 1], 3),
                3, {(0, 1): 0, (0, 2): 0, (1, 2): 0}),
    # split union: trefoil next to a crossingless circle
    LinkFixture("trefoil_circle", _pd([1, 1, 1], 3), _pd([1, 1, 1, 3], 4),
                2, {(0, 1): 0}),
    # 3-chain: middle circle clasps both neighbours
    LinkFixture("chain", _pd([1, 1, 2, 2], 3), _pd([2, 2, 1, 1], 3),
                3, {(0, 1): 1, (0, 2): 0, (1, 2): 1}),
    # trefoil with a meridian circle around one strand, lk = 1: deleting
    # the circle leaves a knotted sublink with nonabelian representations
    LinkFixture("trefoil_meridian", _pd([1, 1, 1, 2, 2], 3),
                _pd([1, 1, 2, 2, 1], 3),
                2, {(0, 1): 1}),
    # clasped pair plus a split circle (sublink torsion vanishes)
    LinkFixture("hopf_circle", _pd([1, 1], 3), _pd([1, 1, 3], 4),
                3, {(0, 1): 1, (0, 2): 0, (1, 2): 0}),
]


def get(name):
    for f in CORPUS:
        if f.name == name:
            return f
    raise KeyError(name)


def batch_table():
    """The corpus as records for the JSON batch format."""
    return [{"name": f.name, "pd": f.pd_text, "components": f.components}
            for f in CORPUS]

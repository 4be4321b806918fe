"""Link diagrams: PD codes, braid closures, Wirtinger data, longitudes.

Conventions (one consistent choice, pinned here and relied on everywhere):

* A PD crossing X[a,b,c,d] lists the four edge labels counterclockwise
  starting at the incoming under-edge, so the under-strand runs a -> c.
  Edge labels along each link component are consecutive integers in a
  contiguous cyclic run (the successor of the highest label wraps to the
  lowest), increasing in the direction of orientation.
* A crossing is positive when the over-strand runs d -> b (under-strand
  pointing "north", over-strand pointing "east" on top), negative when
  it runs b -> d.
* "Arcs" are Wirtinger arcs: maximal runs of edges joined across
  overpasses, cut at each underpass.  One group generator per arc.
* The Wirtinger relator at a crossing with over-arc o, incoming
  under-arc u, outgoing under-arc v and sign s is  v * (o^s u o^-s)^-1,
  spelled as the 4-letter word v o^s u^-1 o^-s.
* The longitude of a component, read from a starting arc (lowest arc id
  by default), appends (over-arc)^sign at each underpass; the framed
  variant appends meridian^-w, w the component's self-writhe, making the
  abelianization miss the component's own variable entirely.
* O[k] declares a crossingless circle with edge label k.  The empty PD
  text is the 0-crossing unknot.

Group words are plain tuples of (generator index, +-1) letters; no free
reduction is ever performed implicitly.
"""

import re
from collections import namedtuple

Crossing = namedtuple("Crossing", ["over", "under_in", "under_out", "sign"])


class PDCode:
    """A parsed PD code: crossing tuples plus explicit crossingless circles."""

    def __init__(self, crossings, circles=()):
        self.crossings = [tuple(int(x) for x in c) for c in crossings]
        self.circles = [int(k) for k in circles]
        counts = {}
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError("crossing %r does not have 4 labels" % (c,))
            for lab in c:
                if lab < 1:
                    raise ValueError("edge labels must be positive, got %d" % lab)
                counts[lab] = counts.get(lab, 0) + 1
        bad = sorted(lab for lab, n in counts.items() if n != 2)
        if bad:
            raise ValueError("edge labels %s do not occur exactly twice" % bad)
        for k in self.circles:
            if k < 1:
                raise ValueError("edge labels must be positive, got %d" % k)
            if k in counts or self.circles.count(k) != 1:
                raise ValueError("circle label %d collides with another edge" % k)

    def __str__(self):
        toks = ["X[%d,%d,%d,%d]" % c for c in self.crossings]
        toks += ["O[%d]" % k for k in self.circles]
        return " ".join(toks)

    def __repr__(self):
        return "PDCode(%s)" % self

    def __eq__(self, other):
        return (isinstance(other, PDCode) and self.crossings == other.crossings
                and self.circles == other.circles)


_PD_TOKEN = re.compile(r"([XO])\[([0-9,\s]+)\]")


def parse_pd(text):
    """Parse PD text like 'X[1,3,2,4] X[3,1,4,2]' or 'X[...] O[5]'.

    The empty string is the 0-crossing unknot (one circle).  Raises
    ValueError on malformed text, wrong label multiplicity, or a
    successor structure no oriented diagram can have.
    """
    crossings, circles = [], []
    covered = bytearray(len(text))
    for m in _PD_TOKEN.finditer(text):
        labels = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
        if m.group(1) == "X":
            if len(labels) != 4:
                raise ValueError("X token needs 4 labels at position %d: %r"
                                 % (m.start(), m.group(0)))
            crossings.append(tuple(labels))
        else:
            if len(labels) != 1:
                raise ValueError("O token needs 1 label at position %d: %r"
                                 % (m.start(), m.group(0)))
            circles.append(labels[0])
        for i in range(m.start(), m.end()):
            covered[i] = 1
    for i, ch in enumerate(text):
        if not covered[i] and not ch.isspace() and ch != ",":
            raise ValueError("unrecognized PD text at position %d: %r"
                             % (i, text[i:i + 12]))
    if not crossings and not circles:
        circles = [1]  # empty text: unknot convention
    pd = PDCode(crossings, circles)
    orient_and_sign(pd)  # validates realizability before handing the code out
    return pd


def braid_to_pd(word, strands):
    """PD code of the closure of a braid word on the given strand count.

    Letters are nonzero ints: +k is the positive generator crossing
    strands k and k+1 (right strand passing over), -k its inverse.
    Strands untouched by every letter close into O circles.
    """
    if not isinstance(strands, int) or strands < 1:
        raise ValueError("strand count must be a positive integer")
    for x in word:
        if not isinstance(x, int) or x == 0 or abs(x) > strands - 1:
            raise ValueError("braid letter %r needs 0 < |letter| < %d" % (x, strands))

    # Tokens are edge pieces; a union-find merges bottom-of-braid tokens
    # with the matching top tokens around the closure.
    parent = {}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(s, t):
        parent[find(s)] = find(t)

    def fresh(tag):
        parent[tag] = tag
        return tag

    cur = [fresh(("top", p)) for p in range(strands)]
    events = []  # (under_in, under_out, over_in, over_out) tokens per letter
    for i, x in enumerate(word):
        k = abs(x) - 1
        u, v = cur[k], cur[k + 1]
        left, right = fresh(("bot", i, 0)), fresh(("bot", i, 1))
        if x > 0:
            events.append((u, right, v, left))
        else:
            events.append((v, left, u, right))
        cur[k], cur[k + 1] = left, right
    for p in range(strands):
        union(cur[p], ("top", p))

    succ = {}   # edge-class successor along the strands
    for under_in, under_out, over_in, over_out in events:
        succ[find(under_in)] = find(under_out)
        succ[find(over_in)] = find(over_out)

    label = {}
    circles = []
    next_label = 1
    for p in range(strands):
        start = find(("top", p))
        if start in label:
            continue
        if start not in succ:  # untouched strand: crossingless circle
            label[start] = next_label
            circles.append(next_label)
            next_label += 1
            continue
        e = start
        while e not in label:
            label[e] = next_label
            next_label += 1
            e = succ[e]

    crossings = []
    for (under_in, under_out, over_in, over_out), x in zip(events, word):
        a = label[find(under_in)]
        c = label[find(under_out)]
        if x > 0:
            crossings.append((a, label[find(over_out)], c, label[find(over_in)]))
        else:
            crossings.append((a, label[find(over_in)], c, label[find(over_out)]))
    return PDCode(crossings, circles)


class LinkDiagram:
    """An oriented link diagram resolved into arcs, crossings and components.

    arc_component[arc] is the 0-based component index of each Wirtinger
    arc; crossings hold arc-level data with signs; traversals[comp] lists
    (arc, crossing index) pairs in orientation order, one per underpass
    of that component (a crossingless component has [(arc, None)]).
    """

    def __init__(self, arc_component, crossings, traversals):
        self.arc_component = list(arc_component)
        self.num_arcs = len(self.arc_component)
        self.num_components = (max(self.arc_component) + 1) if self.arc_component else 0
        self.crossings = [Crossing(*c) for c in crossings]
        self.traversals = [list(t) for t in traversals]
        assert len(self.traversals) == self.num_components
        for x in self.crossings:
            assert self.arc_component[x.under_in] == self.arc_component[x.under_out]
            assert x.sign in (1, -1)

    def arcs_of(self, comp):
        return [a for a, c in enumerate(self.arc_component) if c == comp]

    def meridian_of(self, comp):
        """The chosen meridian generator: the lowest arc id on the component."""
        return min(self.arcs_of(comp))

    def writhe(self, comp):
        return sum(x.sign for x in self.crossings
                   if self.arc_component[x.over] == comp
                   and self.arc_component[x.under_in] == comp)

    def __repr__(self):
        return "<LinkDiagram: %d components, %d arcs, %d crossings>" % (
            self.num_components, self.num_arcs, len(self.crossings))


def orient_and_sign(pd):
    """Resolve a PD code into an oriented LinkDiagram with crossing signs.

    Raises ValueError when no orientation satisfies the successor
    convention (labels not contiguous per component, an under-strand
    whose outgoing edge is not the successor of its incoming edge, or
    over-strand transitions that cannot be matched to crossings).
    """
    crossings = pd.crossings
    labels = sorted({lab for c in crossings for lab in c})

    parent = {lab: lab for lab in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for a, b, c, d in crossings:
        union(a, c)
        union(b, d)

    blocks = {}
    for lab in labels:
        blocks.setdefault(find(lab), []).append(lab)
    comp_blocks = sorted(blocks.values(), key=min)
    for blk in comp_blocks:
        blk.sort()
        if blk[-1] - blk[0] + 1 != len(blk):
            raise ValueError(
                "component labels %s are not a contiguous run" % blk)

    succ = {}
    for blk in comp_blocks:
        for i, e in enumerate(blk):
            succ[e] = blk[(i + 1) % len(blk)]

    under_at = {}  # incoming under edge -> crossing index
    for ci, (a, b, c, d) in enumerate(crossings):
        if b == d:
            raise ValueError("crossing %d has the same edge at both over slots" % ci)
        if a in under_at:
            raise ValueError("edge %d enters under twice" % a)
        under_at[a] = ci
        if succ[a] != c:
            raise ValueError(
                "under-strand %d -> %d at crossing %d breaks the successor convention"
                % (a, c, ci))

    # Match each successor transition e -> succ(e) to the crossing where it
    # happens: the underpass when e enters under somewhere, otherwise an
    # unconsumed crossing whose over pair is {e, succ(e)} (smallest index
    # first, which also resolves components that never pass under).
    over_pairs = {ci: frozenset((b, d)) for ci, (a, b, c, d) in enumerate(crossings)}
    over_dir = {}
    is_over_transition = {}
    for blk in comp_blocks:
        for e in blk:
            f = succ[e]
            if e in under_at:
                is_over_transition[e] = False
                continue
            candidates = [ci for ci, pair in over_pairs.items()
                          if pair == frozenset((e, f)) and ci not in over_dir]
            if not candidates:
                raise ValueError(
                    "no crossing realizes the transition %d -> %d" % (e, f))
            ci = min(candidates)
            over_dir[ci] = (e, f)
            is_over_transition[e] = True
    if len(over_dir) != len(crossings):
        raise ValueError("over-strand transitions do not cover every crossing")

    signs = []
    for ci, (a, b, c, d) in enumerate(crossings):
        e_in, e_out = over_dir[ci]
        if (e_in, e_out) == (d, b):
            signs.append(1)
        else:
            assert (e_in, e_out) == (b, d)
            signs.append(-1)

    # Wirtinger arcs: edges joined across over-transitions.
    aparent = {lab: lab for lab in labels}

    def afind(x):
        while aparent[x] != x:
            aparent[x] = aparent[aparent[x]]
            x = aparent[x]
        return x

    for e in labels:
        if is_over_transition[e]:
            aparent[afind(e)] = afind(succ[e])

    arc_classes = {}
    for lab in labels:
        arc_classes.setdefault(afind(lab), []).append(lab)
    ordered_arcs = sorted(arc_classes.values(), key=min)

    all_components = sorted(comp_blocks + [[k] for k in pd.circles], key=min)
    comp_of_label = {}
    for idx, blk in enumerate(all_components):
        for lab in blk:
            comp_of_label[lab] = idx

    arc_of_label = {}
    arc_component = []
    for arc_id, cls in enumerate(ordered_arcs):
        for lab in cls:
            arc_of_label[lab] = arc_id
        arc_component.append(comp_of_label[cls[0]])
    for k in sorted(pd.circles):
        arc_of_label[k] = len(arc_component)
        arc_component.append(comp_of_label[k])

    arc_crossings = []
    for ci, (a, b, c, d) in enumerate(crossings):
        over = arc_of_label[b]
        assert over == arc_of_label[d]
        arc_crossings.append(
            Crossing(over, arc_of_label[a], arc_of_label[c], signs[ci]))

    traversals = []
    for blk in all_components:
        if blk[0] in arc_of_label and len(blk) == 1 and blk[0] not in succ:
            traversals.append([(arc_of_label[blk[0]], None)])  # circle
            continue
        pairs = []
        for e in blk:
            if e in under_at:
                pairs.append((arc_of_label[e], under_at[e]))
        if not pairs:  # component that never passes under
            pairs = [(arc_of_label[blk[0]], None)]
        traversals.append(pairs)

    return LinkDiagram(arc_component, arc_crossings, traversals)


def linking_number(diagram, i, j):
    """lk(K_i, K_j): half the signed count of crossings between them."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    for c in (i, j):
        if not 0 <= c < diagram.num_components:
            raise ValueError("component %d out of range" % c)
    total = 0
    for x in diagram.crossings:
        pair = {diagram.arc_component[x.over], diagram.arc_component[x.under_in]}
        if pair == {i, j}:
            total += x.sign
    assert total % 2 == 0, "signed mixed-crossing count must be even"
    return total // 2


class WirtingerPresentation:
    """One generator per arc; one conjugation relator per crossing."""

    def __init__(self, num_generators, relators, component_of, meridians):
        self.num_generators = num_generators
        self.relators = [tuple(r) for r in relators]
        self.component_of = list(component_of)
        self.meridians = list(meridians)
        self.num_components = len(meridians)
        for r in self.relators:
            counts = [0] * self.num_components
            for g, e in r:
                counts[self.component_of[g]] += e
            assert not any(counts), "relator %r does not abelianize to 0" % (r,)

    def meridian_of(self, comp):
        return self.meridians[comp]

    def __repr__(self):
        return "<Wirtinger: %d generators, %d relators, %d components>" % (
            self.num_generators, len(self.relators), self.num_components)


def wirtinger(diagram):
    """The Wirtinger presentation of the diagram's link group."""
    relators = []
    for x in diagram.crossings:
        relators.append((
            (x.under_out, 1),
            (x.over, x.sign),
            (x.under_in, -1),
            (x.over, -x.sign),
        ))
    meridians = [diagram.meridian_of(c) for c in range(diagram.num_components)]
    return WirtingerPresentation(
        diagram.num_arcs, relators, diagram.arc_component, meridians)


def longitude_word(diagram, comp, framing_corrected=False, start_arc=None):
    """The longitude of a component as a word in the Wirtinger generators.

    Reads (over-arc)^sign at each underpass, starting from start_arc
    (default: the component's lowest arc id).  With framing_corrected,
    meridian^-w is appended (w = self-writhe) so the abelianized word
    has exponent 0 on the component's own variable.
    """
    if not 0 <= comp < diagram.num_components:
        raise ValueError("component %d out of range" % comp)
    if start_arc is None:
        start_arc = diagram.meridian_of(comp)
    if diagram.arc_component[start_arc] != comp:
        raise ValueError("arc %d is not on component %d" % (start_arc, comp))
    pairs = diagram.traversals[comp]
    word = []
    if pairs[0][1] is not None:
        arcs = [a for a, _ in pairs]
        k = arcs.index(start_arc)
        for a, ci in pairs[k:] + pairs[:k]:
            x = diagram.crossings[ci]
            word.append((x.over, x.sign))
    if framing_corrected:
        w = diagram.writhe(comp)
        m = diagram.meridian_of(comp)
        word.extend([(m, -1 if w > 0 else 1)] * abs(w))
    return tuple(word)


class DeletionResult:
    """Outcome of deleting one component: the sub-diagram plus the arc map."""

    def __init__(self, sub_diagram, arc_map, kept_components, removed):
        self.sub_diagram = sub_diagram
        self.arc_map = dict(arc_map)
        self.kept_components = list(kept_components)
        self.removed = removed


def delete_component(diagram, comp):
    """Delete component comp: its crossings vanish, under-arcs of its former
    overpasses merge, and surviving components keep their inherited order.
    """
    if not 0 <= comp < diagram.num_components:
        raise ValueError("component %d out of range" % comp)
    if diagram.num_components < 2:
        raise ValueError("cannot delete the only component")

    arc_comp = diagram.arc_component
    survivors = [a for a in range(diagram.num_arcs) if arc_comp[a] != comp]
    parent = {a: a for a in survivors}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept_crossings = []
    for ci, x in enumerate(diagram.crossings):
        over_gone = arc_comp[x.over] == comp
        under_gone = arc_comp[x.under_in] == comp
        if over_gone and not under_gone:
            parent[find(x.under_in)] = find(x.under_out)
        elif not over_gone and not under_gone:
            kept_crossings.append(ci)

    classes = {}
    for a in survivors:
        classes.setdefault(find(a), []).append(a)
    ordered = sorted(classes.values(), key=min)
    arc_map = {}
    new_arc_component = []
    kept_components = [c for c in range(diagram.num_components) if c != comp]
    comp_map = {c: i for i, c in enumerate(kept_components)}
    for new_id, cls in enumerate(ordered):
        for a in cls:
            arc_map[a] = new_id
        new_arc_component.append(comp_map[arc_comp[cls[0]]])

    new_crossings = []
    crossing_map = {}
    for ci in kept_crossings:
        x = diagram.crossings[ci]
        crossing_map[ci] = len(new_crossings)
        new_crossings.append(Crossing(
            arc_map[x.over], arc_map[x.under_in], arc_map[x.under_out], x.sign))

    traversals = []
    for c in kept_components:
        pairs = []
        for a, ci in diagram.traversals[c]:
            if ci is not None and ci in crossing_map:
                pairs.append((arc_map[a], crossing_map[ci]))
        if not pairs:
            pairs = [(arc_map[diagram.arcs_of(c)[0]], None)]
        traversals.append(pairs)

    sub = LinkDiagram(new_arc_component, new_crossings, traversals)
    return DeletionResult(sub, arc_map, kept_components, comp)


def monomial_T(diagram, comp):
    """The composite variable T = prod t_i^lk(K_i, K_comp) over survivors.

    Exponents are indexed by the surviving components in inherited
    order, matching the variable order of the sub-link after deletion.
    """
    from .algebra import Monomial
    if diagram.num_components < 2:
        raise ValueError("need at least 2 components")
    if not 0 <= comp < diagram.num_components:
        raise ValueError("component %d out of range" % comp)
    exps = [linking_number(diagram, c, comp)
            for c in range(diagram.num_components) if c != comp]
    return Monomial(1, exps)

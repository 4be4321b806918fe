"""Fox free differential calculus evaluated through a tensor representation.

A word in the arc generators of a Wirtinger presentation is evaluated by
sending each generator x to the n x n matrix of Laurent polynomials

    Phi(x) = rho(x) * t_c,

where rho is a constant matrix representation and t_c is the variable of
the component carrying x.  Relators evaluate to the identity (they have
trivial image under rho and zero exponent sum on every component), which
is what makes the derivative matrix below well defined.

Fox derivatives obey four rules:

    d(empty)/dx_j = 0
    d(x_i)/dx_j   = delta_ij * I
    d(x_i^-1)/dx_j = -delta_ij * Phi(x_i^-1)
    d(uv)/dx_j    = du/dx_j + Phi(u) * dv/dx_j

Rather than recursing, `fox_derivative` folds left to right with an
accumulated prefix evaluation, so long words (longitudes) cost linear
time and no recursion depth.  Derivatives are returned as evaluated
matrices; group-ring elements are never materialized symbolically.
"""

from .algebra import LaurentPoly, PolyMatrix, mat_inv

__all__ = [
    "TensorEvaluator", "AlexanderMatrix", "evaluate_word", "fox_derivative",
    "alexander_matrix", "fox_identity_defect", "expand_word",
]


def expand_word(word, num_generators):
    """Flatten a word into (generator, +-1) letters, validating indices.

    Words are sequences of (generator, exponent) pairs with nonzero
    integer exponents; exponents of magnitude > 1 are expanded into
    repeated letters.
    """
    letters = []
    for g, e in word:
        if not isinstance(g, int) or not 0 <= g < num_generators:
            raise ValueError("generator index %r out of range" % (g,))
        if not isinstance(e, int) or e == 0:
            raise ValueError("exponent %r must be a nonzero integer" % (e,))
        s = 1 if e > 0 else -1
        letters.extend([(g, s)] * abs(e))
    return letters


class TensorEvaluator:
    """Caches Phi(x) = rho(x) * t_{c(x)} and its inverse per generator.

    `rep` supplies the constant matrices (fields: ring, n, images);
    `component_of` maps each generator to its variable index; `num_vars`
    is the number of link components.  Evaluators are immutable.
    """

    def __init__(self, rep, component_of, num_vars):
        self.rep = rep
        self.ring = rep.ring
        self.n = rep.n
        self.component_of = list(component_of)
        self.num_vars = num_vars
        if len(rep.images) != len(self.component_of):
            raise ValueError("representation has %d images for %d generators"
                             % (len(rep.images), len(self.component_of)))
        for c in self.component_of:
            if not 0 <= c < num_vars:
                raise ValueError("component index %d out of range" % c)
        self._cache = {}

    @classmethod
    def for_presentation(cls, pres, rep):
        return cls(rep, pres.component_of, pres.num_components)

    @property
    def num_generators(self):
        return len(self.component_of)

    def identity(self):
        return PolyMatrix.identity(self.ring, self.num_vars, self.n)

    def zero(self):
        return PolyMatrix.zeros(self.ring, self.num_vars, self.n, self.n)

    def phi(self, g, e=1):
        """The matrix Phi(x_g^{+-1}) as an n x n PolyMatrix."""
        s = 1 if e > 0 else -1
        key = (g, s)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        c = self.component_of[g]
        exps = tuple(s if i == c else 0 for i in range(self.num_vars))
        a = self.rep.images[g] if s > 0 else mat_inv(self.ring, self.rep.images[g])
        rows = [[LaurentPoly(self.ring, self.num_vars, {exps: a[i][j]})
                 for j in range(self.n)] for i in range(self.n)]
        m = PolyMatrix(rows)
        self._cache[key] = m
        return m


def evaluate_word(ev, word):
    """Product of Phi over the letters of `word`; empty word -> identity."""
    acc = ev.identity()
    for g, s in expand_word(word, ev.num_generators):
        acc = acc * ev.phi(g, s)
    return acc


def fox_derivative(ev, word, j):
    """Evaluated Fox derivative d(word)/dx_j as an n x n PolyMatrix.

    Left fold: maintains Phi(prefix) and adds +-Phi(prefix) * d(letter)
    contributions as letters of x_j pass by.
    """
    if not 0 <= j < ev.num_generators:
        raise ValueError("generator index %r out of range" % (j,))
    deriv = ev.zero()
    prefix = ev.identity()
    for g, s in expand_word(word, ev.num_generators):
        step = ev.phi(g, s)
        if g == j:
            if s > 0:
                deriv = deriv + prefix
            else:
                deriv = deriv - prefix * step
        prefix = prefix * step
    return deriv


def fox_identity_defect(ev, word):
    """sum_j d(word)/dx_j * (Phi(x_j) - I)  -  (Phi(word) - I).

    Zero for every word; specializes to the fundamental identity
    sum_j (dr/dx_j)(Phi(x_j) - I) = 0 when `word` is a relator.
    """
    ident = ev.identity()
    acc = ev.zero()
    seen = {g for g, _ in expand_word(word, ev.num_generators)}
    for j in seen:
        acc = acc + fox_derivative(ev, word, j) * (ev.phi(j) - ident)
    return acc - (evaluate_word(ev, word) - ident)


class AlexanderMatrix:
    """Evaluated Fox derivatives of all relators, in n x n blocks.

    blocks[i][j] is d(r_i)/dx_j.  `to_matrix` flattens to one PolyMatrix,
    optionally dropping one relator row-block and one generator
    column-block (the shape Wada's invariant needs).
    """

    def __init__(self, blocks, generator_count, n, ring, num_vars):
        self.blocks = blocks
        self.relator_count = len(blocks)
        self.generator_count = generator_count
        self.block_size = n
        self.ring = ring
        self.num_vars = num_vars

    def to_matrix(self, drop_relator=None, delete_generator=None):
        """Flattened PolyMatrix; raises ValueError if nothing remains."""
        rows = [i for i in range(self.relator_count) if i != drop_relator]
        cols = [j for j in range(self.generator_count) if j != delete_generator]
        if drop_relator is not None and drop_relator not in range(self.relator_count):
            raise ValueError("relator index %r out of range" % (drop_relator,))
        if delete_generator is not None and delete_generator not in range(self.generator_count):
            raise ValueError("generator index %r out of range" % (delete_generator,))
        if not rows or not cols:
            raise ValueError("empty matrix after deletion")
        n = self.block_size
        flat = []
        for i in rows:
            for a in range(n):
                flat.append([self.blocks[i][j].entries[a][b]
                             for j in cols for b in range(n)])
        return PolyMatrix(flat)


def alexander_matrix(pres, ev):
    """Assemble the full block matrix of Fox derivatives of all relators."""
    if ev.num_generators != pres.num_generators:
        raise ValueError("evaluator has %d generators, presentation has %d"
                         % (ev.num_generators, pres.num_generators))
    if ev.component_of != list(pres.component_of):
        raise ValueError("evaluator abelianization disagrees with presentation")
    blocks = [[fox_derivative(ev, r, j) for j in range(pres.num_generators)]
              for r in pres.relators]
    return AlexanderMatrix(blocks, pres.num_generators, ev.n, ev.ring, ev.num_vars)

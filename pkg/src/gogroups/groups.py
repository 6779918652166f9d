"""Vertex/edge group classes: elements, monomorphisms, transversals.

Supported classes:
  FreeAbelian(n)    elements are int tuples
  Cyclic(m)         elements are residues in [0, m)
  CyclicSemiZ2(m)   Z_m x| Z_2 with i g i = g^-1; elements are (residue, parity)
  FreeGroup(r)      elements are freely reduced tuples of signed generator ids
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product

from .exactmath import IMat, LatticeTransversal, solve_integral

_GEN_NAMES = "abcdefghijklmnopqrstuvwxyz"


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FreeAbelian:
    rank: int

    def __str__(self):
        return "Z^%d" % self.rank


@dataclass(frozen=True)
class Cyclic:
    order: int

    def __str__(self):
        return "Z/%d" % self.order


@dataclass(frozen=True)
class CyclicSemiZ2:
    order: int

    def __str__(self):
        return "Z/%d:Z2" % self.order


@dataclass(frozen=True)
class FreeGroup:
    rank: int

    def __str__(self):
        return "F%d" % self.rank


def check_desc(desc):
    if isinstance(desc, (FreeAbelian, FreeGroup)):
        if desc.rank < 1:
            raise GroupError("rank must be positive: %s" % (desc,))
    elif isinstance(desc, (Cyclic, CyclicSemiZ2)):
        if desc.order < 1:
            raise GroupError("order must be positive: %s" % (desc,))
    else:
        raise GroupError("unknown group descriptor: %r" % (desc,))
    return desc


def is_finite(desc):
    return isinstance(desc, (Cyclic, CyclicSemiZ2))


def group_size(desc):
    if isinstance(desc, Cyclic):
        return desc.order
    if isinstance(desc, CyclicSemiZ2):
        return 2 * desc.order
    return None


def is_amenable(desc):
    # abelian and virtually abelian classes are amenable; free groups of
    # rank >= 2 are not
    return not (isinstance(desc, FreeGroup) and desc.rank >= 2)


# ---------------------------------------------------------------------------
# element algebra

def identity_elem(desc):
    if isinstance(desc, FreeAbelian):
        return (0,) * desc.rank
    if isinstance(desc, Cyclic):
        return 0
    if isinstance(desc, CyclicSemiZ2):
        return (0, 0)
    return ()


def check_elem(desc, g):
    if isinstance(desc, FreeAbelian):
        if not (isinstance(g, tuple) and len(g) == desc.rank
                and all(isinstance(x, int) for x in g)):
            raise GroupError("bad element %r for %s" % (g, desc))
    elif isinstance(desc, Cyclic):
        if not (isinstance(g, int) and 0 <= g < desc.order):
            raise GroupError("bad element %r for %s" % (g, desc))
    elif isinstance(desc, CyclicSemiZ2):
        if not (isinstance(g, tuple) and len(g) == 2 and 0 <= g[0] < desc.order
                and g[1] in (0, 1)):
            raise GroupError("bad element %r for %s" % (g, desc))
    elif isinstance(desc, FreeGroup):
        if not (isinstance(g, tuple) and all(isinstance(x, int) and x != 0
                                             and abs(x) <= desc.rank for x in g)):
            raise GroupError("bad element %r for %s" % (g, desc))
        if any(a == -b for a, b in zip(g, g[1:])):
            raise GroupError("word not freely reduced: %r" % (g,))
    return g


def mul(desc, a, b):
    if isinstance(desc, FreeAbelian):
        return tuple(x + y for x, y in zip(a, b))
    if isinstance(desc, Cyclic):
        return (a + b) % desc.order
    if isinstance(desc, CyclicSemiZ2):
        # (a,e)(b,d) = (a + (-1)^e b, e xor d)
        return ((a[0] + (b[0] if a[1] == 0 else -b[0])) % desc.order, a[1] ^ b[1])
    out = list(a)
    for x in b:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inv(desc, a):
    if isinstance(desc, FreeAbelian):
        return tuple(-x for x in a)
    if isinstance(desc, Cyclic):
        return (-a) % desc.order
    if isinstance(desc, CyclicSemiZ2):
        # (a,e)^-1 = ((-1)^(e+1) a mod m, e)
        return ((a[0] if a[1] else -a[0]) % desc.order, a[1])
    return tuple(-x for x in reversed(a))


def group_op(desc, a, b=None, mode="mul"):
    """Group law dispatcher: mul, inv or id."""
    if mode == "mul":
        check_elem(desc, a)
        check_elem(desc, b)
        return mul(desc, a, b)
    if mode == "inv":
        check_elem(desc, a)
        return inv(desc, a)
    if mode == "id":
        return identity_elem(desc)
    raise GroupError("unknown mode %r" % mode)


def pow_elem(desc, a, n):
    out = identity_elem(desc)
    g = a if n >= 0 else inv(desc, a)
    for _ in range(abs(n)):
        out = mul(desc, out, g)
    return out


def elements(desc):
    """Deterministic element enumeration; lazy and infinite for the
    infinite classes (FreeAbelian by max-norm shells, FreeGroup shortlex)."""
    if isinstance(desc, Cyclic):
        yield from range(desc.order)
        return
    if isinstance(desc, CyclicSemiZ2):
        for parity in (0, 1):
            for a in range(desc.order):
                yield (a, parity)
        return
    if isinstance(desc, FreeAbelian):
        n = desc.rank
        for shell in count(0):
            for v in product(range(-shell, shell + 1), repeat=n):
                if max((abs(x) for x in v), default=0) == shell:
                    yield v
        return
    # FreeGroup: shortlex over alphabet a < a^-1 < b < b^-1 < ...
    alphabet = [s * g for g in range(1, desc.rank + 1) for s in (1, -1)]
    order = {x: i for i, x in enumerate(alphabet)}
    frontier = [()]
    while True:
        yield from frontier
        frontier = [w + (x,) for w in frontier
                    for x in sorted(alphabet, key=order.get)
                    if not (w and w[-1] == -x)]


def free_gens(desc):
    return [(g,) for g in range(1, desc.rank + 1)]


def generators(desc):
    """Canonical generating tuple used by GenImages monos."""
    if isinstance(desc, FreeAbelian):
        return [tuple(1 if i == j else 0 for j in range(desc.rank)) for i in range(desc.rank)]
    if isinstance(desc, Cyclic):
        return [1 % desc.order] if desc.order > 1 else [0]
    if isinstance(desc, CyclicSemiZ2):
        return [(1 % desc.order, 0), (0, 1)]
    return free_gens(desc)


# ---------------------------------------------------------------------------
# element literals (shared with the CLI)

def elem_to_str(desc, g):
    if isinstance(desc, FreeAbelian):
        return "(" + ",".join(str(x) for x in g) + ")"
    if isinstance(desc, Cyclic):
        return str(g)
    if isinstance(desc, CyclicSemiZ2):
        return "(%d,%d)" % g
    if not g:
        return "1"
    parts = []
    i = 0
    while i < len(g):
        j = i
        while j < len(g) and g[j] == g[i]:
            j += 1
        name = _GEN_NAMES[abs(g[i]) - 1]
        power = (j - i) * (1 if g[i] > 0 else -1)
        parts.append(name if power == 1 else "%s^%d" % (name, power))
        i = j
    return ".".join(parts)


def elem_from_str(desc, s):
    s = s.strip()
    try:
        if isinstance(desc, FreeAbelian):
            if s.startswith("(") and s.endswith(")"):
                body = s[1:-1].strip()
                vals = tuple(int(x) for x in body.split(",")) if body else ()
            else:
                vals = (int(s),)
            if len(vals) != desc.rank:
                raise GroupError("rank mismatch in %r" % s)
            return vals
        if isinstance(desc, Cyclic):
            return int(s) % desc.order
        if isinstance(desc, CyclicSemiZ2):
            a, b = s.strip("()").split(",")
            return (int(a) % desc.order, int(b) % 2)
        if s == "1":
            return ()
        word = ()
        for part in s.split("."):
            if "^" in part:
                name, p = part.split("^")
                power = int(p)
            else:
                name, power = part, 1
            g = _GEN_NAMES.index(name.strip()) + 1
            if g > desc.rank:
                raise GroupError("generator %r out of range" % name)
            step = (g,) if power > 0 else (-g,)
            for _ in range(abs(power)):
                word = mul(desc, word, step)
        return word
    except (ValueError, IndexError) as exc:
        raise GroupError("cannot parse element %r for %s" % (s, desc)) from exc


# ---------------------------------------------------------------------------
# monomorphisms

@dataclass(frozen=True)
class ScalarMono:
    """Z -> Z, multiplication by a nonzero integer."""
    factor: int
    domain: FreeAbelian = FreeAbelian(1)
    codomain: FreeAbelian = FreeAbelian(1)

    def __str__(self):
        return "scalar %d" % self.factor


@dataclass(frozen=True)
class MatrixMono:
    """Z^n -> Z^n, an integer matrix with nonzero determinant."""
    matrix: IMat

    @property
    def domain(self):
        return FreeAbelian(self.matrix.ncols)

    @property
    def codomain(self):
        return FreeAbelian(self.matrix.nrows)

    def __str__(self):
        return "matrix %s" % self.matrix


@dataclass(frozen=True)
class ImagesMono:
    """Images of the domain's canonical generators in the codomain."""
    domain: object
    codomain: object
    images: tuple

    def __str__(self):
        return "images " + ";".join(elem_to_str(self.codomain, g) for g in self.images)


def apply_mono(mono, h):
    """Exact image of h under the monomorphism."""
    if isinstance(mono, ScalarMono):
        return (mono.factor * h[0],)
    if isinstance(mono, MatrixMono):
        return mono.matrix.apply(h)
    desc, cod = mono.domain, mono.codomain
    if isinstance(desc, FreeAbelian):
        out = identity_elem(cod)
        for x, img in zip(h, mono.images):
            out = mul(cod, out, pow_elem(cod, img, x))
        return out
    if isinstance(desc, Cyclic):
        return pow_elem(cod, mono.images[0], h)
    if isinstance(desc, CyclicSemiZ2):
        x, y = mono.images
        return mul(cod, pow_elem(cod, x, h[0]), pow_elem(cod, y, h[1]))
    raise GroupError("unsupported GenImages domain %s" % (desc,))


def validate_mono(mono):
    """Raise unless the mono is injective and in a supported combination."""
    if isinstance(mono, ScalarMono):
        if mono.factor == 0:
            raise GroupError("scalar mono must be nonzero")
        return mono
    if isinstance(mono, MatrixMono):
        if mono.matrix.nrows != mono.matrix.ncols:
            raise GroupError("matrix mono must be square")
        if mono.matrix.det() == 0:
            raise GroupError("matrix mono must have nonzero determinant")
        return mono
    desc, cod = mono.domain, mono.codomain
    if len(mono.images) != len(generators(desc)):
        raise GroupError("wrong number of generator images")
    for img in mono.images:
        check_elem(cod, img)
    if is_finite(desc):
        if not is_finite(cod):
            raise GroupError("finite domain must map into a finite group")
        _check_relations(mono)
        seen = {}
        for g in elements(desc):
            img = apply_mono(mono, g)
            if img in seen:
                raise GroupError("mono not injective: %r and %r collide" % (seen[img], g))
            seen[img] = g
        return mono
    if isinstance(desc, FreeAbelian):
        if isinstance(cod, FreeAbelian):
            if desc.rank == cod.rank:
                a = IMat(tuple(zip(*mono.images)))
                if a.det() == 0:
                    raise GroupError("mono not injective")
            elif desc.rank == 1:
                if all(x == 0 for x in mono.images[0]):
                    raise GroupError("mono not injective")
            else:
                raise GroupError("unsupported Z^%d -> Z^%d images mono"
                                 % (desc.rank, cod.rank))
            return mono
        if isinstance(cod, FreeGroup) and desc.rank == 1:
            img = mono.images[0]
            if len(img) != 1:
                raise GroupError("free-group image must be a single generator letter")
            return mono
    raise GroupError("unsupported mono combination %s -> %s" % (desc, cod))


def _check_relations(mono):
    desc, cod = mono.domain, mono.codomain
    if isinstance(desc, Cyclic):
        x = mono.images[0]
        if pow_elem(cod, x, desc.order) != identity_elem(cod):
            raise GroupError("image violates x^%d = 1" % desc.order)
    else:
        x, y = mono.images
        ident = identity_elem(cod)
        if pow_elem(cod, x, desc.order) != ident:
            raise GroupError("image violates x^%d = 1" % desc.order)
        if mul(cod, y, y) != ident:
            raise GroupError("image violates y^2 = 1")
        if mul(cod, mul(cod, y, x), inv(cod, y)) != inv(cod, x):
            raise GroupError("image violates y x y^-1 = x^-1")


def mono_index(mono):
    """[codomain : image], or None when infinite."""
    if isinstance(mono, ScalarMono):
        return abs(mono.factor)
    if isinstance(mono, MatrixMono):
        return abs(mono.matrix.det())
    desc, cod = mono.domain, mono.codomain
    if is_finite(desc) and is_finite(cod):
        return group_size(cod) // group_size(desc)
    return None


def mono_from_images(domain, codomain, images):
    """Build the canonical Mono value for generator images."""
    if isinstance(domain, FreeAbelian) and isinstance(codomain, FreeAbelian):
        if domain.rank == codomain.rank == 1:
            return validate_mono_and_return(ScalarMono(images[0][0]))
        if domain.rank == codomain.rank:
            return validate_mono_and_return(MatrixMono(IMat(tuple(zip(*images)))))
    return validate_mono_and_return(ImagesMono(domain, codomain, tuple(images)))


def validate_mono_and_return(mono):
    validate_mono(mono)
    return mono


def invert_surjective_mono(mono, g):
    """Preimage under a surjective (hence bijective) mono."""
    if isinstance(mono, ScalarMono):
        assert abs(mono.factor) == 1
        return (g[0] * mono.factor,)
    if isinstance(mono, MatrixMono):
        h = solve_integral(mono.matrix, g)
        assert h is not None, "mono is not surjective"
        return h
    desc = mono.domain
    for h in elements(desc):
        if apply_mono(mono, h) == g:
            return h
    raise GroupError("element %r not in the image" % (g,))


def compose_monos(outer, inner_inverse_of, inner):
    """The mono outer o inner_inverse_of^-1 o inner, as generator images.

    Used by collapse moves: inner maps an edge group into the collapsed
    vertex group, inner_inverse_of is the surjective mono onto it, and
    outer reroutes into the surviving vertex group.
    """
    domain = inner.domain
    codomain = outer.codomain
    images = []
    for gen in generators(domain):
        x = apply_mono(inner, gen)
        y = invert_surjective_mono(inner_inverse_of, x)
        images.append(apply_mono(outer, y))
    return mono_from_images(domain, codomain, tuple(images))


# ---------------------------------------------------------------------------
# transversals

class Transversal:
    """Canonical left coset representatives of alpha(G_e) in the codomain.

    decompose(g) returns (sigma, h) with g = sigma * alpha(h); sigma is the
    canonical representative and the identity is always a representative.
    """

    def __init__(self, mono):
        self.mono = mono
        self.codomain = mono.codomain
        self.index = mono_index(mono)

    def decompose(self, g):
        raise NotImplementedError

    def is_member(self, g):
        sigma, _ = self.decompose(g)
        return sigma == identity_elem(self.codomain)

    def member_preimage(self, g):
        """h with alpha(h) = g if g is in the image, else None."""
        sigma, h = self.decompose(g)
        if sigma == identity_elem(self.codomain):
            return h
        return None

    def reps(self):
        """Lazy canonical representatives; the identity comes first."""
        ident = identity_elem(self.codomain)
        yield ident
        for g in elements(self.codomain):
            if g == ident:
                continue
            sigma, _ = self.decompose(g)
            if sigma == g:
                yield g


class ScalarTransversal(Transversal):
    def decompose(self, g):
        k = self.mono.factor
        sigma = g[0] % abs(k)
        return (sigma,), ((g[0] - sigma) // k,)

    def reps(self):
        for r in range(abs(self.mono.factor)):
            yield (r,)


class MatrixTransversal(Transversal):
    def __init__(self, mono):
        super().__init__(mono)
        self._lat = LatticeTransversal(mono.matrix)

    def decompose(self, g):
        return self._lat.decompose(g)

    def reps(self):
        yield from self._lat.reps()


class FiniteTransversal(Transversal):
    """Greedy coset scan in canonical element order (finite codomain)."""

    def __init__(self, mono):
        super().__init__(mono)
        cod = self.codomain
        image = {}
        for h in elements(mono.domain):
            image[apply_mono(mono, h)] = h
        table = {}
        reps = []
        for g in elements(cod):
            if g in table:
                continue
            reps.append(g)
            for img, h in image.items():
                table[mul(cod, g, img)] = (g, h)
        self._table = table
        self._reps = reps

    def decompose(self, g):
        check_elem(self.codomain, g)
        return self._table[g]

    def reps(self):
        yield from self._reps


class LineInPlaneTransversal(Transversal):
    """Z -> Z^k spanned by a single vector w; the canonical representative
    of g is the unique coset element whose component along w lies in
    [0, <w,w>)."""

    def __init__(self, mono):
        super().__init__(mono)
        self._w = mono.images[0]
        self._norm = sum(x * x for x in self._w)

    def decompose(self, g):
        dot = sum(x * y for x, y in zip(g, self._w))
        h = dot // self._norm
        sigma = tuple(x - h * y for x, y in zip(g, self._w))
        return sigma, (h,)


class FreeSuffixTransversal(Transversal):
    """Free group modulo the cyclic subgroup on one letter: representatives
    are the reduced words not ending with that letter or its inverse."""

    def __init__(self, mono):
        super().__init__(mono)
        self._letter = mono.images[0][0]

    def decompose(self, g):
        c = abs(self._letter)
        i = len(g)
        while i > 0 and abs(g[i - 1]) == c:
            i -= 1
        sigma = g[:i]
        stripped = len(g) - i
        if stripped == 0:
            return sigma, (0,)
        sign = 1 if g[-1] > 0 else -1
        power = sign * stripped
        # alpha(h) = letter^h
        h = power if self._letter > 0 else -power
        return sigma, (h,)

    def reps(self):
        c = abs(self._letter)
        for g in elements(self.codomain):
            if not g or abs(g[-1]) != c:
                yield g


def transversal(mono) -> Transversal:
    validate_mono(mono)
    if isinstance(mono, ScalarMono):
        return ScalarTransversal(mono)
    if isinstance(mono, MatrixMono):
        return MatrixTransversal(mono)
    desc, cod = mono.domain, mono.codomain
    if is_finite(cod):
        return FiniteTransversal(mono)
    if isinstance(cod, FreeAbelian):
        if isinstance(desc, FreeAbelian) and desc.rank == cod.rank:
            return MatrixTransversal(MatrixMono(IMat(tuple(zip(*mono.images)))))
        return LineInPlaneTransversal(mono)
    if isinstance(cod, FreeGroup):
        return FreeSuffixTransversal(mono)
    raise GroupError("no transversal for %s" % (mono,))


def mono_decompose(handle: Transversal, g):
    """g = sigma * alpha(h); membership in the image is sigma == identity."""
    check_elem(handle.codomain, g)
    return handle.decompose(g)

"""Exact weights, root systems and Weyl groups.

Everything here works over :class:`fractions.Fraction`; the inner product on
h* is the standard one with |e_i|^2 = 1.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class InvalidInput(ValueError):
    """Raised for malformed arguments to a public operation."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class Weight:
    """A vector of h* written in the e-basis."""

    coords: tuple

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(_frac(c) for c in coords))

    @classmethod
    def _raw(cls, coords: tuple) -> "Weight":
        w = object.__new__(cls)
        object.__setattr__(w, "coords", coords)
        return w

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls([0] * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "Weight":
        c = [0] * dim
        c[i] = 1
        return cls(c)

    @classmethod
    def parse(cls, text: str, dim: int) -> "Weight":
        """Parse strings such as ``"-e1+2e2-1/2e3"`` or ``"0"``."""
        text = text.replace(" ", "")
        coords = [Fraction(0)] * dim
        if text in ("0", ""):
            return cls(coords)
        pos = 0
        term = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?e(\d+)")
        while pos < len(text):
            m = term.match(text, pos)
            if not m:
                raise InvalidInput(f"cannot parse weight {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            idx = int(m.group(3)) - 1
            if not 0 <= idx < dim:
                raise InvalidInput(f"index e{idx + 1} out of range in {text!r}")
            coords[idx] += sign * coef
            pos = m.end()
        return cls(coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight._raw(tuple(-a for a in self.coords))

    def __rmul__(self, c) -> "Weight":
        c = _frac(c)
        return Weight._raw(tuple(c * a for a in self.coords))

    def __mul__(self, c) -> "Weight":
        return self.__rmul__(c)

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords) if a and b), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def centered(self) -> "Weight":
        """Project onto the sum-zero hyperplane."""
        mean = sum(self.coords, Fraction(0)) / len(self.coords)
        return Weight(c - mean for c in self.coords)

    def _check(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise InvalidInput(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else str(mag)
            parts.append(f"{sign}{coef}e{i}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    def __repr__(self) -> str:
        return f"Weight({self})"

    def to_json(self) -> list:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Weight":
        return cls(Fraction(x) for x in data)


def reflect(lam: Weight, alpha: Weight) -> Weight:
    """Reflect ``lam`` in the hyperplane orthogonal to ``alpha``."""
    norm = alpha.dot(alpha)
    if norm == 0:
        raise InvalidInput("cannot reflect in the zero vector")
    f = 2 * lam.dot(alpha) / norm
    if not f:
        return lam
    return Weight._raw(tuple(x - f * a if a else x for x, a in zip(lam.coords, alpha.coords)))


def coroot_pairing(lam: Weight, alpha: Weight) -> Fraction:
    return 2 * lam.dot(alpha) / alpha.dot(alpha)


class WeylElement:
    """A Weyl group element stored as a reduced word in simple reflections.

    ``word`` is read right to left: ``(i, j)`` means s_i s_j.  The matrix on
    h* is built on first use.
    """

    __slots__ = ("word", "length", "image", "_roots", "_matrix")

    def __init__(self, word: tuple, simple_roots: Sequence[Weight], image: Weight | None = None):
        self.word = tuple(word)
        self.length = len(self.word)
        self.image = image
        self._roots = simple_roots
        self._matrix = None

    def apply_word(self, lam: Weight) -> Weight:
        for i in reversed(self.word):
            lam = reflect(lam, self._roots[i])
        return lam

    @property
    def matrix(self) -> tuple:
        if self._matrix is None:
            dim = self._roots[0].dim
            cols = [self.apply_word(Weight.basis(dim, j)).coords for j in range(dim)]
            self._matrix = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
        return self._matrix

    def __call__(self, lam: Weight) -> Weight:
        c = lam.coords
        return Weight(sum((m * x for m, x in zip(row, c) if m), Fraction(0)) for row in self.matrix)

    def __repr__(self) -> str:
        return f"WeylElement(word={self.word})"


@dataclass
class RootSystem:
    """A reduced root system with a chosen positivity.

    ``centered`` marks the sl family, whose weights live in n ambient
    coordinates but are compared modulo the all-ones vector.
    """

    family: str
    dim: int
    simple_roots: list
    positive_roots: list
    centered: bool = False
    _weyl: list | None = field(default=None, repr=False)

    def __post_init__(self):
        self._coord_cache: dict = {}
        self.positive_roots = sorted(set(self.positive_roots), key=self._height_key)
        self.roots = self.positive_roots + [-a for a in self.positive_roots]
        self._root_set = frozenset(self.roots)
        self._pos_set = frozenset(self.positive_roots)
        self._validate()

    def _height_key(self, a: Weight):
        return (self.height(a), tuple(-c for c in a.coords))

    def normalize(self, lam: Weight) -> Weight:
        return lam.centered() if self.centered else lam

    def simple_coordinates(self, a: Weight) -> list:
        """Coefficients of ``a`` in the simple roots (exact solve)."""
        a = self.normalize(a)
        hit = self._coord_cache.get(a)
        if hit is not None:
            return hit
        from .linalg import solve

        cols = [list(s.coords) for s in self.simple_roots]
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(self.dim)]
        sol = solve(mat, list(a.coords))
        if sol is None:
            raise InvalidInput(f"{a} is not in the span of the simple roots")
        self._coord_cache[a] = sol
        return sol

    def height(self, a: Weight) -> Fraction:
        return sum(self.simple_coordinates(a), Fraction(0))

    def _validate(self) -> None:
        from .linalg import rank

        if rank([list(s.coords) for s in self.simple_roots]) != len(self.simple_roots):
            raise InvalidInput("simple roots are not linearly independent")
        for a in self.positive_roots:
            coeffs = self.simple_coordinates(a)
            if any(c < 0 or c.denominator != 1 for c in coeffs):
                raise InvalidInput(f"{a} is not a nonnegative integer combination of simple roots")
        if self._pos_set & frozenset(-a for a in self.positive_roots):
            raise InvalidInput("positive roots meet their negatives")

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def is_root(self, a: Weight) -> bool:
        return a in self._root_set

    def is_positive(self, a: Weight) -> bool:
        return a in self._pos_set

    def inner(self, x: Weight, y: Weight) -> Fraction:
        return x.dot(y)

    def weyl_group(self) -> list:
        if self._weyl is None:
            self._weyl = weyl_group(self)
        return self._weyl

    def weyl_by_length(self) -> dict:
        out: dict[int, list] = {}
        for w in self.weyl_group():
            out.setdefault(w.length, []).append(w)
        return out

    def dominant_representative(self, lam: Weight) -> Weight:
        lam = self.normalize(lam)
        changed = True
        while changed:
            changed = False
            for s in self.simple_roots:
                if lam.dot(s) < 0:
                    lam = reflect(lam, s)
                    changed = True
        return lam

    def components(self) -> list:
        """Simple roots grouped into connected components of the Dynkin diagram."""
        n = self.rank
        seen: set[int] = set()
        comps = []
        for i in range(n):
            if i in seen:
                continue
            comp, stack = [], [i]
            seen.add(i)
            while stack:
                j = stack.pop()
                comp.append(j)
                for k in range(n):
                    if k not in seen and self.simple_roots[j].dot(self.simple_roots[k]) != 0:
                        seen.add(k)
                        stack.append(k)
            comps.append(sorted(comp))
        return comps

    def highest_roots(self) -> list:
        """Highest root of each irreducible component."""
        out = []
        for comp in self.components():
            members = [
                a for a in self.positive_roots
                if all(c == 0 for i, c in enumerate(self.simple_coordinates(a)) if i not in comp)
            ]
            out.append(max(members, key=self.height))
        return out


def delta(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots."""
    total = Weight.zero(rs.dim)
    for a in rs.positive_roots:
        total = total + a
    return Fraction(1, 2) * total


def weyl_group(rs: RootSystem) -> list:
    """Enumerate W by breadth-first search over simple reflections.

    Elements are keyed by their image of the regular weight delta, so the BFS
    depth is the reduced length.  The inversion count
    #{a > 0 : <a, w(delta)> < 0}, which is the length of w^-1 and hence of w,
    is checked against it.
    """
    d = delta(rs)
    simple = rs.simple_roots
    ident = WeylElement((), simple, d)
    seen = {d}
    order = [ident]
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for i, s in enumerate(simple):
            img = reflect(w.image, s)
            if img in seen:
                continue
            seen.add(img)
            nw = WeylElement((i,) + w.word, simple, img)
            order.append(nw)
            queue.append(nw)
    for w in order:
        n_inv = sum(1 for a in rs.positive_roots if a.dot(w.image) < 0)
        if n_inv != w.length:
            raise AssertionError(f"length mismatch for word {w.word}: {n_inv} != {w.length}")
    return order


def same_w_orbit(lam: Weight, mu: Weight, rs: RootSystem) -> bool:
    if lam.dim != mu.dim or lam.dim != rs.dim:
        raise InvalidInput("weights must live in the ambient space of the root system")
    return rs.dominant_representative(lam) == rs.dominant_representative(mu)


def is_dominant(lam: Weight, positivity: Iterable[Weight], strict: bool = False) -> bool:
    if strict:
        return all(lam.dot(a) > 0 for a in positivity)
    return all(lam.dot(a) >= 0 for a in positivity)


def weyl_dimension(mu: Weight, positive_roots: Sequence[Weight]) -> Fraction:
    """Weyl dimension formula for the highest weight ``mu``."""
    if not positive_roots:
        return Fraction(1)
    rho = Fraction(1, 2) * sum(positive_roots[1:], positive_roots[0])
    num = Fraction(1)
    for a in positive_roots:
        num *= (mu + rho).dot(a) / rho.dot(a)
    return num


def sub_root_system(rs: RootSystem, roots: Iterable[Weight], family: str = "sub") -> RootSystem | None:
    """Root subsystem spanned by ``roots`` (closed under negation), with the
    positivity inherited from ``rs``. Returns None for the empty system."""
    roots = set(roots)
    pos = [a for a in roots if rs.is_positive(a)]
    if not pos:
        return None
    simple = [a for a in pos if not any(
        (a - b) in roots and rs.is_positive(a - b) for b in pos if b != a)]
    return RootSystem(family, rs.dim, simple, pos, centered=rs.centered)

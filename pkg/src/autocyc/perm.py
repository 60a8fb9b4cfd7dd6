"""Permutation arithmetic and breadth-first enumeration of small finite groups.

Conventions used throughout the package:

* permutations are 0-based image tuples; ``compose(p, q)`` applies ``p``
  first and then ``q``;
* a :class:`FiniteGroup` stores its elements in the order discovered by a
  Cayley breadth-first walk from the identity, so element indices are
  stable for a fixed generator list;
* the identity always has index 0.
"""

from __future__ import annotations

import hashlib
import json
import re
from array import array
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import DegreeMismatch, FileFormatError, OrderBoundExceeded

DEFAULT_ORDER_BOUND = 4096
# Above this order the multiplication table (order^2 int16 entries) would
# pass ~8 MB, so composition falls back to permutation arithmetic.
TABLE_CACHE_LIMIT = 2048


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., degree - 1}`` stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        seen = [False] * n
        for v in self.images:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")
            seen[v] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degree {p.degree} != {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[v] for v in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p.images):
        inv[v] = i
    return Permutation(tuple(inv))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``."""
    body = text.strip()
    if body in ("", "()"):
        return identity(degree)
    if not re.fullmatch(r"(\s*\([0-9,\s]+\)\s*)+", body):
        raise FileFormatError(f"bad cycle notation: {text!r}")
    images = list(range(degree))
    moved: set[int] = set()
    for group in re.findall(r"\(([0-9,\s]+)\)", body):
        points = [int(tok) - 1 for tok in re.split(r"[\s,]+", group.strip()) if tok]
        if len(points) < 2:
            continue
        for pt in points:
            if not 0 <= pt < degree:
                raise FileFormatError(f"point {pt + 1} out of range in {text!r}")
            if pt in moved:
                raise FileFormatError(f"point {pt + 1} repeated in {text!r}")
            moved.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation(tuple(images))


class FiniteGroup:
    """A fully enumerated permutation group with stable element indexing.

    ``elements[0]`` is the identity; the remaining order is the breadth
    first closure order over the (deduplicated) generator list.  All public
    values are immutable; the private caches only memoize pure results.
    """

    def __init__(
        self,
        name: str,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        words: Sequence[tuple[int, ...]],
        parents: Sequence[tuple[int, int]],
        generator_names: Sequence[str] | None = None,
        cache_tables: bool = True,
    ) -> None:
        self.name = name
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index_of = {p: i for i, p in enumerate(self.elements)}
        self.words = tuple(words)
        self.parents = tuple(parents)
        if generator_names is None:
            generator_names = [f"g{i}" for i in range(len(self.generators))]
        self.generator_names = tuple(generator_names)
        self.cache_tables = cache_tables
        self._table: array | None = None
        self._inverses: tuple[int, ...] | None = None
        self._orders: list[int | None] = [None] * len(self.elements)
        self._cyclic: dict[int, frozenset[int]] = {}
        self._pairs: dict[tuple[int, int], bool] = {}
        self._center: frozenset[int] | None = None
        self._centralizers: dict[int, frozenset[int]] = {}
        self._classes: tuple[frozenset[int], ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index_of[g] for g in self.generators)

    # -- multiplication ------------------------------------------------

    def _ensure_table(self) -> array | None:
        if not self.cache_tables or self.order > TABLE_CACHE_LIMIT:
            return None
        if self._table is None:
            n = self.order
            typecode = "h" if n <= 32767 else "l"
            tab = array(typecode, bytes(0))
            idx = self.index_of
            elems = self.elements
            for i in range(n):
                pi = elems[i].images
                row = [idx[Permutation(tuple(elems[j].images[v] for v in pi))] for j in range(n)]
                tab.extend(row)
            self._table = tab
        return self._table

    def mul(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]`` (apply ``i`` first)."""
        tab = self._ensure_table()
        if tab is not None:
            return tab[i * self.order + j]
        return self.index_of[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = tuple(self.index_of[inverse(p)] for p in self.elements)
        return self._inverses[i]

    def conj(self, i: int, j: int) -> int:
        """Index of ``elements[j]^-1 * elements[i] * elements[j]``."""
        return self.mul(self.mul(self.inv(j), i), j)

    def commutes(self, i: int, j: int) -> bool:
        return self.mul(i, j) == self.mul(j, i)

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(i), -k)
        acc = 0
        base = i
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    # -- basic structure -----------------------------------------------

    def element_order(self, i: int) -> int:
        cached = self._orders[i]
        if cached is None:
            k, cur = 1, i
            while cur != 0:
                cur = self.mul(cur, i)
                k += 1
            cached = k
            self._orders[i] = k
        return cached

    def cyclic_subgroup(self, i: int) -> frozenset[int]:
        """The subgroup generated by one element, as an index set."""
        got = self._cyclic.get(i)
        if got is None:
            out = {0}
            cur = i
            while cur != 0:
                out.add(cur)
                cur = self.mul(cur, i)
            got = frozenset(out)
            self._cyclic[i] = got
            self._orders[i] = len(got)
        return got

    def generated_closure(self, seeds: Iterable[int]) -> frozenset[int]:
        """Least subset containing the seeds and identity, closed under mul."""
        seeds = sorted(set(seeds))
        if not seeds:
            return frozenset({0})
        seen = {0}
        seen.update(seeds)
        queue = deque(seen)
        while queue:
            e = queue.popleft()
            for s in seeds:
                t = self.mul(e, s)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return frozenset(seen)

    def is_cyclic_pair(self, i: int, j: int) -> bool:
        """True iff elements ``i`` and ``j`` generate a cyclic subgroup.

        Non-commuting pairs short-circuit to False; otherwise the closure
        is cyclic iff it contains an element of full order.
        """
        if i == j:
            return True
        key = (i, j) if i < j else (j, i)
        got = self._pairs.get(key)
        if got is None:
            if not self.commutes(i, j):
                got = False
            else:
                sub = self.generated_closure((i, j))
                size = len(sub)
                got = any(self.element_order(e) == size for e in sub)
            self._pairs[key] = got
        return got

    def center(self) -> frozenset[int]:
        if self._center is None:
            n = self.order
            self._center = frozenset(
                z for z in range(n) if all(self.mul(z, g) == self.mul(g, z) for g in range(n))
            )
        return self._center

    def centralizer(self, i: int) -> frozenset[int]:
        got = self._centralizers.get(i)
        if got is None:
            got = frozenset(
                g for g in range(self.order) if self.mul(g, i) == self.mul(i, g)
            )
            self._centralizers[i] = got
        return got

    def conjugacy_classes(self) -> tuple[frozenset[int], ...]:
        """Conjugation orbits, ordered by least member; identity class first."""
        if self._classes is None:
            n = self.order
            seen = [False] * n
            classes = []
            for i in range(n):
                if seen[i]:
                    continue
                cls = {self.conj(i, g) for g in range(n)}
                for e in cls:
                    seen[e] = True
                classes.append(frozenset(cls))
            self._classes = tuple(classes)
        return self._classes

    def exponent(self) -> int:
        exp = 1
        for i in range(self.order):
            o = self.element_order(i)
            exp = exp * o // gcd(exp, o)
        return exp

    # -- presentation --------------------------------------------------

    def word_name(self, i: int) -> str:
        """Render the BFS word of an element, e.g. ``a^2*b``."""
        if i == 0:
            return "1"
        word = self.words[i]
        parts: list[str] = []
        run_gen, run_len = word[0], 0
        for g in word:
            if g == run_gen:
                run_len += 1
            else:
                parts.append(self._run(run_gen, run_len))
                run_gen, run_len = g, 1
        parts.append(self._run(run_gen, run_len))
        return "*".join(parts)

    def _run(self, gen: int, count: int) -> str:
        name = self.generator_names[gen]
        return name if count == 1 else f"{name}^{count}"


def enumerate_group(
    generators: Sequence[Permutation],
    degree: int,
    name: str = "G",
    bound: int = DEFAULT_ORDER_BOUND,
    generator_names: Sequence[str] | None = None,
    cache_tables: bool = True,
) -> FiniteGroup:
    """Breadth-first closure of a generator list into a FiniteGroup.

    From each dequeued element ``e`` the products ``e * g`` are appended in
    generator order, so the element indexing is deterministic for a fixed
    generator list.  Exact duplicate generators are dropped.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens: list[Permutation] = []
    names: list[str] = []
    for pos, g in enumerate(generators):
        if g.degree != degree:
            raise DegreeMismatch(f"generator degree {g.degree} != {degree}")
        if g in gens:
            continue
        gens.append(g)
        if generator_names is not None:
            names.append(generator_names[pos])
    if generator_names is None:
        names = [f"g{i}" for i in range(len(gens))]

    ident = identity(degree)
    elements = [ident]
    index = {ident: 0}
    words: list[tuple[int, ...]] = [()]
    parents: list[tuple[int, int]] = [(-1, -1)]
    queue = deque([0])
    while queue:
        e = queue.popleft()
        pe = elements[e]
        for gi, g in enumerate(gens):
            prod = compose(pe, g)
            if prod in index:
                continue
            if len(elements) >= bound:
                raise OrderBoundExceeded(
                    f"group generated on {degree} points exceeds bound {bound}"
                )
            index[prod] = len(elements)
            elements.append(prod)
            words.append(words[e] + (gi,))
            parents.append((e, gi))
            queue.append(index[prod])
    return FiniteGroup(
        name=name,
        degree=degree,
        generators=gens,
        elements=elements,
        words=words,
        parents=parents,
        generator_names=names,
        cache_tables=cache_tables,
    )


# -- module level mirrors of the method API ---------------------------------


def element_order(group: FiniteGroup, i: int) -> int:
    return group.element_order(i)


def generated_closure(group: FiniteGroup, seeds: Iterable[int]) -> frozenset[int]:
    return group.generated_closure(seeds)


def is_cyclic_pair(group: FiniteGroup, i: int, j: int) -> bool:
    return group.is_cyclic_pair(i, j)


def center(group: FiniteGroup) -> frozenset[int]:
    return group.center()


def centralizer(group: FiniteGroup, i: int) -> frozenset[int]:
    return group.centralizer(i)


def conjugacy_classes(group: FiniteGroup) -> tuple[frozenset[int], ...]:
    return group.conjugacy_classes()


# -- group files -------------------------------------------------------------


def group_hash(group: FiniteGroup) -> str:
    """Hash of degree plus the exact generator list; pins element indexing."""
    h = hashlib.sha256()
    h.update(str(group.degree).encode())
    for g in group.generators:
        h.update(b"|")
        h.update(",".join(map(str, g.images)).encode())
    return h.hexdigest()


def group_to_json(group: FiniteGroup) -> dict:
    return {
        "name": group.name,
        "degree": group.degree,
        "generators": [list(g.images) for g in group.generators],
        "generator_names": list(group.generator_names),
    }


def group_from_json(obj: dict, bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    try:
        name = str(obj["name"])
        degree = int(obj["degree"])
        raw = obj["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad group file: {exc}") from exc
    gens = []
    for entry in raw:
        if isinstance(entry, str):
            gens.append(parse_cycles(entry, degree))
        else:
            try:
                gens.append(Permutation(tuple(int(v) for v in entry)))
            except (TypeError, ValueError) as exc:
                raise FileFormatError(f"bad generator {entry!r}: {exc}") from exc
        if gens[-1].degree != degree:
            raise FileFormatError(f"generator degree {gens[-1].degree} != {degree}")
    names = obj.get("generator_names")
    if names is not None and len(names) != len(raw):
        raise FileFormatError("generator_names length mismatch")
    return enumerate_group(gens, degree, name=name, bound=bound, generator_names=names)


def load_group(path: str, bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read group file {path}: {exc}") from exc
    return group_from_json(obj, bound=bound)

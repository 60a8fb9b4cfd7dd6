"""Automorphisms stored as element-index tables, actions A <= Aut(G), and
the orbit machinery built on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import (
    ActionCapExceeded,
    DegreeMismatch,
    DoesNotNormalize,
    FileFormatError,
    GroupTooLarge,
    NoSuchOrder,
    NotAHomomorphism,
    NotBijective,
)
from .perm import FiniteGroup, Permutation, compose, group_hash, inverse

DEFAULT_ACTION_CAP = 4096
DEFAULT_AUT_BOUND = 128

KIND_TRIVIAL = "trivial"
KIND_INNER = "inner"
KIND_FULL = "full"
KIND_EXPLICIT = "explicit"


@dataclass(frozen=True)
class Automorphism:
    """A group automorphism as the tuple of element-index images."""

    table: tuple[int, ...]

    def apply(self, i: int) -> int:
        return self.table[i]

    def apply_set(self, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(self.table[i] for i in subset)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.table))


def identity_automorphism(group: FiniteGroup) -> Automorphism:
    return Automorphism(tuple(range(group.order)))


def compose_automorphisms(f: Automorphism, g: Automorphism) -> Automorphism:
    """Apply ``f`` first, then ``g``; matches permutation composition."""
    return Automorphism(tuple(g.table[v] for v in f.table))


def validate_automorphism(group: FiniteGroup, aut: Automorphism) -> None:
    """Raise unless the table is a bijection fixing 0 that preserves mul."""
    n = group.order
    if len(aut.table) != n or len(set(aut.table)) != n:
        raise NotBijective("table is not a bijection on element indices")
    if aut.table[0] != 0:
        raise NotAHomomorphism("table moves the identity")
    for i in range(n):
        fi = aut.table[i]
        for g in group.generator_indices():
            if aut.table[group.mul(i, g)] != group.mul(fi, aut.table[g]):
                raise NotAHomomorphism(f"table breaks multiplication at ({i}, {g})")


class AutAction:
    """A set of automorphism generators with a kind tag.

    ``closure()`` materializes the generated group of tables on demand; the
    orbit computations below never need it.
    """

    def __init__(
        self,
        group: FiniteGroup,
        generators: tuple[Automorphism, ...],
        kind: str,
        cap: int = DEFAULT_ACTION_CAP,
    ) -> None:
        self.group = group
        self.generators = generators
        self.kind = kind
        self.cap = cap
        self._closure: tuple[Automorphism, ...] | None = None
        self._orbits: OrbitPartition | None = None
        self._delta = None  # filled in by delta.build_delta

    def __repr__(self) -> str:
        return f"AutAction(kind={self.kind}, gens={len(self.generators)})"

    def closure(self) -> tuple[Automorphism, ...]:
        if self._closure is None:
            self._closure = close_tables(self.generators, self.cap)
        return self._closure


def close_tables(
    gens: tuple[Automorphism, ...], cap: int
) -> tuple[Automorphism, ...]:
    """Composition closure of automorphism tables, identity included."""
    if not gens:
        raise ValueError("cannot close an empty table list without a degree")
    n = len(gens[0].table)
    ident = Automorphism(tuple(range(n)))
    seen = {ident.table: ident}
    frontier = [ident]
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                h = compose_automorphisms(f, g)
                if h.table not in seen:
                    if len(seen) >= cap:
                        raise ActionCapExceeded(f"action closure exceeds cap {cap}")
                    seen[h.table] = h
                    new.append(h)
        frontier = new
    return tuple(seen.values())


def trivial_action(group: FiniteGroup, cap: int = DEFAULT_ACTION_CAP) -> AutAction:
    return AutAction(group, (identity_automorphism(group),), KIND_TRIVIAL, cap)


def inner_generators(group: FiniteGroup, cap: int = DEFAULT_ACTION_CAP) -> AutAction:
    """Conjugation maps by each group generator (deduplicated)."""
    tables = []
    for g in group.generator_indices():
        table = tuple(group.conj(x, g) for x in range(group.order))
        if table not in tables:
            tables.append(table)
    if not tables:
        tables.append(tuple(range(group.order)))
    return AutAction(group, tuple(Automorphism(t) for t in tables), KIND_INNER, cap)


def from_conjugator(group: FiniteGroup, c: Permutation) -> Automorphism:
    """The map g -> c^-1 g c as an element-index table."""
    if c.degree != group.degree:
        raise DoesNotNormalize(f"conjugator degree {c.degree} != {group.degree}")
    cinv = inverse(c)
    table = []
    for p in group.elements:
        image = compose(compose(cinv, p), c)
        idx = group.index_of.get(image)
        if idx is None:
            raise DoesNotNormalize(f"conjugate of {p} falls outside the group")
        table.append(idx)
    return Automorphism(tuple(table))


def conjugation_action(
    group: FiniteGroup,
    conjugators: list[Permutation],
    kind: str = KIND_EXPLICIT,
    cap: int = DEFAULT_ACTION_CAP,
) -> AutAction:
    gens = tuple(from_conjugator(group, c) for c in conjugators)
    return AutAction(group, gens, kind, cap)


def extend_generator_images(
    group: FiniteGroup, images: list[int]
) -> tuple[int, ...] | None:
    """Extend generator images along the BFS words, or None on collision."""
    n = group.order
    table = [-1] * n
    table[0] = 0
    used = [False] * n
    used[0] = True
    for k in range(1, n):
        parent, gen_pos = group.parents[k]
        img = group.mul(table[parent], images[gen_pos])
        if used[img]:
            return None
        table[k] = img
        used[img] = True
    return tuple(table)


def explicit_automorphism(group: FiniteGroup, images: list[int]) -> Automorphism:
    """Automorphism determined by one image per group generator.

    Checking multiplication against every (element, generator) pair proves
    full multiplicativity by induction along the words.
    """
    if len(images) != len(group.generators):
        raise NotAHomomorphism(
            f"need {len(group.generators)} generator images, got {len(images)}"
        )
    gen_idx = group.generator_indices()
    for pos, img in enumerate(images):
        if group.element_order(img) != group.element_order(gen_idx[pos]):
            raise NotAHomomorphism(
                f"generator {pos} image has wrong order "
                f"({group.element_order(img)} != {group.element_order(gen_idx[pos])})"
            )
    table = extend_generator_images(group, list(images))
    if table is None:
        raise NotBijective("generator images collide while extending")
    for i in range(group.order):
        for pos, g in enumerate(gen_idx):
            if table[group.mul(i, g)] != group.mul(table[i], images[pos]):
                raise NotAHomomorphism(f"images break multiplication at ({i}, {g})")
    return Automorphism(table)


def close_action(
    group: FiniteGroup,
    gens: list[Automorphism],
    cap: int = DEFAULT_ACTION_CAP,
    kind: str = KIND_EXPLICIT,
) -> AutAction:
    """Action whose member list is the full composition closure."""
    base = tuple(gens) if gens else (identity_automorphism(group),)
    action = AutAction(group, base, kind, cap)
    action._closure = close_tables(base, cap)
    return action


def full_aut_brute(
    group: FiniteGroup,
    bound: int = DEFAULT_AUT_BOUND,
    cap: int = DEFAULT_ACTION_CAP,
) -> AutAction:
    """Every automorphism, by trying order-preserving generator images.

    An automorphism is fixed by its generator images, so the collected
    survivors are already closed under composition.
    """
    n = group.order
    if n > bound:
        raise GroupTooLarge(f"|G| = {n} exceeds brute-force bound {bound}")

    # greedy small generating set over ascending indices
    gen_set: list[int] = []
    closure: frozenset[int] = frozenset({0})
    for i in range(1, n):
        if i not in closure:
            gen_set.append(i)
            closure = group.generated_closure(gen_set)
            if len(closure) == n:
                break

    # rebase BFS words on the greedy generators for fast extension
    words_group = _rebase(group, gen_set)

    candidates = [
        [j for j in range(n) if group.element_order(j) == group.element_order(g)]
        for g in gen_set
    ]
    found: list[Automorphism] = []
    gen_positions = list(range(len(gen_set)))
    for combo in product(*candidates):
        table = extend_generator_images(words_group, list(combo))
        if table is None:
            continue
        ok = True
        for i in range(n):
            ti = table[i]
            for pos in gen_positions:
                if table[group.mul(i, gen_set[pos])] != group.mul(ti, combo[pos]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            if len(found) >= cap:
                raise ActionCapExceeded(f"automorphism count exceeds cap {cap}")
            found.append(Automorphism(table))
    action = AutAction(group, tuple(found), KIND_FULL, cap)
    action._closure = tuple(found)
    return action


def _rebase(group: FiniteGroup, gen_indices: list[int]) -> FiniteGroup:
    """A view of the group whose BFS parents follow the given generators.

    Only ``parents``, ``mul`` and ``order`` are used by the extension code,
    so a light shim object is enough.
    """
    parents: list[tuple[int, int]] = [(-1, -1)] * group.order
    seen = [False] * group.order
    seen[0] = True
    queue = [0]
    while queue:
        nxt: list[int] = []
        for e in queue:
            for pos, g in enumerate(gen_indices):
                t = group.mul(e, g)
                if not seen[t]:
                    seen[t] = True
                    parents[t] = (e, pos)
                    nxt.append(t)
        queue = nxt
    if not all(seen):
        raise AssertionError("generating set does not generate")

    class _Shim:
        pass

    shim = _Shim()
    shim.order = group.order
    shim.parents = tuple(parents)
    shim.mul = group.mul
    return shim  # type: ignore[return-value]


# -- orbits ------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitPartition:
    """A-orbits on nonidentity element indices.

    ``orbit_of[i]`` is the orbit id (-1 for the identity); representatives
    are the least member of each orbit, listed in ascending order.
    """

    orbit_of: tuple[int, ...]
    representatives: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.representatives)


def element_orbits(group: FiniteGroup, action: AutAction) -> OrbitPartition:
    """Orbits under the generator tables; closure of A is not needed."""
    if action._orbits is not None:
        return action._orbits
    n = group.order
    orbit_of = [-1] * n
    reps: list[int] = []
    members: list[tuple[int, ...]] = []
    tables = [a.table for a in action.generators]
    for i in range(1, n):
        if orbit_of[i] != -1:
            continue
        oid = len(reps)
        orbit = [i]
        orbit_of[i] = oid
        k = 0
        while k < len(orbit):
            x = orbit[k]
            k += 1
            for t in tables:
                y = t[x]
                if orbit_of[y] == -1:
                    orbit_of[y] = oid
                    orbit.append(y)
        reps.append(i)
        members.append(tuple(sorted(orbit)))
    part = OrbitPartition(tuple(orbit_of), tuple(reps), tuple(members))
    action._orbits = part
    return part


def subgroup_orbits(
    group: FiniteGroup, action: AutAction, subgroups: list[frozenset[int]]
) -> list[list[frozenset[int]]]:
    """Orbits of the induced action on a closed family of subgroups."""
    index = {s: k for k, s in enumerate(subgroups)}
    seen = [False] * len(subgroups)
    orbits: list[list[frozenset[int]]] = []
    for k, sub in enumerate(subgroups):
        if seen[k]:
            continue
        orbit = [sub]
        seen[k] = True
        pos = 0
        while pos < len(orbit):
            cur = orbit[pos]
            pos += 1
            for a in action.generators:
                img = a.apply_set(cur)
                j = index.get(img)
                if j is None:
                    raise AssertionError("subgroup family not closed under action")
                if not seen[j]:
                    seen[j] = True
                    orbit.append(img)
        orbits.append(sorted(orbit, key=min))
    return orbits


def subgroup_orbits_order_p(
    group: FiniteGroup, action: AutAction, p: int
) -> list[list[frozenset[int]]]:
    from .props import minimal_subgroups

    return subgroup_orbits(group, action, minimal_subgroups(group, p))


def normalizer_transitive_on_cyclic(
    group: FiniteGroup, action: AutAction, i: int
) -> bool:
    """Do the members of A fixing <x> setwise reach all of <x> - 1 from x?

    Needs the closure of A: stabilizer membership is a property of single
    automorphisms, not of generators.
    """
    if i == 0:
        raise ValueError("identity has no vertex")
    sub = group.cyclic_subgroup(i)
    target = sub - {0}
    orbit = set()
    for a in action.closure():
        if a.apply_set(sub) == sub:
            orbit.add(a.table[i])
    return orbit == target


def order_class_transitive(group: FiniteGroup, action: AutAction, n: int) -> bool:
    """True iff all elements of order n form one A-orbit."""
    elems = [i for i in range(group.order) if group.element_order(i) == n]
    if not elems:
        raise NoSuchOrder(f"no element of order {n}")
    part = element_orbits(group, action)
    if n == 1:
        return True
    first = part.orbit_of[elems[0]]
    return all(part.orbit_of[e] == first for e in elems)


def cyclic_subgroups_order_transitive(
    group: FiniteGroup, action: AutAction, n: int
) -> bool:
    """True iff all cyclic subgroups of order n form one orbit of A."""
    subs = sorted(
        {group.cyclic_subgroup(i) for i in range(group.order) if group.element_order(i) == n},
        key=min,
    )
    if not subs:
        raise NoSuchOrder(f"no element of order {n}")
    return len(subgroup_orbits(group, action, subs)) == 1


# -- action files ------------------------------------------------------------


def action_to_json(action: AutAction) -> dict:
    obj: dict = {"kind": action.kind, "group_hash": group_hash(action.group)}
    if action.kind not in (KIND_TRIVIAL, KIND_INNER, KIND_FULL):
        obj["tables"] = [list(a.table) for a in action.generators]
    return obj


def action_from_json(
    group: FiniteGroup, obj: dict, cap: int = DEFAULT_ACTION_CAP
) -> AutAction:
    kind = obj.get("kind")
    stored = obj.get("group_hash")
    if stored is not None and stored != group_hash(group):
        raise FileFormatError(
            "action file group_hash does not match the loaded group; "
            "element indexing would be misapplied"
        )
    if kind == KIND_TRIVIAL:
        return trivial_action(group, cap)
    if kind == KIND_INNER:
        return inner_generators(group, cap)
    if kind == KIND_FULL:
        return full_aut_brute(group, cap=cap)
    if kind != KIND_EXPLICIT:
        raise FileFormatError(f"unknown action kind {kind!r}")
    gens: list[Automorphism] = []
    for table in obj.get("tables", []):
        aut = Automorphism(tuple(int(v) for v in table))
        validate_automorphism(group, aut)
        gens.append(aut)
    for conj in obj.get("conjugators", []):
        gens.append(from_conjugator(group, Permutation(tuple(int(v) for v in conj))))
    for images in obj.get("generator_images", []):
        gens.append(explicit_automorphism(group, [int(v) for v in images]))
    if not gens:
        raise FileFormatError("explicit action file carries no generators")
    return AutAction(group, tuple(gens), KIND_EXPLICIT, cap)


def load_action(group: FiniteGroup, path: str, cap: int = DEFAULT_ACTION_CAP) -> AutAction:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read action file {path}: {exc}") from exc
    return action_from_json(group, obj, cap=cap)

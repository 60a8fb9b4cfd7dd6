"""Structural predicates on finite groups: profiles, minimal subgroups,
Frobenius detection, and the cyclic-compatibility sets Cyc and K."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import LatticeCapExceeded, NotAbelian, PrimeNotDividing
from .perm import FiniteGroup

DEFAULT_LATTICE_CAP = 512


def prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


@dataclass(frozen=True)
class GroupProfile:
    order: int
    factorization: tuple[tuple[int, int], ...]
    exponent: int
    abelian: bool
    nilpotent: bool
    cyclic: bool
    center_size: int

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "factorization": {str(p): e for p, e in self.factorization},
            "exponent": self.exponent,
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "cyclic": self.cyclic,
            "center_size": self.center_size,
        }


@dataclass(frozen=True)
class FrobeniusWitness:
    kernel: frozenset[int]
    complement_order: int


def is_abelian(group: FiniteGroup) -> bool:
    gens = group.generator_indices()
    return all(group.commutes(a, b) for a in gens for b in gens)


def is_cyclic(group: FiniteGroup) -> bool:
    n = group.order
    return any(group.element_order(i) == n for i in range(n))


def lower_central_series(group: FiniteGroup) -> list[frozenset[int]]:
    """Descending commutator series, iterated to stabilization."""
    current = frozenset(range(group.order))
    series = [current]
    while True:
        comms = {
            group.mul(group.mul(group.mul(group.inv(x), group.inv(g)), x), g)
            for x in current
            for g in range(group.order)
        }
        nxt = group.generated_closure(comms)
        series.append(nxt)
        if nxt == current:
            return series
        if nxt == frozenset({0}):
            return series
        current = nxt


def is_nilpotent(group: FiniteGroup) -> bool:
    return lower_central_series(group)[-1] == frozenset({0})


def profile(group: FiniteGroup) -> GroupProfile:
    return GroupProfile(
        order=group.order,
        factorization=tuple(sorted(prime_factorization(group.order).items())),
        exponent=group.exponent(),
        abelian=is_abelian(group),
        nilpotent=is_nilpotent(group),
        cyclic=is_cyclic(group),
        center_size=len(group.center()),
    )


def is_p_group(group: FiniteGroup) -> int | None:
    """The unique prime dividing the order, or None."""
    fact = prime_factorization(group.order)
    if len(fact) == 1:
        return next(iter(fact))
    return None


def minimal_subgroups(group: FiniteGroup, p: int) -> list[frozenset[int]]:
    """All subgroups of order p, sorted by least member."""
    if group.order % p != 0:
        raise PrimeNotDividing(f"{p} does not divide |G| = {group.order}")
    subs = {
        group.cyclic_subgroup(i)
        for i in range(1, group.order)
        if group.element_order(i) == p
    }
    return sorted(subs, key=min)


def unique_subgroup_of_order_p(group: FiniteGroup, p: int) -> bool:
    return len(minimal_subgroups(group, p)) == 1


def is_generalized_quaternion(group: FiniteGroup) -> bool:
    """Noncyclic 2-group of order >= 8 with a unique involution."""
    n = group.order
    if n < 8 or n & (n - 1):
        return False
    if is_cyclic(group):
        return False
    involutions = [i for i in range(1, n) if group.element_order(i) == 2]
    return len(involutions) == 1


def abelian_type(group: FiniteGroup) -> tuple[int, ...]:
    """Prime-power invariants of an abelian group.

    For each prime the multiset of cyclic factor orders is the conjugate of
    the sequence log_p |{g : g^(p^i) = 1}| of successive differences.
    """
    if not is_abelian(group):
        raise NotAbelian(f"{group.name} is not abelian")
    orders = [group.element_order(i) for i in range(group.order)]
    invariants: list[int] = []
    for p, e_max in sorted(prime_factorization(group.order).items()):
        diffs = []
        prev = 0
        for i in range(1, e_max + 1):
            pi = p**i
            count = sum(1 for o in orders if pi % o == 0)
            e_i = 0
            while p**e_i < count:
                e_i += 1
            if p**e_i != count:
                raise AssertionError("solution counts are not p-powers")
            diffs.append(e_i - prev)
            prev = e_i
        # conjugate partition: factor j has height = #{i : diffs[i] >= j+1}
        for j in range(diffs[0] if diffs else 0):
            height = sum(1 for d in diffs if d >= j + 1)
            invariants.append(p**height)
    return tuple(invariants)


def is_homocyclic(group: FiniteGroup) -> bool:
    """Direct product of pairwise isomorphic cyclic p-groups (rank >= 1)."""
    if group.order == 1 or not is_abelian(group):
        return False
    if len(prime_factorization(group.order)) != 1:
        return False
    typ = abelian_type(group)
    return len(set(typ)) == 1


def all_elements_prime_order(group: FiniteGroup) -> bool:
    return all(is_prime(group.element_order(i)) for i in range(1, group.order))


def normal_subgroups(
    group: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP
) -> list[frozenset[int]]:
    """Every normal subgroup, as the join closure of class closures.

    A normal subgroup is a union of conjugacy classes and equals the join
    of the closures of the classes it contains, so closing the atom set
    under pairwise joins enumerates the whole lattice.
    """
    atoms = []
    lattice: set[frozenset[int]] = set()
    for cls in group.conjugacy_classes():
        closure = group.generated_closure(cls)
        if closure not in lattice:
            lattice.add(closure)
            atoms.append(closure)
    if len(lattice) > cap:
        raise LatticeCapExceeded(f"normal subgroup lattice exceeds {cap}")
    frontier = list(atoms)
    while frontier:
        new: list[frozenset[int]] = []
        for a in frontier:
            for b in sorted(lattice, key=lambda s: (len(s), sorted(s))):
                if a <= b or b <= a:
                    continue
                join = group.generated_closure(a | b)
                if join not in lattice:
                    lattice.add(join)
                    new.append(join)
                    if len(lattice) > cap:
                        raise LatticeCapExceeded(
                            f"normal subgroup lattice exceeds {cap}"
                        )
        frontier = new
    return sorted(lattice, key=lambda s: (len(s), sorted(s)))


def frobenius_witness(
    group: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP
) -> FrobeniusWitness | None:
    """Largest proper normal N whose nonidentity members have centralizer
    inside N; the classical criterion for a Frobenius kernel."""
    best: frozenset[int] | None = None
    for sub in normal_subgroups(group, cap=cap):
        if len(sub) in (1, group.order):
            continue
        if all(group.centralizer(x) <= sub for x in sub if x != 0):
            if best is None or len(sub) > len(best):
                best = sub
    if best is None:
        return None
    return FrobeniusWitness(kernel=best, complement_order=group.order // len(best))


def cyc_set(group: FiniteGroup, i: int) -> frozenset[int]:
    """Elements generating a cyclic subgroup together with element ``i``."""
    return frozenset(
        j for j in range(group.order) if group.is_cyclic_pair(i, j)
    ) | {0}


def kernel_k(group: FiniteGroup) -> frozenset[int]:
    """Intersection of all Cyc sets: the cyclic-with-everything elements.

    Restricting candidates to the center is sound because a cyclic pair
    always commutes.
    """
    out = set()
    for z in group.center():
        if all(group.is_cyclic_pair(z, x) for x in range(group.order)):
            out.add(z)
    return frozenset(out)


def elementary_abelian_prime(group: FiniteGroup) -> int | None:
    """The prime p when G is elementary abelian (exponent p); None otherwise."""
    if not is_abelian(group):
        return None
    exp = group.exponent()
    if is_prime(exp) and all(
        group.element_order(i) == exp for i in range(1, group.order)
    ):
        return exp
    return None


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1

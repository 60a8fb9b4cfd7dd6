"""Constructors for the groups and actions exercised by the verification
suite, with declared metadata that is re-checked against computed structure.

Presentation-defined groups (quaternion, the two order-27 groups) are
realized through explicit normal-form multiplication tables converted to
regular permutation representations; multiplication applies the left factor
first, so the regular action used is right multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable

from .actions import (
    AutAction,
    conjugation_action,
    explicit_automorphism,
    full_aut_brute,
    inner_generators,
    trivial_action,
)
from .errors import BadParameters, UnknownKey
from .perm import FiniteGroup, Permutation, compose, enumerate_group, inverse

FULL_ACTION_LIMIT = 128


# -- finite fields for the affine and multiplier constructions ---------------

# Monic irreducible polynomials with x a primitive root, coefficients in
# ascending degree order; every entry is revalidated by _Field.primitive().
_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
    (17, 2): (3, 16, 1),
    (19, 2): (2, 18, 1),
    (23, 2): (5, 21, 1),
    (29, 2): (2, 24, 1),
    (31, 2): (3, 29, 1),
}


class _Field:
    """GF(p^k) on integer indices encoding base-p coefficient vectors."""

    def __init__(self, p: int, k: int) -> None:
        poly = _IRREDUCIBLE.get((p, k))
        if poly is None:
            raise BadParameters(f"no irreducible polynomial on file for GF({p}^{k})")
        self.p = p
        self.k = k
        self.size = p**k
        self.poly = poly

    def digits(self, i: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(i % self.p)
            i //= self.p
        return out

    def index(self, digits: Iterable[int]) -> int:
        out = 0
        for c in reversed(list(digits)):
            out = out * self.p + (c % self.p)
        return out

    def add(self, i: int, j: int) -> int:
        a, b = self.digits(i), self.digits(j)
        return self.index((x + y) % self.p for x, y in zip(a, b))

    def mul(self, i: int, j: int) -> int:
        a, b = self.digits(i), self.digits(j)
        prod = [0] * (2 * self.k - 1)
        for d1, c1 in enumerate(a):
            if c1:
                for d2, c2 in enumerate(b):
                    prod[d1 + d2] = (prod[d1 + d2] + c1 * c2) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for t in range(self.k + 1):
                    prod[d - self.k + t] = (prod[d - self.k + t] - c * self.poly[t]) % self.p
        return self.index(prod[: self.k])

    def power(self, i: int, e: int) -> int:
        acc = 1
        base = i
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def element_order(self, i: int) -> int:
        cur, n = i, 1
        while cur != 1:
            cur = self.mul(cur, i)
            n += 1
            if n > self.size:
                raise BadParameters("polynomial table entry is not irreducible")
        return n

    def primitive(self) -> int:
        """The residue x, validated to have full multiplicative order."""
        x = self.p if self.k >= 2 else None
        if x is None or self.element_order(x) != self.size - 1:
            raise BadParameters(f"x is not primitive in GF({self.p}^{self.k})")
        return x


def smallest_primitive_root(p: int) -> int:
    from .props import prime_factorization

    primes = list(prime_factorization(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in primes):
            return g
    raise BadParameters(f"{p} has no primitive root; is it prime?")


# -- catalog entries ---------------------------------------------------------


@dataclass
class CatalogEntry:
    key: str
    group: FiniteGroup
    metadata: dict
    tagged: dict[str, int] = field(default_factory=dict)
    extra_actions: dict[str, Callable[[FiniteGroup], AutAction]] = field(default_factory=dict)
    _built: dict[str, AutAction] = field(default_factory=dict)

    def action_names(self) -> list[str]:
        names = ["trivial", "inner"]
        if self.group.order <= FULL_ACTION_LIMIT:
            names.append("full")
        names.extend(sorted(self.extra_actions))
        return names

    def action(self, name: str) -> AutAction:
        got = self._built.get(name)
        if got is None:
            if name == "trivial":
                got = trivial_action(self.group)
            elif name == "inner":
                got = inner_generators(self.group)
            elif name == "full":
                if self.group.order > FULL_ACTION_LIMIT:
                    raise UnknownKey(
                        f"full action unavailable for |G| = {self.group.order}"
                    )
                got = full_aut_brute(self.group)
            elif name in self.extra_actions:
                got = self.extra_actions[name](self.group)
            else:
                raise UnknownKey(f"no action {name!r} on catalog entry {self.key!r}")
            self._built[name] = got
        return got


def _metadata(
    order: int,
    abelian: bool,
    cyclic: bool,
    nilpotent: bool,
    exponent: int,
    homocyclic: bool = False,
    generalized_quaternion: bool = False,
    two_automorphic: bool = False,
    frobenius_kernel: int | None = None,
    frobenius_complement: int | None = None,
) -> dict:
    return {
        "order": order,
        "abelian": abelian,
        "cyclic": cyclic,
        "nilpotent": nilpotent,
        "exponent": exponent,
        "homocyclic": homocyclic,
        "generalized_quaternion": generalized_quaternion,
        "two_automorphic": two_automorphic,
        "frobenius_kernel": frobenius_kernel,
        "frobenius_complement": frobenius_complement,
    }


def _is_prime_power(n: int) -> bool:
    from .props import prime_factorization

    return len(prime_factorization(n)) == 1


def _regular_group(
    name: str,
    elems: list,
    mul: Callable,
    gens: list,
    gen_names: list[str],
) -> FiniteGroup:
    """Right-regular permutation representation of a multiplication table."""
    idx = {e: i for i, e in enumerate(elems)}
    degree = len(elems)
    perms = [
        Permutation(tuple(idx[mul(e, g)] for e in elems)) for g in gens
    ]
    group = enumerate_group(perms, degree, name=name, generator_names=gen_names)
    group._regular_rep = True
    return group


def _word_perm(group: FiniteGroup, *positions: int) -> Permutation:
    """Permutation of a product of generators, left factor applied first."""
    acc = group.elements[0]
    for pos in positions:
        acc = compose(acc, group.generators[pos])
    return acc


def _tag(group: FiniteGroup, perm: Permutation) -> int:
    return group.index_of[perm]


# -- constructors ------------------------------------------------------------


def cyclic(n: int, key: str | None = None) -> CatalogEntry:
    if n < 1:
        raise BadParameters("cyclic group order must be >= 1")
    images = tuple((i + 1) % n for i in range(n))
    group = enumerate_group(
        [Permutation(images)], n, name=key or f"z{n}", generator_names=["z"]
    )
    return CatalogEntry(
        key=key or f"z{n}",
        group=group,
        metadata=_metadata(n, True, True, True, n, homocyclic=_is_prime_power(n)),
    )


def elementary_abelian(p: int, k: int, key: str | None = None) -> CatalogEntry:
    from .props import is_prime

    if not is_prime(p) or k < 1:
        raise BadParameters("need a prime p and k >= 1")
    degree = p * k
    gens = []
    for j in range(k):
        images = list(range(degree))
        for off in range(p):
            images[j * p + off] = j * p + (off + 1) % p
        gens.append(Permutation(tuple(images)))
    name = key or f"e{p**k}"
    group = enumerate_group(
        gens, degree, name=name, generator_names=[f"x{j}" for j in range(k)]
    )
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(p**k, True, k == 1, True, p, homocyclic=True),
    )


def homocyclic(p: int, e: int, k: int, key: str | None = None) -> CatalogEntry:
    from .props import is_prime

    if not is_prime(p) or e < 1 or k < 1:
        raise BadParameters("need a prime p, e >= 1, k >= 1")
    m = p**e
    degree = m * k
    gens = []
    for j in range(k):
        images = list(range(degree))
        for off in range(m):
            images[j * m + off] = j * m + (off + 1) % m
        gens.append(Permutation(tuple(images)))
    name = key or f"hc_{p}_{e}_{k}"
    group = enumerate_group(
        gens, degree, name=name, generator_names=[f"x{j}" for j in range(k)]
    )
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(m**k, True, k == 1, True, m, homocyclic=True),
    )


def dihedral(n: int, key: str | None = None) -> CatalogEntry:
    """Dihedral group of order n (n even, n >= 4)."""
    if n < 4 or n % 2:
        raise BadParameters("dihedral order must be even and >= 4")
    m = n // 2
    name = key or f"d{n}"
    if m == 2:
        images_r = (1, 0, 2, 3)
        images_s = (0, 1, 3, 2)
        degree = 4
    else:
        images_r = tuple((i + 1) % m for i in range(m))
        images_s = tuple((m - i) % m for i in range(m))
        degree = m
    group = enumerate_group(
        [Permutation(images_r), Permutation(images_s)],
        degree,
        name=name,
        generator_names=["r", "s"],
    )
    exponent = m if m % 2 == 0 else 2 * m
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(
            n,
            abelian=(m == 2),
            cyclic=False,
            nilpotent=(n & (n - 1) == 0),
            exponent=exponent,
            homocyclic=(m == 2),
        ),
    )


def generalized_quaternion(order: int, key: str | None = None) -> CatalogEntry:
    """Q_{2^m} via its normal form table r^i s^j, s^2 = r^(2^(m-2))."""
    m = order.bit_length() - 1
    if order != 1 << m or m < 3:
        raise BadParameters("generalized quaternion order must be 2^m, m >= 3")
    half = order // 2  # order of r

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % half, l)
        i2 = (i - k) % half
        if l == 0:
            return (i2, 1)
        return ((i2 + half // 2) % half, 0)

    elems = [(i, j) for j in range(2) for i in range(half)]
    name = key or f"q{order}"
    group = _regular_group(name, elems, mul, [(1, 0), (0, 1)], ["r", "s"])
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(
            order, False, False, True, half, generalized_quaternion=True
        ),
        tagged={"minus_one": _tag(group, _pow_perm(group, 0, half // 2))},
    )


def _pow_perm(group: FiniteGroup, pos: int, k: int) -> Permutation:
    acc = group.elements[0]
    for _ in range(k):
        acc = compose(acc, group.generators[pos])
    return acc


def g27_with_tau(key: str = "g27") -> CatalogEntry:
    """The nonabelian group of order 27 with an order-9 element.

    Normal form a^i b^j with b^-1 a b = a^4; the named automorphism tau
    inverts a and fixes b.
    """

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        k, l = y
        # b^j a^k b^-j = a^(k * 7^j) since 7 = 4^-1 mod 9
        shift = k * pow(7, j, 9) % 9
        return ((i + shift) % 9, (j + l) % 3)

    elems = [(i, j) for j in range(3) for i in range(9)]
    group = _regular_group(key, elems, mul, [(1, 0), (0, 1)], ["a", "b"])

    a = _word_perm(group, 0)
    b = _word_perm(group, 1)
    tagged = {
        "a": _tag(group, a),
        "b": _tag(group, b),
        "a3": _tag(group, compose(compose(a, a), a)),
        "b2": _tag(group, compose(b, b)),
        "ba": _tag(group, compose(b, a)),
        "b2a": _tag(group, compose(compose(b, b), a)),
    }

    def build_inner_tau(g: FiniteGroup) -> AutAction:
        tau = explicit_automorphism(
            g, [g.inv(g.index_of[a]), g.index_of[b]]
        )
        base = inner_generators(g)
        return AutAction(g, base.generators + (tau,), "explicit")

    return CatalogEntry(
        key=key,
        group=group,
        metadata=_metadata(27, False, False, True, 9),
        tagged=tagged,
        extra_actions={"inner+tau": build_inner_tau},
    )


def extraspecial_27(key: str = "es27") -> CatalogEntry:
    """The exponent-3 extraspecial group of order 27 (Heisenberg mod 3)."""

    def mul(x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3)

    elems = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    group = _regular_group(key, elems, mul, [(1, 0, 0), (0, 1, 0)], ["c", "d"])
    c = _word_perm(group, 0)
    d = _word_perm(group, 1)
    comm = compose(compose(inverse(c), inverse(d)), compose(c, d))
    return CatalogEntry(
        key=key,
        group=group,
        metadata=_metadata(27, False, False, True, 3),
        tagged={"c": _tag(group, c), "d": _tag(group, d), "z": _tag(group, comm)},
    )


def frobenius(p: int, q: int, key: str | None = None) -> CatalogEntry:
    """Z_p : Z_q acting by x -> ax + b on p points, a of order q mod p."""
    from .props import is_prime

    if not is_prime(p) or q < 2 or (p - 1) % q != 0:
        raise BadParameters("need p prime and q >= 2 dividing p - 1")
    g = smallest_primitive_root(p)
    a = pow(g, (p - 1) // q, p)
    trans = Permutation(tuple((x + 1) % p for x in range(p)))
    mult = Permutation(tuple(a * x % p for x in range(p)))
    name = key or f"frob{p * q}"
    group = enumerate_group([trans, mult], p, name=name, generator_names=["t", "m"])
    lcm = p * q // gcd(p, q)
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(
            p * q,
            abelian=False,
            cyclic=False,
            nilpotent=False,
            exponent=lcm,
            frobenius_kernel=p,
            frobenius_complement=q,
        ),
    )


def frobenius_field(p: int, k: int, m: int, key: str | None = None) -> CatalogEntry:
    """Translations of GF(p^k) extended by a multiplier of order m."""
    fld = _Field(p, k)
    size = fld.size
    if m < 2 or (size - 1) % m != 0:
        raise BadParameters(f"multiplier order {m} must divide {size - 1}")
    w = fld.power(fld.primitive(), (size - 1) // m)
    gens = []
    names = []
    for j in range(k):
        basis = p**j
        gens.append(Permutation(tuple(fld.add(x, basis) for x in range(size))))
        names.append(f"t{j}")
    gens.append(Permutation(tuple(fld.mul(w, x) for x in range(size))))
    names.append("m")
    name = key or f"frob_{p}^{k}_{m}"
    group = enumerate_group(gens, size, name=name, generator_names=names)
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(
            size * m,
            abelian=False,
            cyclic=False,
            nilpotent=False,
            exponent=p * m,
            frobenius_kernel=size,
            frobenius_complement=m,
        ),
    )


def singer(p: int, k: int, key: str | None = None) -> CatalogEntry:
    """Elementary abelian p^k with the multiplicative group of GF(p^k)
    acting by a primitive-element conjugator; transitive on nonzero points."""
    if k < 2:
        raise BadParameters("singer needs k >= 2")
    fld = _Field(p, k)
    size = fld.size
    prim = fld.primitive()
    gens = []
    names = []
    for j in range(k):
        basis = p**j
        gens.append(Permutation(tuple(fld.add(x, basis) for x in range(size))))
        names.append(f"t{j}")
    name = key or f"singer_{p}_{k}"
    group = enumerate_group(gens, size, name=name, generator_names=names)
    multiplier = Permutation(tuple(fld.mul(prim, x) for x in range(size)))

    def build_singer(g: FiniteGroup) -> AutAction:
        return conjugation_action(g, [multiplier])

    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(size, True, False, True, p, homocyclic=True),
        extra_actions={"singer": build_singer},
    )


def direct_product(
    e1: CatalogEntry,
    e2: CatalogEntry,
    key: str | None = None,
    homocyclic_flag: bool = False,
) -> CatalogEntry:
    g1, g2 = e1.group, e2.group
    degree = g1.degree + g2.degree
    gens: list[Permutation] = []
    names: list[str] = []
    for gname, g in zip(g1.generator_names, g1.generators):
        gens.append(Permutation(g.images + tuple(range(g1.degree, degree))))
        names.append(gname)
    for gname, g in zip(g2.generator_names, g2.generators):
        gens.append(
            Permutation(tuple(range(g1.degree)) + tuple(v + g1.degree for v in g.images))
        )
        names.append(gname if gname not in names else gname + "'")
    name = key or f"{e1.key}x{e2.key}"
    group = enumerate_group(gens, degree, name=name, generator_names=names)
    m1, m2 = e1.metadata, e2.metadata
    o1, o2 = m1["order"], m2["order"]
    exponent = m1["exponent"] * m2["exponent"] // gcd(m1["exponent"], m2["exponent"])
    return CatalogEntry(
        key=name,
        group=group,
        metadata=_metadata(
            o1 * o2,
            abelian=m1["abelian"] and m2["abelian"],
            cyclic=m1["cyclic"] and m2["cyclic"] and gcd(o1, o2) == 1,
            nilpotent=m1["nilpotent"] and m2["nilpotent"],
            exponent=exponent,
            homocyclic=homocyclic_flag,
        ),
    )


def z6_x_frob42(key: str = "z6xfrob42") -> CatalogEntry:
    """Z6 x (Z7 : Z6), order 252; tags the complement generator x, the
    kernel generator u, and y = x^u used by the distance examples."""
    entry = direct_product(cyclic(6), frobenius(7, 6), key=key)
    group = entry.group
    # generator order after the product: z, t, m
    t = _word_perm(group, 1)
    m = _word_perm(group, 2)
    y = compose(compose(inverse(t), m), t)
    entry.tagged = {
        "x": _tag(group, m),
        "u": _tag(group, t),
        "y": _tag(group, y),
    }
    return entry


def klein4_x_extraspecial27(key: str = "k4xes27") -> CatalogEntry:
    """(Z2 x Z2) x He3, order 108; tags x = ac and y = bd."""
    k4 = elementary_abelian(2, 2, key="klein4")
    es = extraspecial_27()
    entry = direct_product(k4, es, key=key)
    group = entry.group
    # generator order after the product: x0, x1, c, d
    a = _word_perm(group, 0)
    b = _word_perm(group, 1)
    c = _word_perm(group, 2)
    d = _word_perm(group, 3)
    entry.tagged = {
        "x": _tag(group, compose(a, c)),
        "y": _tag(group, compose(b, d)),
    }
    return entry


def a5_with_actions(key: str = "a5") -> CatalogEntry:
    """A5 on 5 points with conjugation actions by a point stabilizer S4
    and by all of S5."""
    r = Permutation((1, 2, 3, 4, 0))
    c = Permutation((1, 2, 0, 3, 4))
    group = enumerate_group([r, c], 5, name=key, generator_names=["r", "c"])
    swap = Permutation((1, 0, 2, 3, 4))  # (1 2)
    four = Permutation((1, 2, 3, 0, 4))  # (1 2 3 4), fixes the last point

    def build_s4(g: FiniteGroup) -> AutAction:
        return conjugation_action(g, [swap, four])

    def build_s5(g: FiniteGroup) -> AutAction:
        return conjugation_action(g, [swap, r])

    return CatalogEntry(
        key=key,
        group=group,
        metadata=_metadata(60, False, False, False, 30),
        extra_actions={"s4": build_s4, "s5": build_s5},
    )


# -- registry ----------------------------------------------------------------

_BUILDERS: dict[str, Callable[[], CatalogEntry]] = {
    "z2": lambda: cyclic(2),
    "z4": lambda: cyclic(4),
    "z6": lambda: cyclic(6),
    "z9": lambda: cyclic(9),
    "z12": lambda: cyclic(12),
    "klein4": lambda: elementary_abelian(2, 2, key="klein4"),
    "e8": lambda: elementary_abelian(2, 3, key="e8"),
    "z3xz3": lambda: elementary_abelian(3, 2, key="z3xz3"),
    "z4xz2": lambda: direct_product(cyclic(4), cyclic(2), key="z4xz2"),
    "z4xz4": lambda: homocyclic(2, 2, 2, key="z4xz4"),
    "z4xz9": lambda: direct_product(cyclic(4), cyclic(9), key="z4xz9"),
    "d8": lambda: dihedral(8),
    "q8": lambda: generalized_quaternion(8),
    "q16": lambda: generalized_quaternion(16),
    "q8xz3": lambda: direct_product(generalized_quaternion(8), cyclic(3), key="q8xz3"),
    "g27": g27_with_tau,
    "es27": extraspecial_27,
    "k4xes27": klein4_x_extraspecial27,
    "s3": lambda: frobenius(3, 2, key="s3"),
    "d14": lambda: frobenius(7, 2, key="d14"),
    "frob20": lambda: frobenius(5, 4, key="frob20"),
    "frob21": lambda: frobenius(7, 3, key="frob21"),
    "frob42": lambda: frobenius(7, 6, key="frob42"),
    "frob9_2": lambda: frobenius_field(3, 2, 2, key="frob9_2"),
    "z2xfrob21": lambda: direct_product(cyclic(2), frobenius(7, 3), key="z2xfrob21"),
    "z6xfrob42": z6_x_frob42,
    "a5": a5_with_actions,
    "singer_3_2": lambda: singer(3, 2, key="singer_3_2"),
    "singer_2_3": lambda: singer(2, 3, key="singer_2_3"),
}

_CACHE: dict[str, CatalogEntry] = {}


def keys() -> list[str]:
    return sorted(_BUILDERS)


def get_entry(key: str, validate: bool = True) -> CatalogEntry:
    if key not in _BUILDERS:
        raise UnknownKey(f"no catalog entry {key!r}")
    entry = _CACHE.get(key)
    if entry is None:
        entry = _BUILDERS[key]()
        if validate:
            validate_entry(entry)
        _CACHE[key] = entry
    return entry


def validate_entry(entry: CatalogEntry) -> None:
    """Check declared metadata against recomputed structure."""
    from . import props

    g = entry.group
    md = entry.metadata
    checks = {
        "order": g.order,
        "abelian": props.is_abelian(g),
        "cyclic": props.is_cyclic(g),
        "nilpotent": props.is_nilpotent(g),
        "exponent": g.exponent(),
        "homocyclic": props.is_homocyclic(g),
        "generalized_quaternion": props.is_generalized_quaternion(g),
    }
    for field_name, computed in checks.items():
        if md[field_name] != computed:
            raise AssertionError(
                f"{entry.key}: metadata {field_name}={md[field_name]} "
                f"but computed {computed}"
            )
    wit = props.frobenius_witness(g)
    kernel = len(wit.kernel) if wit else None
    comp = wit.complement_order if wit else None
    if (md["frobenius_kernel"], md["frobenius_complement"]) != (kernel, comp):
        raise AssertionError(
            f"{entry.key}: declared Frobenius ({md['frobenius_kernel']}, "
            f"{md['frobenius_complement']}) but computed ({kernel}, {comp})"
        )
    # regular-representation entries must act faithfully and transitively
    if getattr(g, "_regular_rep", False):
        if g.degree != g.order:
            raise AssertionError(f"{entry.key}: regular representation degree mismatch")
        moved = {p.images[0] for p in g.elements}
        if len(moved) != g.degree:
            raise AssertionError(f"{entry.key}: regular action is not transitive")


def corpus(only: Iterable[str] | None = None, actions_filter: Iterable[str] | None = None):
    """Every (group, action) pair of the catalog as suite corpus entries."""
    from .verify import CorpusPair

    wanted = set(only) if only is not None else None
    action_wanted = set(actions_filter) if actions_filter is not None else None
    out = []
    for key in keys():
        if wanted is not None and key not in wanted:
            continue
        entry = get_entry(key)
        for name in entry.action_names():
            if action_wanted is not None and name not in action_wanted:
                continue
            out.append(
                CorpusPair(
                    label=f"{key}:{name}",
                    group=entry.group,
                    action=entry.action(name),
                    classification=entry.metadata,
                )
            )
    return out


def listing() -> list[dict]:
    out = []
    for key in keys():
        entry = get_entry(key)
        out.append(
            {
                "key": key,
                "order": entry.group.order,
                "degree": entry.group.degree,
                "actions": entry.action_names(),
                "tagged": {
                    name: entry.group.word_name(idx)
                    for name, idx in sorted(entry.tagged.items())
                },
                "metadata": entry.metadata,
            }
        )
    return out

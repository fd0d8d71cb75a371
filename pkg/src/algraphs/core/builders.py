# ==============================================================================
# builders.py — Builders for the algebra families used throughout
# ==============================================================================
# Purpose: Parse builder specs (``cyclic:6``, ``product:cyclic:2,cyclic:2``, ...)
#          and construct groups, semigroups and unary quasigroup algebras with
#          their standard signatures.
# Sections: Imports, Public exports, Constants, BuilderSpec, Groups,
#           Semigroups, Quasigroups, Products, Dispatch
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from ..payloads.documents import load_algebra
from .algebra import FiniteAlgebra, Operation
from .exceptions import InputError

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "MUL",
    "INV",
    "ONE",
    "BuilderSpec",
    "build",
    "parse_algebra",
    "group_from_table",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "elementary_abelian",
    "direct_product",
    "monogenic_semigroup",
    "volkov_semigroup",
    "semigroup_from_table",
    "quasigroup_unary",
    "is_latin_square",
]

# ==============================================================================
# Constants
# ==============================================================================

MUL = "mul"
INV = "inv"
ONE = "one"

_FAMILIES = {
    "cyclic": 1,
    "dihedral": 1,
    "symmetric": 1,
    "alternating": 1,
    "quaternion8": 0,
    "q8": 0,
    "elementary": 2,
    "monosg": 2,
    "volkov": 0,
}


# ==============================================================================
# BuilderSpec
# ==============================================================================

@dataclass(frozen=True)
class BuilderSpec:
    """
    A parsed builder string.

    Grammar: ``file:<path>`` | ``cyclic:n`` | ``dihedral:n`` | ``symmetric:n`` |
    ``alternating:n`` | ``quaternion8`` | ``elementary:p:k`` | ``monosg:m:r`` |
    ``volkov`` | ``product:<spec>,<spec>,...`` | ``quasiunary:<spec>``.
    """

    family: str
    params: tuple[int, ...] = ()
    parts: tuple[BuilderSpec, ...] = ()
    path: str | None = None

    @classmethod
    def parse(cls, text: str) -> BuilderSpec:
        text = text.strip()
        family, _, rest = text.partition(":")
        if family == "file":
            if not rest:
                raise InputError(f"missing path in builder spec {text!r}")
            return cls("file", path=rest)
        if family == "product":
            parts = tuple(cls.parse(part) for part in rest.split(",") if part)
            if len(parts) < 2:
                raise InputError(f"product needs at least two factors: {text!r}")
            return cls("product", parts=parts)
        if family == "quasiunary":
            return cls("quasiunary", parts=(cls.parse(rest),))
        if family not in _FAMILIES:
            raise InputError(f"unknown algebra family {family!r} in {text!r}")
        fields = [f for f in rest.split(":") if f] if rest else []
        if len(fields) != _FAMILIES[family]:
            raise InputError(f"{family} expects {_FAMILIES[family]} parameter(s), got {text!r}")
        try:
            params = tuple(int(f) for f in fields)
        except ValueError:
            raise InputError(f"non-integer parameter in {text!r}") from None
        return cls("quaternion8" if family == "q8" else family, params=params)

    def __str__(self) -> str:
        if self.family == "file":
            return f"file:{self.path}"
        if self.family == "product":
            return "product:" + ",".join(str(p) for p in self.parts)
        if self.family == "quasiunary":
            return f"quasiunary:{self.parts[0]}"
        return ":".join([self.family, *map(str, self.params)])


# ==============================================================================
# Groups
# ==============================================================================

def group_from_table(
    name: str, mul: NDArray[np.intp], labels: tuple[str, ...], identity: int = 0
) -> FiniteAlgebra:
    """
    Wrap a group multiplication table as an algebra with (mul, inv, one).

    Raises:
        InputError: If some element has no inverse with respect to `identity`.
    """
    mul = np.asarray(mul, dtype=np.intp)
    n = mul.shape[0]
    hits = mul == identity
    if not hits.any(axis=1).all():
        raise InputError(f"{name}: not every element has an inverse")
    inverse = hits.argmax(axis=1)
    return FiniteAlgebra(
        name=name,
        size=n,
        operations=(
            Operation(MUL, 2, mul),
            Operation(INV, 1, inverse),
            Operation(ONE, 0, np.array(identity)),
        ),
        element_names=labels,
    )


def cyclic(n: int) -> FiniteAlgebra:
    """C_n on 0..n-1 under addition mod n; identity 0."""
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    return group_from_table(f"C{n}", (idx[:, None] + idx[None, :]) % n, tuple(map(str, idx)))


def dihedral(n: int) -> FiniteAlgebra:
    """The dihedral group of order n (n even): rotations r^i then reflections r^i s."""
    if n < 2 or n % 2:
        raise InputError(f"dihedral group order must be even and at least 2, got {n}")
    m = n // 2
    elements = [(i, a) for a in (0, 1) for i in range(m)]
    index = {e: k for k, e in enumerate(elements)}
    mul = np.empty((n, n), dtype=np.intp)
    for (i, a), (j, b) in product(elements, repeat=2):
        mul[index[(i, a)], index[(j, b)]] = index[((i + (-j if a else j)) % m, a ^ b)]

    def label(i: int, a: int) -> str:
        rot = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        return (rot + ("s" if a else "")) or "e"

    return group_from_table(f"D{n}", mul, tuple(label(i, a) for i, a in elements))


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append("(" + " ".join(str(c + 1) for c in cycle) + ")")
    return "".join(cycles) or "e"


def _permutation_group(name: str, perms: list[tuple[int, ...]]) -> FiniteAlgebra:
    # p·q applies p first, then q
    index = {p: k for k, p in enumerate(perms)}
    arr = np.array(perms, dtype=np.intp)
    mul = np.empty((len(perms), len(perms)), dtype=np.intp)
    for i, p in enumerate(arr):
        for j, q in enumerate(arr):
            mul[i, j] = index[tuple(q[p])]
    return group_from_table(name, mul, tuple(_cycle_label(p) for p in perms))


def _parity(perm: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]) % 2


def symmetric(n: int) -> FiniteAlgebra:
    """S_n for n ≤ 5, permutations in lexicographic order (identity first)."""
    if not 1 <= n <= 5:
        raise InputError(f"symmetric group degree must be in 1..5, got {n}")
    return _permutation_group(f"S{n}", list(permutations(range(n))))


def alternating(n: int) -> FiniteAlgebra:
    """A_n for n ≤ 5, even permutations in lexicographic order."""
    if not 1 <= n <= 5:
        raise InputError(f"alternating group degree must be in 1..5, got {n}")
    return _permutation_group(f"A{n}", [p for p in permutations(range(n)) if _parity(p) == 0])


_UNITS = ("1", "i", "j", "k")
# unit products as (sign, unit index)
_UNIT_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> FiniteAlgebra:
    """Q8 = {±1, ±i, ±j, ±k}; identity labelled ``e``."""
    elements = [(s, u) for u in range(4) for s in (1, -1)]
    index = {e: k for k, e in enumerate(elements)}
    mul = np.empty((8, 8), dtype=np.intp)
    for (s, u), (t, v) in product(elements, repeat=2):
        sign, w = _UNIT_MUL[(u, v)]
        mul[index[(s, u)], index[(t, v)]] = index[(s * t * sign, w)]
    labels = tuple(
        "e" if (s, u) == (1, 0) else ("-1" if u == 0 else ("-" if s < 0 else "") + _UNITS[u])
        for s, u in elements
    )
    return group_from_table("Q8", mul, labels)


def elementary_abelian(p: int, k: int) -> FiniteAlgebra:
    """C_p^k as vectors over Z_p, indexed in row-major digit order."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise InputError(f"elementary abelian group needs a prime, got {p}")
    if k < 1:
        raise InputError(f"elementary abelian rank must be positive, got {k}")
    algebra = _product_tables([cyclic(p)] * k, name=f"C{p}^{k}")
    return FiniteAlgebra(
        name=algebra.name,
        size=algebra.size,
        operations=algebra.operations,
        element_names=tuple("".join(digits) for digits in product(*[[str(d) for d in range(p)]] * k)),
    )


# ==============================================================================
# Semigroups
# ==============================================================================

def semigroup_from_table(name: str, mul: NDArray[np.intp], labels: tuple[str, ...] = ()) -> FiniteAlgebra:
    """A semigroup carries only its binary operation, so E(A) is empty."""
    mul = np.asarray(mul, dtype=np.intp)
    return FiniteAlgebra(name=name, size=mul.shape[0], operations=(Operation(MUL, 2, mul),), element_names=labels)


def monogenic_semigroup(m: int, r: int) -> FiniteAlgebra:
    """
    ⟨x⟩ with index m and period r: x^(m+r) = x^m; elements x^1..x^(m+r-1).

    ``monogenic_semigroup(4, 1)`` is the semigroup with x^4 = x^5.
    """
    if m < 1 or r < 1:
        raise InputError(f"index and period must be positive, got ({m}, {r})")
    top = m + r - 1

    def reduce(e: int) -> int:
        while e > top:
            e -= r
        return e

    exps = np.arange(1, top + 1)
    mul = np.vectorize(reduce)(exps[:, None] + exps[None, :]) - 1
    return semigroup_from_table(f"M({m},{r})", mul, tuple(f"x^{e}" for e in exps))


def volkov_semigroup() -> FiniteAlgebra:
    """The three-element semigroup {a, b, e}: group {b, e} and null semigroup {a, e} amalgamated over e."""
    a, b, e = 0, 1, 2
    mul = np.array([[e, b, e], [b, e, b], [e, b, e]])
    return semigroup_from_table("Volkov", mul, ("a", "b", "e"))


# ==============================================================================
# Quasigroups
# ==============================================================================

def is_latin_square(table: NDArray[np.intp]) -> bool:
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        return False
    target = np.arange(table.shape[0])
    return bool(
        (np.sort(table, axis=1) == target).all() and (np.sort(table, axis=0) == target[:, None]).all()
    )


def quasigroup_unary(source: FiniteAlgebra | NDArray[np.intp], name: str | None = None) -> FiniteAlgebra:
    """
    Q^(1): the n right multiplications ρ_a : x ↦ xa of a quasigroup, and nothing else.

    `source` is a Latin square or an algebra whose first binary operation is one.

    Raises:
        InputError: If the table is not a Latin square.
    """
    if isinstance(source, FiniteAlgebra):
        binaries = source.operations_of_arity(2)
        if not binaries:
            raise InputError(f"{source.name!r} has no binary operation to take right multiplications of")
        table, labels, base = binaries[0].table, source.element_names, source.name
    else:
        table = np.asarray(source, dtype=np.intp)
        labels, base = tuple(str(i) for i in range(table.shape[0])), "Q"
    if not is_latin_square(table):
        raise InputError(f"{base}: operation table is not a Latin square")
    operations = tuple(Operation(f"rho_{labels[a]}", 1, table[:, a]) for a in range(table.shape[0]))
    return FiniteAlgebra(name=name or f"Q1({base})", size=table.shape[0], operations=operations, element_names=labels)


# ==============================================================================
# Products
# ==============================================================================

def _product_table(t1: NDArray[np.intp], t2: NDArray[np.intp], n2: int) -> NDArray[np.intp]:
    k = t1.ndim
    if k == 0:
        return np.asarray(t1 * n2 + t2)
    n1 = t1.shape[0]
    left = t1.reshape(sum(((n1, 1) for _ in range(k)), ()))
    right = t2.reshape(sum(((1, n2) for _ in range(k)), ()))
    return (left * n2 + right).reshape((n1 * n2,) * k)


def _product_tables(factors: list[FiniteAlgebra], name: str) -> FiniteAlgebra:
    signature = [(op.name, op.arity) for op in factors[0].operations]
    for f in factors[1:]:
        if [(op.name, op.arity) for op in f.operations] != signature:
            raise InputError(f"direct product factors must share a signature: {factors[0].name} vs {f.name}")
    tables = [op.table for op in factors[0].operations]
    size = factors[0].size
    for f in factors[1:]:
        tables = [_product_table(t, op.table, f.size) for t, op in zip(tables, f.operations)]
        size *= f.size
    return FiniteAlgebra(
        name=name,
        size=size,
        operations=tuple(Operation(nm, ar, t) for (nm, ar), t in zip(signature, tables)),
        element_names=tuple("(" + ",".join(combo) + ")" for combo in product(*(f.element_names for f in factors))),
        factors=tuple(factors),
    )


def direct_product(*factors: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; element (a1, ..., ak) has row-major index."""
    if len(factors) < 2:
        raise InputError("a direct product needs at least two factors")
    return _product_tables(list(factors), name="x".join(f.name for f in factors))


# ==============================================================================
# Dispatch
# ==============================================================================

def build(spec: BuilderSpec) -> FiniteAlgebra:
    """
    Construct the algebra described by `spec`.

    Raises:
        InputError: Unsupported size, non-Latin quasigroup table, malformed file.
    """
    p = spec.params
    match spec.family:
        case "file":
            return load_algebra(spec.path or "")
        case "cyclic":
            return cyclic(p[0])
        case "dihedral":
            return dihedral(p[0])
        case "symmetric":
            return symmetric(p[0])
        case "alternating":
            return alternating(p[0])
        case "quaternion8":
            return quaternion8()
        case "elementary":
            return elementary_abelian(p[0], p[1])
        case "monosg":
            return monogenic_semigroup(p[0], p[1])
        case "volkov":
            return volkov_semigroup()
        case "product":
            return direct_product(*(build(part) for part in spec.parts))
        case "quasiunary":
            return quasigroup_unary(build(spec.parts[0]))
    raise InputError(f"unsupported builder family {spec.family!r}")


def parse_algebra(text: str) -> FiniteAlgebra:
    """Shortcut for ``build(BuilderSpec.parse(text))``."""
    return build(BuilderSpec.parse(text))

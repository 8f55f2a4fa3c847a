"""Built-in permutation groups and the test catalog."""

from __future__ import annotations

from .errors import MNError
from .group import PermGroup
from .perm import Permutation
from .core import direct_product


def _cycle(points, degree) -> Permutation:
    return Permutation.from_cycles([list(points)], degree)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise MNError("cyclic group needs n >= 1")
    return PermGroup([_cycle(range(n), n)], degree=n, name=f"C{n}")


def dihedral(m: int) -> PermGroup:
    """Symmetries of an m-gon, order 2m, generated by a rotation and a reflection."""
    if m < 3:
        raise MNError("dihedral group needs m >= 3 (use klein or cyclic 2 for the degenerate cases)")
    rotation = _cycle(range(m), m)
    reflection = Permutation([(-i) % m for i in range(m)])
    return PermGroup([rotation, reflection], degree=m, name=f"D{2 * m}")


def dihedral_reflections(m: int) -> tuple[Permutation, Permutation]:
    """Two reflections of :func:`dihedral` whose product is a rotation of order m."""
    G = dihedral(m)
    rotation, reflection = G.generators
    return reflection, rotation * reflection


def symmetric(n: int) -> PermGroup:
    if not 1 <= n <= 6:
        raise MNError("symmetric n is provided for 1 <= n <= 6")
    if n == 1:
        return PermGroup([], degree=1, name="S1")
    gens = [_cycle([0, 1], n), _cycle(range(n), n)]
    return PermGroup(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if not 1 <= n <= 6:
        raise MNError("alternating n is provided for 1 <= n <= 6")
    if n < 3:
        return PermGroup([], degree=n, name=f"A{n}")
    gens = [_cycle([0, 1, k], n) for k in range(2, n)]
    return PermGroup(gens, degree=n, name=f"A{n}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    i = Permutation.from_cycles([[0, 1, 2, 3], [4, 5, 6, 7]], 8)
    j = Permutation.from_cycles([[0, 4, 2, 6], [1, 7, 3, 5]], 8)
    return PermGroup([i, j], degree=8, name="Q8")


def klein() -> PermGroup:
    a = Permutation.from_cycles([[0, 1], [2, 3]], 4)
    b = Permutation.from_cycles([[0, 2], [1, 3]], 4)
    return PermGroup([a, b], degree=4, name="V4")


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def heisenberg(p: int) -> PermGroup:
    """Unitriangular 3x3 matrices over F_p acting on the affine plane F_p^2.

    The matrix with entries x, y, z sends (u, v) to (u + x v + z, v + y).
    """
    if p not in (2, 3, 5):
        raise MNError("heisenberg p is provided for p in {2, 3, 5}")

    def point(u, v):
        return u * p + v

    def matrix(x, y, z):
        images = [0] * (p * p)
        for u in range(p):
            for v in range(p):
                images[point(u, v)] = point((u + x * v + z) % p, (v + y) % p)
        return Permutation(images)

    return PermGroup([matrix(1, 0, 0), matrix(0, 1, 0)], degree=p * p, name=f"Heis({p})")


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not _is_prime(p) or k < 1:
        raise MNError("elementary-abelian needs a prime p and k >= 1")
    n = p * k
    gens = [_cycle(range(i * p, (i + 1) * p), n) for i in range(k)]
    return PermGroup(gens, degree=n, name=f"E({p}^{k})")


BUILTIN_NAMES = {
    "cyclic": "cyclic N            cyclic group of order N",
    "dihedral": "dihedral M          dihedral group of order 2M (M >= 3)",
    "symmetric": "symmetric N         symmetric group on N points (N <= 6)",
    "alternating": "alternating N       alternating group on N points (N <= 6)",
    "quaternion": "quaternion | q8     quaternion group of order 8",
    "klein": "klein               Klein four-group",
    "heisenberg": "heisenberg P        Heisenberg group mod P (P in 2, 3, 5), order P^3",
    "elementary-abelian": "elementary-abelian P K   (Z/P)^K",
}


def builtin(name: str, *args: int) -> PermGroup:
    name = name.lower()
    if name in ("quaternion", "q8"):
        _arity(name, args, 0)
        return quaternion()
    if name == "klein":
        _arity(name, args, 0)
        return klein()
    table = {
        "cyclic": (cyclic, 1),
        "dihedral": (dihedral, 1),
        "symmetric": (symmetric, 1),
        "alternating": (alternating, 1),
        "heisenberg": (heisenberg, 1),
        "elementary-abelian": (elementary_abelian, 2),
    }
    if name not in table:
        raise MNError(f"unknown built-in group {name!r}")
    fn, arity = table[name]
    _arity(name, args, arity)
    return fn(*args)


def _arity(name, args, n):
    if len(args) != n:
        raise MNError(f"built-in {name!r} takes {n} integer parameter(s), got {len(args)}")


# Specs in the group-spec grammar; used by the catalog command and the test suite.
CATALOG: list[str] = [
    "builtin cyclic 1",
    "builtin cyclic 2",
    "builtin cyclic 3",
    "builtin cyclic 4",
    "builtin cyclic 5",
    "builtin cyclic 6",
    "builtin cyclic 7",
    "builtin cyclic 8",
    "builtin cyclic 9",
    "builtin cyclic 10",
    "builtin cyclic 12",
    "builtin cyclic 16",
    "builtin klein",
    "builtin q8",
    "builtin dihedral 3",
    "builtin dihedral 4",
    "builtin dihedral 5",
    "builtin dihedral 6",
    "builtin dihedral 8",
    "builtin dihedral 9",
    "builtin dihedral 10",
    "builtin dihedral 12",
    "builtin dihedral 16",
    "builtin symmetric 3",
    "builtin symmetric 4",
    "builtin symmetric 5",
    "builtin alternating 4",
    "builtin alternating 5",
    "builtin heisenberg 2",
    "builtin heisenberg 3",
    "builtin heisenberg 5",
    "builtin elementary-abelian 2 3",
    "builtin elementary-abelian 2 4",
    "builtin elementary-abelian 3 2",
    "builtin elementary-abelian 3 3",
    "builtin elementary-abelian 5 2",
    "product (builtin q8) (builtin cyclic 3)",
    "product (builtin dihedral 4) (builtin cyclic 3)",
    "product (builtin alternating 4) (builtin cyclic 2)",
    "product (builtin symmetric 3) (builtin symmetric 3)",
    "product (builtin q8) (builtin symmetric 3)",
    "product (builtin cyclic 2) (builtin symmetric 4)",
    "product (builtin heisenberg 3) (builtin cyclic 2)",
    "product (builtin q8) (builtin q8)",
    "product (builtin dihedral 4) (builtin dihedral 4)",
    "product (builtin symmetric 4) (builtin cyclic 3)",
    "product (builtin alternating 5) (builtin cyclic 2)",
    "product (builtin symmetric 4) (builtin symmetric 3)",
    "product (builtin symmetric 4) (builtin q8)",
    "product (builtin symmetric 4) (builtin dihedral 8)",
]


def product(G1: PermGroup, G2: PermGroup) -> PermGroup:
    return direct_product(G1, G2)

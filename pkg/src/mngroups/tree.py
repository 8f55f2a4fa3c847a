"""Automaton groups acting on d-ary rooted trees, cut off at level n.

A state ``g = (g_0, ..., g_{d-1}) sigma`` acts on a word ``x w`` by
``g(x w) = sigma(x) g_x(w)``: the section is chosen by the input letter.
Level-n vertices are the words of length n, ordered lexicographically, so
the word ``x_1 ... x_n`` is the integer with base-d digits ``x_1 ... x_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import core
from .errors import CapExceededError, MNError
from .group import CAPS, PermGroup
from .perm import Permutation, identity_tuple, invert

IDENTITY = "e"


class InsufficientPrefixError(MNError, ValueError):
    pass


@dataclass(frozen=True)
class State:
    root: tuple[int, ...]
    sections: tuple[str, ...]


@dataclass
class TreeAutomaton:
    """Wreath recursion on a ``alphabet_size``-ary tree.

    ``states`` holds level-independent states.  ``level_rule``, when given,
    returns the state named ``name`` at depth ``k`` and overrides ``states``
    for the names it knows (returns None otherwise).  Section names may carry
    a ``^-1`` suffix for the inverse state; ``e`` is the identity.
    """

    name: str
    alphabet_size: int
    states: dict[str, State]
    generators: list[str]
    level_rule: Optional[Callable[[str, int], Optional[State]]] = None
    max_depth: Optional[int] = None
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def state_at(self, name: str, depth: int) -> State:
        if self.level_rule is not None:
            st = self.level_rule(name, depth)
            if st is not None:
                return st
        try:
            return self.states[name]
        except KeyError:
            raise MNError(f"unknown state {name!r} in automaton {self.name}") from None

    def check_level(self, n: int) -> None:
        if n < 1:
            raise MNError("level must be at least 1")
        if self.max_depth is not None and n > self.max_depth:
            raise InsufficientPrefixError(
                f"{self.name}: level {n} needs a defining sequence prefix of length >= {n}, "
                f"have {self.max_depth}"
            )

    def _perm(self, name: str, depth: int, n: int) -> tuple:
        d = self.alphabet_size
        if name == IDENTITY or n == 0:
            return identity_tuple(d ** n)
        key = (name, depth, n)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if name.endswith("^-1"):
            result = invert(self._perm(name[:-3], depth, n))
        else:
            st = self.state_at(name, depth)
            sub = d ** (n - 1)
            images = [0] * (d ** n)
            for x in range(d):
                sec = self._perm(st.sections[x], depth + 1, n - 1)
                off_in, off_out = x * sub, st.root[x] * sub
                for w in range(sub):
                    images[off_in + w] = off_out + sec[w]
            result = tuple(images)
        self._memo[key] = result
        return result


def _swap_root() -> tuple[int, int]:
    return (1, 0)


def grigorchuk(omega: Optional[str] = None) -> TreeAutomaton:
    """Grigorchuk group for the sequence ``omega`` over {0, 1, 2}.

    ``omega=None`` gives the first Grigorchuk group (omega = 012012...).
    The letter at depth k fixes the first sections of b, c, d:
    0 -> (a, a, e), 1 -> (a, e, a), 2 -> (e, a, a); the second sections are
    b, c, d again, one level down.
    """
    if omega is not None and (not omega or set(omega) - set("012")):
        raise MNError("omega must be a nonempty string over {0, 1, 2}")
    columns = {"0": ("a", "a", IDENTITY), "1": ("a", IDENTITY, "a"), "2": (IDENTITY, "a", "a")}

    def letter(k: int) -> str:
        if omega is None:
            return "012"[k % 3]
        if k >= len(omega):
            raise InsufficientPrefixError(f"omega prefix {omega!r} is too short for depth {k}")
        return omega[k]

    def rule(name: str, depth: int) -> Optional[State]:
        if name not in ("b", "c", "d"):
            return None
        first = columns[letter(depth)]["bcd".index(name)]
        return State((0, 1), (first, name))

    states = {"a": State(_swap_root(), (IDENTITY, IDENTITY))}
    label = "Grigorchuk" if omega is None else f"Grigorchuk(omega={omega})"
    return TreeAutomaton(
        label, 2, states, ["a", "b", "c", "d"], level_rule=rule,
        max_depth=None if omega is None else len(omega),
    )


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def gupta_sidki(p: int) -> TreeAutomaton:
    """a = rooted p-cycle, t = (a, a^-1, 1, ..., 1, t)."""
    if p % 2 == 0 or not _is_prime(p):
        raise MNError(f"Gupta-Sidki groups need an odd prime, got {p}")
    a = State(tuple((x + 1) % p for x in range(p)), (IDENTITY,) * p)
    t = State(tuple(range(p)), ("a", "a^-1") + (IDENTITY,) * (p - 3) + ("t",))
    return TreeAutomaton(f"GuptaSidki({p})", p, {"a": a, "t": t}, ["a", "t"])


def basilica() -> TreeAutomaton:
    """a = (1, b), b = (1, a) sigma."""
    a = State((0, 1), (IDENTITY, "b"))
    b = State(_swap_root(), (IDENTITY, "a"))
    return TreeAutomaton("Basilica", 2, {"a": a, "b": b}, ["a", "b"])


def builtin_automaton(name: str, *params) -> TreeAutomaton:
    key = name.lower().replace("_", "-")
    if key == "grigorchuk":
        return grigorchuk(params[0] if params else None)
    if key == "gupta-sidki":
        if len(params) != 1:
            raise MNError("gupta-sidki needs the prime p")
        return gupta_sidki(int(params[0]))
    if key == "basilica":
        return basilica()
    raise MNError(f"unknown automaton {name!r}")


def level_permutation(A: TreeAutomaton, state: str, n: int) -> Permutation:
    A.check_level(n)
    return Permutation._trusted(A._perm(state, 0, n))


def project(p: Permutation, d: int) -> Permutation:
    """Action on level n-1 induced by a level-n permutation (drop the last letter)."""
    return Permutation(tuple(p.images[v * d] // d for v in range(p.degree // d)))


def level_quotient(A: TreeAutomaton, n: int) -> PermGroup:
    A.check_level(n)
    degree = A.alphabet_size ** n
    if degree > CAPS.quotient_degree:
        raise CapExceededError("quotient_degree", degree, CAPS.quotient_degree, f"{A.name} level {n}")
    gens = [level_permutation(A, s, n) for s in A.generators]
    return PermGroup(gens, degree=degree, name=f"{A.name} level {n}")


def is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_group_check(G: PermGroup, p: int) -> bool:
    """True iff |G| is a power of p.  Within the enumeration cap a positive
    answer is cross-checked against nilpotency."""
    ok = is_power_of(G.order(), p)
    if ok and G.order() <= CAPS.enumeration and not core.is_nilpotent(G):
        raise MNError(f"{G.label}: p-group that is not nilpotent, engine inconsistency")
    return ok


def dihedral_structure(G: PermGroup) -> Optional[tuple[Permutation, Permutation]]:
    """(rotation, reflection) if ``G`` is dihedral, else None.

    G of order 2m is dihedral when some element c of order m and some
    involution s outside <c> satisfy s c s = c^-1.  Groups of order 1, 2
    and the Klein group count as degenerate dihedral groups.
    """
    tab = G.table()
    n = tab.size
    if n == 1:
        return G.identity, G.identity
    if n % 2:
        return None
    m = n // 2
    involutions = [s for s in range(1, n) if tab.mul(s, s) == 0]
    for c in range(n):
        if tab.order_of(c) != m:
            continue
        cyc = set(tab.closure([c]))
        cinv = tab.inv[c]
        for s in involutions:
            if s not in cyc and tab.mul(tab.mul(s, c), s) == cinv:
                return tab.perms[c], tab.perms[s]
    return None


def is_dihedral(G: PermGroup) -> bool:
    return dihedral_structure(G) is not None


@dataclass
class DihedralReport:
    level: int
    quotient_order: int
    is_dihedral: bool
    cyclic_index2_order: int
    degenerate: bool
    rotation_is_image_of_a: bool
    base_order: int
    kernel_order: int


def basilica_dinfty_probe(n: int) -> DihedralReport:
    """Quotient of the level-n Basilica group by the normal closure of
    b^2 and abab.

    The relations make the images of b and ab involutions, so the image of
    a = (ab) b^-1 is the candidate rotation and b inverts it.
    """
    A = basilica()
    B = level_quotient(A, n)
    a = level_permutation(A, "a", n)
    b = level_permutation(A, "b", n)
    N = core.normal_closure(B, [b * b, a * b * a * b])
    Q, pi = core.quotient(B, N, name=f"Basilica level {n} / <<b^2, abab>>")
    qa, qb = pi(a), pi(b)
    rot_order = qa.order()
    structural = (
        (qb * qb).is_identity()
        and qb * qa * qb == qa.inverse()
        and Q.order() == 2 * rot_order
    )
    found = dihedral_structure(Q)
    cyclic_order = Q.order() // 2 if found is not None else 0
    return DihedralReport(
        level=n,
        quotient_order=Q.order(),
        is_dihedral=found is not None,
        cyclic_index2_order=cyclic_order,
        degenerate=Q.order() <= 4,
        rotation_is_image_of_a=structural,
        base_order=B.order(),
        kernel_order=N.order(),
    )

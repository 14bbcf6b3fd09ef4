"""
Conjugacy in B_n.

The decision procedure uses super summit sets: the conjugates of a braid
with maximal inf and minimal sup form a finite set, and two braids are
conjugate exactly when their super summit sets coincide.  On top of that
sit the searches used by the amalgam conjugacy algorithm: conjugacy to a
power of sigma_k^p, conjugation by a power of a single generator, and the
double coset sigma_k^{pm} u sigma_k^{pn} = v.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import CommutingInput, ResourceLimit, StrandMismatch
from .garside import NormalForm, _tau, simple_elements
from .words import BraidWord, exp_sum, generator_power, invert

__all__ = [
    "DEFAULT_LIMIT",
    "SummitSet",
    "PowerSearchResult",
    "cycling",
    "decycling",
    "super_summit_representative",
    "super_summit_set",
    "are_conjugate",
    "conjugate_power_of_h_search",
    "generator_power_conjugacy_search",
    "double_coset_search",
]

DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class SummitSet:
    elements: frozenset[NormalForm]
    achieved_inf: int
    achieved_sup: int

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, nf: NormalForm) -> bool:
        return nf in self.elements

    def sorted(self) -> list[NormalForm]:
        return sorted(self.elements, key=NormalForm.key)


@dataclass(frozen=True)
class PowerSearchResult:
    """
    Outcome of a search for exponents k.

    ``kind`` is ``"none"``, ``"finite"`` (the exponents are in ``ks``) or
    ``"all"`` when every integer works.
    """

    kind: str
    ks: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def finite(cls, ks) -> PowerSearchResult:
        return cls("finite", frozenset(ks))

    def __str__(self) -> str:
        if self.kind == "finite":
            return "k in {" + ", ".join(str(k) for k in sorted(self.ks)) + "}"
        return "all integers" if self.kind == "all" else "none"


NO_POWER = PowerSearchResult("none")
ALL_INTEGERS = PowerSearchResult("all")


def cycling(nf: NormalForm) -> NormalForm:
    """Move the first factor (twisted by tau^r) to the end: a conjugate with inf no smaller."""
    if not nf.factors:
        return nf
    first = nf.factors[0]
    moved = _tau(first) if nf.r & 1 else first
    return NormalForm.from_factors(nf.n, nf.r, nf.factors[1:] + (moved,))


def decycling(nf: NormalForm) -> NormalForm:
    """Move the last factor to the front: a conjugate with sup no larger."""
    if not nf.factors:
        return nf
    last = nf.factors[-1]
    moved = _tau(last) if nf.r & 1 else last
    return NormalForm.from_factors(nf.n, nf.r, (moved,) + nf.factors[:-1])


def _delta_length(n: int) -> int:
    return n * (n - 1) // 2


def super_summit_representative(nf: NormalForm) -> NormalForm:
    """
    Iterated cycling then decycling until inf is maximal and sup minimal.

    If inf is not yet maximal, some cycling within |Delta| steps raises it;
    likewise for decycling and sup.
    """
    bound = _delta_length(nf.n)
    x = nf
    improved = True
    while improved:
        improved = False
        y = x
        for _ in range(bound):
            y = cycling(y)
            if y.inf > x.inf:
                x, improved = y, True
                break
    improved = True
    while improved:
        improved = False
        y = x
        for _ in range(bound):
            y = decycling(y)
            if y.sup < x.sup:
                x, improved = y, True
                break
    return x


def _saturate(start: NormalForm, limit: int) -> set[NormalForm]:
    n = start.n
    target = (start.inf, start.sup)
    conjugators = [NormalForm.from_factors(n, 0, [s]) for s in simple_elements(n)[1:]]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in conjugators:
            y = x.conjugate(s)
            if (y.inf, y.sup) == target and y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ResourceLimit(f"super summit set exceeds {limit} elements")
                queue.append(y)
    return seen


def super_summit_set(w: BraidWord | NormalForm, limit: int = DEFAULT_LIMIT) -> SummitSet:
    nf = w if isinstance(w, NormalForm) else NormalForm.from_word(w)
    rep = super_summit_representative(nf)
    return SummitSet(frozenset(_saturate(rep, limit)), rep.inf, rep.sup)


def are_conjugate(u: BraidWord, v: BraidWord, limit: int = DEFAULT_LIMIT) -> bool:
    if u.n != v.n:
        raise StrandMismatch(f"words live in B_{u.n} and B_{v.n}")
    if exp_sum(u) != exp_sum(v):
        return False
    nu, nv = NormalForm.from_word(u), NormalForm.from_word(v)
    if nu == nv:
        return True
    ru, rv = super_summit_representative(nu), super_summit_representative(nv)
    if (ru.inf, ru.sup) != (rv.inf, rv.sup):
        return False
    if ru == rv:
        return True
    return rv in _saturate(ru, limit)


def conjugate_power_of_h_search(w: BraidWord, k: int, p: int, limit: int = DEFAULT_LIMIT) -> int | None:
    """
    The exponent c with ``w`` conjugate to sigma_k^{pc}, or None.

    Distinct powers have distinct exponent sums, so c = exp(w)/p is the only
    candidate.
    """
    c, rem = divmod(exp_sum(w), p)
    if rem:
        return None
    return c if are_conjugate(w, generator_power(w.n, k, p * c), limit) else None


def _commutes_with_generator(a: NormalForm, g: NormalForm) -> bool:
    return a * g == g * a


def _walk(start: NormalForm, goal: NormalForm, g: NormalForm, floor: int, limit: int) -> int | None:
    """
    Smallest j >= 1 with g^-j start g^j = goal.

    Stops when inf drops below ``floor`` or a normal form repeats.
    """
    g_inv = g.inverse()
    seen = {start}
    x = start
    j = 0
    while True:
        j += 1
        x = g_inv * x * g
        if x == goal:
            return j
        if x.inf < floor or x in seen:
            return None
        seen.add(x)
        if len(seen) > limit:
            raise ResourceLimit(f"power-conjugacy enumeration exceeds {limit} steps")


def generator_power_conjugacy_search(
    a: BraidWord, b: BraidWord, i: int, limit: int = DEFAULT_LIMIT
) -> PowerSearchResult:
    """
    All k with sigma_i^-k a sigma_i^k = b.

    If ``a`` commutes with sigma_i every k works or none does.  Otherwise at
    most one k exists (sigma_i and its powers share a centralizer), and it
    is found by walking the conjugates sigma_i^-j a sigma_i^j; the walk for
    positive j cannot pass below inf p = min(inf a, inf b), and it must
    either reach b, drop below p, or revisit a braid.  Negative k are found
    by the same walk from b towards a.
    """
    if a.n != b.n:
        raise StrandMismatch(f"words live in B_{a.n} and B_{b.n}")
    if exp_sum(a) != exp_sum(b):
        return NO_POWER
    na, nb = NormalForm.from_word(a), NormalForm.from_word(b)
    g = NormalForm.from_word(generator_power(a.n, i, 1))
    if _commutes_with_generator(na, g):
        return ALL_INTEGERS if na == nb else NO_POWER
    if na == nb:
        return PowerSearchResult.finite({0})
    floor = min(na.inf, nb.inf)
    j = _walk(na, nb, g, floor, limit)
    if j is not None:
        return PowerSearchResult.finite({j})
    j = _walk(nb, na, g, floor, limit)
    if j is not None:
        return PowerSearchResult.finite({-j})
    return NO_POWER


def double_coset_search(
    u: BraidWord, v: BraidWord, k: int, p: int, limit: int = DEFAULT_LIMIT
) -> tuple[int, int] | None:
    """
    Integers (m, n) with sigma_k^{pm} u sigma_k^{pn} = v, or None.

    Exponent sums fix m + n = (exp v - exp u)/p; then sigma_k^{pm} u
    sigma_k^{-pm} = v sigma_k^{-p(m+n)} is a conjugation by a power of
    sigma_k, whose exponent must be a multiple of p.
    """
    if u.n != v.n:
        raise StrandMismatch(f"words live in B_{u.n} and B_{v.n}")
    g = NormalForm.from_word(generator_power(u.n, k, 1))
    if _commutes_with_generator(NormalForm.from_word(u), g):
        raise CommutingInput(f"u commutes with sigma_{k}; the double-coset search excludes this case")
    total, rem = divmod(exp_sum(v) - exp_sum(u), p)
    if rem:
        return None
    d = BraidWord(u.n, v.letters + generator_power(u.n, k, -p * total).letters)
    found = generator_power_conjugacy_search(u, d, k, limit)
    if found.kind != "finite":
        return None
    (j,) = found.ks
    # sigma_k^-j u sigma_k^j = d and sigma_k^{pm} u sigma_k^{-pm} = d give j = -pm
    m, rem = divmod(-j, p)
    if rem:
        return None
    return m, total - m


def conjugator_power(w: BraidWord, k: int, e: int) -> BraidWord:
    """sigma_k^-e w sigma_k^e as a word."""
    g = generator_power(w.n, k, e)
    return BraidWord(w.n, invert(g).letters + w.letters + g.letters)

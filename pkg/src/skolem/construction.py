"""Quadratic-residue construction of strong and Skolem starters.

For an odd prime q == 3 (mod 4), fix a generator alpha of the group of
quadratic residues mod q and a non-residue beta other than q - 1.  The set

    S_beta = {{alpha**i, beta * alpha**i} : i = 1, ..., (q-1)/2}

is a strong starter for Z_q: its elements are the residues and the
non-residues, its difference classes are (beta - 1) times the residues and
non-residues, and its sums (beta + 1) * alpha**i repeat only when
beta == q - 1.  As a set S_beta does not depend on alpha at all; it equals
{{x, beta * x} : x a residue}, so alpha only changes enumeration order.

When additionally q == 3 (mod 8), both beta = 2 and beta = (q+1)/2 (the
inverse of 2) are non-residues, and S_beta becomes a Skolem starter: the
pairs are {y, 2y mod q} with y ranging over one residuosity class, and
folding that class into {1, ..., (q-1)/2} hits each integer difference
exactly once.  half_set_certificate exposes that folding as a checkable
object.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .residues import (
    ResidueClass,
    as_modulus,
    build_qr_table,
    is_prime,
    is_qr_generator,
    legendre_class,
    smallest_qr_generator,
)
from .starters import PairSet


class ConstructionError(ValueError):
    """A parameter violates a precondition of the construction."""


class BetaChoice(Enum):
    """The two beta values that always yield Skolem starters."""

    TWO = "2"
    HALF = "half"

    def beta(self, q: int) -> int:
        return 2 if self is BetaChoice.TWO else (q + 1) // 2


def _as_choice(choice) -> BetaChoice:
    if isinstance(choice, BetaChoice):
        return choice
    try:
        return BetaChoice(str(choice))
    except ValueError:
        raise ConstructionError(
            f"beta choice must be '2' or 'half', got {choice!r}"
        ) from None


def _require_prime_q(q: int):
    try:
        m = as_modulus(q)
    except (TypeError, ValueError) as exc:
        raise ConstructionError(str(exc)) from None
    if not m.prime:
        raise ConstructionError(f"q = {m.n} is not prime")
    return m


@dataclass(frozen=True)
class ConstructionParams:
    """Validated (q, alpha, beta) triple for the strong-starter construction.

    Requirements: q an odd prime with q % 4 == 3, alpha a generator of the
    quadratic residues mod q, beta a non-residue.  beta = q - 1 is rejected
    for q > 3 because then every pair sums to zero and the starter cannot
    be strong; for q = 3 the single pair makes the sums trivially distinct.
    """

    q: int
    alpha: int
    beta: int

    def __post_init__(self):
        q = self.q
        _require_prime_q(q)
        if q % 4 != 3:
            raise ConstructionError(
                f"q % 4 == {q % 4}: the construction requires q % 4 == 3"
            )
        if not 1 <= self.alpha <= q - 1 or not is_qr_generator(self.alpha, q):
            raise ConstructionError(
                f"alpha = {self.alpha} does not generate the quadratic "
                f"residues mod {q}"
            )
        beta = self.beta
        if not 1 <= beta <= q - 1:
            raise ConstructionError(f"beta = {beta} outside 1..{q - 1}")
        if legendre_class(beta, q) is not ResidueClass.NQR:
            raise ConstructionError(
                f"beta = {beta} is a quadratic residue mod {q}; "
                f"a non-residue is required"
            )
        if beta == q - 1 and q > 3:
            raise ConstructionError(
                "beta = q - 1 makes every pair sum to zero; "
                "the starter cannot be strong"
            )

    @property
    def n(self) -> int:
        return self.q

    @property
    def t(self) -> int:
        return (self.q - 1) // 2

    def pair_set(self) -> PairSet:
        """Build S_beta = {{alpha**i, beta * alpha**i}} as a PairSet."""
        q, alpha, beta = self.q, self.alpha, self.beta
        pairs = []
        x = 1
        for _ in range(self.t):
            x = x * alpha % q
            pairs.append((x, beta * x % q))
        return PairSet(q, pairs)


def build_strong_starter(q: int, beta: int, alpha: int | None = None) -> PairSet:
    """Strong starter S_beta for Z_q; q prime, q % 4 == 3, beta a non-residue.

    alpha defaults to the smallest generator of the residue group; the
    resulting set is the same for every generator.
    """
    _require_prime_q(q)
    if alpha is None:
        alpha = smallest_qr_generator(q)
    return ConstructionParams(q=q, alpha=alpha, beta=beta % q).pair_set()


def build_strong_skolem(q: int, choice=BetaChoice.TWO, alpha: int | None = None) -> PairSet:
    """Strong Skolem starter for Z_q; q prime, q % 8 == 3.

    choice picks beta: '2' or 'half' (beta = (q+1)/2, the inverse of 2).
    """
    c = _as_choice(choice)
    _require_prime_q(q)
    if q % 8 != 3:
        raise ConstructionError(
            f"q % 8 == {q % 8}: Skolem starters from this construction "
            f"require q % 8 == 3"
        )
    return build_strong_starter(q, c.beta(q), alpha)


@dataclass(frozen=True)
class HalfSetCertificate:
    """Why S_beta is Skolem for beta in {2, (q+1)/2}: the folding witness.

    Every pair of S_beta has the form {y, 2y mod q} with y in one fixed
    residuosity class C (residues for beta = 2, non-residues for the
    inverse choice).  Writing t = (q-1)/2, each difference d in 1..t is
    realised exactly once:

      - d in C: the pair (d, 2d), plain difference d, and
      - q - d in C: the pair (q - 2d, q - d), plain difference d again.

    Since q == 3 (mod 4) makes -1 a non-residue, exactly one of d and q - d
    lies in C, so `direct` and `reflected` partition {1, ..., t}.
    """

    q: int
    beta: int
    doubled_class: ResidueClass
    direct: tuple[int, ...]
    reflected: tuple[int, ...]

    @property
    def t(self) -> int:
        return (self.q - 1) // 2

    def difference_pairs(self) -> dict[int, tuple[int, int]]:
        """Map each integer difference d in 1..t to the pair realising it."""
        out = {d: (d, 2 * d) for d in self.direct}
        for d in self.reflected:
            out[d] = (self.q - 2 * d, self.q - d)
        return out

    def pair_set(self) -> PairSet:
        """The full starter reassembled from the certificate alone."""
        return PairSet(self.q, self.difference_pairs().values())


def half_set_certificate(q: int, choice=BetaChoice.TWO) -> HalfSetCertificate:
    """Build and internally check the folding certificate for S_beta.

    Raises ConstructionError for inapplicable q and ArithmeticError if the
    folding fails to partition {1, ..., t}, which cannot happen when the
    preconditions hold.
    """
    c = _as_choice(choice)
    _require_prime_q(q)
    if q % 8 != 3:
        raise ConstructionError(
            f"q % 8 == {q % 8}: Skolem starters from this construction "
            f"require q % 8 == 3"
        )
    table = build_qr_table(q)
    members = table.qr_set if c is BetaChoice.TWO else table.nqr_set
    t = (q - 1) // 2
    direct = tuple(d for d in range(1, t + 1) if d in members)
    reflected = tuple(d for d in range(1, t + 1) if q - d in members)
    if sorted(direct + reflected) != list(range(1, t + 1)):
        raise ArithmeticError(
            f"folding of class {members} does not partition 1..{t}"
        )
    doubled = ResidueClass.QR if c is BetaChoice.TWO else ResidueClass.NQR
    return HalfSetCertificate(
        q=q,
        beta=c.beta(q),
        doubled_class=doubled,
        direct=direct,
        reflected=reflected,
    )


def construction_primes(q_max: int) -> list[int]:
    """All primes q <= q_max with q % 8 == 3, ascending."""
    return [q for q in range(3, q_max + 1, 8) if is_prime(q)]


def enumerate_strong_skolem(
    q_max: int,
    choices: tuple = (BetaChoice.TWO, BetaChoice.HALF),
    alpha: int | None = None,
) -> Iterator[tuple[int, BetaChoice, PairSet]]:
    """Yield (q, choice, starter) for every applicable prime q <= q_max.

    With the default alpha=None each starter uses the smallest generator;
    the sets do not depend on that choice.
    """
    normalized = tuple(_as_choice(c) for c in choices)
    for q in construction_primes(q_max):
        for c in normalized:
            yield q, c, build_strong_skolem(q, c, alpha)

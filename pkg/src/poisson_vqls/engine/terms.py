"""Cost-function term keys and circuit counting."""

from dataclasses import dataclass
from enum import StrEnum


class CostKind(StrEnum):
    """Normalized cost function."""

    GLOBAL = "global"
    LOCAL = "local"


class TermFamily(StrEnum):
    """Expectation-value family of a cost term."""

    BETA = "beta"
    GAMMA_LOCAL = "gamma_local"
    GAMMA_GLOBAL = "gamma_global"


_FAMILY_ORDER: dict[TermFamily, int] = {
    TermFamily.BETA: 0,
    TermFamily.GAMMA_LOCAL: 1,
    TermFamily.GAMMA_GLOBAL: 2,
}


@dataclass(frozen=True, slots=True)
class TermKey:
    """One unique Hadamard-test circuit of a cost evaluation.

    beta: Re<psi|A_l^dag A_l'|psi>; gamma_local: Re<psi|A_l^dag U Z_j U^dag A_l'|psi>;
    gamma_global: Re<b|A_l|psi> (l_prime mirrors l).
    """

    family: TermFamily
    l: int  # noqa: E741
    l_prime: int
    j: int | None = None

    @classmethod
    def canonical(cls, family: TermFamily, l: int, l_prime: int, j: int | None = None) -> "TermKey":  # noqa: E741
        """Build the key with l <= l_prime."""
        first, second = sorted((l, l_prime))
        return cls(family, first, second, j)

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        """Get a total order over keys."""
        return (_FAMILY_ORDER[self.family], self.l, self.l_prime, -1 if self.j is None else self.j)

    @property
    def seed_words(self) -> tuple[int, int, int, int]:
        """Get the key as non-negative integers for seed derivation."""
        return (_FAMILY_ORDER[self.family], self.l, self.l_prime, 0 if self.j is None else self.j + 1)


def enumerate_term_keys(c: int, n: int, kind: CostKind, dedup: bool = True) -> list[TermKey]:
    """List the term keys one cost evaluation needs, in canonical order.

    With dedup the symmetric pairs collapse to l <= l' and the diagonal beta terms (always 1)
    are dropped; without it every ordered (l, l', j) is listed.
    """
    keys: list[TermKey] = []
    pairs = [(left, right) for left in range(c) for right in range(c) if not dedup or left <= right]
    keys.extend(TermKey(TermFamily.BETA, left, right) for left, right in pairs if not dedup or left != right)
    if kind is CostKind.LOCAL:
        keys.extend(TermKey(TermFamily.GAMMA_LOCAL, left, right, j) for left, right in pairs for j in range(n))
    else:
        keys.extend(TermKey(TermFamily.GAMMA_GLOBAL, index, index) for index in range(c))
    return sorted(keys, key=lambda key: key.sort_key)


def count_unique_circuits(c: int, n: int) -> int:
    """Unique circuits per local-cost evaluation: n c(c+1)/2 + c(c-1)/2 = c [n(c+1) + c - 1] / 2."""
    return c * (n * (c + 1) + c - 1) // 2


def count_unique_circuits_global(c: int) -> int:
    """Unique circuits per global-cost evaluation: c(c-1)/2 off-diagonal betas plus c overlaps."""
    return c * (c - 1) // 2 + c

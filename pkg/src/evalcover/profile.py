"""Profiles: which voter evaluates which alternatives."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import ProfileInvalid, UnknownVoter

STRICT = "strict"
RELAXED = "relaxed"
MODES = (STRICT, RELAXED)


@dataclass(frozen=True)
class Profile:
    """Alternatives, voters and evaluation sets.

    ``evals[k]`` is the evaluation set of ``voters[k]``.  Both label tuples fix
    the canonical dense indices (position in the tuple).
    """

    alternatives: tuple[str, ...]
    voters: tuple[str, ...]
    evals: tuple[frozenset[str], ...]

    def __post_init__(self):
        if len(set(self.alternatives)) != len(self.alternatives):
            raise ProfileInvalid("unique-alternatives", "alternative labels must be unique")
        if len(set(self.voters)) != len(self.voters):
            raise ProfileInvalid("unique-voters", "voter labels must be unique")
        if len(self.evals) != len(self.voters):
            raise ProfileInvalid("evals", "one evaluation set per voter is required")
        known = set(self.alternatives)
        for v, ev in zip(self.voters, self.evals):
            extra = ev - known
            if extra:
                raise ProfileInvalid(
                    "subset", f"voter {v!r} evaluates unknown alternatives {sorted(extra)}"
                )

    @classmethod
    def from_mapping(
        cls,
        evals: Mapping[str, Iterable[str]],
        alternatives: Sequence[str] | None = None,
    ) -> Profile:
        """Build a profile; alternatives default to first appearance across ``evals``."""
        voters = tuple(evals)
        sets = [list(evals[v]) for v in voters]
        alts: list[str] = list(alternatives) if alternatives is not None else []
        seen = set(alts)
        for s in sets:
            for a in s:
                if a not in seen:
                    seen.add(a)
                    alts.append(a)
        return cls(tuple(alts), voters, tuple(frozenset(s) for s in sets))

    @cached_property
    def alt_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alternatives)}

    @cached_property
    def voter_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.voters)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Evaluation sets as bitsets over alternative indices."""
        idx = self.alt_index
        out = []
        for ev in self.evals:
            m = 0
            for a in ev:
                m |= 1 << idx[a]
            out.append(m)
        return tuple(out)

    def evaluation(self, voter: str) -> frozenset[str]:
        try:
            return self.evals[self.voter_index[voter]]
        except KeyError:
            raise UnknownVoter(voter) from None

    def sorted_alternatives(self, alts: Iterable[str]) -> list[str]:
        idx = self.alt_index
        return sorted(alts, key=idx.__getitem__)

    def as_mapping(self) -> dict[str, frozenset[str]]:
        return dict(zip(self.voters, self.evals))

    def validate(self, mode: str = STRICT) -> Profile:
        """Check the standing bounds |A| >= 3, |V| >= 3 and |A_v| >= 2 in strict mode."""
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == RELAXED:
            return self
        if len(self.alternatives) < 3:
            raise ProfileInvalid("|A| >= 3", f"|A| = {len(self.alternatives)} < 3")
        if len(self.voters) < 3:
            raise ProfileInvalid("|V| >= 3", f"|V| = {len(self.voters)} < 3")
        for v, ev in zip(self.voters, self.evals):
            if len(ev) < 2:
                raise ProfileInvalid(
                    "|A_v| >= 2", f"voter {v!r} evaluates {len(ev)} alternative(s), need at least 2"
                )
        return self

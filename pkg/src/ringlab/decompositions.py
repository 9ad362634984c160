"""Element decompositions with witnesses and the ring-level classifiers.

The central question per ring: is every non-unit a nilpotent plus-or-minus
an idempotent (GWNC)?  The surrounding flags cover the whole clean family:
clean, nil-clean, their strongly/weakly variants, the non-unit-restricted
GNC/GSNC/GWNC, and the unit-shape conditions UU/WUU/UWNC.

Witness tie-breaking is fixed everywhere: elements ascending, idempotents
ascending, sign + before -, so reports are reproducible bit for bit.

The strongly-weakly variants hold for an element when it or its negative
decomposes strongly; some authors instead ask for a commuting weakly
clean decomposition of the element itself, which is a different predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Ring, is_nilpotent
from . import structure
from .structure import (
    StructuralFlags,
    ring_data,
    structural_predicates,
)

#: implication edges that must hold inside every PropertyReport
DIAGRAM_EDGES: tuple[tuple[str, str], ...] = (
    ("strongly_nil_clean", "nil_clean"),
    ("nil_clean", "weakly_nil_clean"),
    ("weakly_nil_clean", "gwnc"),
    ("nil_clean", "gnc"),
    ("gnc", "gwnc"),
    ("gsnc", "gnc"),
    ("gsnc", "strongly_clean"),
    ("strongly_clean", "clean"),
    ("clean", "weakly_clean"),
    ("gnc", "clean"),
    ("gwnc", "weakly_clean"),
    ("strongly_nil_clean", "gsnc"),
)

REPORT_FLAGS: tuple[str, ...] = (
    "clean",
    "strongly_clean",
    "weakly_clean",
    "strongly_weakly_clean",
    "nil_clean",
    "strongly_nil_clean",
    "weakly_nil_clean",
    "strongly_weakly_nil_clean",
    "gnc",
    "gsnc",
    "gwnc",
    "uu",
    "wuu",
    "uwnc",
)

_KIND_OF_FLAG = {
    "clean": "clean",
    "strongly_clean": "strongly_clean",
    "weakly_clean": "weakly_clean",
    "nil_clean": "nil_clean",
    "strongly_nil_clean": "strongly_nil_clean",
    "weakly_nil_clean": "weakly_nil_clean",
}


@dataclass(frozen=True)
class Witness:
    """A decomposition ``a = rest + sign*idempotent``.

    ``rest`` is the nilpotent part for the nil-clean family and the unit
    part for the clean family; ``commuting`` records whether it commutes
    with the idempotent.
    """

    sign: int
    idempotent: int
    rest: int
    commuting: bool

    def reconstruct(self, ring: Ring) -> int:
        if self.sign == 1:
            return ring.add(self.rest, self.idempotent)
        return ring.sub(self.rest, self.idempotent)


def validate_witness(ring: Ring, a: int, kind: str, w: Witness) -> None:
    """Assert a witness against its side conditions; raises ``ValueError``."""
    e = w.idempotent
    if ring.mul(e, e) != e:
        raise ValueError(f"witness idempotent {e} is not idempotent in {ring.label}")
    if w.reconstruct(ring) != a:
        raise ValueError(f"witness for {a} in {ring.label} does not reconstruct it")
    if "nil" in kind:
        ok, _ = is_nilpotent(ring, w.rest)
        if not ok:
            raise ValueError(f"witness rest {w.rest} is not nilpotent in {ring.label}")
    else:
        if not ring_data(ring).unit_mask[w.rest]:
            raise ValueError(f"witness rest {w.rest} is not a unit in {ring.label}")
    commuting = ring.mul(e, w.rest) == ring.mul(w.rest, e)
    if commuting != w.commuting:
        raise ValueError(f"witness for {a} in {ring.label} mislabels commutation")
    if kind.startswith("strongly") and not w.commuting:
        raise ValueError(f"strong witness for {a} in {ring.label} does not commute")


def _elem_search(ring: Ring, a: int, kind: str) -> tuple[bool, Witness | None]:
    """Per-element search in the fixed witness order: idempotents ascending,
    sign + before -."""
    data = ring_data(ring)
    target = data.unit_mask if "nil" not in kind else data.nil_mask
    strongly = kind.startswith("strongly")
    weakly = kind.startswith("weakly")
    for e in data.idem_indices:
        e = int(e)
        rest = ring.sub(a, e)
        if target[rest]:
            commuting = ring.mul(e, rest) == ring.mul(rest, e)
            if not strongly or commuting:
                return True, Witness(sign=1, idempotent=e, rest=rest, commuting=commuting)
        if weakly:
            rest = ring.add(a, e)
            if target[rest]:
                commuting = ring.mul(e, rest) == ring.mul(rest, e)
                return True, Witness(sign=-1, idempotent=e, rest=rest, commuting=commuting)
    return False, None


def elem_is_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    """a = e + u with e idempotent and u a unit."""
    return _elem_search(ring, ring._check(a), "clean")


def elem_is_strongly_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    return _elem_search(ring, ring._check(a), "strongly_clean")


def elem_is_weakly_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    """a - e or a + e is a unit for some idempotent e."""
    return _elem_search(ring, ring._check(a), "weakly_clean")


def elem_is_nil_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    """a = e + q with e idempotent and q nilpotent."""
    return _elem_search(ring, ring._check(a), "nil_clean")


def elem_is_strongly_nil_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    return _elem_search(ring, ring._check(a), "strongly_nil_clean")


def elem_is_weakly_nil_clean(ring: Ring, a: int) -> tuple[bool, Witness | None]:
    """a - e or a + e is nilpotent for some idempotent e."""
    return _elem_search(ring, ring._check(a), "weakly_nil_clean")


ELEMENT_PREDICATES = {
    "clean": elem_is_clean,
    "strongly_clean": elem_is_strongly_clean,
    "weakly_clean": elem_is_weakly_clean,
    "nil_clean": elem_is_nil_clean,
    "strongly_nil_clean": elem_is_strongly_nil_clean,
    "weakly_nil_clean": elem_is_weakly_nil_clean,
}


@dataclass
class PropertyReport:
    """Classification flags of one ring plus counterexamples and the
    structural predicate record."""

    label: str
    card: int
    flags: dict[str, bool]
    counterexamples: dict[str, int]
    structural: StructuralFlags

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "card": self.card,
            "flags": dict(self.flags),
            "counterexamples": dict(self.counterexamples),
            "structural": self.structural.as_dict(),
            "notes": list(self.structural.notes),
        }


_BLOCK = 8192


class RingAnalysis:
    """Lazily computed ring-level flags with deterministic counterexamples.

    Quantifiers walk the domain in ascending index blocks and stop at the
    first failing element, so negative answers do not pay for a full-carrier
    scan; parallel runs chunk the domain and take the minimum failure, which
    agrees with the serial order."""

    def __init__(self, ring: Ring, threads: int = 1) -> None:
        self.ring = ring
        self.threads = max(1, threads)
        self.data = ring_data(ring, threads=threads)
        self._flags: dict[str, bool] = {}
        self._cx: dict[str, int | None] = {}

    def _first_failure(self, kind: str, domain: np.ndarray, negated: bool) -> int | None:
        if self.threads > 1 and len(domain) > 2 * _BLOCK:
            chunks = np.array_split(domain, self.threads)
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                hits = pool.map(
                    lambda c: self._first_failure_serial(kind, c, negated), chunks
                )
            found = [h for h in hits if h is not None]
            return min(found) if found else None
        return self._first_failure_serial(kind, domain, negated)

    def _first_failure_serial(
        self, kind: str, domain: np.ndarray, negated: bool
    ) -> int | None:
        for lo in range(0, len(domain), _BLOCK):
            block = domain[lo : lo + _BLOCK]
            bad = structure.block_undecided(self.data, kind, block)
            if len(bad) == 0:
                continue
            if negated:
                # the element itself or its negative must decompose
                ok2 = structure.block_ok(self.data, kind, self.ring.neg_vec(bad))
                if not ok2.all():
                    return int(bad[np.flatnonzero(~ok2)[0]])
            else:
                return int(bad[0])
        return None

    def _quantified(self, name: str, kind: str, domain: np.ndarray, negated: bool = False) -> bool:
        cx = self._first_failure(kind, domain, negated)
        self._flags[name] = cx is None
        self._cx[name] = cx
        return cx is None

    def _compute(self, name: str) -> bool:
        ring = self.ring
        data = self.data
        everyone = np.arange(ring.card, dtype=np.int64)
        if name in _KIND_OF_FLAG:
            return self._quantified(name, name, everyone)
        if name == "strongly_weakly_clean":
            return self._quantified(name, "strongly_clean", everyone, negated=True)
        if name == "strongly_weakly_nil_clean":
            return self._quantified(name, "strongly_nil_clean", everyone, negated=True)
        if name == "gnc":
            return self._quantified(name, "nil_clean", np.flatnonzero(~data.unit_mask))
        if name == "gsnc":
            return self._quantified(
                name, "strongly_nil_clean", np.flatnonzero(~data.unit_mask)
            )
        if name == "gwnc":
            return self._quantified(
                name, "weakly_nil_clean", np.flatnonzero(~data.unit_mask)
            )
        if name == "uwnc":
            return self._quantified(
                name, "weakly_nil_clean", np.flatnonzero(data.unit_mask)
            )
        if name == "uu":
            holds = structure.is_uu(ring)
            self._flags[name] = holds
            if holds:
                self._cx[name] = None
            else:
                uidx = np.flatnonzero(data.unit_mask)
                bad = ~data.nil_mask[ring.sub_vec(uidx, ring.one)]
                self._cx[name] = int(uidx[np.flatnonzero(bad)[0]])
            return holds
        if name == "wuu":
            holds = structure.is_wuu(ring)
            self._flags[name] = holds
            if holds:
                self._cx[name] = None
            else:
                nidx = np.flatnonzero(data.nil_mask)
                mask = np.zeros(ring.card, dtype=bool)
                mask[ring.add_vec(nidx, ring.one)] = True
                mask[ring.sub_vec(nidx, ring.one)] = True
                self._cx[name] = int(np.flatnonzero(mask != data.unit_mask)[0])
            return holds
        raise ValueError(f"unknown flag {name!r}")

    def flag(self, name: str) -> bool:
        if name not in self._flags:
            self._compute(name)
        return self._flags[name]

    def counterexample(self, name: str) -> int | None:
        self.flag(name)
        return self._cx[name]

    def report(self) -> PropertyReport:
        flags = {name: self.flag(name) for name in REPORT_FLAGS}
        cx = {
            name: self._cx[name]
            for name in REPORT_FLAGS
            if self._cx.get(name) is not None
        }
        return PropertyReport(
            label=self.ring.label,
            card=self.ring.card,
            flags=flags,
            counterexamples=cx,
            structural=structural_predicates(self.ring),
        )


def _analysis(ring: Ring, threads: int = 1) -> RingAnalysis:
    cached = getattr(ring, "_ringlab_analysis", None)
    if cached is None:
        cached = RingAnalysis(ring, threads=threads)
        ring._ringlab_analysis = cached
    else:
        cached.threads = max(1, threads)
    return cached


def classify(ring: Ring, threads: int = 1) -> PropertyReport:
    """Full classification of one ring; quantifies every element predicate
    over its domain and records the lowest-index counterexample per failed
    flag."""
    return _analysis(ring, threads).report()


def ring_flag(ring: Ring, name: str, threads: int = 1) -> bool:
    return _analysis(ring, threads).flag(name)


def flag_counterexample(ring: Ring, name: str, threads: int = 1) -> int | None:
    return _analysis(ring, threads).counterexample(name)


def gwnc(ring: Ring, threads: int = 1) -> tuple[bool, int | None]:
    """Decide whether every non-unit is weakly nil-clean; on failure return
    the lowest-index counterexample."""
    analysis = _analysis(ring, threads)
    holds = analysis.flag("gwnc")
    return holds, analysis.counterexample("gwnc")


def gwnc_witness(ring: Ring, a: int) -> Witness | None:
    """Deterministic weakly-nil-clean witness for one element, or None."""
    ok, w = elem_is_weakly_nil_clean(ring, a)
    return w if ok else None

"""Regular-orbit certificates from conjugacy class data, in exact arithmetic.

If a group has no regular orbit on V, then V is covered by the fixed spaces
of scalar twists of its projective-prime-order elements, which forces
|V| to be at most a weighted sum of eigenspace sizes over the classes.
Evaluating that sum exactly and finding it *smaller* than |V| is therefore a
sound certificate that a regular orbit exists.  Four progressively cruder
right-hand sides are available; all arithmetic is integer/rational, so a
"Certified" verdict is a proof, while "Inconclusive" decides nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import MissingEvidence, NeverFails
from .gfield import is_prime

STRATEGIES = ("ii", "iii", "iv", "v")

# evidence kinds
PROFILE = "profile"  # eigenspace dimensions, optionally tagged with twists
EMAX = "emax"  # a single cap on every eigenspace dimension
ALPHA = "alpha"  # generation bound yielding the cap floor(d(1 - 1/alpha))


@dataclass(frozen=True)
class ClassEntry:
    """One conjugacy class of projective prime order with its evidence.

    ``profile`` lists eigenspace dimensions; entries may be (twist, dim)
    with an encoded base-field twist or (None, dim) for eigenvalues that are
    only known over the closure.  ``emax`` caps all eigenspace dimensions.
    ``alpha`` is a generation-by-conjugates bound (int or Fraction >= 2).
    """

    label: str
    size: int
    proj_order: int
    unipotent: bool = False
    profile: tuple[tuple[int | None, int], ...] | None = None
    emax: int | None = None
    alpha: Fraction | int | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"class {self.label}: size must be positive")
        if not is_prime(self.proj_order):
            raise ValueError(
                f"class {self.label}: projective order {self.proj_order} not prime")
        if self.profile is None and self.emax is None and self.alpha is None:
            raise MissingEvidence(f"class {self.label} carries no evidence")
        if self.alpha is not None and Fraction(self.alpha) < 2:
            raise ValueError(f"class {self.label}: alpha must be >= 2")

    def profile_dims(self) -> list[int] | None:
        if self.profile is None:
            return None
        return [dim for _, dim in self.profile if dim >= 1]

    def max_cap(self, d: int) -> int:
        """Best available cap on a single eigenspace dimension."""
        caps = []
        if self.profile is not None:
            dims = self.profile_dims()
            caps.append(max(dims) if dims else 0)
        if self.emax is not None:
            caps.append(self.emax)
        if self.alpha is not None:
            caps.append(eig_cap(d, self.alpha))
        if not caps:
            raise MissingEvidence(f"class {self.label} carries no usable cap")
        return min(caps)


@dataclass(frozen=True)
class CertificateInput:
    """Everything the inequality engine needs about one (G, V) pair."""

    r: int  # base field size
    d: int  # module dimension
    classes: tuple[ClassEntry, ...]
    group_order: int | None = None

    def __post_init__(self):
        if self.r < 2 or self.d < 1:
            raise ValueError("need field size >= 2 and dimension >= 1")
        for c in self.classes:
            if c.profile is not None:
                for _, dim in c.profile:
                    if dim > self.d:
                        raise ValueError(
                            f"class {c.label}: eigenspace dim {dim} exceeds d")
            if c.emax is not None and c.emax > self.d:
                raise ValueError(f"class {c.label}: emax exceeds d")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one certificate evaluation.

    ``lhs`` is |V| = r^d; ``rhs`` the exact covering bound.  Certified means
    rhs < lhs, proving a regular orbit; otherwise slack = rhs - lhs measures
    how far the strategy was from certifying.  ``degraded`` lists classes
    that lacked the strategy's native evidence and were charged at the next
    cruder rate.
    """

    outcome: str  # "certified" | "inconclusive"
    inequality_used: str  # "ii" | "iii" | "iv" | "v"
    lhs: int
    rhs: Fraction
    slack: Fraction
    degraded: tuple[str, ...] = field(default=())

    @property
    def certified(self) -> bool:
        return self.outcome == "certified"


CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


def eig_cap(d: int, alpha) -> int:
    """floor(d * (1 - 1/alpha)): the eigenspace cap from a generation bound."""
    a = Fraction(alpha)
    if a < 2:
        raise ValueError("alpha must be at least 2")
    return int(d * (a - 1) / a)


# ---------------------------------------------------------------------------
# per-class contributions
# ---------------------------------------------------------------------------

def _unipotent_term(c: ClassEntry, r: int, d: int) -> Fraction:
    """Unipotent classes contribute a single fixed-space term, weight 1/(o-1)."""
    dims = c.profile_dims()
    if dims is not None:
        cap = max(dims) if dims else 0
    elif c.emax is not None:
        cap = c.emax
    else:
        cap = eig_cap(d, c.alpha)
    return Fraction(c.size, c.proj_order - 1) * r**cap


def _term_ii(c: ClassEntry, r: int, d: int) -> tuple[Fraction, bool]:
    """Strategy ii: the full eigenspace profile, weight 1/(o-1).

    Classes without a profile degrade to the strategy-iii rate; the flag in
    the result records the degradation.
    """
    if c.unipotent:
        return _unipotent_term(c, r, d), False
    if c.profile is not None:
        dims = c.profile_dims()
        total = sum(Fraction(r) ** dim for dim in dims)
        return Fraction(c.size, c.proj_order - 1) * total, False
    term, _ = _term_iii(c, r, d)
    return term, True


def _term_iii(c: ClassEntry, r: int, d: int) -> tuple[Fraction, bool]:
    """Strategy iii: o/(o-1) times the largest eigenspace size."""
    if c.unipotent:
        return _unipotent_term(c, r, d), False
    cap = c.max_cap(d)
    return Fraction(c.size * c.proj_order, c.proj_order - 1) * r**cap, False


def _term_iv(c: ClassEntry, r: int, d: int) -> tuple[Fraction, bool]:
    """Strategy iv: weight o/(o-1) relaxed to 2 for semisimple classes."""
    if c.unipotent:
        return _unipotent_term(c, r, d), False
    cap = c.max_cap(d)
    return Fraction(2 * c.size) * r**cap, False


def _term_v(c: ClassEntry, r: int, d: int) -> tuple[Fraction, bool]:
    """Strategy v: every eigenspace capped by the alpha bound alone."""
    if c.alpha is None:
        raise MissingEvidence(
            f"class {c.label}: strategy v needs an alpha bound")
    cap = eig_cap(d, c.alpha)
    if c.unipotent:
        return Fraction(c.size, c.proj_order - 1) * r**cap, False
    return Fraction(2 * c.size) * r**cap, False


_TERMS = {"ii": _term_ii, "iii": _term_iii, "iv": _term_iv, "v": _term_v}


# ---------------------------------------------------------------------------
# the inequality engine
# ---------------------------------------------------------------------------

def evaluate(inp: CertificateInput, strategy: str) -> Verdict:
    """Evaluate one strategy's right-hand side and compare with |V| exactly."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    term_fn = _TERMS[strategy]
    rhs = Fraction(0)
    degraded = []
    for c in inp.classes:
        term, was_degraded = term_fn(c, inp.r, inp.d)
        rhs += term
        if was_degraded:
            degraded.append(c.label)
    lhs = inp.r**inp.d
    outcome = CERTIFIED if rhs < lhs else INCONCLUSIVE
    return Verdict(outcome, strategy, lhs, rhs, rhs - lhs, tuple(degraded))


def check(inp: CertificateInput, strategy: str = "best") -> Verdict:
    """Run one strategy, or all of ii..v in order and keep the best verdict.

    "best" returns the first Certified verdict in the fixed order ii, iii,
    iv, v; if none certifies, the Inconclusive verdict with minimal slack.
    Strategies whose evidence is missing are skipped in "best" mode but
    raise when requested explicitly.
    """
    if strategy != "best":
        return evaluate(inp, strategy)
    fallback = None
    attempted = False
    for s in STRATEGIES:
        try:
            v = evaluate(inp, s)
        except MissingEvidence:
            continue
        attempted = True
        if v.certified:
            return v
        if fallback is None or v.slack < fallback.slack:
            fallback = v
    if not attempted:
        raise MissingEvidence("no strategy has sufficient evidence")
    return fallback


def min_failing_dim(template: CertificateInput, r: int | None = None,
                    ceiling: int = 4096) -> int:
    """Least dimension at which strategy v certifies, scanning upward.

    Once the crude inequality fails at some d it fails for all larger d at
    fixed r, so the scan may stop at the first certificate.  All classes
    must carry alpha evidence (the caps must scale with d).
    """
    r = template.r if r is None else r
    for c in template.classes:
        if c.alpha is None:
            raise MissingEvidence(
                f"class {c.label}: min_failing_dim needs alpha evidence")
    for d in range(1, ceiling + 1):
        inp = replace(template, r=r, d=d)
        if evaluate(inp, "v").certified:
            return d
    raise NeverFails(f"no dimension up to {ceiling} certifies at r = {r}")


# ---------------------------------------------------------------------------
# building inputs from enumerated groups
# ---------------------------------------------------------------------------

def input_from_group(G, labels=None) -> CertificateInput:
    """Exact certificate input from an enumerated group: sizes and twists.

    Each projective-prime-order class contributes its H-class size and the
    twist profile of its stored representative (the multiset of rational
    eigenspace dimensions is independent of the choice of lift).
    """
    from .matgroup import prime_projective_classes
    from .spectral import twist_profile

    cds = prime_projective_classes(G)
    entries = []
    for i, c in enumerate(cds):
        label = labels[i] if labels else f"{c.proj_order}c{i}"
        tp = twist_profile(c.rep)
        profile = tuple((k, dim) for k, dim in tp.dims if dim >= 1)
        entries.append(ClassEntry(
            label=label,
            size=c.class_size,
            proj_order=c.proj_order,
            unipotent=c.unipotent,
            profile=profile,
        ))
    return CertificateInput(r=G.spec.q, d=G.d, classes=tuple(entries),
                            group_order=G.order)

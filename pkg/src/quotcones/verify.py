"""Randomized and exhaustive verification harnesses behind the CLI.

Each suite runs deterministically from a master seed: trial i draws its own
RNG stream from a hash of (seed, i), so results do not depend on scheduling.
Failures carry the offending matrix in the exact JSON format the ``split``
command reads, making every counterexample replayable.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field

from .cones import (
    balanced_partition,
    cone_subset,
    effective_cone,
    make_params,
    nef_cone,
)
from .errors import GenericityFailure
from .families import (
    run_alpha_ddeg_trials,
    run_beta_dunb_trials,
    stable_seed,
)
from .fields import PrimeField, RationalField
from .forms import BinaryForm
from .polymatrix import PolyMatrix, is_generically_injective, random_invertible, random_polymatrix
from .splitting import (
    SplittingType,
    criterion_det,
    is_locally_free,
    is_unbalanced,
    left_nullity,
    quotient_splitting,
    scroll_degenerate,
)
from .solver import theorem1_report


@dataclass
class VerifyResult:
    suite: str
    total: int = 0
    failed: int = 0
    lines: list = dc_field(default_factory=list)
    counterexamples: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, line: str | None = None, counterexample: dict | None = None):
        self.total += 1
        if not ok:
            self.failed += 1
            if counterexample is not None:
                self.counterexamples.append(counterexample)
        if line is not None:
            self.lines.append(line)

    def summary(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "total": self.total,
                "passed": self.total - self.failed,
                "failed": self.failed,
                "ok": self.ok,
            },
            sort_keys=True,
            separators=(",", ":"),
        )


def theorem_grid(n_range=range(2, 9), d_range=range(1, 11)):
    """All grid parameters, skipping the refused regimes (d < k on the
    unbalanced side, d < r on the degenerate side) and the empty-generator
    point (r = 0, d = 1)."""
    for n in n_range:
        for r in range(0, n - 1):
            for d in d_range:
                if d < n - r or (r >= 1 and d < r):
                    continue
                if r == 0 and d == 1:
                    continue
                yield make_params(n, r, d)


def planted_quotient(field, bundle_degs, torsion_lens, rng):
    """A presentation with known cokernel, hidden by a random change of basis.

    Each bundle summand of degree b >= 1 contributes the classic two-row
    column (x^b, y^b); a degree-0 summand contributes a free zero row; each
    torsion factor of length t contributes a one-row column (x - c y)^t (or
    y^t), supported at a random point.  Left multiplication by a random
    invertible constant matrix changes nothing about the cokernel.
    """
    x = BinaryForm.from_ints(field, [0, 1])
    y = BinaryForm.from_ints(field, [1, 0])
    blocks = []  # (rows, col_form or None, col_deg)
    for b in sorted(bundle_degs):
        if b == 0:
            blocks.append((1, None, None))
        else:
            fx = _power(x, b)
            fy = _power(y, b)
            blocks.append((2, (fx, fy), b))
    for t in torsion_lens:
        root = y if rng.randrange(4) == 0 else x - y.scale(field.random(rng))
        blocks.append((1, (_power(root, t),), t))
    nrows = sum(b[0] for b in blocks)
    col_specs = [(b[1], b[2]) for b in blocks if b[1] is not None]
    col_degs = tuple(deg for _, deg in col_specs)
    entries = [[BinaryForm.zero(deg, field.zero()) for deg in col_degs] for _ in range(nrows)]
    row0 = 0
    col = 0
    for rows_in_block, forms, _ in blocks:
        if forms is not None:
            for t, f in enumerate(forms):
                entries[row0 + t][col] = f
            col += 1
        row0 += rows_in_block
    plain = PolyMatrix.build(field, col_degs, entries)
    u = random_invertible(field, nrows, rng)
    mixed = [
        [_row_mix(u[i], plain.entries, j, col_degs[j], field) for j in range(len(col_degs))]
        for i in range(nrows)
    ]
    phi = PolyMatrix.build(field, col_degs, mixed)
    expected = SplittingType(tuple(sorted(bundle_degs)), sum(torsion_lens))
    return phi, expected


def _power(f: BinaryForm, e: int) -> BinaryForm:
    out = f
    for _ in range(e - 1):
        out = out * f
    return out


def _row_mix(u_row, entries, j, deg, field):
    acc = BinaryForm.zero(deg, field.zero())
    for c, form in zip(u_row, (row[j] for row in entries)):
        if c and form:
            acc = acc + form.scale(c)
    return acc


def random_planted(field, rng):
    """Random planted instance with at least one column."""
    while True:
        n_bundles = rng.randint(1, 3)
        bundle_degs = [rng.randint(0, 3) for _ in range(n_bundles)]
        torsion_lens = [rng.randint(1, 2) for _ in range(rng.randint(0, 2))]
        if sum(bundle_degs) + sum(torsion_lens) == 0:
            continue
        if all(b == 0 for b in bundle_degs) and not torsion_lens:
            continue
        return planted_quotient(field, bundle_degs, torsion_lens, rng)


_PROP41_SHAPES = [(2, 2), (2, 3), (3, 2), (3, 3)]  # (k, d) with r = d


def run_prop41(trials: int = 200, master_seed: int = 42, field=None) -> VerifyResult:
    """Scroll degeneracy is equivalent to an unbalanced quotient when d = r.

    Each trial draws a random locally free instance (resampling the rare
    torsion cases away) and checks the equivalence exactly.
    """
    field = field or PrimeField()
    result = VerifyResult("prop41")
    for i in range(trials):
        rng = random.Random(stable_seed(master_seed, i))
        k, d = _PROP41_SHAPES[i % len(_PROP41_SHAPES)]
        n = k + d
        col_degs = balanced_partition(d, k)
        phi = None
        for _ in range(64):
            cand = random_polymatrix(field, n, col_degs, rng)
            if is_generically_injective(cand) and is_locally_free(cand):
                phi = cand
                break
        if phi is None:
            raise GenericityFailure("could not sample a locally free instance")
        split = quotient_splitting(phi)
        ok = scroll_degenerate(phi) == is_unbalanced(split)
        result.record(
            ok,
            None if ok else json.dumps(phi.to_json(), sort_keys=True),
            None if ok else phi.to_json(),
        )
    return result


_PROP42_CONFIGS = [
    ("alpha-Ddeg", (4, 2, 2), (1, 1)),
    ("beta-Dunb", (4, 2, 2), (1, 1)),
    ("alpha-Ddeg", (2, 0, 2), (1, 1)),
    ("alpha-Ddeg", (3, 0, 3), (1, 0, 1)),
]


def run_prop42(trials: int = 20, master_seed: int = 1, field=None) -> VerifyResult:
    """Measured family intersection degrees match the closed forms.

    Every non-degenerate trial must agree exactly, and at least 90% of the
    trials per configuration must be non-degenerate.
    """
    field = field or PrimeField()
    result = VerifyResult("prop42")
    for kind, (n, r, d), vec in _PROP42_CONFIGS:
        p = make_params(n, r, d)
        if kind == "alpha-Ddeg":
            reports = run_alpha_ddeg_trials(p, vec, master_seed, trials, field)
        else:
            reports = run_beta_dunb_trials(p, vec, master_seed, trials, field)
        generic = [t for t in reports if not t.degenerate]
        config_ok = all(t.agreed for t in generic) and 10 * len(generic) >= 9 * trials
        for t in reports:
            result.lines.append(t.to_json_line())
        result.record(config_ok)
    return result


def run_theorem1(n_range=range(2, 9), d_range=range(1, 11)) -> VerifyResult:
    """Grid sweep: solver path reproduces the formula path and nef sits
    inside effective, at every supported parameter point."""
    result = VerifyResult("theorem1")
    for p in theorem_grid(n_range, d_range):
        report = theorem1_report(p)
        ok = (
            report.agrees
            and report.unb_supported
            and report.deg_supported
            and not report.deg_empty
        )
        if ok:
            ok = cone_subset(nef_cone(p), effective_cone(p).cone)
        result.record(ok, None if ok else report.to_json_line())
    return result


def run_conservation(trials: int = 500, master_seed: int = 7, field=None) -> VerifyResult:
    """Degree conservation fuzz: sum(degrees) + torsion == sum(colDegs) on
    random generically injective matrices of mixed shapes (a tenth of them
    over the rationals)."""
    prime_field = field or PrimeField()
    rational = RationalField()
    result = VerifyResult("conservation")
    for i in range(trials):
        rng = random.Random(stable_seed(master_seed, i))
        over_q = i % 10 == 9
        fld = rational if over_q else prime_field
        n = rng.randint(2, 5 if over_q else 6)
        k = rng.randint(1, n)
        col_degs = tuple(rng.randint(0, 2) for _ in range(k))
        if sum(col_degs) == 0:
            col_degs = (1,) + col_degs[1:]
        phi = None
        for _ in range(32):
            cand = random_polymatrix(fld, n, col_degs, rng)
            if is_generically_injective(cand):
                phi = cand
                break
        if phi is None:
            raise GenericityFailure("could not sample a generically injective matrix")
        split = quotient_splitting(phi)
        ok = sum(split.degrees) + split.torsion == phi.total_degree
        result.record(
            ok,
            None if ok else json.dumps(phi.to_json(), sort_keys=True),
            None if ok else phi.to_json(),
        )
    return result


def run_criterion_duality(trials: int = 100, master_seed: int = 11, field=None) -> VerifyResult:
    """criterion_det vanishes exactly when the twisted annihilator space is
    nonzero, over random square-system instances."""
    field = field or PrimeField()
    result = VerifyResult("criterion")
    count = 0
    i = 0
    while count < trials:
        rng = random.Random(stable_seed(master_seed, i))
        i += 1
        k, d = _PROP41_SHAPES[i % len(_PROP41_SHAPES)]
        n = k + d
        phi = random_polymatrix(field, n, balanced_partition(d, k), rng)
        if not is_generically_injective(phi):
            continue
        d2 = phi.total_degree // (n - k)
        ok = (not criterion_det(phi)) == (left_nullity(phi, d2 - 1) > 0)
        result.record(ok, None if ok else json.dumps(phi.to_json(), sort_keys=True))
        count += 1
    return result


SUITES = {
    "prop41": run_prop41,
    "prop42": run_prop42,
    "theorem1": lambda trials=0, master_seed=0, field=None: run_theorem1(),
    "conservation": run_conservation,
}

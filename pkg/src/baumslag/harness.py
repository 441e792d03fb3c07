"""Deterministic, seeded property suites.

Every suite produces a SuiteReport whose text and JSON renderings are
byte-stable functions of (suite, parameters, seed): the i-th trial draws
all of its randomness from ``random.Random(f"{seed}:{i}")``, so reports
do not depend on scheduling and ``jobs > 1`` cannot change the output.
A failure record carries the per-trial seed and the inputs needed to
replay that single trial.

Random elements of G(m, n) are sampled with the t-exponent uniform in
[-T_BOUND, T_BOUND] and the kernel component z / (m^i n^j) with z
uniform in [-NUM_BOUND, NUM_BOUND] and i, j <= POW_BOUND; the defaults
keep exact arithmetic fast while reaching all code paths, and every
suite accepts overrides.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import britton
from .abelianization import abelianization
from .errors import DomainError
from .fixtures import fixture_names, load_fixture
from .graph_of_groups import (
    GraphOfGroups,
    collapse_all_but_one,
    fundamental_presentation,
    validate,
)
from .metabelian import (
    COMMENSURABLE_CYCLIC,
    CONTAINS_METABELIAN,
    INSIDE_H,
    MetabelianElement,
    MetabelianParams,
    bezout_certificate,
    centralizer_sample,
    malnormality_violation_witness,
    power_conjugacy_witness,
    subgroup_params,
    two_gen_classify,
)

T_BOUND = 5
NUM_BOUND = 100
POW_BOUND = 4
CENTRALIZER_RETRIES = 32


@dataclass
class SuiteReport:
    """Outcome of one suite run; verdict is pass iff failures is empty."""

    suite: str
    parameters: dict
    trials: int
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "trials": self.trials,
            "failures": self.failures,
            "notes": self.notes,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}", "parameters:"]
        for key in sorted(self.parameters):
            lines.append(f"  {key}: {self.parameters[key]}")
        lines.append(f"trials run: {self.trials}")
        if self.notes:
            lines.append("notes:")
            for note in self.notes:
                lines.append(f"  - {note}")
        lines.append(f"failures: {len(self.failures)}")
        for record in self.failures:
            first = True
            for key in sorted(record):
                prefix = "  - " if first else "    "
                lines.append(f"{prefix}{key}: {record[key]}")
                first = False
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _sub_seed(seed: int | str, index: int) -> str:
    return f"{seed}:{index}"


def _run_trials(
    total: int,
    seed: int | str,
    trial: Callable[[int, random.Random], list[dict]],
    jobs: int = 1,
) -> list[dict]:
    """Run independent trials; aggregation order is by trial index, so
    the result is identical for any worker count."""

    def run(index: int) -> list[dict]:
        return trial(index, random.Random(_sub_seed(seed, index)))

    if jobs <= 1:
        results = [run(i) for i in range(total)]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, range(total)))
    failures: list[dict] = []
    for chunk in results:
        failures.extend(chunk)
    return failures


def random_element(
    rng: random.Random,
    params: MetabelianParams,
    t_bound: int = T_BOUND,
    num_bound: int = NUM_BOUND,
    pow_bound: int = POW_BOUND,
) -> MetabelianElement:
    z = rng.randint(-num_bound, num_bound)
    i = rng.randint(0, pow_bound)
    j = rng.randint(0, pow_bound)
    p = rng.randint(-t_bound, t_bound)
    x = Fraction(z, params.m**i * params.n**j)
    return MetabelianElement(params, x, p)


def _random_nonidentity(
    rng: random.Random, params: MetabelianParams, **bounds
) -> MetabelianElement:
    while True:
        g = random_element(rng, params, **bounds)
        if not g.is_identity:
            return g


def _coerce_params(values: Iterable) -> list[MetabelianParams]:
    out = []
    for v in values:
        out.append(v if isinstance(v, MetabelianParams) else MetabelianParams(*v))
    return out


def suite_ct(
    params_list: Sequence,
    trials: int = 10_000,
    seed: int | str = 0,
    jobs: int = 1,
    t_bound: int = T_BOUND,
    num_bound: int = NUM_BOUND,
    pow_bound: int = POW_BOUND,
) -> SuiteReport:
    """Commutative transitivity: for commuting pairs built around a
    common nonidentity element, the outer two elements commute.

    Per trial: draw h != 1, then draw g and k from the centraliser of h
    at random t-exponents (retrying misses up to 32 times, then
    redrawing h), and check that g and k commute."""
    groups = _coerce_params(params_list)
    total = len(groups) * trials

    def trial(index: int, rng: random.Random) -> list[dict]:
        params = groups[index // trials]
        bounds = dict(t_bound=t_bound, num_bound=num_bound, pow_bound=pow_bound)
        for _ in range(100):
            h = _random_nonidentity(rng, params, **bounds)
            sampled = []
            for _ in range(2):
                found = None
                for _ in range(CENTRALIZER_RETRIES):
                    q = rng.randint(-t_bound, t_bound)
                    found = centralizer_sample(h, q)
                    if found is not None:
                        break
                if found is None:
                    break
                sampled.append(found)
            if len(sampled) != 2:
                continue
            g, k = sampled
            if g.commutes(k):
                return []
            return [
                {
                    "trial": index,
                    "seed": _sub_seed(seed, index),
                    "params": str(params),
                    "inputs": f"h={h} g={g} k={k}",
                    "expected": "[g, k] = 1",
                    "got": "g and k do not commute",
                }
            ]
        return [
            {
                "trial": index,
                "seed": _sub_seed(seed, index),
                "params": str(params),
                "inputs": "",
                "expected": "centralizer samples",
                "got": "sampling exhausted",
            }
        ]

    failures = _run_trials(total, seed, trial, jobs)
    return SuiteReport(
        suite="ct",
        parameters={
            "params": " ".join(str(p) for p in groups),
            "trials": trials,
            "seed": seed,
        },
        trials=total,
        failures=failures,
    )


def random_bs_word(rng: random.Random, max_len: int) -> britton.BsWord:
    """Uniform letters from {a, a^-1, t, t^-1}, length uniform in
    [0, max_len]."""
    length = rng.randint(0, max_len)
    lead = 0
    tail: list[list[int]] = []
    for _ in range(length):
        choice = rng.randrange(4)
        if choice < 2:
            exp = 1 if choice == 0 else -1
            if tail:
                tail[-1][1] += exp
            else:
                lead += exp
        else:
            tail.append([1 if choice == 2 else -1, 0])
    return britton.BsWord(lead, tuple((s, e) for s, e in tail))


def suite_oracle(
    ks: Sequence[int],
    trials: int = 10_000,
    max_len: int = 30,
    seed: int | str = 0,
    jobs: int = 1,
) -> SuiteReport:
    """Word-problem cross-validation on BS(1, k): Britton reduction must
    agree with evaluation in G(1, k) on random words."""
    ks = list(ks)
    for k in ks:
        if k < 1:
            raise DomainError(f"oracle suite needs k >= 1, got {k}")
    total = len(ks) * trials

    def trial(index: int, rng: random.Random) -> list[dict]:
        k = ks[index // trials]
        word = random_bs_word(rng, max_len)
        by_britton = britton.is_trivial(word, britton.BsParams(1, k))
        by_eval = britton.eval_metabelian(word, k).is_identity
        if by_britton == by_eval:
            return []
        return [
            {
                "trial": index,
                "seed": _sub_seed(seed, index),
                "params": f"BS(1,{k})",
                "inputs": word.format() or "<empty>",
                "expected": "both procedures agree",
                "got": f"britton={by_britton} metabelian={by_eval}",
            }
        ]

    failures = _run_trials(total, seed, trial, jobs)
    return SuiteReport(
        suite="oracle",
        parameters={
            "k": " ".join(str(k) for k in ks),
            "max_len": max_len,
            "trials": trials,
            "seed": seed,
        },
        trials=total,
        failures=failures,
    )


def suite_z2(
    m_range: tuple[int, int] = (2, 4),
    n_range: tuple[int, int] = (2, 4),
    bound: int = 4,
    seed: int | str = 0,
    jobs: int = 1,
    pairs: Sequence[tuple[int, int]] | None = None,
) -> SuiteReport:
    """Rank-2 witness over a parameter grid: the generators t^-1 a t a
    and a^n of BS(m, n) commute, and no small mixed power collapses.
    Grid cells with |m| <= 1 or |n| <= 1 are skipped with a note."""
    if pairs is None:
        cells = [
            (m, n)
            for m in range(m_range[0], m_range[1] + 1)
            for n in range(n_range[0], n_range[1] + 1)
        ]
    else:
        cells = [tuple(p) for p in pairs]
    runnable = [c for c in cells if abs(c[0]) > 1 and abs(c[1]) > 1]
    skipped = [c for c in cells if c not in runnable]

    def trial(index: int, rng: random.Random) -> list[dict]:
        m, n = runnable[index]
        report = britton.z2_witness(britton.BsParams(m, n), bound)
        out = []
        if not report.commutator_is_trivial:
            out.append(
                {
                    "trial": index,
                    "seed": _sub_seed(seed, index),
                    "params": f"BS({m},{n})",
                    "inputs": "[t^-1 a t a, a^n]",
                    "expected": "trivial commutator",
                    "got": "nontrivial",
                }
            )
        if report.collapsed_pairs:
            out.append(
                {
                    "trial": index,
                    "seed": _sub_seed(seed, index),
                    "params": f"BS({m},{n})",
                    "inputs": f"powers up to {bound}",
                    "expected": "all nonzero powers nontrivial",
                    "got": f"collapsed at {list(report.collapsed_pairs)}",
                }
            )
        return out

    failures = _run_trials(len(runnable), seed, trial, jobs)
    notes = [f"skipped BS({m},{n}): needs |m|, |n| > 1" for m, n in skipped]
    notes.append("faithfulness is checked up to the stated bound only")
    return SuiteReport(
        suite="z2",
        parameters={
            "pairs": " ".join(f"({m},{n})" for m, n in cells),
            "bound": bound,
            "seed": seed,
        },
        trials=len(runnable),
        failures=failures,
        notes=notes,
    )


def suite_witnesses(
    params_list: Sequence, seed: int | str = 0, jobs: int = 1
) -> SuiteReport:
    """Re-verify the conjugate-power and malnormality-violation witnesses
    by evaluating their defining identities with group arithmetic."""
    groups = _coerce_params(params_list)
    notes: list[str] = []

    def trial(index: int, rng: random.Random) -> list[dict]:
        params = groups[index // 2]
        out = []
        sub = _sub_seed(seed, index)
        if index % 2 == 0:
            witness = power_conjugacy_witness(params)
            if witness is None:
                if params.m != params.n:
                    out.append(
                        {
                            "trial": index,
                            "seed": sub,
                            "params": str(params),
                            "inputs": "power_conjugacy_witness",
                            "expected": "a witness (m != n)",
                            "got": "none",
                        }
                    )
            elif not witness.verify():
                out.append(
                    {
                        "trial": index,
                        "seed": sub,
                        "params": str(params),
                        "inputs": witness.describe(),
                        "expected": "identity verifies with |e1| != |e2|",
                        "got": "verification failed",
                    }
                )
        else:
            witness = malnormality_violation_witness(params)
            if witness is None:
                if not params.is_abelian:
                    out.append(
                        {
                            "trial": index,
                            "seed": sub,
                            "params": str(params),
                            "inputs": "malnormality_violation_witness",
                            "expected": "a witness ((m,n) != (1,1))",
                            "got": "none",
                        }
                    )
            elif not witness.verify():
                out.append(
                    {
                        "trial": index,
                        "seed": sub,
                        "params": str(params),
                        "inputs": witness.describe(),
                        "expected": "conjugate stays in H minus identity",
                        "got": "verification failed",
                    }
                )
        return out

    failures = _run_trials(2 * len(groups), seed, trial, jobs)
    for params in groups:
        if params.is_abelian:
            notes.append(
                "G(1,1): both witnesses are none; the group is free abelian of "
                "rank 2, so it already contains Z^2 as itself"
            )
    return SuiteReport(
        suite="witnesses",
        parameters={
            "params": " ".join(str(p) for p in groups),
            "seed": seed,
        },
        trials=2 * len(groups),
        failures=failures,
        notes=notes,
    )


def suite_bezout(
    params_list: Sequence,
    k_max: int = 5,
    seed: int | str = 0,
    jobs: int = 1,
) -> SuiteReport:
    """Membership certificates for 1/m^k and 1/n^k: the Bezout identity,
    its rational evaluation, and the group-word realisation must all
    check exactly for k = 1 .. k_max on both sides."""
    groups = _coerce_params(params_list)
    for params in groups:
        if params.is_abelian:
            raise DomainError("G(1,1) admits no certificates (max(m, n) must be > 1)")
    work = [
        (params, k, side)
        for params in groups
        for k in range(1, k_max + 1)
        for side in ("m", "n")
    ]

    def trial(index: int, rng: random.Random) -> list[dict]:
        params, k, side = work[index]
        cert = bezout_certificate(params, k, side)
        checks = {
            "bezout identity": cert.bezout_identity_holds(),
            "evaluation identity": cert.evaluation_identity_holds(),
            "word evaluates to target": cert.word_evaluates_to_target(),
        }
        out = []
        for name, ok in checks.items():
            if not ok:
                out.append(
                    {
                        "trial": index,
                        "seed": _sub_seed(seed, index),
                        "params": str(params),
                        "inputs": f"k={k} side={side} q={cert.q} q'={cert.q_prime}",
                        "expected": name,
                        "got": "check failed",
                    }
                )
        return out

    failures = _run_trials(len(work), seed, trial, jobs)
    return SuiteReport(
        suite="bezout",
        parameters={
            "params": " ".join(str(p) for p in groups),
            "k_max": k_max,
            "seed": seed,
        },
        trials=len(work),
        failures=failures,
    )


def _classify_consistency(
    params: MetabelianParams,
    g1: MetabelianElement,
    g2: MetabelianElement,
) -> str | None:
    """Run two_gen_classify and cross-check the result; returns an error
    description or None."""
    result = two_gen_classify(g1, g2)
    if result.kind == INSIDE_H:
        if g1.p != 0 or g2.p != 0:
            return "inside_h with a nonzero t-exponent"
        return None
    if result.d is None or not result.d.in_kernel:
        return "combination element missing or outside H"
    if result.kind == COMMENSURABLE_CYCLIC:
        i, j = result.common_power
        if g1**i != g2**j:
            return f"common power g1^{i} != g2^{j}"
        return None
    if result.kind == CONTAINS_METABELIAN:
        if result.d.is_identity:
            return "contains_metabelian with trivial combination"
        anchor = result.anchor
        if anchor is None or anchor.p == 0:
            return "anchor generator missing or inside H"
        if subgroup_params(result.d.x, anchor.p, params) != result.subgroup:
            return "recomputed subgroup parameters disagree"
        if not params.is_abelian:
            for gen in (g1, g2):
                if gen.p != 0 and result.d.commutes(gen):
                    return "combination commutes with a generator outside H"
        return None
    return f"unknown kind {result.kind!r}"


_CLASSIFY_EXAMPLES = (
    # (g1, g2, expected kind, expectation detail)
    ((Fraction(1, 2), 1), (Fraction(1, 3), 1), CONTAINS_METABELIAN, "(1/6, 0)"),
    ((Fraction(1), 1), (Fraction(5, 3), 2), COMMENSURABLE_CYCLIC, None),
    ((Fraction(1), 0), (Fraction(1, 2), 0), INSIDE_H, None),
)


def classify_fixed_examples() -> list[str]:
    """The three reference classifications in G(2, 3); returns mismatch
    descriptions (empty = all reproduce)."""
    params = MetabelianParams(2, 3)
    problems = []
    for (x1, p1), (x2, p2), kind, detail in _CLASSIFY_EXAMPLES:
        g1 = MetabelianElement(params, x1, p1)
        g2 = MetabelianElement(params, x2, p2)
        result = two_gen_classify(g1, g2)
        if result.kind != kind:
            problems.append(f"{g1}, {g2}: expected {kind}, got {result.kind}")
        elif detail is not None and str(result.d) != detail:
            problems.append(f"{g1}, {g2}: expected d = {detail}, got {result.d}")
    return problems


def suite_classify(
    params_list: Sequence,
    trials: int = 1000,
    seed: int | str = 0,
    jobs: int = 1,
    t_bound: int = T_BOUND,
    num_bound: int = NUM_BOUND,
    pow_bound: int = POW_BOUND,
) -> SuiteReport:
    """Two-generator classification consistency on random pairs, after
    reproducing the three fixed reference examples in G(2, 3)."""
    groups = _coerce_params(params_list)
    total = len(groups) * trials
    fixed_problems = classify_fixed_examples()
    notes = ["fixed examples in G(2,3): reproduced"] if not fixed_problems else []

    def trial(index: int, rng: random.Random) -> list[dict]:
        params = groups[index // trials]
        bounds = dict(t_bound=t_bound, num_bound=num_bound, pow_bound=pow_bound)
        g1 = random_element(rng, params, **bounds)
        g2 = random_element(rng, params, **bounds)
        problem = _classify_consistency(params, g1, g2)
        if problem is None:
            return []
        return [
            {
                "trial": index,
                "seed": _sub_seed(seed, index),
                "params": str(params),
                "inputs": f"g1={g1} g2={g2}",
                "expected": "classification consistency",
                "got": problem,
            }
        ]

    failures = [
        {
            "trial": -1,
            "seed": "fixed",
            "params": "G(2,3)",
            "inputs": "fixed example",
            "expected": "tagged classification",
            "got": problem,
        }
        for problem in fixed_problems
    ]
    failures.extend(_run_trials(total, seed, trial, jobs))
    return SuiteReport(
        suite="classify",
        parameters={
            "params": " ".join(str(p) for p in groups),
            "trials": trials,
            "seed": seed,
        },
        trials=total + len(_CLASSIFY_EXAMPLES),
        failures=failures,
        notes=notes,
    )


def expected_relator_count(gog: GraphOfGroups) -> int:
    g = gog.graph
    pairs = g.edge_pairs()
    tree = len(g.vertices) - 1
    vertex_relators = sum(len(gog.vertex_groups[v].relators) for v in g.vertices)
    conjugation = sum(
        len(gog.edge_generators[g.pair_key(e)]) for e in g.half_edges
    )
    return vertex_relators + len(pairs) + tree + conjugation


def suite_gog(
    names: Sequence[str] | None = None, seed: int | str = 0, jobs: int = 1
) -> SuiteReport:
    """Fundamental-group builder checks on the built-in fixtures: the
    relator-count formula, equality of raw and simplified
    abelianizations, and invariance of the abelianization under every
    collapse-to-one-edge move."""
    names = list(names) if names is not None else list(fixture_names())

    def trial(index: int, rng: random.Random) -> list[dict]:
        name = names[index]
        sub = _sub_seed(seed, index)

        def failure(expected: str, got: str) -> dict:
            return {
                "trial": index,
                "seed": sub,
                "params": name,
                "inputs": f"fixture {name}",
                "expected": expected,
                "got": got,
            }

        gog = load_fixture(name)
        problems = validate(gog)
        if problems:
            return [failure("valid fixture", "; ".join(problems))]
        pi1 = fundamental_presentation(gog)
        out = []
        expected = expected_relator_count(gog)
        if len(pi1.raw.relators) != expected:
            out.append(
                failure(
                    f"{expected} raw relators",
                    str(len(pi1.raw.relators)),
                )
            )
        ab_raw = abelianization(pi1.raw)
        ab_simplified = abelianization(pi1.simplified)
        if ab_raw != ab_simplified:
            out.append(
                failure(f"abelianization {ab_raw}", f"simplified gives {ab_simplified}")
            )
        for pair in gog.graph.edge_pairs():
            collapsed = collapse_all_but_one(gog, pair)
            ab_collapsed = abelianization(fundamental_presentation(collapsed.gog).raw)
            if ab_collapsed != ab_raw:
                out.append(
                    failure(
                        f"abelianization {ab_raw} preserved by collapse onto {pair}",
                        str(ab_collapsed),
                    )
                )
        return out

    failures = _run_trials(len(names), seed, trial, jobs)
    return SuiteReport(
        suite="gog",
        parameters={"fixtures": " ".join(names), "seed": seed},
        trials=len(names),
        failures=failures,
        notes=["boundary maps are assumed injective; injectivity is not checked"],
    )

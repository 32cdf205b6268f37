"""Seeded verification suites producing exact, machine-checkable verdicts.

Each suite sweeps a fixed set of reflection groups with deterministic
multiplicity draws and checks one family of operator or polynomial
identities; a failure carries the exact residual, never a norm.  Suites are
pure sweeps over immutable contexts, so independent cases may be evaluated by
a thread pool (capped by the DUNKL_NUM_THREADS environment variable).
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .clifford import (CliffordPolynomial, d_plus, d_plus_squared_scalar, dunkl_dirac,
                       monogenic_basis, vector_multiply)
from .groups import builtin_root_system
from .hermite import (ch_laguerre, ch_recursion, ch_rodrigues, coefficient_recursions_check,
                      eigenspace_checks, fischer_decompose, fischer_project,
                      harmonic_basis, harmonic_dimension_classical, proportionality_constant,
                      rosler_hermite, weighted_eigenfunction_check)
from .moments import orthogonality_report
from .operators import (DunklContext, dunkl_derivative, dunkl_laplacian, euler_operator,
                        laplace_beltrami, sl2_e, sl2_f, sl2_h)
from .poly import Polynomial, monomial_basis, rational_str

SUITE_NAMES = ("commute", "sl2", "lemma1", "anticommutator", "dplus2", "fischer",
               "hermite-eq", "diffeq", "roesler", "orthogonality")


@dataclass(frozen=True)
class Profile:
    """Degree and sweep caps; desk is the full battery, ci a fast subset."""

    name: str
    max_deg: int = 6
    clifford_deg: int = 5
    radial_power_max: int = 3
    lemma_ell_max: int = 4
    t_max: int = 3
    ell_max: int = 3
    construction_draws: int = 5
    operator_draws: int = 2
    fischer_degree_max: int = 6
    eigen_degree_max: int = 5
    span_degree_max: int = 4
    orthogonality_degree_max: int = 5
    orthogonality_kappas: tuple[int, ...] = (0, 1, 2)
    orthogonality_m_max: int = 2


DESK = Profile(name="desk")
CI = Profile(name="ci", max_deg=4, clifford_deg=3, radial_power_max=2, lemma_ell_max=3,
             t_max=2, ell_max=2, construction_draws=2, operator_draws=1,
             fischer_degree_max=4, eigen_degree_max=3, span_degree_max=3,
             orthogonality_degree_max=3, orthogonality_kappas=(0, 1), orthogonality_m_max=1)

PROFILES = {"desk": DESK, "ci": CI}


@dataclass
class SuiteVerdict:
    """Outcome of one suite: case count, exact failures, wall time."""

    suite: str
    cases: int
    failures: list[dict]
    wall_time_ms: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = False) -> dict:
        data = {"suite": self.suite, "cases": self.cases, "failures": self.failures}
        if include_timing:
            data["wall_time_ms"] = self.wall_time_ms
        return data


def max_workers() -> int:
    """Worker cap from DUNKL_NUM_THREADS; defaults to serial evaluation."""
    raw = os.environ.get("DUNKL_NUM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_cases(worker: Callable, cases: Sequence) -> list:
    """Evaluate independent cases, in a pool when allowed; order is preserved."""
    workers = max_workers()
    if workers > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, cases))
    return [worker(case) for case in cases]


def draw_kappas(rng: random.Random, count: int) -> tuple[Fraction, ...]:
    """count multiplicities in [0, 3] with denominator at most 4."""
    out = []
    for _ in range(count):
        den = rng.choice((1, 2, 3, 4))
        out.append(Fraction(rng.randint(0, 3 * den), den))
    return tuple(out)


@dataclass(frozen=True)
class GroupCase:
    label: str
    family: str
    m: int
    kappas: tuple[Fraction, ...]

    def context(self) -> DunklContext:
        return DunklContext(builtin_root_system(self.family, self.m, self.kappas))

    def describe(self) -> dict:
        return {"group": self.label, "kappa": [rational_str(k) for k in self.kappas]}


OPERATOR_GROUPS = (("z2^2", "z2", 2, 2), ("a2", "a", 3, 1), ("b2", "b", 2, 2))
CONSTRUCTION_GROUPS = (("z2^1", "z2", 1, 1),) + OPERATOR_GROUPS


def group_cases(groups: Iterable[tuple], seed: int, draws: int,
                include_zero: bool = True) -> list[GroupCase]:
    """Deterministic multiplicity draws per group; kappa = 0 is always included."""
    rng = random.Random(seed)
    cases = []
    for label, family, m, orbit_count in groups:
        seen = set()
        picks: list[tuple[Fraction, ...]] = []
        if include_zero:
            picks.append(tuple(Fraction(0) for _ in range(orbit_count)))
            seen.add(picks[0])
        while len(picks) < draws + (1 if include_zero else 0):
            kappas = draw_kappas(rng, orbit_count)
            if kappas in seen:
                continue
            seen.add(kappas)
            picks.append(kappas)
        for kappas in picks:
            cases.append(GroupCase(label=label, family=family, m=m, kappas=kappas))
    return cases


def _scalar_inputs(m: int, max_deg: int) -> list[Polynomial]:
    return [Polynomial.monomial(m, e) for d in range(max_deg + 1) for e in monomial_basis(m, d)]


def _verdict(suite: str, cases: int, failures: list[dict], started: float) -> SuiteVerdict:
    return SuiteVerdict(suite=suite, cases=cases, failures=failures,
                        wall_time_ms=round((time.perf_counter() - started) * 1000, 3))


# -- operator identity suites ------------------------------------------------

def run_commute(profile: Profile, seed: int) -> SuiteVerdict:
    """Dunkl operators commute pairwise on every monomial up to the cap."""
    started = time.perf_counter()
    cases = group_cases(OPERATOR_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for f in _scalar_inputs(ctx.m, profile.max_deg):
            for i in range(ctx.m):
                for j in range(i + 1, ctx.m):
                    count += 1
                    residual = (dunkl_derivative(ctx, i, dunkl_derivative(ctx, j, f))
                                - dunkl_derivative(ctx, j, dunkl_derivative(ctx, i, f)))
                    if residual:
                        failures.append({**case.describe(), "identity": f"[T{i + 1}, T{j + 1}] = 0",
                                         "input": f.to_json(), "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("commute", total, failures, started)


def run_sl2(profile: Profile, seed: int) -> SuiteVerdict:
    """[H, E] = 2E, [H, F] = -2F, [E, F] = H on every monomial up to the cap."""
    started = time.perf_counter()
    cases = group_cases(CONSTRUCTION_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for f in _scalar_inputs(ctx.m, profile.max_deg):
            checks = (
                ("[H, E] = 2E", sl2_h(ctx, sl2_e(f)) - sl2_e(sl2_h(ctx, f)) - 2 * sl2_e(f)),
                ("[H, F] = -2F", sl2_h(ctx, sl2_f(ctx, f)) - sl2_f(ctx, sl2_h(ctx, f)) + 2 * sl2_f(ctx, f)),
                ("[E, F] = H", sl2_e(sl2_f(ctx, f)) - sl2_f(ctx, sl2_e(f)) - sl2_h(ctx, f)),
            )
            for identity, residual in checks:
                count += 1
                if residual:
                    failures.append({**case.describe(), "identity": identity,
                                     "input": f.to_json(), "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("sl2", total, failures, started)


def run_lemma1(profile: Profile, seed: int) -> SuiteVerdict:
    """Laplacian of a radial power times a homogeneous polynomial splits into
    the two-term commutation formula; checked on monomials and on computed
    harmonics (where the second term drops)."""
    started = time.perf_counter()
    cases = group_cases(OPERATOR_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        mu = ctx.mu
        norm2 = Polynomial.norm_squared(ctx.m)
        count, failures = 0, []
        for ell in range(profile.lemma_ell_max + 1):
            inputs = [Polynomial.monomial(ctx.m, e) for e in monomial_basis(ctx.m, ell)]
            inputs.extend(harmonic_basis(ctx, ell).elements)
            for s in range(1, profile.radial_power_max + 1):
                factor = 2 * s * (2 * ell + mu + 2 * s - 2)
                for R in inputs:
                    count += 1
                    lhs = dunkl_laplacian(ctx, (norm2 ** s) * R)
                    rhs = factor * ((norm2 ** (s - 1)) * R) + (norm2 ** s) * dunkl_laplacian(ctx, R)
                    residual = lhs - rhs
                    if residual:
                        failures.append({**case.describe(),
                                         "identity": "radial commutation", "s": s, "ell": ell,
                                         "input": R.to_json(), "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("lemma1", total, failures, started)


def _clifford_inputs(m: int, max_deg: int) -> list[CliffordPolynomial]:
    out = []
    for mask in range(1 << m):
        for d in range(max_deg + 1):
            for e in monomial_basis(m, d):
                out.append(CliffordPolynomial(m, {mask: Polynomial.monomial(m, e)}))
    return out


def run_anticommutator(profile: Profile, seed: int) -> SuiteVerdict:
    """{D, x} = -(2E + mu) on every monomial-blade up to the Clifford cap."""
    started = time.perf_counter()
    cases = group_cases(OPERATOR_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for F in _clifford_inputs(ctx.m, profile.clifford_deg):
            count += 1
            lhs = dunkl_dirac(ctx, vector_multiply(F)) + vector_multiply(dunkl_dirac(ctx, F))
            rhs = F.apply_scalar_operator(lambda p: -(2 * euler_operator(p) + ctx.mu * p))
            residual = lhs - rhs
            if residual:
                failures.append({**case.describe(), "identity": "{D, x} = -(2E + mu)",
                                 "input": F.to_json(), "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("anticommutator", total, failures, started)


def run_dplus2(profile: Profile, seed: int) -> SuiteVerdict:
    """(D+)^2 equals its scalar expansion, D^2 = -Delta, and the classical
    odd ladder on monogenics at kappa = 0."""
    started = time.perf_counter()
    cases = group_cases(OPERATOR_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for F in _clifford_inputs(ctx.m, profile.clifford_deg):
            count += 2
            residual = d_plus(ctx, d_plus(ctx, F)) - d_plus_squared_scalar(ctx, F)
            if residual:
                failures.append({**case.describe(), "identity": "(D+)^2 scalar expansion",
                                 "input": F.to_json(), "residual": residual.to_json()})
            residual = (dunkl_dirac(ctx, dunkl_dirac(ctx, F))
                        + F.apply_scalar_operator(lambda p: dunkl_laplacian(ctx, p)))
            if residual:
                failures.append({**case.describe(), "identity": "D^2 = -Delta",
                                 "input": F.to_json(), "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))

    # classical odd table: kappa = 0, monogenic inputs
    for m in (2, 3):
        ctx = DunklContext(builtin_root_system("z2", m, [0] * m))
        for ell in range(3):
            for M in monogenic_basis(ctx, ell):
                total += 2
                xM = vector_multiply(M)
                first = d_plus(ctx, M) - 2 * xM
                if first:
                    failures.append({"group": f"z2^{m}", "kappa": ["0/1"] * m,
                                     "identity": "classical D+ M = 2 x M", "ell": ell,
                                     "input": M.to_json(), "residual": first.to_json()})
                x3M = vector_multiply(vector_multiply(xM))
                third = (d_plus(ctx, d_plus(ctx, d_plus(ctx, M)))
                         - 8 * x3M - (4 * (2 * ell + m + 2)) * xM)
                if third:
                    failures.append({"group": f"z2^{m}", "kappa": ["0/1"] * m,
                                     "identity": "classical D+^3 M = 8 x^3 M + 4(2 ell + m + 2) x M",
                                     "ell": ell, "input": M.to_json(), "residual": third.to_json()})
    return _verdict("dplus2", total, failures, started)


# -- structural suites -------------------------------------------------------

def run_fischer(profile: Profile, seed: int) -> SuiteVerdict:
    """Projection operators sum to the identity, are idempotent and mutually
    annihilating, decompositions reassemble, and harmonic dimensions match the
    classical count."""
    started = time.perf_counter()
    cases = group_cases(CONSTRUCTION_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for degree in range(profile.fischer_degree_max + 1):
            expected_dim = harmonic_dimension_classical(ctx.m, degree)
            count += 1
            actual_dim = len(harmonic_basis(ctx, degree).elements)
            if actual_dim != expected_dim:
                failures.append({**case.describe(), "identity": "harmonic dimension",
                                 "degree": degree, "expected": expected_dim, "actual": actual_dim})
            layers = degree // 2 + 1
            for e in monomial_basis(ctx.m, degree):
                p = Polynomial.monomial(ctx.m, e)
                projections = [fischer_project(ctx, i, degree, p) for i in range(layers)]
                count += 1
                residual = p
                for q in projections:
                    residual = residual - q
                if residual:
                    failures.append({**case.describe(), "identity": "sum of projections = id",
                                     "input": p.to_json(), "residual": residual.to_json()})
                count += 1
                parts = fischer_decompose(ctx, p)
                residual = p
                for _, q in parts:
                    residual = residual - q
                if residual:
                    failures.append({**case.describe(), "identity": "decomposition reassembles",
                                     "input": p.to_json(), "residual": residual.to_json()})
                layer_map = dict(parts)
                for i in range(layers):
                    count += 1
                    residual = projections[i] - layer_map.get(i, Polynomial.zero(ctx.m))
                    if residual:
                        failures.append({**case.describe(),
                                         "identity": "projection agrees with decomposition",
                                         "layer": i, "input": p.to_json(),
                                         "residual": residual.to_json()})
                for i in range(layers):
                    for j in range(layers):
                        count += 1
                        image = fischer_project(ctx, j, degree, projections[i])
                        residual = image - projections[i] if i == j else image
                        if residual:
                            failures.append({**case.describe(),
                                             "identity": "projections idempotent and orthogonal",
                                             "layers": [i, j], "input": p.to_json(),
                                             "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("fischer", total, failures, started)


_TABLE_RADIALS = {
    0: lambda ell, mu: (Fraction(1),),
    1: lambda ell, mu: (2 * (2 * ell + mu), Fraction(-4)),
    2: lambda ell, mu: (4 * (2 * ell + mu + 2) * (2 * ell + mu),
                        -16 * (2 * ell + mu + 2), Fraction(16)),
}


def run_hermite_eq(profile: Profile, seed: int) -> SuiteVerdict:
    """The three constructions agree exactly; small indices match the closed
    table; both radial recurrences hold; kappa = 0 reduces to the classical
    polynomials (mu = m)."""
    started = time.perf_counter()
    cases = group_cases(CONSTRUCTION_GROUPS, seed, profile.construction_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        mu = ctx.mu
        count, failures = 0, []
        for ell in range(profile.ell_max + 1):
            for h_index, h in enumerate(harmonic_basis(ctx, ell).elements):
                previous = None
                for t in range(profile.t_max + 1):
                    rec = ch_recursion(ctx, t, h)
                    rod = ch_rodrigues(ctx, t, h)
                    lag = ch_laguerre(ctx, t, ell, h)
                    count += 1
                    if not (rec.polynomial == rod.polynomial == lag.polynomial
                            and rec.radial_coeffs == rod.radial_coeffs == lag.radial_coeffs):
                        failures.append({**case.describe(), "identity": "construction equivalence",
                                         "t": t, "ell": ell, "h_index": h_index,
                                         "recursion": rec.to_json(), "rodrigues": rod.to_json(),
                                         "laguerre": lag.to_json()})
                    count += 1
                    if rec.radial_coeffs[-1] != Fraction(-4) ** t:
                        failures.append({**case.describe(), "identity": "top radial coefficient",
                                         "t": t, "ell": ell, "h_index": h_index,
                                         "radial": [rational_str(c) for c in rec.radial_coeffs]})
                    if t in _TABLE_RADIALS:
                        count += 1
                        if rec.radial_coeffs != _TABLE_RADIALS[t](ell, mu):
                            failures.append({**case.describe(), "identity": "closed radial table",
                                             "t": t, "ell": ell, "h_index": h_index,
                                             "radial": [rational_str(c) for c in rec.radial_coeffs]})
                    if previous is not None:
                        count += 1
                        check = coefficient_recursions_check(previous, rec)
                        if not check.ok:
                            failures.append({**case.describe(), "identity": "radial recurrences",
                                             "t": t, "ell": ell, "h_index": h_index,
                                             "step": [[i, rational_str(r)] for i, r in check.step_failures],
                                             "internal": [[i, rational_str(r)]
                                                          for i, r in check.internal_failures]})
                    previous = rec
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))

    # classical reduction: kappa = 0 gives the classical table with mu = m
    for m in (2, 3):
        ctx = DunklContext(builtin_root_system("z2", m, [0] * m))
        for ell in range(min(profile.ell_max, 2) + 1):
            for h in harmonic_basis(ctx, ell).elements:
                for t in (0, 1, 2):
                    total += 1
                    rec = ch_recursion(ctx, t, h)
                    if rec.radial_coeffs != _TABLE_RADIALS[t](ell, Fraction(m)):
                        failures.append({"group": f"z2^{m}", "kappa": ["0/1"] * m,
                                         "identity": "classical reduction", "t": t, "ell": ell,
                                         "radial": [rational_str(c) for c in rec.radial_coeffs]})
    return _verdict("hermite-eq", total, failures, started)


def run_diffeq(profile: Profile, seed: int) -> SuiteVerdict:
    """Each Hermite element satisfies (Delta - 2E) CH = -2(2t + ell) CH and is
    an eigenvector of the spherical operator at -ell(mu - 2 + ell)."""
    started = time.perf_counter()
    cases = group_cases(CONSTRUCTION_GROUPS, seed, profile.construction_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        mu = ctx.mu
        count, failures = 0, []
        for ell in range(profile.ell_max + 1):
            for h_index, h in enumerate(harmonic_basis(ctx, ell).elements):
                for t in range(profile.t_max + 1):
                    ch = ch_recursion(ctx, t, h).polynomial
                    count += 1
                    residual = (dunkl_laplacian(ctx, ch) - 2 * euler_operator(ch)
                                + 2 * (2 * t + ell) * ch)
                    if residual:
                        failures.append({**case.describe(),
                                         "identity": "(Delta - 2E) CH = -2(2t + ell) CH",
                                         "t": t, "ell": ell, "h_index": h_index,
                                         "residual": residual.to_json()})
                    count += 1
                    residual = laplace_beltrami(ctx, ch) + ell * (mu - 2 + ell) * ch
                    if residual:
                        failures.append({**case.describe(),
                                         "identity": "spherical eigenvalue -ell(mu - 2 + ell)",
                                         "t": t, "ell": ell, "h_index": h_index,
                                         "residual": residual.to_json()})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("diffeq", total, failures, started)


def run_roesler(profile: Profile, seed: int) -> SuiteVerdict:
    """Heat-semigroup Hermite family: eigenvalue equations (plain and
    Gaussian-weighted), equal spans with the Clifford-Hermite family, and
    elementwise proportionality on the adapted basis."""
    started = time.perf_counter()
    cases = group_cases(CONSTRUCTION_GROUPS, seed, profile.operator_draws)

    def worker(case: GroupCase) -> tuple[int, list[dict]]:
        ctx = case.context()
        count, failures = 0, []
        for n in range(profile.eigen_degree_max + 1):
            report = eigenspace_checks(ctx, n)
            count += report.cases + 1
            failures.extend({**case.describe(), "identity": "(Delta - 2E) eigenvalue", "n": n, **f}
                            for f in report.failures)
            if (report.heat_family_rank != report.expected_rank
                    or report.hermite_family_rank != report.expected_rank
                    or report.combined_rank != report.expected_rank):
                failures.append({**case.describe(), "identity": "span ranks", "n": n,
                                 "heat_rank": report.heat_family_rank,
                                 "hermite_rank": report.hermite_family_rank,
                                 "combined_rank": report.combined_rank,
                                 "expected": report.expected_rank})
            for e in monomial_basis(ctx.m, n):
                count += 1
                check = weighted_eigenfunction_check(ctx, rosler_hermite(ctx, Polynomial.monomial(ctx.m, e)))
                if not check.ok:
                    failures.append({**case.describe(), "identity": "weighted eigenfunction",
                                     "n": n, "input": list(e), "residual": check.residual.to_json()})
        # elementwise proportionality on the adapted basis, constants harmonic-independent
        for n in range(profile.span_degree_max + 1):
            for i in range(n // 2 + 1):
                constants = set()
                for h in harmonic_basis(ctx, n - 2 * i).elements:
                    count += 1
                    constants.add(proportionality_constant(ctx, i, n, h))
                if len(constants) > 1:
                    failures.append({**case.describe(), "identity": "proportionality constant",
                                     "n": n, "i": i,
                                     "constants": sorted(rational_str(c) for c in constants)})
                if n == 2 and i == 1 and constants != {Fraction(-1)}:
                    failures.append({**case.describe(), "identity": "constant at (i=1, n=2)",
                                     "constants": sorted(rational_str(c) for c in constants)})
        return count, failures

    total, failures = _collect(_run_cases(worker, cases))
    return _verdict("roesler", total, failures, started)


def run_orthogonality(profile: Profile, seed: int) -> SuiteVerdict:
    """Hermite functions with distinct (t, ell) are orthogonal for the
    coordinate-hyperplane groups with small integer multiplicities."""
    started = time.perf_counter()
    combos = []
    for m in range(1, profile.orthogonality_m_max + 1):
        def extend(prefix: tuple[int, ...]) -> None:
            if len(prefix) == m:
                combos.append((m, prefix))
                return
            for k in profile.orthogonality_kappas:
                extend(prefix + (k,))
        extend(())

    def worker(combo: tuple[int, tuple[int, ...]]) -> tuple[int, list[dict]]:
        m, kappas = combo
        ctx = DunklContext(builtin_root_system("z2", m, list(kappas)))
        report = orthogonality_report(ctx, profile.orthogonality_degree_max)
        failures = [{"group": f"z2^{m}", "kappa": [rational_str(Fraction(k)) for k in kappas],
                     "identity": "distinct (t, ell) orthogonal", **entry.to_json()}
                    for entry in report.violations]
        failures.extend({"group": f"z2^{m}", "kappa": [rational_str(Fraction(k)) for k in kappas],
                         "identity": "positive diagonal", **entry.to_json()}
                        for entry in report.nonpositive_diagonal)
        return len(report.entries), failures

    total, failures = _collect(_run_cases(worker, combos))
    return _verdict("orthogonality", total, failures, started)


def _collect(results: Iterable[tuple[int, list[dict]]]) -> tuple[int, list[dict]]:
    total = 0
    failures: list[dict] = []
    for count, fails in results:
        total += count
        failures.extend(fails)
    return total, failures


SUITE_RUNNERS = {
    "commute": run_commute,
    "sl2": run_sl2,
    "lemma1": run_lemma1,
    "anticommutator": run_anticommutator,
    "dplus2": run_dplus2,
    "fischer": run_fischer,
    "hermite-eq": run_hermite_eq,
    "diffeq": run_diffeq,
    "roesler": run_roesler,
    "orthogonality": run_orthogonality,
}


def run_suite(name: str, profile: Profile, seed: int) -> SuiteVerdict:
    if name not in SUITE_RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES} or 'all'")
    return SUITE_RUNNERS[name](profile, seed)


def run_all(profile: Profile, seed: int) -> list[SuiteVerdict]:
    return [run_suite(name, profile, seed) for name in SUITE_NAMES]

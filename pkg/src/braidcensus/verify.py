"""Self-check suites behind the CLI verify subcommand.

Each suite is a thin driver over module-level properties: it walks a
bounded search space, stops collecting after a handful of failures, and
reports the first counterexample tuple by name.  Suites return a plain
dict so the CLI can serialise them directly.
"""

from __future__ import annotations

import random
from typing import Callable

from . import analysis, census, closedform, coords, diagram, perms

MAX_FAILURES = 5


def _result(suite: str, checked: int, failures: list[str]) -> dict:
    return {
        "suite": suite,
        "ok": not failures,
        "checked": checked,
        "failures": failures,
    }


def verify_b2(kmax: int = 200, threads: int | None = None) -> dict:
    """Census on 2 strands against the constant closed form."""
    failures = []
    checked = 0
    for k in range(kmax + 1):
        checked += 1
        got = census.count_actual(2, k, threads=threads).g
        want = closedform.g2(k)
        if got != want:
            failures.append(f"g(2,{k}) census={got} closedform={want}")
            if len(failures) >= MAX_FAILURES:
                break
    return _result("b2", checked, failures)


def verify_b3_closed_form(kmax: int = 30, threads: int | None = None) -> dict:
    """Triple agreement of the 3-strand evaluators, plus the census."""
    failures = []
    checked = 0
    table = closedform.totient_sieve(kmax + 2)
    for k in range(kmax + 1):
        checked += 1
        via_totient = closedform.g3_totient(k, table)
        via_c = closedform.g3_via_c(k)
        via_gamma = closedform.g3_via_gamma(k, table)
        via_census = census.count_actual(3, k, threads=threads).g
        if not via_totient == via_c == via_gamma == via_census:
            failures.append(
                f"g(3,{k}): totient={via_totient} pairs={via_c} "
                f"gamma={via_gamma} census={via_census}"
            )
            if len(failures) >= MAX_FAILURES:
                break
    return _result("b3-closed-form", checked, failures)


def verify_cyclicity(nmax: int = 40) -> dict:
    """gcd criteria against orbit counting, exhaustively up to modulus nmax."""
    failures = []
    checked = 0
    for n in range(1, nmax + 1):
        for a in range(n + 1):
            checked += 1
            fast = perms.is_cyclic_translation(n, a)
            slow = perms.orbit_count(perms.Translation(n, a)) == 1
            if fast != slow:
                failures.append(f"T({n},{a}): gcd says {fast}, orbits say {slow}")
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    checked += 1
                    fast = perms.is_cyclic_translated_cut(n, a, b, c)
                    slow = perms.orbit_count(perms.TranslatedCut(n, a, b, c)) == 1
                    if fast != slow:
                        failures.append(
                            f"TCut({n},{a},{b},{c}): gcd says {fast}, "
                            f"orbits say {slow}"
                        )
                        if len(failures) >= MAX_FAILURES:
                            return _result("cyclicity", checked, failures)
    return _result("cyclicity", checked, failures)


def verify_theta_bridge(kmax: int = 20) -> dict:
    """Cyclic orbit map iff connected tuple, for every reduced 3-strand case."""
    failures = []
    checked = 0
    for k in range(1, kmax + 1):
        for ell in range(k + 1, kmax + 1):
            for a2 in range(2 * k + 2):
                for a3 in (0, 1):
                    checked += 1
                    regime = perms.B3Regime(k=k, ell=ell, a2=a2, a3=a3)
                    perm = perms.theta(regime)
                    cyclic = perm is not None and perms.orbit_count_of(perm) == 1
                    fast = perms.theta_is_cyclic(regime)
                    c = coords.validate(3, (0, 1, k, a2, ell, a3, 0))
                    actual = diagram.is_actual(c)
                    if not cyclic == fast == actual:
                        failures.append(
                            f"{c}: orbit map cyclic={cyclic} gcd={fast} "
                            f"connected={actual}"
                        )
                        if len(failures) >= MAX_FAILURES:
                            return _result("theta-bridge", checked, failures)
    return _result("theta-bridge", checked, failures)


def verify_bounds(
    kmax: int = 10, threads: int | None = None, ns: tuple[int, ...] = (2, 3, 4, 5)
) -> dict:
    """Sandwich bounds on censused counts, exact arithmetic."""
    failures = []
    checked = 0
    for n in ns:
        for k in range(kmax + 1):
            checked += 1
            g = census.count_actual(n, k, threads=threads).g
            report = analysis.BoundReport.build(n, k, g)
            if not report.verdict:
                failures.append(
                    f"g({n},{k})={g} outside [{report.lower}, {report.upper}]"
                )
                if len(failures) >= MAX_FAILURES:
                    return _result("bounds", checked, failures)
    return _result("bounds", checked, failures)


def verify_witnesses(
    kmax: int = 30, trials: int = 10_000, nmax: int = 8, seed: int = 20240601
) -> dict:
    """Witness construction yields a connected tuple on random s-vectors."""
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(trials):
        n = rng.randint(1, nmax)
        k = rng.randint(0, kmax)
        c = coords.random_coordinates(rng, n, k)
        sv = coords.SVector(n=n, s=c.s[1:-1])
        checked += 1
        try:
            analysis.witness_a_for_s(sv, verify=True)
        except AssertionError as exc:
            failures.append(str(exc))
            if len(failures) >= MAX_FAILURES:
                break
    return _result("witnesses", checked, failures)


def verify_tightness(
    kmax: int = 20, trials: int = 10_000, nmax: int = 8, seed: int = 20240602
) -> dict:
    """Structural invariants of reconstructed graphs on fuzzed tuples.

    Checks endpoint degrees, puncture placement on minimal same-line arcs,
    per-zone non-interleaving, and that closing by above never changes the
    component count.
    """
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(trials):
        n = rng.randint(1, nmax)
        k = rng.randint(0, kmax)
        c = coords.random_coordinates(rng, n, k)
        checked += 1
        problem = check_structure(c)
        if problem:
            failures.append(f"{c}: {problem}")
            if len(failures) >= MAX_FAILURES:
                break
    return _result("tightness", checked, failures)


def check_structure(c: coords.VirtualCoordinates) -> str | None:
    """One fuzzed tuple's structural audit; None when everything holds."""
    g = diagram.build_arc_graph(c)
    degrees = g.degrees()
    ends = (g.node(0, 1), g.node(c.n, 1))
    for v, d in enumerate(degrees):
        want = 1 if v in ends else 2
        if d != want:
            return f"node {v} has degree {d}, expected {want}"
    if not diagram.tightness_check(g):
        return "a minimal same-line arc misses its puncture"
    if not diagram.zone_noninterleaving(g):
        return "interleaving arcs inside one zone"
    closed = diagram.build_arc_graph(c, closed_by_above=True)
    for v, d in enumerate(closed.degrees()):
        if d != 2:
            return f"closed graph: node {v} has degree {d}"
    if diagram.component_count(g) != diagram.component_count(closed):
        return "closing by above changed the component count"
    if not diagram.zone_noninterleaving(closed):
        return "closed graph: interleaving arcs inside one zone"
    return None


def verify_symmetry(
    kmax: int = 20, trials: int = 10_000, nmax: int = 8, seed: int = 20240603
) -> dict:
    """Mirror maps: involutions, commutation, connectivity invariance."""
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(trials):
        n = rng.randint(1, nmax)
        k = rng.randint(0, kmax)
        c = coords.random_coordinates(rng, n, k)
        checked += 1
        problem = check_symmetry(c)
        if problem:
            failures.append(f"{c}: {problem}")
            if len(failures) >= MAX_FAILURES:
                break
    return _result("symmetry", checked, failures)


def check_symmetry(c: coords.VirtualCoordinates) -> str | None:
    h = coords.sym_h(c)
    v = coords.sym_v(c)
    coords.validate(c.n, h.raw())
    coords.validate(c.n, v.raw())
    if coords.sym_h(h) != c or coords.sym_v(v) != c:
        return "a mirror map is not an involution"
    if coords.sym_h(v) != coords.sym_v(h) or coords.sym_h(v) != coords.sym_c(c):
        return "mirror maps do not commute into the half-turn"
    actual = diagram.is_actual(c)
    if diagram.is_actual(h) != actual or diagram.is_actual(v) != actual:
        return "connectivity not invariant under a mirror"
    return None


def verify_prune_consistency(
    kmax: int = 8, nmax: int = 5, threads: int | None = None
) -> dict:
    """Pruned census equals plain census on a grid of (n, k)."""
    failures = []
    checked = 0
    for n in range(1, nmax + 1):
        for k in range(kmax + 1):
            checked += 1
            plain = census.count_actual(n, k, threads=threads, prune=False).g
            pruned = census.count_actual(n, k, threads=threads, prune=True).g
            if plain != pruned:
                failures.append(f"g({n},{k}): plain={plain} pruned={pruned}")
                if len(failures) >= MAX_FAILURES:
                    return _result("prune-consistency", checked, failures)
    return _result("prune-consistency", checked, failures)


SUITES: dict[str, Callable[..., dict]] = {
    "b2": verify_b2,
    "b3-closed-form": verify_b3_closed_form,
    "cyclicity": verify_cyclicity,
    "theta-bridge": verify_theta_bridge,
    "bounds": verify_bounds,
    "witnesses": verify_witnesses,
    "tightness": verify_tightness,
    "symmetry": verify_symmetry,
    "prune-consistency": verify_prune_consistency,
}

# suites whose kmax parameter is actually a modulus bound
_KMAX_PARAM = {
    "b2": "kmax",
    "b3-closed-form": "kmax",
    "cyclicity": "nmax",
    "theta-bridge": "kmax",
    "bounds": "kmax",
    "witnesses": "kmax",
    "tightness": "kmax",
    "symmetry": "kmax",
    "prune-consistency": "kmax",
}

_THREADED = {"b2", "b3-closed-form", "bounds", "prune-consistency"}


def run_suite(name: str, kmax: int | None = None, threads: int | None = None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {sorted(SUITES)}")
    kwargs = {}
    if kmax is not None:
        kwargs[_KMAX_PARAM[name]] = kmax
    if threads is not None and name in _THREADED:
        kwargs["threads"] = threads
    return SUITES[name](**kwargs)

"""Built-in fixture suite behind ``digraph-ricci verify``.

Each fixture returns ``(status, detail)`` with status ``PASS``, ``FAIL`` or
``WARN``. ``WARN`` is used only for published curvature sets of even
tournaments, which the exact computation does not reproduce.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, List, Tuple

from .curvature import check_condition, curvature_report, ricci
from .families import (
    binary_tree,
    caterpillar_tree,
    circulant,
    circulant_is_strongly_connected,
    cycle_product,
    directed_cycle,
    oriented_complete,
    rooted_in_tree,
    TreeSpec,
)
from .graph import build_graph, degree_triple, is_strongly_connected
from .measure import build_walk_measure
from .scalar import ONE_MINUS_EPSILON
from .transport import ORACLE_MAX_SUPPORT, oracle_wasserstein, wasserstein

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"

A3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
A5 = [
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0],
]
A7 = [
    [0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 0],
]


def matrix_edges(rows) -> List[Tuple[int, int]]:
    return [(i, j) for i, row in enumerate(rows) for j, a in enumerate(row) if a]


def odd_tournament_set(m: int) -> set:
    return {Fraction(k, 2 * m) for k in range(m)}


def even_tournament_set(m: int) -> set:
    return {Fraction(k, 2 * m - 1) for k in range(1, m)}


def oracle_agrees_on_edges(G) -> Tuple[bool, str]:
    """Solver vs brute force on every edge at ``alpha = 1 - e``."""
    for x, y in G.edges:
        mu = build_walk_measure(G, x, ONE_MINUS_EPSILON)
        nu = build_walk_measure(G, y, ONE_MINUS_EPSILON)
        if max(len(mu), len(nu)) > ORACLE_MAX_SUPPORT:
            continue
        if wasserstein(mu, nu, G).value != oracle_wasserstein(mu, nu, G):
            return False, f"edge ({x}, {y})"
    return True, ""


def condition_a_circulants(max_n: int = 12, max_offsets: int = 2):
    """Strongly connected circulants with no anti-parallel pairs satisfying condition A."""
    for n in range(3, max_n + 1):
        for r in range(1, max_offsets + 1):
            for offs in itertools.combinations(range(1, n), r):
                if any(n - s in offs for s in offs):
                    continue
                if not circulant_is_strongly_connected(n, offs):
                    continue
                if any((a + b) % n in offs for a in offs for b in offs):
                    continue
                yield (n, offs), circulant(n, offs)


# -- fixtures ----------------------------------------------------------------


def fx_matrices():
    for rows, n in ((A3, 3), (A5, 5), (A7, 7)):
        G = build_graph(n, matrix_edges(rows))
        if G != oriented_complete(n):
            return FAIL, f"A_{n} differs from the generated tournament"
    if oriented_complete(3) != directed_cycle(3):
        return FAIL, "A_3 is not C_3"
    K5 = oriented_complete(5)
    if {degree_triple(K5, x) for x in range(5)} != {degree_triple(K5, 0)} or (
        degree_triple(K5, 0).d,
        degree_triple(K5, 0).d_in,
        degree_triple(K5, 0).d_out,
    ) != (4, 2, 2):
        return FAIL, "K_5 is not (4, 2, 2)-regular"
    return PASS, "A_3, A_5, A_7 match the generator"


def fx_strong_connectivity():
    if not all(is_strongly_connected(directed_cycle(n)) for n in range(3, 13)):
        return FAIL, "a directed cycle is not strongly connected"
    if is_strongly_connected(rooted_in_tree(binary_tree(3))):
        return FAIL, "in-tree reported strongly connected"
    return PASS, "cycles strongly connected, in-tree not"


def fx_cycles():
    for n in range(3, 13):
        rep = curvature_report(directed_cycle(n))
        if not rep.is_ricci_flat:
            return FAIL, f"C_{n} not flat: {rep.values}"
    return PASS, "C_3..C_12 Ricci-flat"


def fx_odd_tournaments():
    for m in (1, 2, 3, 4):
        got = curvature_report(oriented_complete(2 * m + 1)).values
        if not got <= odd_tournament_set(m):
            return FAIL, f"K_{2 * m + 1} values {sorted(got)} outside the published set"
    rep = curvature_report(oriented_complete(5))
    for (u, v), k in rep.per_edge.items():
        step = (v - u) % 5
        if k != (Fraction(1, 4) if step == 1 else 0):
            return FAIL, f"K_5 edge ({u}, {v}) has {k}"
    return PASS, "K_3, K_5, K_7, K_9 within {0, 1/2m, ..., (m-1)/2m}; K_5 = {0, 1/4}"


def fx_even_tournaments():
    notes = []
    for m in (2, 3, 4):
        G = oriented_complete(2 * m)
        ok, where = oracle_agrees_on_edges(G)
        if not ok:
            return FAIL, f"K_{2 * m}: solver and oracle disagree on {where}"
        got = curvature_report(G).values
        if not got <= even_tournament_set(m):
            notes.append(f"K_{2 * m} attains {sorted(map(str, got))}")
    if notes:
        return WARN, "published even-case set not reproduced (oracle-confirmed): " + "; ".join(notes)
    return PASS, "even tournaments within the published set"


def fx_trees():
    # The star is rooted at a leaf; rooted at its centre every edge would
    # point into the root and none would be testable.
    star = TreeSpec(1, {0: 1, 2: 0, 3: 0, 4: 0})
    for spec in (star, caterpillar_tree(3), binary_tree(3)):
        G = rooted_in_tree(spec)
        for x, y in G.edges:
            if y == spec.root:
                continue
            dx, dy = degree_triple(G, x).d, degree_triple(G, y).d
            if ricci(G, x, y) != Fraction(1, dx) - Fraction(1, dy):
                return FAIL, f"tree edge ({x}, {y})"
    spec = binary_tree(3)
    G = rooted_in_tree(spec)
    for x, y in G.edges:
        if degree_triple(G, x).d == degree_triple(G, y).d == 3 and ricci(G, x, y) != 0:
            return FAIL, f"interior edge ({x}, {y}) not flat"
    return PASS, "kappa = 1/d_x - 1/d_y on star, caterpillar, binary in-trees"


def fx_products():
    for g in (3, 4, 5):
        for h in (3, 4, 5):
            if not curvature_report(cycle_product(g, h)).is_ricci_flat:
                return FAIL, f"C_{g} x C_{h} not flat"
    return PASS, "C_g x C_h flat for g, h in {3, 4, 5}"


def fx_theorem():
    count = 0
    instances = list(condition_a_circulants(10)) + [
        ((g, h), cycle_product(g, h)) for g in (3, 4) for h in (3, 4)
    ]
    for key, G in instances:
        rep = curvature_report(G)
        vals = list(rep.per_edge.values())
        outdeg = check_condition(G, "EqualOutDegree").holds
        if min(vals) > 0:
            return FAIL, f"{key}: claim 1"
        if all(k >= 0 for k in vals) and not rep.is_ricci_flat:
            return FAIL, f"{key}: claim 2"
        if rep.is_ricci_flat and not outdeg:
            return FAIL, f"{key}: claim 3"
        if outdeg and check_condition(G, "MatchingPhi").holds and not rep.is_ricci_flat:
            return FAIL, f"{key}: claim 4"
        d = degree_triple(G, 0).d
        for (x, y), k in rep.per_edge.items():
            if degree_triple(G, x).d_out == 1 and k != Fraction(1 - degree_triple(G, y).d_out, d):
                return FAIL, f"{key}: kappa({x}, {y}) = {k} breaks (1 - d_out(y)) / d"
        count += 1
    return PASS, f"claims 1-4 on {count} condition-A regular instances"


def fx_cli_cycle():
    from .cli import main

    import contextlib
    import io
    import os
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "c5.txt")
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            rc1 = main(["gen", "cycle", "5", "-o", path])
            rc2 = main(["check", path, "--condition", "flat"])
    if rc1 != 0 or rc2 != 0 or "ricci_flat: true" not in out.getvalue():
        return FAIL, out.getvalue().strip()
    return PASS, "gen cycle 5 | check flat -> ricci_flat: true"


FIXTURES: List[Tuple[str, Callable]] = [
    ("tournament-matrices", fx_matrices),
    ("strong-connectivity", fx_strong_connectivity),
    ("directed-cycles-flat", fx_cycles),
    ("odd-tournament-values", fx_odd_tournaments),
    ("even-tournament-values", fx_even_tournaments),
    ("in-tree-formula", fx_trees),
    ("cycle-products-flat", fx_products),
    ("flatness-theorem-claims", fx_theorem),
    ("cli-cycle-flat", fx_cli_cycle),
]


def run_all(emit=print) -> int:
    """Run every fixture; return the number of failures."""
    failures = 0
    for name, fn in FIXTURES:
        try:
            status, detail = fn()
        except Exception as exc:  # a crash is a failure, keep going
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        if status == FAIL:
            failures += 1
        emit(f"{status} {name}: {detail}")
    return failures


__all__ = ["FIXTURES", "run_all", "PASS", "FAIL", "WARN"]

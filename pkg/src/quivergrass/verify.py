"""Grid verification harness: every structural invariant on every small instance.

Each check walks a grid of instances and recomputes a statement two ways,
by formula and by an independent construction.  Results are deterministic:
same bounds, same report bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import desing, geometry, momentgraph, oracle, projections
from .core import ParahoricData, chains, cyc, indec_dim_vector
from .fixedpoints import (
    all_patterns,
    cell_parameter_count,
    chain_membership_counts,
    energy_table,
    enumerate_fixed_points,
    lvector_dims,
    to_lvector,
    validate_pattern,
)


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 4
    max_omega: int = 2
    oracle_max_n: int = 4
    desing_max_n: int = 3
    commutation_max_t: int = 3
    subrep_budget: int = oracle.DEFAULT_SUBREP_BUDGET
    hat_budget: int = desing.DEFAULT_HAT_BUDGET


@dataclass
class CheckResult:
    name: str
    instances: int
    checks: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def instance_grid(max_n: int, max_omega: int):
    """All instances with n <= max_n, omega <= max_omega, every k and nonempty S."""
    for n in range(1, max_n + 1):
        for omega in range(1, max_omega + 1):
            for k in range(0, n + 1):
                for size in range(1, n + 1):
                    for S in combinations(range(1, n + 1), size):
                        yield ParahoricData(n, k, omega, S)


def _tag(P: ParahoricData) -> str:
    return f"(n={P.n},k={P.k},omega={P.omega},S={list(P.S)})"


def check_chain_decomposition(grid) -> CheckResult:
    res = CheckResult("chain-decomposition", 0, 0, [])
    for P in grid:
        res.instances += 1
        chs = chains(P)
        entries = [e for c in chs for e in c.entries]
        res.checks += 4
        if len(entries) != P.r * P.m or len(set(entries)) != len(entries):
            res.failures.append(f"{_tag(P)}: chains do not partition the basis")
            continue
        total = [0] * P.r
        for c in chs:
            for v, x in enumerate(indec_dim_vector(c.end_vertex, P.L, P.r)):
                total[v] += x
        if total != [P.m] * P.r:
            res.failures.append(f"{_tag(P)}: summand dimensions do not add to the ambient")
        for c in chs:
            labels = {cyc(P.S[v - 1] - t + 1, P.n) for v, t in c.entries}
            if labels != {c.label}:
                res.failures.append(f"{_tag(P)}: weight not constant along chain {c.label}")
                break
        rep = oracle.ambient_basis_rep(P)
        for start in rep.basis[1]:
            v, t = 1, start
            alive = True
            for _ in range(P.L):
                q = P.gaps[v - 1]
                if t + q > P.m:
                    alive = False
                    break
                v, t = cyc(v + 1, P.r), t + q
            if alive:
                res.failures.append(f"{_tag(P)}: ambient not nilpotent of class L")
                break
    return res


def check_fixed_point_models(grid) -> CheckResult:
    res = CheckResult("fixed-point-models", 0, 0, [])
    for P in grid:
        res.instances += 1
        pairs = enumerate_fixed_points(P)
        pats = [J for _, J in pairs]
        res.checks += len(pairs) + 1
        if pats != sorted(pats):
            res.failures.append(f"{_tag(P)}: patterns not sorted")
        for ell, J in pairs:
            if not validate_pattern(P, J):
                res.failures.append(f"{_tag(P)}: enumerated pattern {J} invalid")
                break
            if to_lvector(P, J) != ell:
                res.failures.append(f"{_tag(P)}: tail-length round trip failed at {J}")
                break
            if lvector_dims(P, ell) != (P.k * P.omega,) * P.r:
                res.failures.append(f"{_tag(P)}: dimension condition violated at {ell}")
                break
    return res


def check_energy_cell_parameters(grid) -> CheckResult:
    res = CheckResult("energy-equals-cell-parameters", 0, 0, [])
    for P in grid:
        res.instances += 1
        for J, e in energy_table(P).items():
            res.checks += 1
            c = cell_parameter_count(P, J)
            if c != e:
                res.failures.append(f"{_tag(P)}: {J}: parameters {c} != energy {e}")
                break
    return res


def check_moment_graph(grid) -> CheckResult:
    res = CheckResult("moment-graph-outdegree-and-labels", 0, 0, [])
    for P in grid:
        res.instances += 1
        G = momentgraph.build_graph(P)
        table = energy_table(P)
        degrees = G.out_degrees()
        res.checks += len(G.vertices) + len(G.edges)
        for idx, J in enumerate(G.patterns):
            if degrees[idx] != table[J]:
                res.failures.append(
                    f"{_tag(P)}: out-degree {degrees[idx]} != energy {table[J]} at {J}"
                )
                break
        is_full = P.S == tuple(range(1, P.n + 1))
        for e in G.edges:
            ch = e.character
            if sorted(ch.eps) != sorted([1, -1] + [0] * (P.n - 2)) and P.n >= 2:
                res.failures.append(f"{_tag(P)}: bad eps part {ch.eps}")
                break
            if ch.delta == 0:
                res.failures.append(f"{_tag(P)}: zero delta label")
                break
            # pairing with the diagonal cocharacter is the delta coefficient
            if is_full:
                src = G.vertices[e.source]
                move = e.move
                printed = src[move.donor - 1] - src[move.recipient - 1] - move.amount
                if ch.delta != printed:
                    res.failures.append(
                        f"{_tag(P)}: full-model delta {ch.delta} != {printed}"
                    )
                    break
    return res


def check_reachability_dominance(grid) -> CheckResult:
    res = CheckResult("reachability-equals-dominance", 0, 0, [])
    for P in grid:
        res.instances += 1
        G = momentgraph.build_graph(P)
        reach = momentgraph.reachability_order(G)
        dom = momentgraph.dominance_order(P)
        res.checks += len(G.vertices)
        if reach.below != dom.below:
            res.failures.append(f"{_tag(P)}: reachability and dominance differ")
    return res


def check_poincare(grid) -> CheckResult:
    res = CheckResult("poincare-identities", 0, 0, [])
    for P in grid:
        res.instances += 1
        poly = geometry.poincare(P)
        res.checks += 3
        deg = len(poly) - 1
        if deg != P.omega * P.k * (P.n - P.k):
            res.failures.append(f"{_tag(P)}: degree {deg} wrong")
            continue
        comps = geometry.irr_components(P)
        if poly[-1] != len(comps):
            res.failures.append(f"{_tag(P)}: leading coefficient != component count")
        if geometry.poly_eval(poly, 1) != len(all_patterns(P)):
            res.failures.append(f"{_tag(P)}: value at 1 != fixed-point count")
        if P.r == 1 and P.omega == 1:
            res.checks += 1
            if poly != geometry.gaussian_binomial(P.n, P.k):
                res.failures.append(f"{_tag(P)}: not the Gaussian binomial")
    return res


def check_components(grid) -> CheckResult:
    res = CheckResult("irreducible-components", 0, 0, [])
    for P in grid:
        res.instances += 1
        res.checks += 2
        try:
            geometry.dimension_check(P)
        except Exception as exc:  # noqa: BLE001 - report any failure
            res.failures.append(f"{_tag(P)}: {exc}")
            continue
        table = energy_table(P)
        dim = max(table.values())
        tops = {J for J, e in table.items() if e == dim}
        comp_tops = {c.top for c in geometry.irr_components(P)}
        if tops != comp_tops:
            res.failures.append(f"{_tag(P)}: component tops differ from top cells")
    return res


def check_aut_dimensions(grid) -> CheckResult:
    res = CheckResult("aut-dimension-formula-vs-oracle", 0, 0, [])
    seen = set()
    for P in grid:
        key = (P.n, P.omega, P.S)  # independent of k
        if key in seen:
            continue
        seen.add(key)
        res.instances += 1
        res.checks += 2
        formula = geometry.aut_dim_formula(P)
        exact = geometry.aut_dim_oracle(P)
        if formula != exact:
            res.failures.append(f"{_tag(P)}: formula {formula} != oracle {exact}")
        if P.S == tuple(range(1, P.n + 1)) and formula != P.omega * P.n * P.n:
            res.failures.append(f"{_tag(P)}: full-model value != omega*n^2")
    return res


def check_oracle_equivalence(grid, budget: int) -> CheckResult:
    res = CheckResult("fixed-points-vs-subrep-oracle", 0, 0, [])
    for P in grid:
        res.instances += 1
        rep = oracle.ambient_basis_rep(P)
        dims = {v: P.k * P.omega for v in rep.vertices}
        subs = oracle.enumerate_subreps(rep, dims, budget=budget)
        brute = {oracle.subrep_index_sets(P, sub) for sub in subs}
        res.checks += 1
        if brute != set(all_patterns(P)):
            res.failures.append(f"{_tag(P)}: oracle and enumeration disagree")
    return res


def check_projections(grid, commutation_max_t: int) -> CheckResult:
    res = CheckResult("projection-image-lift-commutation", 0, 0, [])
    for P in grid:
        res.instances += 1
        sub_sets = [
            S2
            for size in range(1, P.r + 1)
            for S2 in combinations(P.S, size)
        ]
        for S2 in sub_sets:
            Pp = P.restrict(S2)
            res.checks += 1
            if not projections.image_check(P, S2):
                res.failures.append(f"{_tag(P)} -> {list(S2)}: image mismatch")
                break
            for J in all_patterns(P):
                proj = projections.project_pattern(P, S2, J)
                if not validate_pattern(Pp, proj):
                    res.failures.append(f"{_tag(P)} -> {list(S2)}: invalid image")
                    break
                if energy_table(Pp)[proj] > energy_table(P)[J]:
                    res.failures.append(f"{_tag(P)} -> {list(S2)}: energy increased")
                    break
                if to_lvector(Pp, proj) != chain_membership_counts(Pp, proj):
                    res.failures.append(f"{_tag(P)} -> {list(S2)}: tail recount failed")
                    break
            for Jp in all_patterns(Pp):
                lifted = projections.lift_pattern(Pp, P.S, Jp)
                res.checks += 1
                if projections.project_pattern(P, S2, lifted) != Jp:
                    res.failures.append(f"{_tag(P)} -> {list(S2)}: lift not a section")
                    break
        if P.S == tuple(range(1, P.n + 1)) and P.n >= 2:
            for size in range(1, min(commutation_max_t, P.n - 1) + 1):
                for T in combinations(range(1, P.n + 1), size):
                    res.checks += 1
                    if not projections.commutation_check(P, T):
                        res.failures.append(f"{_tag(P)}: order dependence for T={list(T)}")
    return res


def check_desingularization(grid, hat_budget: int) -> CheckResult:
    res = CheckResult("desingularization", 0, 0, [])
    for P in grid:
        res.instances += 1
        res.checks += 1
        if desing.hat_aut_dim_oracle(P) != geometry.aut_dim_oracle(P):
            res.failures.append(f"{_tag(P)}: hat endomorphism dimension differs")
            continue
        expected_dim = P.omega * P.k * (P.n - P.k)
        for comp in geometry.irr_components(P):
            points = desing.hat_fixed_points(P, comp.I, budget=hat_budget)
            closure = set(momentgraph.cell_closure(P, comp.top))
            images = [desing.restrict_point(P, pt) for pt in points]
            res.checks += len(points) + 2
            if set(images) != closure:
                res.failures.append(
                    f"{_tag(P)} I={list(comp.I)}: images differ from closure fixed points"
                )
                continue
            for pt in points:
                if desing.hat_point_tangent_dim(P, pt) != expected_dim:
                    res.failures.append(
                        f"{_tag(P)} I={list(comp.I)}: tangent dimension off at {pt.levels}"
                    )
                    break
            for size in range(1, P.r):
                for S2 in combinations(P.S, size):
                    I2 = geometry.component_image(P, S2, comp.I)
                    Pp = P.restrict(S2)
                    pushed = [desing.project_hat(P, S2, pt) for pt in points]
                    targets = set(desing.hat_fixed_points(Pp, I2, budget=hat_budget))
                    res.checks += 1
                    if not set(pushed) <= targets:
                        res.failures.append(
                            f"{_tag(P)} I={list(comp.I)} -> {list(S2)}: pushforward escapes"
                        )
                        break
                    # onto the receiving component exactly when I survives as an index
                    if geometry.is_component_index(Pp, comp.I) and set(pushed) != targets:
                        res.failures.append(
                            f"{_tag(P)} I={list(comp.I)} -> {list(S2)}: pushforward not onto"
                        )
                        break
                    for pt, im in zip(points, pushed):
                        left = desing.restrict_point(Pp, im)
                        right = projections.project_pattern(
                            P, S2, desing.restrict_point(P, pt)
                        )
                        if left != right:
                            res.failures.append(
                                f"{_tag(P)} I={list(comp.I)} -> {list(S2)}: square broken"
                            )
                            break
    return res


def run_all(config: VerifyConfig) -> tuple[list[CheckResult], list[str]]:
    grid = list(instance_grid(config.max_n, config.max_omega))
    oracle_grid = [P for P in grid if P.n <= config.oracle_max_n]
    desing_grid = [P for P in grid if P.n <= config.desing_max_n]
    results = [
        check_chain_decomposition(grid),
        check_fixed_point_models(grid),
        check_energy_cell_parameters(grid),
        check_moment_graph(grid),
        check_reachability_dominance(grid),
        check_poincare(grid),
        check_components(grid),
        check_aut_dimensions(grid),
        check_oracle_equivalence(oracle_grid, config.subrep_budget),
        check_projections(grid, config.commutation_max_t),
        check_desingularization(desing_grid, config.hat_budget),
    ]
    notes = [
        "note: tail bookkeeping uses chain end vertices; the closed-form floor rule"
        " differs from them exactly on labels in S whenever r > 1",
    ]
    return results, notes


def render_report(results: list[CheckResult], notes: list[str]) -> str:
    lines = []
    for r in results:
        status = "ok  " if r.ok else "FAIL"
        lines.append(
            f"{status} {r.name:<40} instances={r.instances:<5} checks={r.checks}"
        )
        for f in r.failures[:3]:
            lines.append(f"     {f}")
    lines.extend(notes)
    bad = sum(1 for r in results if not r.ok)
    lines.append(
        "PASS all invariants hold" if bad == 0 else f"FAIL {bad} invariant group(s) failed"
    )
    return "\n".join(lines) + "\n"

"""Named verification suites: exhaustive desk-scale checks with reports.

Every suite walks a pool of Lusztig data (by default n in {1,2,3} with entry
sum at most 5 plus n = 4 with entry sum at most 3), evaluates one family of
invariants, and returns a report carrying the instance count and every
violation found, each with a full witness.  Reports are deterministic given
the flags, including the seeded randomized parts (mutation testing and
conormal sampling).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import lagrangian as lagr
from .bz import (
    bz_epsilon,
    bz_epsilon_star,
    bz_from_lusztig,
    bz_lowering,
    bz_raising,
    bz_star_lowering,
    bz_weight,
    c_shift_star,
    check_axioms,
    mv_vertices,
    prefix_set,
    star,
    support_sum,
)
from .crystal import (
    LusztigDatum,
    enumerate_by_height,
    epsilon,
    epsilon_star,
    h_pairing,
    lowering,
    phi,
    phi_star,
    raising,
    star_lowering,
    star_raising,
    star_raising_max,
    weight,
)
from .maya import MayaDiagram, all_maya
from .quiver import (
    adapted_word,
    build_module,
    characterizing_root,
    hom_dim,
    indecomposable,
    is_adapted,
    m_k_via_coker,
    m_k_via_hom,
    orientation_from_maya,
)
from .serialize import SCHEMA_VERIFY, datum_payload
from .weyl import (
    all_reduced_words,
    braid_path,
    lex_min_word,
    pi_pairs,
    root_vector,
    roots_in_order,
    transition,
    transition_along,
)

DEFAULT_SCALES: tuple[tuple[int, int], ...] = ((1, 5), (2, 5), (3, 5), (4, 3))
SMALL_SCALES: tuple[tuple[int, int], ...] = ((1, 5), (2, 5), (3, 5))
LAGRANGIAN_SCALES: tuple[tuple[int, int], ...] = ((1, 4), (2, 4), (3, 4))
DEFAULT_SEED = 20260814
DEFAULT_MUTATIONS = 400
MUTATION_THRESHOLD = 0.95
ADAPTED_MAX_RANK = 6


@dataclass
class VerifyReport:
    suite: str
    params: dict
    instances: int
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERIFY,
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "ok": self.ok,
            "violations": self.violations,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _suite_data(scales: Sequence[tuple[int, int]]) -> list[LusztigDatum]:
    out: list[LusztigDatum] = []
    for n, max_height in scales:
        out.extend(enumerate_by_height(n, max_height))
    return out


def _map_data(
    fn: Callable[[LusztigDatum], list[dict]],
    data: Iterable[LusztigDatum],
    jobs: int,
) -> list[dict]:
    items = list(data)
    if jobs <= 1:
        results = [fn(a) for a in items]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, items))
    return [v for chunk in results for v in chunk]


def _witness(a: LusztigDatum, check: str, **extra) -> dict:
    out = {"check": check, "datum": datum_payload(a)}
    out.update(extra)
    return out


def _chain_length(a: LusztigDatum, i: int, up: Callable, down: Callable, label: str) -> tuple[int, list[dict]]:
    """Apply a raising map until Bottom; verify lowering inverts every step."""
    count = 0
    cur = a
    problems: list[dict] = []
    while True:
        nxt = up(cur, i)
        if nxt is None:
            break
        if down(nxt, i) != cur:
            problems.append(_witness(cur, f"{label}: lowering does not invert raising", i=i))
            break
        count += 1
        cur = nxt
        if count > 1000:
            problems.append(_witness(a, f"{label}: raising chain does not terminate", i=i))
            break
    return count, problems


def _check_crystal(a: LusztigDatum) -> list[dict]:
    out: list[dict] = []
    wt = weight(a)
    for i in range(1, a.n + 1):
        for eps_fn, phi_fn, up, down, tag in (
            (epsilon, phi, raising, lowering, "plain"),
            (epsilon_star, phi_star, star_raising, star_lowering, "starred"),
        ):
            eps = eps_fn(a, i)
            count, problems = _chain_length(a, i, up, down, tag)
            out.extend(problems)
            if count != eps:
                out.append(_witness(a, f"{tag} epsilon_{i} differs from the raising count",
                                    formula=eps, operational=count))
            low = down(a, i)
            if up(low, i) != a:
                out.append(_witness(a, f"{tag} raising does not invert lowering", i=i))
            if eps_fn(low, i) != eps + 1:
                out.append(_witness(a, f"{tag} epsilon_{i} does not rise by one under lowering"))
            if phi_fn(low, i) != phi_fn(a, i) - 1:
                out.append(_witness(a, f"{tag} phi_{i} does not drop by one under lowering"))
            wl = weight(low)
            expected = tuple(c - (1 if j == i else 0) for j, c in enumerate(wt, start=1))
            if wl != expected:
                out.append(_witness(a, f"{tag} weight does not drop by alpha_{i} under lowering",
                                    got=list(wl), expected=list(expected)))
    return out


def suite_crystal_axioms(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    return len(data), _map_data(_check_crystal, data, jobs)


def _lower_power(a: LusztigDatum, i: int, count: int) -> LusztigDatum:
    for _ in range(count):
        a = lowering(a, i)
    return a


def suite_intro_identity(scales, jobs, seed) -> tuple[int, list[dict]]:
    """The rank-2 exchange identity with the outer exponents swapped.

    F1^m F2^(m+k) F1^k applied to the zero datum must equal
    F2^k F1^(m+k) F2^m applied to it, for all small m, k.  The two sides
    coincide with the symmetric textbook example when m = k.
    """
    zero = LusztigDatum.zero(2)
    violations = []
    instances = 0
    for m in range(5):
        for k in range(5):
            instances += 1
            lhs = _lower_power(_lower_power(_lower_power(zero, 1, k), 2, m + k), 1, m)
            rhs = _lower_power(_lower_power(_lower_power(zero, 2, m), 1, m + k), 2, k)
            if lhs != rhs:
                violations.append({
                    "check": "rank-2 exchange identity",
                    "m": m,
                    "k": k,
                    "lhs": datum_payload(lhs),
                    "rhs": datum_payload(rhs),
                })
    return instances, violations


def _check_bz_axioms(a: LusztigDatum) -> list[dict]:
    out = []
    M = bz_from_lusztig(a)
    audit = check_axioms(M)
    if not audit.ok:
        out.append(_witness(a, "psi image fails an axiom",
                            violations=[v.as_dict() for v in audit.violations]))
    audit_star = check_axioms(star(M))
    if not audit_star.ok:
        out.append(_witness(a, "star of the psi image fails an axiom",
                            violations=[v.as_dict() for v in audit_star.violations]))
    return out


def suite_bz_axioms(scales, jobs, seed, mutations=DEFAULT_MUTATIONS) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    violations = _map_data(_check_bz_axioms, data, jobs)

    rng = random.Random(seed)
    violated = 0
    tried = 0
    survivors = []
    for _ in range(mutations):
        a = data[rng.randrange(len(data))]
        M = bz_from_lusztig(a)
        diagrams = all_maya(a.n)
        K = diagrams[rng.randrange(len(diagrams))]
        delta = 1 if rng.random() < 0.5 else -1
        mutant = M.with_component(K, M.get(K) + delta)
        tried += 1
        if not check_axioms(mutant).ok:
            violated += 1
        elif len(survivors) < 5:
            survivors.append({"datum": datum_payload(a), "maya": sorted(K.members), "delta": delta})
    rate = violated / tried if tried else 1.0
    if rate < MUTATION_THRESHOLD:
        violations.append({
            "check": "mutation test detection rate below threshold",
            "rate": rate,
            "threshold": MUTATION_THRESHOLD,
            "tried": tried,
            "sample_survivors": survivors,
        })
    return len(data) + tried, violations


def _check_bz_weights(a: LusztigDatum) -> list[dict]:
    out = []
    M = bz_from_lusztig(a)
    if bz_weight(M) != weight(a):
        out.append(_witness(a, "weight read off psi differs from the crystal weight",
                            bz=list(bz_weight(M)), crystal=list(weight(a))))
    S = star(M)
    for i in range(1, a.n + 1):
        direct = bz_epsilon_star(M, i)
        via_star = bz_epsilon(S, i)
        truth = epsilon_star(a, i)
        if direct != truth or via_star != truth:
            out.append(_witness(a, "starred epsilon read off psi differs from the crystal value",
                                i=i, direct=direct, via_star=via_star, crystal=truth))
    return out


def suite_bz_weights(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    return len(data), _map_data(_check_bz_weights, data, jobs)


def _check_bz_lowering(a: LusztigDatum) -> list[dict]:
    out = []
    M = bz_from_lusztig(a)
    W = star(M)
    for i in range(1, a.n + 1):
        lhs = bz_star_lowering(M, i)
        rhs = bz_from_lusztig(star_lowering(a, i))
        if lhs.values != rhs.values:
            out.append(_witness(a, "starred lowering does not commute with psi", i=i))
        conj = star(bz_lowering(W, i))
        if conj.values != lhs.values:
            out.append(_witness(a, "star-conjugated lowering disagrees with the starred rule", i=i))
        lowered = bz_lowering(W, i)
        if lowered.get(prefix_set(i)) != W.get(prefix_set(i)) - 1:
            out.append(_witness(a, "lowering does not drop the prefix component by one", i=i,
                                before=W.get(prefix_set(i)), after=lowered.get(prefix_set(i))))
    return out


def suite_bz_lowering(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    return len(data), _map_data(_check_bz_lowering, data, jobs)


def _check_bz_raising(a: LusztigDatum) -> list[dict]:
    out = []
    W = star(bz_from_lusztig(a))
    for i in range(1, a.n + 1):
        eps = bz_epsilon(W, i)
        if eps != epsilon_star(a, i):
            out.append(_witness(a, "bz epsilon disagrees with the crystal", i=i,
                                bz=eps, crystal=epsilon_star(a, i)))
        raised = bz_raising(W, i)
        if eps == 0:
            if raised is not None:
                out.append(_witness(a, "raising should be Bottom at epsilon zero", i=i))
            continue
        if raised is None:
            out.append(_witness(a, "raising unexpectedly Bottom", i=i, epsilon=eps))
            continue
        if raised.get(prefix_set(i)) != W.get(prefix_set(i)) + 1:
            out.append(_witness(a, "raising does not lift the prefix component by one", i=i))
        for K in all_maya(a.n):
            split = i in K.members and (i + 1) not in K.members
            if not split and raised.get(K) != W.get(K):
                out.append(_witness(a, "raising touched a component outside the split family",
                                    i=i, maya=sorted(K.members)))
        if bz_lowering(raised, i).values != W.values:
            out.append(_witness(a, "lowering does not invert raising on bz data", i=i))
        if a.n <= 3 and not check_axioms(raised).ok:
            out.append(_witness(a, "raised datum fails the axioms", i=i))
    return out


def suite_bz_raising(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    return len(data), _map_data(_check_bz_raising, data, jobs)


def _check_star_identities(a: LusztigDatum) -> list[dict]:
    out = []
    M = bz_from_lusztig(a)
    for i in range(1, a.n + 1):
        abar = star_raising_max(a, i)
        Mbar = bz_from_lusztig(abar)
        pairing = h_pairing(weight(abar), i)
        eps_star = epsilon_star(a, i)
        if c_shift_star(M, i) != pairing - eps_star - 1:
            out.append(_witness(a, "starred shift identity fails", i=i,
                                got=c_shift_star(M, i), expected=pairing - eps_star - 1))
        if epsilon(a, i) != max(epsilon(abar, i), -pairing + eps_star):
            out.append(_witness(a, "epsilon max identity fails", i=i,
                                got=epsilon(a, i),
                                expected=max(epsilon(abar, i), -pairing + eps_star)))
        for K in all_maya(a.n):
            if i in K.members or (i + 1) not in K.members:
                continue
            expected = min(Mbar.get(K), Mbar.get(K.reflect(i)) + pairing - eps_star)
            if M.get(K) != expected:
                out.append(_witness(a, "minimum formula fails on a starred split component",
                                    i=i, maya=sorted(K.members),
                                    got=M.get(K), expected=expected))
    return out


def suite_star_identities(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    return len(data), _map_data(_check_star_identities, data, jobs)


def _check_quiver(a: LusztigDatum) -> list[dict]:
    out = []
    n = a.n
    psi = bz_from_lusztig(a)
    base = lex_min_word(n)
    for K in all_maya(n):
        orient = orientation_from_maya(K)
        word = adapted_word(orient)
        coords = transition(n, a.entries, base, word)
        roots = roots_in_order(n, word)
        mult = {root: c for root, c in zip(roots, coords) if c}
        psi_val = psi.get(K)
        hom_val = m_k_via_hom(mult, K)
        module = build_module(n, mult, orient)
        coker_val = m_k_via_coker(module, K)
        if not psi_val == hom_val == coker_val:
            out.append(_witness(a, "triple equality fails", maya=sorted(K.members),
                                psi=psi_val, hom=hom_val, coker=coker_val))
    return out


def _quiver_unit_tables() -> tuple[int, list[dict]]:
    """Single-interval Hom and cokernel tables at small rank."""
    violations = []
    instances = 0
    for n in (2, 3):
        for K in all_maya(n):
            orient = orientation_from_maya(K)
            beta = characterizing_root(K)
            target = indecomposable(beta, orient) if beta else None
            for pair in pi_pairs(n):
                instances += 1
                expected = 1 if (pair[0] not in K.members and pair[1] in K.members) else 0
                source = indecomposable(pair, orient)
                if target is not None:
                    got = hom_dim(source, target)
                    if got != expected:
                        violations.append({
                            "check": "single-interval hom table",
                            "n": n, "maya": sorted(K.members), "pair": list(pair),
                            "got": got, "expected": expected,
                        })
                got_coker = m_k_via_coker(source, K)
                if got_coker != -expected:
                    violations.append({
                        "check": "single-interval cokernel table",
                        "n": n, "maya": sorted(K.members), "pair": list(pair),
                        "got": got_coker, "expected": -expected,
                    })
    return instances, violations


def _quiver_hom_vanishing() -> tuple[int, list[dict]]:
    """Later interval modules admit no maps to earlier ones, per adapted order."""
    violations = []
    instances = 0
    for n in (2, 3):
        seen = set()
        for K in all_maya(n):
            orient = orientation_from_maya(K)
            if orient in seen:
                continue
            seen.add(orient)
            roots = roots_in_order(n, adapted_word(orient))
            modules = [indecomposable(r, orient) for r in roots]
            for k in range(len(roots)):
                for l in range(k):
                    instances += 1
                    got = hom_dim(modules[k], modules[l])
                    if got != 0:
                        violations.append({
                            "check": "hom vanishing against the adapted order",
                            "n": n, "orientation": "".join(orient.dirs),
                            "later": list(roots[k]), "earlier": list(roots[l]),
                            "got": got,
                        })
    return instances, violations


def suite_quiver(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales)
    violations = _map_data(_check_quiver, data, jobs)
    unit_count, unit_violations = _quiver_unit_tables()
    hv_count, hv_violations = _quiver_hom_vanishing()
    violations.extend(unit_violations)
    violations.extend(hv_violations)
    return len(data) + unit_count + hv_count, violations


def suite_lagrangian(
    scales,
    jobs,
    seed,
    primes=(lagr.DEFAULT_PRIME, lagr.SECOND_PRIME),
    sample_seeds=(0, 1, 2),
) -> tuple[int, list[dict]]:
    data = _suite_data(scales if scales is not None else LAGRANGIAN_SCALES)
    tasks = [(a, p, s) for a in data for p in primes for s in sample_seeds]

    def run(task):
        a, p, s = task
        report = lagr.sampling_report(a, p, s)
        if report["ok"]:
            return []
        bad = [r for r in report["records"] if r["status"] != "match"]
        return [{
            "check": "sampled invariants disagree with exact values",
            "datum": report["datum"], "p": p, "seed": s,
            "seeds_tried": report["seeds_tried"], "records": bad,
        }]

    if jobs <= 1:
        chunks = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run, tasks))
    return len(tasks), [v for chunk in chunks for v in chunk]


def _check_transition(a: LusztigDatum) -> list[dict]:
    out = []
    n = a.n
    base = lex_min_word(n)
    base_roots = roots_in_order(n, base)
    wt_vec = [0] * n
    for c, root in zip(a.entries, base_roots):
        vec = root_vector(n, root)
        for idx in range(n):
            wt_vec[idx] += c * vec[idx]
    detour = tuple(reversed(base))
    for word in all_reduced_words(n):
        coords = transition(n, a.entries, base, word)
        roots = roots_in_order(n, word)
        moved = [0] * n
        for c, root in zip(coords, roots):
            vec = root_vector(n, root)
            for idx in range(n):
                moved[idx] += c * vec[idx]
        if moved != wt_vec:
            out.append(_witness(a, "transition does not preserve the weight",
                                word=list(word)))
        if transition(n, coords, word, base) != a.entries:
            out.append(_witness(a, "transition round trip is not the identity",
                                word=list(word)))
        via = transition_along(
            transition_along(a.entries, braid_path(n, base, detour)),
            braid_path(n, detour, word),
        )
        if via != coords:
            out.append(_witness(a, "two braid paths disagree", word=list(word)))
    return out


def _adapted_replay() -> tuple[int, list[dict]]:
    violations = []
    instances = 0
    for n in range(1, ADAPTED_MAX_RANK + 1):
        for K in all_maya(n):
            instances += 1
            orient = orientation_from_maya(K)
            word = adapted_word(orient)
            if not is_adapted(word, orient):
                violations.append({
                    "check": "adapted word replay fails",
                    "n": n, "maya": sorted(K.members),
                    "word": list(word), "orientation": "".join(orient.dirs),
                })
    return instances, violations


def suite_transition(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales if scales is not None else SMALL_SCALES)
    violations = _map_data(_check_transition, data, jobs)
    replay_count, replay_violations = _adapted_replay()
    violations.extend(replay_violations)
    return len(data) + replay_count, violations


def _check_polytope(a: LusztigDatum) -> list[dict]:
    out = []
    W = star(bz_from_lusztig(a))
    geometry = mv_vertices(W)
    diagrams = all_maya(a.n)
    for w, mu in geometry.vertices:
        if sum(mu) != 0:
            out.append(_witness(a, "vertex leaves the sum-zero hyperplane", w=list(w)))
        for K in diagrams:
            if support_sum(mu, K.members) < W.get(K):
                out.append(_witness(a, "vertex violates a halfspace", w=list(w),
                                    maya=sorted(K.members)))
        for i in range(1, a.n + 1):
            chamber = frozenset(w[:i])
            if support_sum(mu, chamber) != W.get(MayaDiagram.of(a.n, chamber)):
                out.append(_witness(a, "vertex misses its own chamber hyperplane",
                                    w=list(w), i=i))
    return out


def suite_polytope(scales, jobs, seed) -> tuple[int, list[dict]]:
    data = _suite_data(scales if scales is not None else SMALL_SCALES)
    return len(data), _map_data(_check_polytope, data, jobs)


_SUITES: dict[str, Callable] = {
    "crystal-axioms": suite_crystal_axioms,
    "intro-identity": suite_intro_identity,
    "bz-axioms": suite_bz_axioms,
    "bz-weights": suite_bz_weights,
    "bz-lowering": suite_bz_lowering,
    "bz-raising": suite_bz_raising,
    "star-identities": suite_star_identities,
    "quiver": suite_quiver,
    "lagrangian": suite_lagrangian,
    "transition": suite_transition,
    "polytope": suite_polytope,
}

_DEFAULT_SCALES_FOR = {
    "lagrangian": LAGRANGIAN_SCALES,
    "transition": SMALL_SCALES,
    "polytope": SMALL_SCALES,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(
    name: str,
    n: int | None = None,
    max_height: int | None = None,
    jobs: int = 1,
    seed: int = DEFAULT_SEED,
) -> VerifyReport:
    """Run one named suite (or "all") and return its report."""
    if name == "all":
        started = time.perf_counter()
        instances = 0
        violations: list[dict] = []
        for sub in _SUITES:
            report = run_suite(sub, n=n, max_height=max_height, jobs=jobs, seed=seed)
            instances += report.instances
            for v in report.violations:
                violations.append({"suite": sub, **v})
        return VerifyReport(
            "all",
            {"n": n, "max_height": max_height, "jobs": jobs, "seed": seed},
            instances,
            violations,
            time.perf_counter() - started,
        )
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")

    if n is not None:
        height = max_height if max_height is not None else (5 if n <= 3 else 3)
        scales: tuple[tuple[int, int], ...] | None = ((n, height),)
    elif max_height is not None:
        scales = tuple((rank, max_height) for rank, _ in DEFAULT_SCALES)
    else:
        scales = _DEFAULT_SCALES_FOR.get(name, DEFAULT_SCALES)

    started = time.perf_counter()
    instances, violations = _SUITES[name](scales, jobs, seed)
    elapsed = time.perf_counter() - started
    violations.sort(key=lambda v: repr(sorted(v.items(), key=lambda kv: kv[0])))
    return VerifyReport(
        name,
        {"n": n, "max_height": max_height, "jobs": jobs, "seed": seed,
         "scales": [list(s) for s in (scales or ())]},
        instances,
        violations,
        elapsed,
    )

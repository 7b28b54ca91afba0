"""Exhaustive verification suites.

Each suite walks a finite family of inputs, collects failure messages and
returns a SuiteResult. Scans over partial permutations fan out across
processes; PIPES_THREADS caps the worker count and results keep input order.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .classes import (
    YPolynomial,
    e_diff,
    expand,
    specialize_KT_to_HT,
    specialize_KT_to_K,
    check_graham_positive,
    wt_H,
    y,
)
from .core import (
    PartialPermutation,
    all_partial_permutations,
    complement,
    dimension,
    dots_nw_se,
    extend_to_juggling,
    is_interval_pattern,
    k_subsets,
    richardson_envelope,
)
from .dreams import Kind, Mode, ZW, brute_force_enumerate, enumerate_dreams, fusor_candidates, slice_permutation, walk_slices
from .puzzles import (
    boundary_of,
    count_puzzles,
    dream_to_puzzle,
    lr_coefficient,
    partition_of_string,
    puzzle_to_dream,
)
from .shifts import (
    is_nontrivial_shift,
    is_safe,
    safe_shift_components,
    tconvex_fixed_point_check,
)

SUITES = ("figures", "specialize", "fusing", "richardson", "shifting", "oracle")
DEFAULT_MAX_N = {"figures": 4, "specialize": 5, "fusing": 5, "richardson": 6, "shifting": 5, "oracle": 4}

# the running example: dots at (1, 2) and (3, 4) in the 4x4 triangle
RUNNING_EXAMPLE = PartialPermutation.from_dots(4, [(1, 2), (3, 4)])


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked,
                "failures": self.failures[:50], "failure_count": len(self.failures),
                "notes": self.notes, "seconds": round(self.seconds, 3)}


def workers() -> int:
    try:
        cap = int(os.environ.get("PIPES_THREADS", "0"))
    except ValueError:
        cap = 0
    return cap if cap > 0 else (os.cpu_count() or 1)


def ordered_map(fn, items, n_workers=None):
    """map(fn, items) across processes, results in input order."""
    items = list(items)
    n_workers = n_workers or workers()
    if n_workers <= 1 or len(items) < 8:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * n_workers))))


def _perms(max_n: int, n_min: int = 1) -> list:
    return [f for n in range(n_min, max_n + 1) for f in all_partial_permutations(n)]


def _scan(name, fn, inputs) -> SuiteResult:
    t = time.perf_counter()
    res = SuiteResult(name)
    for fails in ordered_map(fn, inputs):
        res.checked += 1
        res.failures.extend(fails)
    res.seconds = time.perf_counter() - t
    return res


# ---------------------------------------------------------------- figures


def running_example_kt_weights() -> list:
    return [r.weight for r in expand(RUNNING_EXAMPLE, Mode.KT).records]


def printed_kt_weight_list() -> list:
    """The six K_T weights as printed alongside the running example."""
    return [e_diff(2, 4), e_diff(1, 2), 1 - e_diff(1, 2), 1 - e_diff(2, 4),
            e_diff(1, 4), e_diff(2, 4) - e_diff(1, 4)]


def same_multiset(a: list, b: list) -> bool:
    rest = list(b)
    for w in a:
        if w not in rest:
            return False
        rest.remove(w)
    return not rest


def suite_figures(max_n: int = 4) -> SuiteResult:
    t = time.perf_counter()
    res = SuiteResult("figures")
    f = RUNNING_EXAMPLE

    def check(ok, msg):
        res.checked += 1
        if not ok:
            res.failures.append(msg)

    check(len(enumerate_dreams(f, Mode.HT)) == 4, "HT dream count is not 4")
    check(len(enumerate_dreams(f, Mode.KT)) == 6, "KT dream count is not 6")
    check(expand(f, Mode.H).terms == {(2,): 1, (1, 1): 1}, "H expansion")
    ht = expand(f, Mode.HT).terms
    check(ht == {(2,): YPolynomial.const(1), (1, 1): YPolynomial.const(1), (2, 1): y(1) - y(4)},
          f"HT expansion {ht}")
    check(expand(f, Mode.K).terms == {(2,): 1, (1, 1): 1, (1,): -1}, "K expansion")
    kt = expand(f, Mode.KT)
    check(specialize_KT_to_K(kt).same_terms(expand(f, Mode.K)), "KT -> K")
    check(specialize_KT_to_HT(kt).same_terms(expand(f, Mode.HT)), "KT -> HT")
    ours = running_example_kt_weights()
    if not same_multiset(ours, printed_kt_weight_list()):
        res.notes.append("KT weight multiset differs from the printed list: "
                         + ", ".join(str(w) for w in ours))
    res.seconds = time.perf_counter() - t
    return res


# ---------------------------------------------------------------- specialize


def check_specialization(f: PartialPermutation) -> list:
    kt = expand(f, Mode.KT)
    out = []
    if not specialize_KT_to_K(kt).same_terms(expand(f, Mode.K)):
        out.append(f"{f}: KT -> K")
    ht = expand(f, Mode.HT)
    if not specialize_KT_to_HT(kt).same_terms(ht):
        out.append(f"{f}: KT -> HT")
    if not check_graham_positive(ht):
        out.append(f"{f}: HT not positive")
    return out


def suite_specialize(max_n: int = 5) -> SuiteResult:
    return _scan("specialize", check_specialization, _perms(max_n))


# ---------------------------------------------------------------- fusing


def check_laws(f: PartialPermutation) -> list:
    d = dimension(f)
    out = []
    for P in enumerate_dreams(f, Mode.K):
        if P.fusing != d - sum(P.lam):
            out.append(f"{f}: fusing {P.fusing} != {d} - |{P.lam}|")
    for P in enumerate_dreams(f, Mode.HT):
        ne = len(P.equivariant_positions)
        if sum(P.lam) != d + ne:
            out.append(f"{f}: |{P.lam}| != {d} + {ne}")
    for P in enumerate_dreams(f, Mode.KT):
        ne = len(P.equivariant_positions)
        if P.fusing != d + ne - sum(P.lam):
            out.append(f"{f}: KT fusing {P.fusing} != {d} + {ne} - |{P.lam}|")
    return out


def suite_fusing(max_n: int = 5) -> SuiteResult:
    return _scan("fusing", check_laws, _perms(max_n))


# ---------------------------------------------------------------- oracle


def check_oracle(f: PartialPermutation) -> list:
    out = []
    for mode in Mode:
        fast = enumerate_dreams(f, mode)
        if len(set(fast)) != len(fast):
            out.append(f"{f} {mode.value}: duplicate dreams")
        if set(fast) != set(brute_force_enumerate(f, mode)):
            out.append(f"{f} {mode.value}: enumerate != brute force")
    return out


def suite_oracle(max_n: int = 4) -> SuiteResult:
    return _scan("oracle", check_oracle, _perms(min(max_n, 5)))


# ---------------------------------------------------------------- richardson


def check_richardson(f: PartialPermutation) -> list:
    J = extend_to_juggling(f)
    mu, nu, exact = richardson_envelope(J)
    out = []
    if exact != dots_nw_se(f.dots):
        out.append(f"{f}: exactness disagrees with the NW/SE test")
    if not exact:
        return out
    n, k = f.n, f.k
    c = n - k
    e = expand(f, Mode.H)
    for S in k_subsets(n, k):
        lam = partition_of_string("".join("1" if m + 1 in S else "0" for m in range(n)))
        co = e.coefficient(lam)
        lr = lr_coefficient(complement(mu, k, c), complement(nu, k, c), complement(lam, k, c))
        pz = count_puzzles(boundary_of(f, lam))
        if not co == lr == pz:
            out.append(f"{f} at {lam}: dreams {co}, LR {lr}, puzzles {pz}")
    return out


def check_bijection(f: PartialPermutation) -> list:
    if not dots_nw_se(f.dots):
        return []
    out = []
    for P in enumerate_dreams(f, Mode.HT):
        Z = dream_to_puzzle(P)
        if puzzle_to_dream(Z) != P:
            out.append(f"{f}: round trip failed")
        if Z.weight != wt_H(P):
            out.append(f"{f}: weight changed")
        if Z.boundary != boundary_of(f, P.lam):
            out.append(f"{f}: boundary {Z.boundary}")
    return out


def suite_richardson(max_n: int = 6) -> SuiteResult:
    res = _scan("richardson", check_richardson, _perms(max_n))
    bij = _scan("richardson", check_bijection, _perms(min(max_n, 5)))
    res.checked += bij.checked
    res.failures.extend(bij.failures)
    res.seconds += bij.seconds
    return res


# ---------------------------------------------------------------- shifting


@lru_cache(maxsize=None)
def _terms(J, mode) -> tuple:
    return tuple(sorted(expand(J, mode).terms.items(), key=lambda kv: kv[0]))


def _add(acc: dict, terms, sign=1) -> dict:
    for lam, c in terms:
        acc[lam] = acc.get(lam, 0) + sign * c
    return {lam: c for lam, c in acc.items() if c}


BRANCH_PARTS = ("admissions", "tconvex", "inclusion_exclusion", "transition")


def check_branch_point(s, adm, parts=BRANCH_PARTS) -> list:
    """Compare the admissions at slice s with the safe shift at its kink.

    parts selects among the admission match, the fixed-point check, the K
    inclusion-exclusion and the H transition identity.
    """
    g = slice_permutation(s)
    J = extend_to_juggling(g)
    i, j = s.i, s.j
    tag = f"{g} at ({i},{j})"
    if not is_safe(J, i, j):
        return [f"{tag}: shift is not safe"]
    branching = s.h(j) == "0" and s.kink == ZW
    if branching != is_nontrivial_shift(J, i, j):
        return [f"{tag}: branching disagrees with essential boxes"]
    if not branching:
        return []
    out = []
    sh = safe_shift_components(J, i, j)
    for p in (sh.sweep, *sh.components, *sh.intersections.values()):
        if not is_interval_pattern(p):
            return [f"{tag}: {p} is not an interval pattern"]
    if "admissions" in parts:
        C = fusor_candidates(s)
        if len(C) != len(sh.dots):
            return [f"{tag}: {len(C)} fusor letters vs {len(sh.dots)} dots"]
        if len(adm) != 1 + len(sh.intersections):
            out.append(f"{tag}: {len(adm)} admissions vs {1 + len(sh.intersections)}")
        for tile, nxt in adm:
            got = extend_to_juggling(slice_permutation(nxt))
            if tile.kind is Kind.EQUIVARIANT:
                want = sh.sweep
            else:
                want = sh.intersections.get(tuple(C.index(x) for x in tile.west))
            if got != want:
                out.append(f"{tag}: tile {tile.west} leads to {got}, expected {want}")
    if "tconvex" in parts and not tconvex_fixed_point_check(J, i, j):
        out.append(f"{tag}: shifted matroid is not the union of components")
    if "inclusion_exclusion" in parts:
        total: dict = {}
        for idx, p in sh.intersections.items():
            total = _add(total, _terms(p, Mode.K), (-1) ** (len(idx) - 1))
        if total != dict(_terms(J, Mode.K)):
            out.append(f"{tag}: K inclusion-exclusion fails")
    if "transition" in parts:
        total = {}
        for p in sh.components:
            total = _add(total, _terms(p, Mode.H))
        if total != dict(_terms(J, Mode.H)):
            out.append(f"{tag}: H transition fails")
    return out


def branch_points(f: PartialPermutation) -> list:
    """Distinct slices met while enumerating the KT dreams of f, with admissions."""
    out = []
    seen = set()
    for s, adm in walk_slices(f, Mode.KT):
        key = (slice_permutation(s), s.i, s.j)
        if key not in seen:
            seen.add(key)
            out.append((s, adm))
    return out


def check_shifting(f: PartialPermutation, parts=BRANCH_PARTS) -> list:
    out = []
    for s, adm in branch_points(f):
        out.extend(check_branch_point(s, adm, parts))
    return out


def suite_shifting(max_n: int = 5) -> SuiteResult:
    return _scan("shifting", check_shifting, _perms(max_n))


RUNNERS = {
    "figures": suite_figures,
    "specialize": suite_specialize,
    "fusing": suite_fusing,
    "richardson": suite_richardson,
    "shifting": suite_shifting,
    "oracle": suite_oracle,
}


def run_suite(name: str, max_n=None) -> SuiteResult:
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}")
    return RUNNERS[name](DEFAULT_MAX_N[name] if max_n is None else max_n)

"""Verification suites: closed forms against exhaustive oracles on many squares.

Each suite returns a :class:`SuiteResult`; the first failing square (if any)
is kept as a counterexample so it can be dumped for reproduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .burning import (
    build_H3L,
    build_HL,
    is_lazy_burning_set,
    lazy_burn,
    min_lazy_burning_set,
    min_lbs_complement_search,
)
from .chains import (
    bl_H3L_bounds,
    chain_to_cover_sequence,
    cover_sequence_to_chain,
    mcs_exhaustive,
    peel_ordering,
    scc,
    scc_bounds,
    validate_cover_sequence,
)
from .errors import LatinBurnError
from .fixtures import (
    ORDER3_ROUND1,
    ORDER3_SEED,
    ORDER3_SQUARE,
    ORDER5_LARGER_SEED,
    ORDER5_MIN_SEED,
    ORDER5_SEQUENCE,
    ORDER5_SQUARE,
    cells_to_entries,
)
from .groups import (
    coset_columns_predicate,
    cayley_square,
    dihedral,
    direct_product,
    min_generating_size,
    random_coset_case,
    sym,
    z,
    z2_pow,
)
from .latin import LatinSquare, cyclic, enumerate_all, intercalate_power, random_square


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    counterexample: LatinSquare | None = None
    witness: dict | None = None
    scc_values: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str, square: LatinSquare | None = None, **witness):
        self.failures.append(message)
        if self.counterexample is None and square is not None:
            self.counterexample = square
            self.witness = {"message": message, **witness}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.name}: {self.checked} checked"
        if self.failures:
            line += f", {len(self.failures)} failure(s); first: {self.failures[0]}"
        return line


def _record_scc(result: SuiteResult, square: LatinSquare, value: int):
    result.scc_values.append((square.order, value))
    lo, hi = scc_bounds(square.order)
    if not lo <= value <= hi:
        result.fail(f"scc {value} outside [{lo}, {hi}]", square, scc=value)


def check_exhaustive(max_order: int = 4) -> SuiteResult:
    """Every square of order <= max_order: both oracles and mcs against scc."""
    res = SuiteResult(f"exhaustive orders 1..{max_order}")
    for n in range(1, max_order + 1):
        for sq in enumerate_all(n):
            res.checked += 1
            hl = min_lazy_burning_set(build_HL(sq))[0]
            h3 = min_lazy_burning_set(build_H3L(sq))[0]
            mcs = mcs_exhaustive(sq)[0]
            if n == 1:
                if (hl, h3, mcs) != (1, 2, 1):
                    res.fail(f"order 1 gave bl_HL={hl} bl_H3L={h3} mcs={mcs}", sq)
                continue
            a = scc(sq)[0]
            _record_scc(res, sq, a)
            checks = {
                "bl_HL = n^2-3n+1+scc": hl == n * n - 3 * n + 1 + a,
                "bl_H3L = scc+1": h3 == a + 1,
                "mcs = 3n-1-scc": mcs == 3 * n - 1 - a,
                "bl_HL - n^2 = bl_H3L - 3n": hl - n * n == h3 - 3 * n,
            }
            for label, ok in checks.items():
                if not ok:
                    res.fail(f"{label} violated", sq, scc=a, bl_HL=hl, bl_H3L=h3, mcs=mcs)
    return res


def order5_corpus(randoms: int = 10, seed: int = 0) -> list[LatinSquare]:
    return [cyclic(5), ORDER5_SQUARE] + [random_square(5, seed + i) for i in range(randoms)]


def check_order5(randoms: int = 10, seed: int = 0) -> SuiteResult:
    res = SuiteResult("order-5 spot check")
    for sq in order5_corpus(randoms, seed):
        res.checked += 1
        a = scc(sq)[0]
        _record_scc(res, sq, a)
        hl = min_lbs_complement_search(sq)[0]
        h3 = min_lazy_burning_set(build_H3L(sq), *bl_H3L_bounds(5))[0]
        if hl != 25 - 15 + 1 + a or h3 != a + 1:
            res.fail("order-5 formula mismatch", sq, scc=a, bl_HL=hl, bl_H3L=h3)
    return res


def check_cyclic(n_max: int = 16) -> SuiteResult:
    res = SuiteResult(f"cyclic squares 2..{n_max}")
    for n in range(2, n_max + 1):
        sq = cyclic(n)
        res.checked += 1
        a = scc(sq)[0]
        _record_scc(res, sq, a)
        if a != 2:
            res.fail(f"scc(cyclic({n})) = {a}, expected 2", sq, scc=a)
    return res


def check_intercalates(k_max: int = 3) -> SuiteResult:
    res = SuiteResult(f"intercalate powers 1..{k_max}")
    for k in range(1, k_max + 1):
        sq = intercalate_power(k)
        res.checked += 1
        a = scc(sq)[0]
        _record_scc(res, sq, a)
        h3 = min_lazy_burning_set(build_H3L(sq), *bl_H3L_bounds(sq.order))[0]
        if a != k + 1 or h3 != k + 2:
            res.fail(f"k={k}: scc={a}, H^L oracle={h3}", sq, scc=a, bl_H3L=h3)
    return res


def check_characterization(samples: int = 1000, seed: int = 0, perm_limit: int = 8) -> SuiteResult:
    """Burn-completeness of a seed versus peelability of its complement."""
    res = SuiteResult(f"burning-set characterization ({samples} samples)")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, 5)
        sq = random_square(n, rng.getrandbits(64))
        entries = sq.entries()
        # bias toward large seeds so both outcomes occur often
        keep = rng.uniform(0.4, 1.0)
        seed_set = [e for e in entries if rng.random() < keep]
        rest = [e for e in entries if e not in set(seed_set)]
        res.checked += 1
        burns = is_lazy_burning_set(build_HL(sq), seed_set)
        peel = peel_ordering(sq, rest)
        if burns != peel.success:
            res.fail("burning and peeling disagree", sq, seed=[list(e) for e in seed_set])
            continue
        if peel.success:
            try:
                validate_cover_sequence(sq, peel.ordering)
            except LatinBurnError as exc:
                res.fail(f"peel ordering invalid: {exc}", sq, seed=[list(e) for e in seed_set])
        if len(rest) <= perm_limit and burns != _some_weak_permutation(rest):
            res.fail("permutation oracle disagrees", sq, seed=[list(e) for e in seed_set])
    return res


def _some_weak_permutation(entries) -> bool:
    """Try orderings of ``entries`` directly, abandoning a prefix once it stalls."""
    entries = list(entries)

    def extend(remaining, seen):
        if not remaining:
            return True
        for i, e in enumerate(remaining):
            new = set(e.lines()) - seen
            if new and extend(remaining[:i] + remaining[i + 1 :], seen | new):
                return True
        return False

    return extend(entries, frozenset())


def check_worked_examples() -> SuiteResult:
    res = SuiteResult("worked examples")
    sq3 = ORDER3_SQUARE
    hl3 = build_HL(sq3)
    trace = lazy_burn(hl3, cells_to_entries(sq3, ORDER3_SEED))
    res.checked += 1
    round1 = [hl3.vertex_labels[v][:2] for v in trace.layers()[0]] if trace.rounds else []
    if sorted(round1) != sorted(ORDER3_ROUND1) or trace.rounds != 2 or not trace.complete:
        res.fail("order-3 trace differs", sq3, layers=trace.layers())

    sq5 = ORDER5_SQUARE
    hl5 = build_HL(sq5)
    s_min = cells_to_entries(sq5, ORDER5_MIN_SEED)
    m = cells_to_entries(sq5, ORDER5_LARGER_SEED)
    res.checked += 1
    if len(s_min) != 13 or not is_lazy_burning_set(hl5, s_min):
        res.fail("13-entry seed does not burn", sq5)
    if min_lbs_complement_search(sq5)[0] != 13:
        res.fail("13 is not the minimum for the order-5 square", sq5)
    res.checked += 1
    if len(m) != 14 or not is_lazy_burning_set(hl5, m):
        res.fail("14-entry seed does not burn", sq5)
    res.checked += 1
    try:
        seq = validate_cover_sequence(sq5, cells_to_entries(sq5, ORDER5_SEQUENCE), strict=True)
        if set(seq.entries) != set(sq5.entries()) - set(m):
            res.fail("sequence is not the complement of the 14-entry seed", sq5)
    except LatinBurnError as exc:
        res.fail(f"11-entry sequence rejected: {exc}", sq5)
    return res


def group_corpus() -> list:
    return (
        [z(n) for n in range(2, 13)]
        + [z2_pow(k) for k in (1, 2, 3)]
        + [direct_product(z(2), z(4)), sym(3), dihedral(4)]
    )


def check_groups(coset_samples: int = 200, seed: int = 0, oracle_max: int = 8) -> SuiteResult:
    res = SuiteResult("groups")
    groups = group_corpus()
    for g in groups:
        sq = cayley_square(g)
        res.checked += 1
        alpha = min_generating_size(g)[0]
        a = scc(sq)[0]
        _record_scc(res, sq, a)
        if a != alpha + 1:
            res.fail(f"{g.name}: scc {a} != alpha+1 = {alpha + 1}", sq, scc=a, alpha=alpha)
        if g.order <= oracle_max:
            h3 = min_lazy_burning_set(build_H3L(sq), *bl_H3L_bounds(g.order))[0]
            if h3 != alpha + 2:
                res.fail(f"{g.name}: H^L oracle {h3} != alpha+2", sq, bl_H3L=h3, alpha=alpha)
    rng = random.Random(seed)
    small = [g for g in groups if g.order <= 16]
    for _ in range(coset_samples):
        g = rng.choice(small)
        r, c, lines = random_coset_case(g, rng)
        res.checked += 1
        if not coset_columns_predicate(g, r, c, lines)[1]:
            res.fail(
                f"{g.name}: coset prediction failed for r={r} c={c} lines={[str(l) for l in lines]}",
                cayley_square(g),
            )
    return res


def check_roundtrips(n_max: int = 16, k_max: int = 3) -> SuiteResult:
    res = SuiteResult("chain / cover-sequence round trips")
    squares = [cyclic(n) for n in range(2, n_max + 1)]
    squares += [intercalate_power(k) for k in range(1, k_max + 1)]
    for sq in squares:
        res.checked += 1
        n = sq.order
        a, chain = scc(sq)
        try:
            seq = chain_to_cover_sequence(sq, chain)
            profile = sorted(seq.weights, reverse=True)
            expected = [3] + [2] * (a - 1) + [1] * (len(seq) - a)
            if len(seq) != 3 * n - 1 - a or profile != expected or not seq.strict:
                res.fail(f"order {n}: bad cover-sequence length/profile", sq, weights=list(seq.weights))
                continue
            back = cover_sequence_to_chain(sq, seq)
            if back.length != a:
                res.fail(f"order {n}: round trip gave chain length {back.length} != {a}", sq)
        except LatinBurnError as exc:
            res.fail(f"order {n}: {exc}", sq)
    return res


SUITES = {
    "exhaustive": check_exhaustive,
    "order5": check_order5,
    "cyclic": check_cyclic,
    "intercalate": check_intercalates,
    "characterization": check_characterization,
    "examples": check_worked_examples,
    "groups": check_groups,
    "roundtrip": check_roundtrips,
}

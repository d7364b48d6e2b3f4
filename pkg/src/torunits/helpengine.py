"""Case-analysis engine for torsion units of odd composite order n.

Setting: u is a normalized torsion unit of order n (odd, coprime to the
group characteristic, not a prime power) in the integral group ring of
PSL(2,q), g is a group element of order n with the same image under the
degree-3 representation, and every proper power of u is rationally
conjugate to the corresponding power of g.  If u itself were NOT
rationally conjugate to g, there would be a minimal divisor d of n
(1 < d < n) such that the degree-(1+2d) character separates them, and
the eigenvalue exponents of the degree-(1+2d) representation at u would
form a tuple of sign classes (v_1, ..., v_d) satisfying, for every
divisor c != 1 of n, the multiset constraint

    {classes of v_i mod n/c}  ==  {classes of 1..d mod n/c}.

For each candidate tuple the engine computes the deviation vector: the
difference of distinguished-basis coordinates between the candidate's
character value and the group element's.  A counterexample tuple must
have every deviation coordinate divisible by d (the character values
differ by d times a real cyclotomic integer) while the vector itself is
nonzero.  A tuple meeting both conditions is a SURVIVOR; if no survivor
exists the case (n, d) is ELIMINATED, and eliminating every candidate d
proves that units of order n are rationally conjugate to group
elements.  Survivors over-approximate realizable counterexamples, so
only "eliminated" carries mathematical weight.

The enumeration is a backtracking search over non-decreasing class
tuples constrained by per-prime residue multisets (the constraints for
prime c imply those for composite c); its output order is canonical, so
certificates are byte-stable regardless of worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Sequence

from torunits.cyclotomic import CycInt, rational_trace
from torunits.numtheory import (
    class_rep,
    class_reps,
    divisors,
    moebius,
    near_zero_part,
    pair_weight,
    prime_count,
    prime_divisors,
    same_class,
)
from torunits.psl2 import character_value, group_profile, is_prime_power
from torunits.realbasis import basis_indices


class CaseInapplicableError(ValueError):
    """The requested (n, d) pair is outside the engine's case ledger."""


class InvariantViolationError(RuntimeError):
    """An internal bound or cross-check failed; indicates a bug, not a survivor."""


# -- partial augmentations ---------------------------------------------


@dataclass(frozen=True)
class AugVector:
    """Partial augmentations of a normalized unit, indexed by sign classes.

    eps[x] is the partial augmentation at the class of the x-th power of
    the reference generator; the values must sum to 1.  For a unit
    different from 1 the entry at class 0 vanishes (Berman-Higman), but
    the constructor does not force this so the trivial unit can be
    represented too.
    """

    n: int
    eps: Mapping[int, int]

    def __post_init__(self):
        reps = class_reps(self.n)
        rep_set = set(reps)
        bad = [x for x in self.eps if x not in rep_set]
        if bad:
            raise ValueError(f"keys must be class representatives in [0, {self.n//2}]: {bad}")
        full = {x: int(self.eps.get(x, 0)) for x in reps}
        if sum(full.values()) != 1:
            raise ValueError(f"partial augmentations must sum to 1, got {sum(full.values())}")
        object.__setattr__(self, "eps", full)

    @staticmethod
    def indicator(n: int, x: int) -> "AugVector":
        return AugVector(n, {class_rep(n, x): 1})

    def __getitem__(self, x: int) -> int:
        return self.eps[class_rep(self.n, x)]


def unit_trace(eps: AugVector, i: int) -> CycInt:
    """sum_x eps[x] * (zeta^(i*x) + zeta^(-i*x)): the implied real trace value."""
    n = eps.n
    coeffs = [0] * n
    for x, c in eps.eps.items():
        if c:
            coeffs[(i * x) % n] += c
            coeffs[(-i * x) % n] += c
    return CycInt(n, coeffs)


def augmentations_from_traces(traces: Sequence[CycInt], n: int) -> AugVector:
    """Invert i -> unit_trace(eps, i) given the values for i = 0..n-1.

    Inverts the finite Fourier transform exactly inside Z[zeta_n]: for
    each j, sum_i traces[i] * zeta^(-i*j) must reduce to the constant
    n * E_j with E_j = E_{n-j} integers and E_0 even.  Inconsistent
    input (anything not of the form unit_trace(eps, .) for an integer
    augmentation vector summing to 1) raises ValueError.
    """
    if len(traces) != n:
        raise ValueError(f"expected {n} trace values, got {len(traces)}")
    raws = []
    for i, t in enumerate(traces):
        if not isinstance(t, CycInt) or t.n != n:
            raise ValueError(f"trace {i} is not an element of the order-{n} ring")
        raws.append(t.coeffs)
    E = [0] * n
    for j in range(n):
        acc = [0] * n
        for i, raw in enumerate(raws):
            k = (i * j) % n
            shifted = raw[k:] + raw[:k]
            acc = [a + b for a, b in zip(acc, shifted)]
        red = CycInt(n, acc).reduced
        if any(red[1:]):
            raise ValueError(f"trace data is inconsistent: component {j} is not rational")
        if red[0] % n:
            raise ValueError(f"trace data is inconsistent: non-integer solution at {j}")
        E[j] = red[0] // n
    for x in range(1, n // 2 + 1):
        if E[x] != E[n - x]:
            raise ValueError(f"trace data is inconsistent: asymmetry at {x}")
    if E[0] % 2:
        raise ValueError("trace data is inconsistent: odd weight at class 0")
    eps = {0: E[0] // 2}
    eps.update({x: E[x] for x in range(1, n // 2 + 1)})
    return AugVector(n, eps)


# -- eigenvalue multiplicities ------------------------------------------


def classwise_powers(eps: AugVector) -> dict[int, AugVector]:
    """Augmentations of the c-th powers under the class-power rule.

    Sends the class of x to the class of x modulo n/c; exact whenever
    the augmentations are the indicator of a single class (a genuine
    group element), and the natural default elsewhere.
    """
    n = eps.n
    out = {}
    for c in divisors(n):
        if c == 1:
            continue
        k = n // c
        folded: dict[int, int] = {}
        for x, v in eps.eps.items():
            if v:
                y = class_rep(k, x) if k > 1 else 0
                folded[y] = folded.get(y, 0) + v
        out[c] = AugVector(k, folded)
    return out


def induction_powers(n: int) -> dict[int, AugVector]:
    """Power augmentations under the hypothesis u^c ~ g^c for every c != 1."""
    out = {}
    for c in divisors(n):
        if c == 1:
            continue
        k = n // c
        out[c] = AugVector.indicator(k, 1 if k > 1 else 0)
    return out


def eigenvalue_multiplicity(
    eps: AugVector,
    m: int,
    l: int,
    powers: Mapping[int, AugVector] | None = None,
) -> Fraction:
    """Exact multiplicity of zeta^l as an eigenvalue of the degree-(1+2m) image.

    Uses the finite Fourier inversion over the subfield tower: the term
    for a divisor c of n is the rational trace of chi(u^c) * zeta^(-l)
    taken in the ring of the (n/c)-th roots of unity, where chi(u^c) is
    expanded through the supplied partial augmentations of u^c.  When
    `powers` is omitted they are derived by the class-power rule, which
    matches genuine group elements; the engine's exploratory search
    passes induction_powers(n) instead.

    For an actual torsion unit the result is a nonnegative integer and
    the function l -> multiplicity is invariant under l -> -l.
    """
    n = eps.n
    if powers is None:
        powers = classwise_powers(eps)
    total = 0
    for c in divisors(n):
        k = n // c
        pe = eps if c == 1 else powers[c]
        if pe.n != k:
            raise ValueError(f"power augmentations for c={c} must live at modulus {k}")
        value = CycInt.zero(k)
        for y, v in pe.eps.items():
            if v:
                value = value + v * character_value(k, m, y)
        total += rational_trace(value * CycInt.root(k, -l))
    return Fraction(total, n)


# -- candidate divisors --------------------------------------------------


def bound_filtered_divisors(limit: int) -> tuple[int, ...]:
    """Odd d in [3, limit] with d <= 1 + 2^(#primes(d) + 2).

    The deviation-vector bound makes every other divisor impossible a
    priori; over any practical range the surviving set is {3,5,7,9,15}.
    """
    return tuple(
        d for d in range(3, limit + 1, 2) if d <= 1 + 2 ** (prime_count(d) + 2)
    )


@dataclass(frozen=True)
class Candidate:
    d: int
    zero_slot_open: bool  # whether a class-0 eigenvalue slot is possible (n/d is the smallest prime of n)


@dataclass(frozen=True)
class CandidateDivisors:
    n: int
    applicable: bool
    reason: str | None
    retained: tuple[Candidate, ...]
    dropped: tuple[tuple[int, str], ...]

    @property
    def retained_ds(self) -> tuple[int, ...]:
        return tuple(c.d for c in self.retained)


def candidate_divisors(n: int) -> CandidateDivisors:
    """Divisors 1 < d < n that could separate a unit of order n from g.

    d = 1 is excluded by the choice of g, d = n by augmentation 1.  A
    divisor survives only if d <= 1 + 2^(#primes(d)+2); when no class-0
    eigenvalue slot is possible (n/d is not the smallest prime dividing
    n) the sharper bound 2^(#primes(d)+2) applies.  Dropped divisors
    are eliminated a priori: the deviation vector can never reach d.
    """
    if n % 2 == 0:
        return CandidateDivisors(n, False, "even order", (), ())
    if n < 3:
        return CandidateDivisors(n, False, "trivial order", (), ())
    if is_prime_power(n):
        return CandidateDivisors(n, False, "prime-power order", (), ())
    smallest = prime_divisors(n)[0]
    retained = []
    dropped = []
    for d in divisors(n):
        if d == 1 or d == n:
            continue
        cap = 2 ** (prime_count(d) + 2)
        zero_slot_open = n // d == smallest
        if d > 1 + cap:
            dropped.append((d, f"coefficient bound {1 + cap} < {d}"))
        elif not zero_slot_open and d > cap:
            dropped.append((d, f"coefficient bound {cap} < {d} with no class-0 slot"))
        else:
            retained.append(Candidate(d, zero_slot_open))
    return CandidateDivisors(n, True, None, tuple(retained), tuple(dropped))


# -- eigenvalue patterns -------------------------------------------------


@dataclass(frozen=True)
class EigenPattern:
    """Candidate eigenvalue-exponent classes (v_1, ..., v_d), sorted ascending.

    The deviation formula and all constraints depend on the classes only
    as a multiset, so patterns are canonicalized to non-decreasing order
    and normalized into [0, n/2].
    """

    n: int
    d: int
    classes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(sorted(self.classes)))
        if len(self.classes) != self.d:
            raise ValueError(f"expected {self.d} classes, got {len(self.classes)}")


def satisfies_power_constraints(pattern: EigenPattern) -> bool:
    """Full divisor-family check of the multiset constraints (for cross-tests)."""
    n, d = pattern.n, pattern.d
    for c in divisors(n):
        if c == 1:
            continue
        m = n // c
        want = sorted(class_rep(m, i) for i in range(1, d + 1))
        got = sorted(class_rep(m, v) for v in pattern.classes)
        if want != got:
            return False
    return True


def enumerate_patterns(n: int, d: int) -> Iterator[EigenPattern]:
    """All admissible patterns for the case (n, d), in lexicographic order.

    The constraints for prime divisors c = p (classes modulo n/p, the
    most restrictive moduli) imply those for composite c, so one residue
    counter per prime suffices.  Classes with the same residue class at
    every prime form a cell; the search first distributes the required
    counts over cells by backtracking (pruning on residue-class coverage
    of the remaining cells), then expands each cell count into the
    combinations of its classes.  The stream is sorted and free of
    duplicates up to reordering and sign normalization.
    """
    moduli = [n // p for p in prime_divisors(n)]
    nmod = len(moduli)
    counters: list[dict[int, int]] = []
    for m in moduli:
        want: dict[int, int] = {}
        for i in range(1, d + 1):
            y = class_rep(m, i)
            want[y] = want.get(y, 0) + 1
        counters.append(want)

    cells: dict[tuple[int, ...], list[int]] = {}
    for x in class_reps(n):
        cells.setdefault(tuple(class_rep(m, x) for m in moduli), []).append(x)
    cell_list = sorted(cells)
    # residue classes still reachable from cell i onward, per modulus
    cover_from = []
    tail = [set() for _ in range(nmod)]
    for proj in reversed(cell_list):
        for mi, y in enumerate(proj):
            tail[mi] = tail[mi] | {y}
        cover_from.append([frozenset(s) for s in tail])
    cover_from.reverse()
    cover_from.append([frozenset() for _ in range(nmod)])

    assignments: list[list[tuple[tuple[int, ...], int]]] = []
    picked: list[tuple[tuple[int, ...], int]] = []

    def walk(i: int, remaining: int) -> None:
        if remaining == 0:
            assignments.append(picked.copy())
            return
        if i == len(cell_list):
            return
        cover = cover_from[i]
        for mi, counter in enumerate(counters):
            for y, c in counter.items():
                if c and y not in cover[mi]:
                    return
        proj = cell_list[i]
        high = min(counters[mi].get(y, 0) for mi, y in enumerate(proj))
        later = cover_from[i + 1]
        low = 0
        for mi, y in enumerate(proj):
            need = counters[mi].get(y, 0)
            if need and y not in later[mi]:
                low = max(low, need)
        if low > min(high, remaining):
            return
        for c in range(low, min(high, remaining) + 1):
            if c:
                for mi, y in enumerate(proj):
                    counters[mi][y] -= c
                picked.append((proj, c))
            walk(i + 1, remaining - c)
            if c:
                picked.pop()
                for mi, y in enumerate(proj):
                    counters[mi][y] += c

    walk(0, d)

    from itertools import combinations_with_replacement, product

    patterns: list[tuple[int, ...]] = []
    for assignment in assignments:
        pools = [
            list(combinations_with_replacement(cells[proj], c)) for proj, c in assignment
        ]
        for combo in product(*pools):
            flat: list[int] = []
            for group in combo:
                flat.extend(group)
            patterns.append(tuple(sorted(flat)))
    patterns.sort()
    for classes in patterns:
        yield EigenPattern(n, d, classes)


# -- deviation vectors ---------------------------------------------------


def _contribution_table(n: int) -> tuple[tuple[int, ...], dict[int, tuple[int, ...]]]:
    """Per-class coordinate contributions at every basis index.

    contribution[x][k] is the distinguished-basis coordinate at
    basis[k] of the real trace element of the class x, by the closed
    formula: pair_weight * moebius(near-zero part) * [same class mod
    n/(near-zero part)].
    """
    basis = basis_indices(n)
    table = {}
    for x in class_reps(n):
        g = near_zero_part(n, x)
        mu = moebius(g)
        w = pair_weight(n, x)
        mod = n // g
        table[x] = tuple(w * mu * (1 if same_class(mod, b, x) else 0) for b in basis)
    return basis, table


_CONTRIB_CACHE: dict[int, tuple[tuple[int, ...], dict[int, tuple[int, ...]]]] = {}


def _contributions(n: int):
    cached = _CONTRIB_CACHE.get(n)
    if cached is None:
        cached = _contribution_table(n)
        _CONTRIB_CACHE[n] = cached
    return cached


def _identity_vector(n: int, d: int) -> tuple[int, ...]:
    basis, table = _contributions(n)
    acc = [0] * len(basis)
    for i in range(1, d + 1):
        for k, v in enumerate(table[class_rep(n, i)]):
            acc[k] += v
    return tuple(acc)


def deviation_vector(pattern: EigenPattern) -> tuple[int, ...]:
    """Coordinatewise difference between the pattern's and g's character data.

    Entry k is the distinguished-basis coordinate at basis index k of
    (character value at the candidate) - (character value at g), by the closed
    coefficient formula.
    """
    n, d = pattern.n, pattern.d
    basis, table = _contributions(n)
    acc = [0] * len(basis)
    for x in pattern.classes:
        for k, v in enumerate(table[x]):
            acc[k] += v
    ident = _identity_vector(n, d)
    return tuple(a - b for a, b in zip(acc, ident))


def deviation(pattern: EigenPattern, b: int) -> int:
    """Deviation coordinate at one basis index b."""
    basis, _ = _contributions(pattern.n)
    try:
        k = basis.index(b)
    except ValueError:
        raise ValueError(f"{b} is not a basis index for n={pattern.n}") from None
    return deviation_vector(pattern)[k]


@dataclass(frozen=True)
class BoundCheck:
    max_abs_deviation: int
    bound: int


def pattern_bound(pattern: EigenPattern) -> int:
    """Applicable a-priori bound on |deviation|: 2^(P+2), plus 1 with a class-0 slot."""
    cap = 2 ** (prime_count(pattern.d) + 2)
    return cap + 1 if 0 in pattern.classes else cap


def bound_check(pattern: EigenPattern) -> BoundCheck:
    dev = deviation_vector(pattern)
    out = BoundCheck(max(abs(v) for v in dev), pattern_bound(pattern))
    if out.max_abs_deviation > out.bound:
        raise InvariantViolationError(
            f"deviation {out.max_abs_deviation} exceeds bound {out.bound} on {pattern}"
        )
    return out


def weight_consistent(pattern: EigenPattern) -> bool:
    """Redundant cross-check of the class-0 slot rule.

    At most one entry may be the zero class, and only when n/d is the
    smallest prime dividing n; the enumeration constraints already
    imply this.
    """
    zeros = sum(1 for x in pattern.classes if x == 0)
    if zeros == 0:
        return True
    if zeros > 1:
        return False
    return pattern.n // pattern.d == prime_divisors(pattern.n)[0]


# -- case analysis -------------------------------------------------------


@dataclass(frozen=True)
class NearMiss:
    """A pattern that reaches the required deviation size but fails divisibility."""

    pattern: tuple[int, ...]
    max_abs_deviation: int
    basis_index: int
    deviation: int


@dataclass(frozen=True)
class CaseCertificate:
    n: int
    d: int
    zero_slot_open: bool
    verdict: str  # "eliminated" | "survivors_found"
    tuples_examined: int
    pruning_stats: Mapping[str, int]
    survivors: tuple[tuple[int, ...], ...]
    near_misses: tuple[NearMiss, ...]
    basis: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "zero_slot_open": self.zero_slot_open,
            "verdict": self.verdict,
            "tuples_examined": self.tuples_examined,
            "pruning_stats": dict(self.pruning_stats),
            "basis_indices": list(self.basis),
            "near_miss_witnesses": [
                {
                    "pattern": list(nm.pattern),
                    "max_abs_deviation": nm.max_abs_deviation,
                    "basis_index": nm.basis_index,
                    "deviation": nm.deviation,
                    "violated": "divisibility",
                }
                for nm in self.near_misses
            ],
            "survivors": [list(s) for s in self.survivors],
        }


def _classify_chunk(args) -> list[tuple]:
    """Worker body: classify a chunk of patterns; pure and order-preserving."""
    chunk, table, ident, d, cap = args
    out = []
    for classes in chunk:
        acc = list(ident)
        for x in classes:
            row = table[x]
            for k in range(len(acc)):
                acc[k] = acc[k] + row[k]
        max_abs = max(abs(v) for v in acc) if acc else 0
        bound = cap + 1 if 0 in classes else cap
        if max_abs > bound:
            out.append(("bound_violation", classes, max_abs, bound))
            continue
        if not any(acc):
            out.append(("zero", classes, max_abs, None))
        elif all(v % d == 0 for v in acc):
            out.append(("survivor", classes, max_abs, None))
        else:
            witness = next((k, v) for k, v in enumerate(acc) if v % d)
            out.append(("divisibility", classes, max_abs, witness))
    return out


def check_case(n: int, d: int, workers: int = 1) -> CaseCertificate:
    """Examine every admissible pattern for (n, d) and certify the outcome.

    A pattern survives iff its deviation vector is nonzero and divisible
    by d at every basis index; "eliminated" means no pattern survives.
    The certificate is deterministic and identical for any worker count.
    """
    cands = candidate_divisors(n)
    if not cands.applicable:
        raise CaseInapplicableError(f"order {n} not applicable: {cands.reason}")
    by_d = {c.d: c for c in cands.retained}
    if d not in by_d:
        dropped = dict(cands.dropped)
        if d in dropped:
            raise CaseInapplicableError(f"divisor {d} of {n} excluded a priori: {dropped[d]}")
        raise CaseInapplicableError(f"{d} is not a candidate divisor of {n}")

    basis, table = _contributions(n)
    ident = _identity_vector(n, d)
    neg_ident = tuple(-v for v in ident)
    cap = 2 ** (prime_count(d) + 2)
    patterns = [p.classes for p in enumerate_patterns(n, d)]

    stats = {
        "weight_filter_failures": 0,
        "deviation_zero": 0,
        "divisibility_failures": 0,
        "near_misses": 0,
        "survivors": 0,
    }
    survivors: list[tuple[int, ...]] = []
    near: list[NearMiss] = []

    if workers > 1 and patterns:
        size = -(-len(patterns) // workers)
        chunks = [patterns[i : i + size] for i in range(0, len(patterns), size)]
        payload = [(chunk, table, neg_ident, d, cap) for chunk in chunks]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [row for rows in pool.map(_classify_chunk, payload) for row in rows]
    else:
        results = _classify_chunk((patterns, table, neg_ident, d, cap))

    smallest = prime_divisors(n)[0]
    for kind, classes, max_abs, extra in results:
        zeros = sum(1 for x in classes if x == 0)
        if zeros > 1 or (zeros == 1 and n // d != smallest):
            stats["weight_filter_failures"] += 1
        if kind == "bound_violation":
            raise InvariantViolationError(
                f"deviation {max_abs} exceeds bound {extra} on pattern {classes} at (n={n}, d={d})"
            )
        if kind == "zero":
            stats["deviation_zero"] += 1
        elif kind == "survivor":
            stats["survivors"] += 1
            survivors.append(classes)
        else:
            stats["divisibility_failures"] += 1
            if max_abs >= d:
                stats["near_misses"] += 1
                k, v = extra
                near.append(NearMiss(classes, max_abs, basis[k], v))
    if stats["weight_filter_failures"]:
        raise InvariantViolationError(
            f"enumeration emitted a pattern violating the class-0 slot rule at (n={n}, d={d})"
        )

    verdict = "eliminated" if not survivors else "survivors_found"
    return CaseCertificate(
        n=n,
        d=d,
        zero_slot_open=by_d[d].zero_slot_open,
        verdict=verdict,
        tuples_examined=len(patterns),
        pruning_stats=stats,
        survivors=tuple(survivors),
        near_misses=tuple(near),
        basis=basis,
    )


def explore_augmentations(n: int, m_max: int = 3, bound: int = 1) -> list[AugVector]:
    """Exploratory search over small augmentation vectors for units of order n.

    Enumerates every vector with entries in [-bound, bound] over the
    nonzero classes (class 0 fixed at 0, total 1) and keeps those whose
    eigenvalue multiplicities, computed under the power hypothesis
    u^c ~ g^c, are nonnegative integers symmetric under l -> -l for all
    character indices m <= m_max.  Exploratory only: the filter is a
    relaxation, so the returned list over-approximates actual units.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd order >= 3, got {n}")
    if m_max < 1 or bound < 1:
        raise ValueError("need m_max >= 1 and bound >= 1")
    reps = class_reps(n)[1:]
    powers = induction_powers(n)

    # Multiplicities are linear in the augmentations with the power terms
    # fixed, so precompute one trace per (m, class, l) plus the constant.
    per_class = {}
    for m in range(1, m_max + 1):
        for x in reps + (0,):
            cv = character_value(n, m, x)
            per_class[(m, x)] = tuple(
                rational_trace(cv * CycInt.root(n, -l)) for l in range(n)
            )
    const = {}
    for m in range(1, m_max + 1):
        acc = [0] * n
        for c in divisors(n):
            if c == 1:
                continue
            k = n // c
            pe = powers[c]
            value = CycInt.zero(k)
            for y, v in pe.eps.items():
                if v:
                    value = value + v * character_value(k, m, y)
            for l in range(n):
                acc[l] += rational_trace(value * CycInt.root(k, -l))
        const[m] = tuple(acc)

    found = []
    span = range(-bound, bound + 1)

    def walk(idx: int, total: int, values: list[int]):
        if idx == len(reps):
            if total != 1:
                return
            for m in range(1, m_max + 1):
                mults = []
                row = const[m]
                for l in range(n):
                    t = row[l]
                    for x, v in zip(reps, values):
                        if v:
                            t += v * per_class[(m, x)][l]
                    if t % n or t < 0:
                        return
                    mults.append(t // n)
                for l in range(1, n):
                    if mults[l] != mults[-l % n]:
                        return
            found.append(AugVector(n, dict(zip(reps, values))))
            return
        remaining = len(reps) - idx
        for v in span:
            t = total + v
            if t - bound * (remaining - 1) <= 1 <= t + bound * (remaining - 1):
                values.append(v)
                walk(idx + 1, t, values)
                values.pop()

    walk(0, 0, [])
    return found


# -- order-level verdicts -------------------------------------------------


@dataclass(frozen=True)
class OrderVerdict:
    n: int
    q: int | None
    conclusion: str  # "verified" | "inconclusive"
    cases: tuple[CaseCertificate, ...]
    dropped_divisors: tuple[tuple[int, str], ...]
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "conclusion": self.conclusion,
            "notes": list(self.notes),
            "dropped_divisors": [{"d": d, "reason": r} for d, r in self.dropped_divisors],
            "cases": [c.to_json_dict() for c in self.cases],
        }


def verify_order(n: int, q: int | None = None, workers: int = 1) -> OrderVerdict:
    """Decide rational conjugacy for all normalized units of order n.

    For composite odd n every candidate divisor is examined with
    check_case; "verified" means each one was eliminated, which forces
    the full trace identity of a group generator and hence rational
    conjugacy.  Prime-power orders (and orders that are not element
    orders of the given group) are verified by prior results taken as
    given and carry an explanatory note instead of case certificates.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"order must be odd and positive, got {n}")
    notes: list[str] = []
    if q is not None:
        profile = group_profile(q)
        if gcd(n, 2 * q) != 1:
            raise ValueError(f"order {n} is not coprime to 2q = {2*q}")
        if n > 1 and n not in profile.element_orders:
            notes.append(
                f"PSL(2,{q}) has no elements of order {n}; no normalized torsion "
                "units of that order exist, so there is nothing to check"
            )
            return OrderVerdict(n, q, "verified", (), (), tuple(notes))
    if n == 1:
        notes.append("order 1: only the identity, trivially conjugate")
        return OrderVerdict(n, q, "verified", (), (), tuple(notes))
    if is_prime_power(n):
        notes.append(
            "prime-power order: rational conjugacy holds by established results taken as given"
        )
        return OrderVerdict(n, q, "verified", (), (), tuple(notes))

    cands = candidate_divisors(n)
    cases = tuple(check_case(n, c.d, workers=workers) for c in cands.retained)
    verified = all(c.verdict == "eliminated" for c in cases)
    if verified:
        notes.append(
            "every candidate divisor eliminated: the unit's trace values coincide "
            "with a group generator's at all indices, which forces the augmentation "
            "pattern of the generator and hence rational conjugacy"
        )
    else:
        notes.append("survivors found; no conclusion (the search over-approximates)")
    return OrderVerdict(
        n,
        q,
        "verified" if verified else "inconclusive",
        cases,
        cands.dropped,
        tuple(notes),
    )


__all__ = [
    "AugVector",
    "BoundCheck",
    "Candidate",
    "CandidateDivisors",
    "CaseCertificate",
    "CaseInapplicableError",
    "EigenPattern",
    "InvariantViolationError",
    "NearMiss",
    "OrderVerdict",
    "augmentations_from_traces",
    "bound_check",
    "bound_filtered_divisors",
    "candidate_divisors",
    "check_case",
    "classwise_powers",
    "deviation",
    "deviation_vector",
    "eigenvalue_multiplicity",
    "enumerate_patterns",
    "explore_augmentations",
    "induction_powers",
    "pattern_bound",
    "satisfies_power_constraints",
    "unit_trace",
    "verify_order",
    "weight_consistent",
]

"""Exact verification of finite identities over parameter grids.

Each catalogue entry owns a default grid, a case generator and a checker
returning ``(ok, lhs, rhs)``.  Grids are overridden with strings such as
``"N<=15,r<=2,a<=3"``, ``"k>=2"`` or ``"x=1/2|3"``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Callable, Iterable

import mpmath as mp

from .closed_forms import (binom_zeta_shift_sum, binom_zeta_shift_sum_direct, dual_word,
                           E_N, stirling_series_pieces)
from .exact import (QuadExt, TPoly, alt_binom_star, binomial, complete_bell, factorial,
                    format_rat, harmonic, harmonic_vector, hessenberg_det, interp_trunc,
                    macdonald_P, macdonald_Q, parse_rat, partitions_multiplicities,
                    stirling_first, zeta_superdiag, zeta_star_superdiag, zt_trunc,
                    zt_trunc_oracle, zts_trunc)
from .index_algebra import (EMPTY, IndexWord, make_index, plain_from_star, repeat_ones,
                            star_expansion, stuffle, words_up_to_weight)

GUARD_CASES = 50_000


class GridError(ValueError):
    pass


class UnknownIdentity(KeyError):
    pass


@dataclass
class VerificationReport:
    identity_id: str
    grid_description: str
    cases_total: int
    cases_failed: int
    first_failure: dict | None = None
    elapsed: float = 0.0  # seconds

    @property
    def ok(self) -> bool:
        return self.cases_failed == 0

    def to_json(self) -> dict:
        out = {"identity": self.identity_id, "grid": self.grid_description,
               "cases_total": self.cases_total, "cases_failed": self.cases_failed}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        out["elapsed_ms"] = round(self.elapsed * 1000)
        return out


def _show(v) -> str:
    if isinstance(v, Fraction):
        return format_rat(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


@dataclass
class Identity:
    id: str
    description: str
    axes: dict[str, list]
    check: Callable[[dict], tuple]
    expand: Callable[[dict], Iterable[dict]] | None = None
    constraint: Callable[[dict], bool] | None = None
    aliases: dict[str, tuple] = field(default_factory=dict)

    def default_grid(self) -> str:
        return describe_axes(self.axes)


def describe_axes(axes: dict[str, list]) -> str:
    parts = []
    for key, vals in axes.items():
        ints = all(isinstance(v, int) for v in vals)
        if ints and len(vals) > 2 and vals == list(range(vals[0], vals[-1] + 1)):
            parts.append(f"{key}={vals[0]}..{vals[-1]}")
        else:
            parts.append(f"{key}=" + "|".join(_show(Fraction(v)) for v in vals))
    return ",".join(parts)


def _num(text: str):
    q = parse_rat(text)
    return int(q) if q.denominator == 1 else q


def apply_grid(ident: Identity, grid: str | None) -> dict[str, list]:
    """Axes of ``ident`` after applying the override string ``grid``."""
    axes = {k: list(v) for k, v in ident.axes.items()}
    if not grid:
        return axes
    for clause in grid.split(","):
        clause = clause.strip()
        if not clause:
            continue
        for op in ("<=", ">=", "="):
            if op in clause:
                key, val = (s.strip() for s in clause.split(op, 1))
                break
        else:
            raise GridError(f"malformed grid clause {clause!r}")
        targets = ident.aliases.get(key, (key,))
        for t in targets:
            if t not in axes:
                raise GridError(f"unknown grid key {key!r} for {ident.id}")
            cur = axes[t]
            try:
                if op == "=":
                    axes[t] = [_num(v) for v in val.split("|")]
                    continue
                bound = _num(val)
            except (ValueError, ZeroDivisionError):
                raise GridError(f"bad value in grid clause {clause!r}") from None
            if all(isinstance(v, int) for v in cur) and isinstance(bound, int):
                lo, hi = min(cur), max(cur)
                axes[t] = list(range(lo, bound + 1)) if op == "<=" else list(range(bound, hi + 1))
            else:
                axes[t] = [v for v in cur if (v <= bound if op == "<=" else v >= bound)]
    return axes


def iter_cases(ident: Identity, axes: dict[str, list]) -> list[dict]:
    keys = list(axes)
    raw = 1
    for k in keys:
        raw *= max(len(axes[k]), 1)
    if raw > GUARD_CASES:
        raise GridError(f"grid for {ident.id} has {raw} points, limit {GUARD_CASES}")
    cases = []
    for vals in product(*(axes[k] for k in keys)):
        params = dict(zip(keys, vals))
        if ident.constraint and not ident.constraint(params):
            continue
        cases.extend(ident.expand(params) if ident.expand else [params])
        if len(cases) > GUARD_CASES:
            raise GridError(f"grid for {ident.id} expands beyond {GUARD_CASES} cases")
    return cases


def verify(identity_id: str, grid: str | None = None) -> VerificationReport:
    if identity_id not in CATALOGUE:
        raise UnknownIdentity(identity_id)
    ident = CATALOGUE[identity_id]
    axes = apply_grid(ident, grid)
    start = time.perf_counter()
    cases = iter_cases(ident, axes)
    failed = 0
    first = None
    for case in cases:
        ok, lhs, rhs = ident.check(case)
        if not ok:
            failed += 1
            if first is None:
                first = {"params": {k: _show(v) for k, v in case.items()},
                         "lhs": _show(lhs), "rhs": _show(rhs)}
    return VerificationReport(identity_id, describe_axes(axes), len(cases), failed, first,
                              time.perf_counter() - start)


def verify_all(grid_overrides: dict[str, str] | None = None) -> list[VerificationReport]:
    grid_overrides = grid_overrides or {}
    return [verify(i, grid_overrides.get(i)) for i in CATALOGUE]


# --------------------------------------------------------------------------
# helpers shared by the checkers

def _words_of_weight(w: int) -> list[IndexWord]:
    return [x for x in words_up_to_weight(w) if x.weight == w]


def _by_weight(key: str):
    def expand(params):
        for w in _words_of_weight(params[key]):
            yield {**params, "word": w}
    return expand


def _star_terms(w: IndexWord):
    return [(1, EMPTY)] if w.depth == 0 else list(star_expansion(w))


def _H(n: int, k: int) -> list[Fraction]:
    return harmonic_vector(n, k)


def _eq(lhs, rhs):
    return lhs == rhs, lhs, rhs


def _all_eq(pairs):
    """All (label, lhs, rhs) equal; report the first mismatch."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return False, f"{label}: {_show(lhs)}", _show(rhs)
    return True, None, None


# --------------------------------------------------------------------------
# checkers

def _thm1_summand(c):
    n, l = c["n"], c["l"]
    H = _H(n - 1, max(l, 1))
    return _all_eq([("star", zts_trunc(n - 1, repeat_ones(l)), macdonald_Q(l, H)),
                    ("plain", zt_trunc(n - 1, repeat_ones(l)), macdonald_P(l, H))])


def _literal_stirling_partial(N, l2, r1, r2) -> Fraction:
    # zeta_{n-1}({1}_l2) = [n, l2+1] / (n-1)!, independent of the DP used by the closed form
    return sum((Fraction(stirling_first(n, l2 + 1), factorial(n - 1))
                / (binomial(n + r1, r1) * Fraction(n) ** r2) for n in range(1, N + 1)), Fraction(0))


def _thm2_trunc(c):
    N, l2, r1, r2 = c["N"], c["l2"], c["r1"], c["r2"]
    lhs = _literal_stirling_partial(N, l2, r1, r2)
    return _eq(lhs, sum(stirling_series_pieces(N, l2, r1, r2), Fraction(0)))


def _gen_binom(x, m) -> Fraction:
    out = Fraction(1)
    for j in range(1, m + 1):
        out *= (x + j) / Fraction(j)
    return out


def _lem7(c):
    x, m = Fraction(c["x"]), c["m"]
    lhs = 1 / (x * _gen_binom(x, m))
    rhs = sum((binomial(m, k) * Fraction((-1) ** k) / (x + k) for k in range(m + 1)), Fraction(0))
    return _eq(lhs, rhs)


def _lem8(c):
    n, k, l = c["n"], c["k"], c["l"]
    lhs = sum((binomial(n, j) * Fraction((-1) ** (j - 1), j**k) * zts_trunc(j, repeat_ones(l))
               for j in range(1, n + 1)), Fraction(0))
    rhs = zts_trunc(n, repeat_ones(k - 1) + (l + 1,)) if k >= 1 else Fraction(1, n**l)
    return _eq(lhs, rhs)


_SEQUENCES = {
    0: lambda j: Fraction(1),
    1: lambda j: Fraction(j),
    2: lambda j: harmonic(j, 2),
    3: lambda j: zts_trunc(j, make_index((1, 2))),
}


def _nested_sum(c):
    n, k, seq = c["n"], c["k"], _SEQUENCES[c["seq"]]
    a = [None] + [seq(j) for j in range(1, n + 1)]
    lhs = sum((binomial(n, j) * Fraction((-1) ** (j - 1), j**k) * a[j] for j in range(1, n + 1)),
              Fraction(0))
    g = [Fraction(0)] + [sum((binomial(i, j) * (-1) ** (j - 1) * a[j] for j in range(1, i + 1)),
                             Fraction(0)) for i in range(1, n + 1)]
    for _ in range(k):
        acc, nxt = Fraction(0), [Fraction(0)]
        for i in range(1, n + 1):
            acc += g[i] / i
            nxt.append(acc)
        g = nxt
    return _eq(lhs, g[n])


def _duality_case(c):
    N, r = c["N"], c["r"]
    pairs = [(c["a1"], c["b1"]), (c["a2"], c["b2"])][:r]
    word: list[int] = []
    dual: list[int] = []
    for i, (a, b) in enumerate(pairs):
        word += [a if i == 0 else a + 1] + [1] * (b - 1)
        dual += [1] * (a - 1) + [b + 1 if i < r - 1 else b]
    w, d = make_index(word), make_index(dual)
    if dual_word(w) != d:
        return False, f"dual_word({w}) = {dual_word(w)}", str(d)
    return _eq(alt_binom_star(N, w), zts_trunc(N, d))


def _conv_star(c):
    N, w = c["N"], c["word"]
    return _eq(zts_trunc(N, w), sum((k * zt_trunc(N, x) for k, x in star_expansion(w)), Fraction(0)))


def _conv_plain(c):
    N, w = c["N"], c["word"]
    return _eq(zt_trunc(N, w), sum((k * zts_trunc(N, x) for k, x in plain_from_star(w)), Fraction(0)))


def _stuffle_expand(params):
    for a in _words_of_weight(params["wa"]):
        for b in _words_of_weight(params["wb"]):
            yield {**params, "a": a, "b": b}


def _stuffle_case(c):
    N, a, b = c["N"], c["a"], c["b"]
    return _eq(zt_trunc(N, a) * zt_trunc(N, b),
               sum((zt_trunc(N, x) for x in stuffle(a, b)), Fraction(0)))


def _combination(c):
    n, l1, l2 = c["n"], c["l1"], c["l2"]
    lhs = zts_trunc(n - 1, repeat_ones(l1)) * zt_trunc(n - 1, repeat_ones(l2))
    rhs = Fraction(0)
    for k, cw in _star_terms(repeat_ones(l1)):
        for a in stuffle(repeat_ones(l2), cw):
            rhs += k * zt_trunc(n - 1, a)
    return _eq(lhs, rhs)


def _interp_examples(c):
    n, k = c["n"], c["k"]
    H = _H(n, max(k, 4))
    t = TPoly.t()
    P = interp_trunc(n, k)
    checks = []
    if k == 1:
        checks.append(("k=1", P, TPoly((H[0],))))
    elif k == 2:
        checks.append(("k=2", P, (H[0] ** 2 + (2 * t - 1) * H[1]) * Fraction(1, 2)))
        # determinant with superdiagonal 1 - 2t: H^2 - (1 - 2t) H^(2)
        checks.append(("k=2 det", P * 2, H[0] ** 2 - (1 - 2 * t) * H[1]))
    elif k == 3:
        closed = (H[0] ** 3 + (6 * t - 3) * H[0] * H[1] + (6 * t * t - 6 * t + 2) * H[2]) * Fraction(1, 6)
        checks.append(("k=3", P, closed))
        # the 3x3 determinant depends only on s = c1 + c2 and p = c1 c2
        s, p = -(6 * t - 3), 6 * t * t - 6 * t + 2
        checks.append(("k=3 det", P * 6, H[0] ** 3 - s * H[0] * H[1] + p * H[2]))
        for tv in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2)):
            d = 12 * tv * tv - 12 * tv + 1
            mid = -(6 * tv - 3) / 2
            sup = [QuadExt(mid, Fraction(1, 2), d), QuadExt(mid, Fraction(-1, 2), d)]
            checks.append((f"k=3 radical det t={tv}", hessenberg_det(3, H, sup) / 6, QuadExt(P(tv))))
    half = Fraction(1, 2)
    witnesses = {1: [], 2: [0], 3: [QuadExt(0, half, -2), QuadExt(0, -half, -2)],
                 4: [0, QuadExt(0, 1, -2), QuadExt(0, -1, -2)]}
    if k in witnesses:
        checks.append((f"t=1/2 det k={k}", hessenberg_det(k, H, witnesses[k]) / factorial(k),
                       QuadExt(P(half))))
    return _all_eq(checks)


def hoffman_ihara_partition(n: int, k: int) -> Fraction:
    H = _H(n, k)
    total = Fraction(0)
    for mult in partitions_multiplicities(k, parts=range(1, k + 1, 2)):
        term = Fraction(1, 2**k)
        for j, m in mult.items():
            term *= Fraction(2**m, factorial(m)) * (H[j - 1] / j) ** m
        total += term
    return total


def hoffman_ihara_bell(n: int, k: int) -> Fraction:
    H = _H(n, k)
    x = [2 * factorial(j - 1) * H[j - 1] if j % 2 else 0 for j in range(1, k + 1)]
    return complete_bell(k, x) / (2**k * factorial(k))


def _hoffman_ihara(c):
    n, k = c["n"], c["k"]
    target = interp_trunc(n, k)(Fraction(1, 2))
    return _all_eq([("partition", hoffman_ihara_partition(n, k), target),
                    ("bell", hoffman_ihara_bell(n, k), target)])


EN_LADDER = (10, 20, 40, 80, 160)


def en_decay_profile(r1: int, r2: int, l2: int) -> list:
    mp.mp.dps = 30
    out = []
    for N in EN_LADDER:
        e = E_N(N, r1, r2, l2)
        out.append(abs(mp.mpf(e.numerator) / e.denominator) * N / mp.log(N) ** max(l2, 1))
    return out


def _en_decay(c):
    prof = en_decay_profile(c["r1"], c["r2"], c["l2"])
    bound = 10 * prof[0]
    worst = max(prof)
    return worst <= bound, mp.nstr(worst, 6), f"<= {mp.nstr(bound, 6)}"


def _lem2(c):
    n, k = c["n"], c["k"]
    H = _H(n, k)
    v = zt_trunc(n, repeat_ones(k))
    bell = Fraction((-1) ** k, factorial(k)) * complete_bell(
        k, [-factorial(j - 1) * H[j - 1] for j in range(1, k + 1)])
    det = hessenberg_det(k, H, zeta_superdiag(k)).to_rational() / factorial(k)
    return _all_eq([("stirling", Fraction(stirling_first(n + 1, k + 1), factorial(n)), v),
                    ("bell", bell, v), ("P_k", macdonald_P(k, H), v), ("det", det, v)])


def _lem3(c):
    n, k = c["n"], c["k"]
    H = _H(n, k)
    v = zts_trunc(n, repeat_ones(k))
    binom_form = sum((binomial(n, j) * Fraction((-1) ** (j - 1), j**k) for j in range(1, n + 1)),
                     Fraction(0))
    bell = complete_bell(k, [factorial(j - 1) * H[j - 1] for j in range(1, k + 1)]) / factorial(k)
    det = hessenberg_det(k, H, zeta_star_superdiag(k)).to_rational() / factorial(k)
    return _all_eq([("binomial", binom_form, v), ("bell", bell, v),
                    ("Q_k", macdonald_Q(k, H), v), ("det", det, v)])


def _lem3_recurrence(c):
    n, k = c["n"], c["k"]
    return _eq(zts_trunc(n, repeat_ones(k)),
               zts_trunc(n - 1, repeat_ones(k)) + zts_trunc(n, repeat_ones(k - 1)) / n)


def _binomial_inversion(c):
    n, l = c["n"], c["l"]
    # a_j = 1/j^l and b_j = -zeta*_j({1}_l) form an inverse pair
    a = lambda j: Fraction(1, j**l)
    b = lambda j: -zts_trunc(j, repeat_ones(l))
    lhs_a = sum((binomial(n, j) * (-1) ** j * b(j) for j in range(1, n + 1)), Fraction(0))
    lhs_b = sum((binomial(n, j) * (-1) ** j * a(j) for j in range(1, n + 1)), Fraction(0))
    return _all_eq([("a from b", lhs_a, a(n)), ("b from a", lhs_b, b(n))])


def _genfun(c):
    n = c["n"]
    coeffs = [Fraction(1)]
    for j in range(1, n + 1):
        nxt = coeffs + [Fraction(0)]
        for i in range(1, len(nxt)):
            nxt[i] += coeffs[i - 1] / j
        coeffs = nxt
    return _eq(coeffs, [zt_trunc(n, repeat_ones(k)) for k in range(n + 1)])


def _oracle(c):
    N, w = c["N"], c["word"]
    return _all_eq([("plain", zt_trunc(N, w), zt_trunc_oracle(N, w)),
                    ("star", zts_trunc(N, w), zt_trunc_oracle(N, w, star=True))])


def _residual_binomial(c):
    N, cc, w = c["N"], c["c"], c["word"]
    return _eq(binom_zeta_shift_sum(N, cc, w), binom_zeta_shift_sum_direct(N, cc, w))


def _residual_expand(params):
    for w in [EMPTY] + _words_of_weight(params["weight"]) if params["weight"] else [EMPTY]:
        yield {**params, "word": w}


def _r(a, b):
    return list(range(a, b + 1))


CATALOGUE: dict[str, Identity] = {}


def _add(ident: Identity):
    CATALOGUE[ident.id] = ident


_add(Identity("thm1-summand", "summands of S: zeta*_{n-1}({1}_l) = Q_l(H) and zeta_{n-1}({1}_l) = P_l(H)",
              {"n": _r(1, 20), "l": _r(0, 5)}, _thm1_summand))
_add(Identity("thm2-trunc", "truncated Stirling series: literal partial sum = m-sum + K + E_N",
              {"N": _r(1, 25), "r1": _r(1, 4), "r2": _r(1, 4), "l2": _r(0, 3)}, _thm2_trunc,
              constraint=lambda p: p["N"] >= p["l2"]))
_add(Identity("lem7-findiff", "finite differences: 1/(x binom(x+m,m)) = sum_k binom(m,k)(-1)^k/(x+k)",
              {"m": _r(0, 6), "x": [Fraction(1, 2), 1, 3, Fraction(7, 3)]}, _lem7))
_add(Identity("lem8-nested", "alternating binomial sums of zeta*_j({1}_l)/j^k are nested star values",
              {"n": _r(1, 20), "k": _r(0, 4), "l": _r(0, 4)}, _lem8))
_add(Identity("eq-nestedsum", "binomial sums with 1/j^k rewritten as k-fold iterated harmonic sums",
              {"n": _r(1, 15), "k": _r(0, 4), "seq": _r(0, 3)}, _nested_sum))
_add(Identity("lem10-duality", "duality: A*_N of (a1,{1}_{b1-1},a2+1,...) is a single truncated star value",
              {"N": _r(1, 15), "r": [1, 2], "a1": _r(1, 3), "b1": _r(1, 3), "a2": _r(1, 3),
               "b2": _r(1, 3)}, _duality_case,
              constraint=lambda p: p["r"] == 2 or (p["a2"] == 1 and p["b2"] == 1),
              aliases={"a": ("a1", "a2"), "b": ("b1", "b2")}))
_add(Identity("conv-star", "zeta*_N(w) = sum over contractions of zeta_N",
              {"N": _r(1, 12), "weight": _r(1, 5)}, _conv_star, expand=_by_weight("weight")))
_add(Identity("conv-plain", "zeta_N(w) = signed sum over contractions of zeta*_N",
              {"N": _r(1, 12), "weight": _r(1, 5)}, _conv_plain, expand=_by_weight("weight")))
_add(Identity("stuffle", "zeta_N(a) zeta_N(b) = sum over the quasi-shuffle of a and b",
              {"N": _r(1, 12), "wa": _r(1, 4), "wb": _r(1, 4)}, _stuffle_case, expand=_stuffle_expand))
_add(Identity("combination", "zeta*_{n-1}({1}_l1) zeta_{n-1}({1}_l2) via star expansion and stuffle",
              {"n": _r(1, 12), "l1": _r(0, 4), "l2": _r(0, 4)}, _combination))
_add(Identity("interp-examples", "interpolated values for k <= 3 as polynomials in t, t=1/2 determinants k <= 4",
              {"n": _r(1, 15), "k": _r(1, 4)}, _interp_examples))
_add(Identity("hoffman-ihara-half", "zeta^(1/2)_n({1}_k) from odd-part partitions and from Bell polynomials",
              {"n": _r(1, 12), "k": _r(1, 6)}, _hoffman_ihara))
_add(Identity("en-decay", "|E_N| N / ln^max(l2,1) N stays below 10x its N=10 value on N=10..160",
              {"r1": _r(1, 3), "r2": _r(1, 3), "l2": _r(0, 2)}, _en_decay))
_add(Identity("lem2-representations", "zeta_n({1}_k): Stirling, Bell, P_k and determinant forms",
              {"n": _r(1, 20), "k": _r(1, 6)}, _lem2))
_add(Identity("lem3-representations", "zeta*_n({1}_k): binomial, Bell, Q_k and determinant forms",
              {"n": _r(1, 20), "k": _r(1, 6)}, _lem3))
_add(Identity("lem3-recurrence", "zeta*_n({1}_k) = zeta*_{n-1}({1}_k) + zeta*_n({1}_{k-1})/n",
              {"n": _r(1, 20), "k": _r(1, 6)}, _lem3_recurrence))
_add(Identity("binomial-inversion", "inverse pair 1/n^l and -zeta*_n({1}_l) under binomial inversion",
              {"n": _r(1, 15), "l": _r(0, 4)}, _binomial_inversion))
_add(Identity("genfun-product", "sum_k zeta_n({1}_k) q^k = prod_j (1 + q/j)",
              {"n": _r(0, 12)}, _genfun))
_add(Identity("oracle-equivalence", "dynamic-programming values agree with brute-force enumeration",
              {"N": _r(0, 12), "weight": _r(1, 5)}, _oracle, expand=_by_weight("weight")))
_add(Identity("residual-binomial", "sum_k binom(N,k)(-1)^(k+1) k^-c zeta_{k-1}(u) through duality",
              {"N": _r(1, 10), "c": _r(0, 3), "weight": _r(0, 3)}, _residual_binomial,
              expand=_residual_expand))


# --------------------------------------------------------------------------
# determinant solvability for interpolated values

@dataclass
class Solvability:
    t: Fraction
    solvable: bool
    witness: tuple | None
    residual: Fraction | None  # necessary condition value, None at t = 1/2

    @property
    def run_products(self):
        if self.witness is None:
            return None
        c1, c2, c3 = self.witness
        return (c1 * c2, c2 * c3, c1 * c3, c1 * c2 * c3)


def k4_equations(t) -> dict[str, Fraction]:
    """Right-hand sides 24 * coefficient of zeta^t_n({1}_4) in H^2H2, H H3, H2^2, H4.

    The determinant produces -(c1+c2+c3), c1c2+c2c3, c1c3, -c1c2c3 there.
    """
    t = Fraction(t)
    q = 2 * t * t - 2 * t + 1
    return {"H^2H2": 6 * (2 * t - 1), "HH3": 8 * (3 * t * t - 3 * t + 1),
            "H2^2": 3 * (2 * t - 1) ** 2, "H4": 6 * (2 * t - 1) * q}


def k4_residual(t) -> Fraction:
    t = Fraction(t)
    q = 2 * t * t - 2 * t + 1
    return 4 - 4 * q * q / (2 * t - 1) ** 2


def _half_sqrt(q: Fraction) -> QuadExt:
    """sqrt(q)/2, rational when q is a rational square."""
    if q >= 0:
        a, b = isqrt(q.numerator), isqrt(q.denominator)
        if a * a == q.numerator and b * b == q.denominator:
            return QuadExt(Fraction(a, 2 * b))
    return QuadExt(0, Fraction(1, 2), q)


def interp_det_solvable_k4(t) -> Solvability:
    """Decide whether a superdiagonal (c1, c2, c3) reproduces zeta^t_n({1}_4).

    Away from t = 1/2 the last two equations fix c2, and the remaining
    ones are consistent iff the residual vanishes.
    """
    t = Fraction(t)
    eq = k4_equations(t)
    if t == Fraction(1, 2):
        return Solvability(t, True, (QuadExt(0), QuadExt(0, 1, -2), QuadExt(0, -1, -2)), None)
    c2 = -eq["H4"] / eq["H2^2"]
    res = k4_residual(t)
    if res != 0:
        return Solvability(t, False, None, res)
    s = -eq["H^2H2"] - c2  # c1 + c3
    p = eq["H2^2"]          # c1 c3
    disc = s * s - 4 * p
    root = _half_sqrt(disc)
    c1 = QuadExt(s / 2) + root
    c3 = QuadExt(s / 2) - root
    return Solvability(t, True, (c1, QuadExt(c2), c3), Fraction(0))


@dataclass
class Branch:
    assumption: str
    derivation: list[str]
    lhs: Fraction
    rhs: Fraction

    @property
    def contradictory(self) -> bool:
        return self.lhs != self.rhs


K5_TARGET = {"H^5": Fraction(1, 120), "H^2H3": Fraction(5, 120), "H5": Fraction(3, 240)}
K5_EQUATIONS = ["c1+c2+c3+c4 = 0", "c1c2+c2c3+c3c4 = 5", "c2c3(c1+c4) = 0",
                "c1c3+c1c4+c2c4 = 0", "c1c4(c2+c3) = 0", "c1c2c3c4 = 3/2"]


def interp_det_unsolvable_k5_half() -> list[Branch]:
    """Branch ledger showing no superdiagonal reproduces zeta^(1/2)_n({1}_5).

    Every branch ends in a false rational equality ``lhs = rhs``.
    """
    target = Fraction(3, 2)
    ledger = [Branch(f"c{i} = 0", ["product c1c2c3c4 vanishes"], Fraction(0), target)
              for i in range(1, 5)]
    # all nonzero: the zero-product equations force c4 = -c1 and c3 = -c2
    c2_sq = Fraction(-1)  # from 5 = c1c2 + c2c3 + c3c4 = -5 c2^2
    c1_sq = 4 * c2_sq     # c1 = -2 c2 from c1c3 + c1c4 + c2c4 = -c1(c1 + 2 c2) = 0
    ledger.append(Branch("all ci nonzero",
                         ["c2c3(c1+c4) = 0 gives c4 = -c1", "c1c4(c2+c3) = 0 gives c3 = -c2",
                          "e1 = 0 holds identically", "-c1(c1 + 2c2) = 0 gives c1 = -2c2",
                          "2c1c2 - c2^2 = -5c2^2 = 5 gives c2^2 = -1",
                          "c1c2c3c4 = c1^2 c2^2 = 4 c2^4"],
                         c1_sq * c2_sq, target))
    return ledger

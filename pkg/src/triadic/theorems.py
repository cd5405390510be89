"""One checker per claim about 3-adic orders of central binomial sums.

Every checker returns :class:`~triadic.claims.ClaimResult`. The ``*_many``
variants check a whole list of ``n`` for one ``m`` and share the prefix work
between them; the single-tuple checkers are thin wrappers.

Modes: ``"exact"`` evaluates with rationals; ``"truncated"`` (alias
``"fast"``) works modulo ``3**N`` with
``N = required exponent + 2 ord_3(n) + 8`` (a sum that vanishes to that
precision is redone at higher precision so its order is still measured
exactly); ``"both"`` runs the two and
records a disagreement as a failure; ``"auto"`` picks exact for sums of at
most ``3**5`` terms and truncated above.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from . import sums
from .claims import ClaimId, ClaimResult, DomainError, Measured, Mode, Required
from .padic import TruncatedPadic
from .valuation import INFINITY, check_odd_prime, nu, nu_binomial, nu_int, residue_mod_power

AUTO_EXACT_LIMIT = 3**5
GUARD_DIGITS = 8
# a truncated sum that vanishes at working precision is recomputed with
# doubled precision until a nonzero digit shows up or this cap is reached
MAX_REFINE_WIDTH = 512

_MODE_NAMES = {
    "exact": Mode.EXACT,
    "fast": Mode.TRUNCATED,
    "truncated": Mode.TRUNCATED,
    "both": Mode.BOTH,
}


def resolve_mode(mode, size: int) -> Mode:
    """Turn a mode name (or :class:`Mode`) into a concrete mode for a sum of ``size`` terms."""
    if isinstance(mode, Mode):
        return mode
    if mode == "auto":
        return Mode.EXACT if size <= AUTO_EXACT_LIMIT else Mode.TRUNCATED
    try:
        return _MODE_NAMES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None


def _wants_exact(mode: Mode) -> bool:
    return mode in (Mode.EXACT, Mode.BOTH)


def _wants_truncated(mode: Mode) -> bool:
    return mode in (Mode.TRUNCATED, Mode.BOTH)


def _padic_valuation(x: TruncatedPadic) -> Measured:
    if x.is_zero:
        return Measured("valuation_at_least", x.exponent)
    return Measured("valuation", x.exponent)


def _refined_valuation(x: TruncatedPadic, width: int, recompute) -> Measured:
    """Valuation of ``x``, re-running ``recompute(width)`` at higher precision while it reads as zero.

    The working precision already decides every verdict; refining only makes
    the measured value match the exact one when it lies above that precision.
    """
    while x.is_zero and width < MAX_REFINE_WIDTH:
        width = min(2 * width, MAX_REFINE_WIDTH)
        x = recompute(width)
    return _padic_valuation(x)


def _padic_residue(x: TruncatedPadic, t: int) -> Measured:
    if not x.is_zero and x.exponent < 0:
        return Measured("valuation", x.exponent)
    return Measured("residue", x.residue(t), t)


def _exact_residue(x: Fraction, t: int) -> Measured:
    if x.denominator % 3 == 0:
        return Measured("valuation", nu(3, x))
    return Measured("residue", residue_mod_power(3, t, x), t)


def _merge(mode: Mode, exact: Measured | None, truncated: Measured | None) -> Measured:
    if mode is Mode.EXACT:
        return exact
    if mode is Mode.TRUNCATED:
        return truncated
    if _agrees(exact, truncated):
        return exact
    return Measured("mode_disagreement", {"exact": exact.as_json(), "truncated": truncated.as_json()})


def _agrees(exact: Measured, truncated: Measured) -> bool:
    if truncated.kind == "valuation_at_least":
        return exact.kind == "valuation" and exact.value >= truncated.value
    return exact == truncated


def _check_m1(m: int) -> int:
    if m % 3 != 1:
        raise DomainError(f"m must be 1 mod 3, got {m}")
    return nu(3, m - 1)


def _modes(ns: Sequence[int], modes, size=lambda n: n) -> list[Mode]:
    if isinstance(modes, (str, Mode)):
        return [resolve_mode(modes, size(n)) for n in ns]
    modes = list(modes)
    if len(modes) != len(ns):
        raise ValueError("one mode per parameter value")
    return [resolve_mode(md, size(n)) for md, n in zip(modes, ns)]


def _exact_scaled_orders(m: int, n_max: int, p: int) -> list:
    """``ord_p(scaled_sum(m, n))`` for ``n = 1..n_max`` (``p`` must not divide ``m``)."""
    out = []
    acc = 0
    for c in sums.central_binomials(n_max):
        acc = acc * m + c  # numerator over m**(n-1), a p-adic unit
        out.append(nu_int(p, acc))
    return out


def _width(required_max, nu_n_max: int) -> int:
    req = 0 if required_max == INFINITY else max(required_max, 0)
    return int(req) + 2 * nu_n_max + GUARD_DIGITS


# ---------------------------------------------------------------------------
# central sum order


def check_ssz_many(ns: Sequence[int], modes="auto") -> list[ClaimResult]:
    """ord_3(sum_{k<n} C(2k,k)) == 2 ord_3(n) + ord_3(C(2n, n)) for each ``n``."""
    ns = list(ns)
    if any(n < 1 for n in ns):
        raise DomainError("n must be positive")
    modes = _modes(ns, modes)
    required = {n: 2 * nu_int(3, n) + nu_binomial(3, 2 * n, n) for n in ns}
    exact_ns = [n for n, md in zip(ns, modes) if _wants_exact(md)]
    trunc_ns = [n for n, md in zip(ns, modes) if _wants_truncated(md)]
    exact = {}
    if exact_ns:
        orders = _exact_scaled_orders(1, max(exact_ns), 3)
        exact = {n: Measured("valuation", orders[n - 1]) for n in exact_ns}
    trunc = {}
    if trunc_ns:
        width = _width(max(required[n] for n in trunc_ns), max(nu_int(3, n) for n in trunc_ns))
        prefix = sums.scaled_prefix_truncated(1, max(trunc_ns), width)
        trunc = {n: _refined_valuation(prefix[n - 1], width, lambda w, n=n: sums.central_sum_truncated(n, w))
                 for n in trunc_ns}
    return [
        ClaimResult(ClaimId.SSZ_11, {"n": n}, _merge(md, exact.get(n), trunc.get(n)),
                    Required("valuation_equal", required[n]), md)
        for n, md in zip(ns, modes)
    ]


def check_ssz(n: int, mode="auto") -> ClaimResult:
    return check_ssz_many([n], mode)[0]


# ---------------------------------------------------------------------------
# lower bounds for a prime dividing m - 4


def default_prime(m: int) -> int:
    """Largest odd prime dividing ``m - 4``; 3 when ``m == 4`` (every prime divides 0)."""
    d = abs(m - 4)
    if d == 0:
        return 3
    while d % 2 == 0:
        d //= 2
    best, q = 0, 3
    while q * q <= d:
        while d % q == 0:
            best, d = q, d // q
        q += 2
    best = max(best, d) if d > 1 else best
    if best == 0:
        raise DomainError(f"m - 4 = {m - 4} has no odd prime divisor")
    return best


def check_sun12_many(m: int, p: int, ns: Sequence[int], modes="auto") -> list[tuple[ClaimResult, ClaimResult]]:
    check_odd_prime(p)
    if (m - 4) % p:
        raise DomainError(f"{p} does not divide m - 4 = {m - 4}")
    ns = list(ns)
    modes = _modes(ns, modes)
    exact_ns = [n for n, md in zip(ns, modes) if _wants_exact(md)]
    trunc_ns = [n for n, md in zip(ns, modes) if _wants_truncated(md)]
    ex_a, ex_b, tr_a, tr_b = {}, {}, {}, {}
    if exact_ns:
        orders = _exact_scaled_orders(m, max(exact_ns), p)
        for n in exact_ns:
            ex_a[n] = Measured("valuation", orders[n - 1])
            ex_b[n] = Measured("valuation", nu(p, sums.alt_sum(m, n)))
    if trunc_ns:
        top = max(trunc_ns)
        width = _width(max(nu_int(p, n) for n in trunc_ns), max(nu_int(p, n) for n in trunc_ns))
        pre = sums.scaled_prefix_truncated(m, top, width, p)
        alt = sums.alt_sums_truncated(m, top, width, p)
        for n in trunc_ns:
            tr_a[n] = _refined_valuation(pre[n - 1], width, lambda w, n=n: sums.scaled_sum_truncated(m, n, w, p))
            tr_b[n] = _refined_valuation(alt[n - 1], width, lambda w, n=n: sums.alt_sum_truncated(m, n, w, p))
    out = []
    for n, md in zip(ns, modes):
        bound = nu_int(p, n)
        params = {"m": m, "n": n, "p": p}
        out.append((
            ClaimResult(ClaimId.SUN_12A, params, _merge(md, ex_a.get(n), tr_a.get(n)),
                        Required("valuation_at_least", bound), md, vacuous=bound == 0),
            ClaimResult(ClaimId.SUN_12B, params, _merge(md, ex_b.get(n), tr_b.get(n)),
                        Required("valuation_at_least", bound), md, vacuous=bound == 0),
        ))
    return out


def check_sun12(m: int, p: int | None, n: int, mode="auto") -> tuple[ClaimResult, ClaimResult]:
    """Both lower bounds ord_p(sum) >= ord_p(n); ``p`` defaults to :func:`default_prime`."""
    if n < 1:
        raise DomainError("n must be positive")
    return check_sun12_many(m, default_prime(m) if p is None else p, [n], mode)[0]


# ---------------------------------------------------------------------------
# bounds for (1/n) * sum, m = 1 mod 3


def _divided_bound_results(claim: ClaimId, m: int, ns, modes, bound_of, exact_sum, trunc_batch, trunc_one):
    ns = list(ns)
    if any(n < 1 for n in ns):
        raise DomainError("n must be positive")
    modes = _modes(ns, modes)
    exact_ns = [n for n, md in zip(ns, modes) if _wants_exact(md)]
    trunc_ns = [n for n, md in zip(ns, modes) if _wants_truncated(md)]
    exact = {n: Measured("valuation", v) for n, v in exact_sum(exact_ns).items()}
    trunc = {}
    if trunc_ns:
        nu_max = max(nu_int(3, n) for n in trunc_ns)
        width = _width(max(bound_of(n) for n in trunc_ns), nu_max)
        batch = trunc_batch(max(trunc_ns), width)
        trunc = {
            n: _refined_valuation(batch[n - 1].scale(Fraction(1, n)), width,
                                  lambda w, n=n: trunc_one(n, w).scale(Fraction(1, n)))
            for n in trunc_ns
        }
    out = []
    for n, md in zip(ns, modes):
        bound = bound_of(n)
        out.append(ClaimResult(
            claim, {"m": m, "n": n}, _merge(md, exact.get(n), trunc.get(n)),
            Required("valuation_at_least", bound), md,
            # the sum is 3-integral, so ord(sum/n) >= -ord(n) always
            vacuous=bound <= -nu_int(3, n),
        ))
    return out


def check_scc1_many(m: int, ns: Sequence[int], modes="auto") -> list[ClaimResult]:
    """ord_3(scaled_sum(m, n)/n) >= min(ord_3(n), ord_3(m-1) - 1)."""
    t = _check_m1(m)

    def exact_sum(exact_ns):
        if not exact_ns:
            return {}
        orders = _exact_scaled_orders(m, max(exact_ns), 3)
        return {n: orders[n - 1] - nu_int(3, n) for n in exact_ns}

    return _divided_bound_results(
        ClaimId.SCC1, m, ns, modes,
        lambda n: min(nu_int(3, n), t - 1),
        exact_sum,
        lambda top, width: sums.scaled_prefix_truncated(m, top, width),
        lambda n, width: sums.scaled_sum_truncated(m, n, width),
    )


def check_scc1(m: int, n: int, mode="auto") -> ClaimResult:
    return check_scc1_many(m, [n], mode)[0]


def check_scc3_many(m: int, ns: Sequence[int], modes="auto") -> list[ClaimResult]:
    """ord_3(alt_sum(m, n)/n) >= min(ord_3(n), ord_3(m-1)) - 1."""
    t = _check_m1(m)

    def exact_sum(exact_ns):
        return {n: nu(3, sums.alt_sum(m, n) / n) for n in exact_ns}

    def trunc_batch(top, width):
        if top <= 64:
            return [sums.alt_sum_truncated(m, n, width) for n in range(1, top + 1)]
        return sums.alt_sums_truncated(m, top, width)

    return _divided_bound_results(
        ClaimId.SCC3, m, ns, modes,
        lambda n: min(nu_int(3, n), t) - 1,
        exact_sum,
        trunc_batch,
        lambda n, width: sums.alt_sum_truncated(m, n, width),
    )


def check_scc3(m: int, n: int, mode="auto") -> ClaimResult:
    return check_scc3_many(m, [n], mode)[0]


# ---------------------------------------------------------------------------
# residues of (1/3^a) * sum over 3^a terms


def _residue_claim(claim: ClaimId, params: dict, a: int, t: int, target: Fraction, mode,
                   exact_sum, trunc_sum) -> ClaimResult:
    n = 3**a
    md = resolve_mode(mode, n)
    exact = trunc = None
    if _wants_exact(md):
        exact = _exact_residue(exact_sum(n) / n, t)
    if _wants_truncated(md):
        width = t + 2 * a + GUARD_DIGITS
        trunc = _padic_residue(trunc_sum(n, width).scale(Fraction(1, n)), t)
    return ClaimResult(claim, params, _merge(md, exact, trunc),
                       Required("residue", residue_mod_power(3, t, target), t), md)


def check_scc2(m: int, a: int, mode="auto") -> ClaimResult:
    """scaled_sum(m, 3^a)/3^a = (m-1)/3 mod 3^ord_3(m-1), for a >= ord_3(m-1)."""
    t = _check_m1(m)
    if t == INFINITY:
        raise DomainError("m = 1 gives an infinite modulus")
    if a < max(t, 1):
        raise DomainError(f"need a >= max(1, ord_3(m-1)) = {max(t, 1)}, got a={a}")
    return _residue_claim(
        ClaimId.SCC2, {"m": m, "a": a}, a, t, Fraction(m - 1, 3), mode,
        lambda n: sums.scaled_sum(m, n),
        lambda n, width: sums.scaled_sum_truncated(m, n, width),
    )


def check_scc4(m: int, a: int, mode="auto") -> ClaimResult:
    """alt_sum(m, 3^a)/3^a = -(m-1)/3 mod 3^ord_3(m-1), for a > ord_3(m-1)."""
    t = _check_m1(m)
    if t == INFINITY:
        raise DomainError("m = 1 gives an infinite modulus")
    if a <= t:
        raise DomainError(f"need a > ord_3(m-1) = {t}, got a={a}")
    return _residue_claim(
        ClaimId.SCC4, {"m": m, "a": a}, a, t, Fraction(1 - m, 3), mode,
        lambda n: sums.alt_sum(m, n),
        lambda n, width: sums.alt_sum_truncated(m, n, width),
    )


def check_scc5(a: int, mode="auto") -> ClaimResult:
    """alt_sum(1, 3^a)/3^a = -3^(a-1) mod 3^a, for a >= 2."""
    if a < 2:
        raise DomainError("a must be at least 2")
    return _residue_claim(
        ClaimId.SCC5, {"a": a}, a, a, Fraction(-(3 ** (a - 1))), mode,
        lambda n: sums.alt_sum(1, n),
        lambda n, width: sums.alt_sum_truncated(1, n, width),
    )


# ---------------------------------------------------------------------------
# the alternating congruence behind the m = 1 case


def check_nk2kk_many(ns: Sequence[int], modes="auto") -> list[ClaimResult]:
    """ord_3(sum_{k<n} (-1)^k C(n-1,k) C(2k,k)) >= 2 ord_3(n) - 1."""
    ns = list(ns)
    if any(n < 1 for n in ns):
        raise DomainError("n must be positive")
    modes = _modes(ns, modes)
    exact_ns = [n for n, md in zip(ns, modes) if _wants_exact(md)]
    trunc_ns = [n for n, md in zip(ns, modes) if _wants_truncated(md)]
    exact = {n: Measured("valuation", nu(3, sums.alt_sum(1, n))) for n in exact_ns}
    trunc = {}
    if trunc_ns:
        nu_max = max(nu_int(3, n) for n in trunc_ns)
        width = _width(2 * nu_max - 1, nu_max)
        top = max(trunc_ns)
        if len(trunc_ns) == 1:
            batch = {top: sums.alt_sum_truncated(1, top, width)}
        else:
            full = sums.alt_sums_truncated(1, top, width)
            batch = {n: full[n - 1] for n in trunc_ns}
        trunc = {n: _refined_valuation(batch[n], width, lambda w, n=n: sums.alt_sum_truncated(1, n, w))
                 for n in trunc_ns}
    out = []
    for n, md in zip(ns, modes):
        bound = 2 * nu_int(3, n) - 1
        out.append(ClaimResult(ClaimId.NK2KK, {"n": n}, _merge(md, exact.get(n), trunc.get(n)),
                               Required("valuation_at_least", bound), md, vacuous=bound <= 0))
    return out


def check_nk2kk(n: int, mode="auto") -> ClaimResult:
    return check_nk2kk_many([n], mode)[0]


# ---------------------------------------------------------------------------
# exact identities as claim records


def identity_result(claim: ClaimId, params: dict, ok: bool, sides=None) -> ClaimResult:
    note = ""
    if not ok and sides is not None:
        note = "lhs={} rhs={}".format(*(str(s) for s in sides))
    return ClaimResult(claim, params, Measured("equal", bool(ok)), Required("equal", True), Mode.EXACT, note=note)

"""Number-theoretic closed forms for the 2- and 3-strand counts.

The per-k counts and their generating functions:

    g2(k) = 1 if k = 0 else 2
    G2(z) = (1 + z) / (1 - z)
    B2(z) = z (1 + z^2) / (1 - z^2)

    g3(k) = [k=0] + 2 (phi(k+2) - [k even] + 2 sum_{i=1..k//2} phi(k+3-2i)) [k>=1]
    G3(z) = 2 (1 + 2z - z^2) / (z^2 (1 - z^2)) * sum_{n>=3} phi(n) z^n
            + (1 - 3 z^2) / (1 - z^2)
    B3(z) = z^2 G3(z^2),   B2(z) = z G2(z^2)

g3 has two independent re-derivations: summing the pair counts c_pair over
antidiagonals, and the expansion g3(k) = sum_{i} gamma(k - 2i) with

    gamma(i) = [i=0] - 3[i=2] + 2 phi(i+2) [i>=1] + 4 phi(i+1) [i>=2]
               - 2 phi(i) [i>=3].

All series arithmetic is exact integer arithmetic on truncated coefficient
vectors; division by (1 - z^2) is a two-step prefix recurrence, never a
float.  Python integers are unbounded, so no overflow handling is needed.

A note on the constant term: the closed form for G3 above is stated with
the + (1 - 3 z^2) / (1 - z^2) tail, which gives g3(0) = 1 (the trivial
braid).  The sign-flipped variant (-1 + 3 z^2) that appears in one
restatement fails that check and is rejected.

TotientTable instances are immutable after construction and freely shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .perms import c_pair


@dataclass(frozen=True)
class TotientTable:
    """phi(1) .. phi(capacity), exact, from a standard multiplicative sieve."""

    capacity: int
    values: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.capacity:
            raise IndexError(
                f"phi({m}) outside table capacity 1..{self.capacity}"
            )
        return self.values[m]

    def summatory(self, upto: int) -> int:
        """sum of phi(m) for 1 <= m <= upto."""
        if upto > self.capacity:
            raise IndexError(f"summatory bound {upto} exceeds capacity {self.capacity}")
        return sum(self.values[1 : upto + 1])


def totient_sieve(capacity: int) -> TotientTable:
    if capacity < 1:
        raise ValueError(f"capacity must be >= 1, got {capacity}")
    phi = list(range(capacity + 1))
    for p in range(2, capacity + 1):
        if phi[p] == p:  # p prime
            for multiple in range(p, capacity + 1, p):
                phi[multiple] -= phi[multiple] // p
    return TotientTable(capacity=capacity, values=tuple(phi))


def g2(k: int) -> int:
    """Braids on 2 strands with norm 2k + 1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return 1 if k == 0 else 2


def g3_totient(k: int, table: TotientTable | None = None) -> int:
    """Braids on 3 strands with norm 2k + 2, by the totient formula."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return 1
    phi = table if table is not None and table.capacity >= k + 2 else totient_sieve(k + 2)
    acc = phi[k + 2] - (1 if k % 2 == 0 else 0)
    acc += 2 * sum(phi[k + 3 - 2 * i] for i in range(1, k // 2 + 1))
    return 2 * acc


def g3_via_c(k: int) -> int:
    """The same count as a sum of pair counts over one antidiagonal."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return sum(c_pair(i, k - i) for i in range(k + 1))


def gamma_term(i: int, table: TotientTable | None = None) -> int:
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    phi = table if table is not None and table.capacity >= i + 2 else totient_sieve(i + 2)
    acc = 1 if i == 0 else 0
    acc -= 3 if i == 2 else 0
    if i >= 1:
        acc += 2 * phi[i + 2]
    if i >= 2:
        acc += 4 * phi[i + 1]
    if i >= 3:
        acc -= 2 * phi[i]
    return acc


def g3_via_gamma(k: int, table: TotientTable | None = None) -> int:
    """The same count via the gamma expansion."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    phi = table if table is not None and table.capacity >= k + 2 else totient_sieve(k + 2)
    return sum(gamma_term(k - 2 * i, phi) for i in range(k // 2 + 1))


@dataclass(frozen=True)
class SeriesTable:
    """Exact integer coefficients of one series, index = power of z."""

    label: str
    coefficients: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)


def _mul_trunc(a: list[int], b: list[int], kmax: int) -> list[int]:
    out = [0] * (kmax + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > kmax:
            continue
        for j, bj in enumerate(b):
            if i + j > kmax:
                break
            out[i + j] += ai * bj
    return out


def _div_one_minus_z2(a: list[int], kmax: int) -> list[int]:
    # c_k = a_k + c_{k-2}
    out = [0] * (kmax + 1)
    for i in range(kmax + 1):
        ai = a[i] if i < len(a) else 0
        out[i] = ai + (out[i - 2] if i >= 2 else 0)
    return out


def _shift_down(a: list[int], powers: int) -> list[int]:
    # exact division by z**powers
    if any(a[:powers]):
        raise ValueError(f"series not divisible by z^{powers}")
    return a[powers:]


SERIES_LABELS = ("G2", "G3", "B2", "B3")


def series(label: str, kmax: int) -> SeriesTable:
    """Coefficients 0..kmax of one of the four closed-form series."""
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")
    if label == "G2":
        coeffs = [1] + [2] * kmax
    elif label == "G3":
        coeffs = _g3_series(kmax)
    elif label == "B2":
        # z (1 + z^2) / (1 - z^2): odd coefficients 1, 2, 2, ...
        g = [1] + [2] * kmax
        coeffs = _reindex_b(g, n=2, kmax=kmax)
    elif label == "B3":
        g = _g3_series(kmax)
        coeffs = _reindex_b(g, n=3, kmax=kmax)
    else:
        raise ValueError(f"unknown series label {label!r}; want one of {SERIES_LABELS}")
    return SeriesTable(label=label, coefficients=tuple(coeffs[: kmax + 1]))


def _g3_series(kmax: int) -> list[int]:
    phi = totient_sieve(max(kmax + 2, 3))
    f2 = [0] * (kmax + 3)
    for m in range(3, kmax + 3):
        f2[m] = phi[m]  # doubled coefficients of F(z): 2 f_m = phi(m)
    # head = 2 (1 + 2z - z^2) / (z^2 (1 - z^2)) * sum phi(n) z^n
    head = _mul_trunc(f2, [2, 4, -2], kmax + 2)
    head = _shift_down(head, 2)
    head = _div_one_minus_z2(head, kmax)
    tail = _div_one_minus_z2([1, 0, -3], kmax)
    return [h + t for h, t in zip(head, tail)]


def _reindex_b(g_coeffs: list[int], n: int, kmax: int) -> list[int]:
    # B_n(z) = z^(n-1) G_n(z^2): coefficient of z^(2k+n-1) is g_{n,k}
    out = [0] * (kmax + 1)
    for k, value in enumerate(g_coeffs):
        idx = 2 * k + n - 1
        if idx > kmax:
            break
        out[idx] = value
    return out


def f_half_totient(nmax: int) -> SeriesTable:
    """Doubled coefficients of the coprime-pair series, indices 3..nmax.

    The series sums z^(2u + v) over coprime pairs u, v >= 1; its n-th
    coefficient is phi(n)/2 for n >= 3, kept doubled here to stay integral.
    """
    if nmax < 3:
        raise ValueError(f"nmax must be >= 3, got {nmax}")
    phi = totient_sieve(nmax)
    coeffs = [0, 0, 0] + [phi[m] for m in range(3, nmax + 1)]
    return SeriesTable(label="2F", coefficients=tuple(coeffs))


def coprime_pair_count(n: int) -> int:
    """Brute-force oracle: pairs u, v >= 1 with 2u + v = n and gcd(u, v) = 1."""
    return sum(
        1 for u in range(1, (n - 1) // 2 + 1) if math.gcd(u, n - 2 * u) == 1
    )


def phi_hat(kmax: int, table: TotientTable | None = None) -> list[int]:
    """Alternating partial sums: phi_hat[k] = phi(k) + phi(k-2) + ... (down to 1 or 2).

    phi_hat[0] = 0.  These satisfy, for every k >= 1,
    phi_hat[4k] = 2 phi_hat[2k] + phi_hat[2k-1] and
    phi_hat[4k+2] = 2 phi_hat[2k] + phi_hat[2k+1].
    """
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")
    phi = table if table is not None and table.capacity >= kmax else totient_sieve(max(kmax, 1))
    out = [0] * (kmax + 1)
    for k in range(1, kmax + 1):
        out[k] = phi[k] + (out[k - 2] if k >= 2 else 0)
    return out

"""Scans, censuses and verification campaigns over ranges of primes."""

from __future__ import annotations

import csv
import io
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import isqrt
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .criteria import lw_sign, predict_ord2_h2p, predict_ord2_hK, relation_check
from .errors import InvalidInput, PureQuarticError
from .formclass import h2p
from .modular import jacobi, prime_array, quartic_symbol_2
from .realquad import check_eps_eq_pi_squared_over_two, lemma34_suite
from .zsqrt2 import Zsqrt2, decompose, decompositions, invariant, twisted_spin, unit_shift

SCHEMA_VERSION = 1
SCHEMA_LINE = f"schema={SCHEMA_VERSION}"
CSV_COLUMNS = (
    "p", "res32", "u", "v", "inv", "q2", "h2p_pred", "h2p_exactflag",
    "h2p_actual", "hK_pred", "hK_exactflag", "hK_conj",
)


@dataclass(frozen=True)
class ScanRecord:
    p: int
    res32: int
    u: Optional[int]
    v: Optional[int]
    inv: Optional[int]
    q2: Optional[int]
    h2p_pred: int
    h2p_exactflag: bool
    h2p_actual: Optional[int]
    hK_pred: int
    hK_exactflag: bool
    hK_conj: Optional[int]

    @property
    def flagged(self) -> bool:
        """Exact prediction disagrees with the oracle, or a bound is violated."""
        if self.h2p_actual is None:
            return False
        if self.h2p_exactflag:
            return self.h2p_actual != self.h2p_pred
        return self.h2p_actual < self.h2p_pred

    def to_row(self) -> list[str]:
        out = []
        for name in CSV_COLUMNS:
            value = getattr(self, name)
            if value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append("1" if value else "0")
            else:
                out.append(str(value))
        return out

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "ScanRecord":
        if len(row) != len(CSV_COLUMNS):
            raise ValueError(f"expected {len(CSV_COLUMNS)} columns, got {len(row)}")
        values = {}
        for name, raw in zip(CSV_COLUMNS, row):
            if name.endswith("exactflag"):
                if raw not in ("0", "1"):
                    raise ValueError(f"bad flag {raw!r}")
                values[name] = raw == "1"
            else:
                values[name] = int(raw) if raw != "" else None
        for required in ("p", "res32", "h2p_pred", "hK_pred"):
            if values[required] is None:
                raise ValueError(f"missing {required}")
        return cls(**values)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in CSV_COLUMNS}


def make_record(p: int, exact: bool = False, conjecture: bool = False) -> ScanRecord:
    u = v = inv = q2 = None
    if p % 8 in (1, 7):
        d = decompose(p)
        u, v = d.u, d.v
        if p % 8 == 7:
            inv = jacobi(2 * u, v)
        else:
            q2 = quartic_symbol_2(p)
    h2p_pred = predict_ord2_h2p(p)
    hK_pred = predict_ord2_hK(p, False)
    return ScanRecord(
        p=p,
        res32=p % 32,
        u=u,
        v=v,
        inv=inv,
        q2=q2,
        h2p_pred=h2p_pred.value,
        h2p_exactflag=h2p_pred.exact,
        h2p_actual=h2p(p).ord2 if exact else None,
        hK_pred=hK_pred.value,
        hK_exactflag=hK_pred.exact,
        hK_conj=predict_ord2_hK(p, True).value if conjecture else None,
    )


def _records(args: tuple[list[int], Optional[int], bool]) -> list[ScanRecord]:
    primes, exact_limit, conjecture = args
    out = []
    for p in primes:
        try:
            out.append(make_record(p, exact_limit is not None and p <= exact_limit, conjecture))
        except PureQuarticError as err:
            raise type(err)(f"p={p}: {err}") from err
    return out


def _in_classes(p: int, classes: Sequence[tuple[int, int]]) -> bool:
    return not classes or any(p % m == r % m for m, r in classes)


def _map_ordered(fn, chunks: list, jobs: int) -> Iterator:
    """fn over chunks, results in chunk order whatever the worker count."""
    if jobs <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            yield fn(chunk)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, chunks)


class ScanCache:
    """Append-only CSV of scan records in the public schema.

    Malformed or truncated lines are dropped on load; a later row for the
    same p replaces an earlier one. One writer at a time.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)

    def load(self) -> dict[int, ScanRecord]:
        if not os.path.exists(self.path):
            return {}
        with open(self.path, newline="") as fh:
            text = fh.read()
        lines = text.split("\n")
        if not text.endswith("\n"):
            lines = lines[:-1]
        if len(lines) < 2 or lines[0] != SCHEMA_LINE or lines[1] != ",".join(CSV_COLUMNS):
            raise InvalidInput(f"{self.path} is not a schema={SCHEMA_VERSION} scan cache")
        records = {}
        for row in csv.reader(line for line in lines[2:] if line):
            try:
                rec = ScanRecord.from_row(row)
            except ValueError:
                continue
            records[rec.p] = rec
        return records

    def append(self, records: Iterable[ScanRecord]) -> None:
        fresh = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
        if not fresh:
            # drop a trailing partial line before appending
            with open(self.path, "rb+") as fh:
                data = fh.read()
                if not data.endswith(b"\n"):
                    fh.truncate(data.rfind(b"\n") + 1)
        with open(self.path, "a", newline="") as fh:
            if fresh:
                fh.write(SCHEMA_LINE + "\n" + ",".join(CSV_COLUMNS) + "\n")
            writer = csv.writer(fh, lineterminator="\n")
            for rec in records:
                writer.writerow(rec.to_row())
            fh.flush()


def scan(
    lower: int,
    upper: int,
    exact_limit: Optional[int] = None,
    conjecture: bool = False,
    classes: Sequence[tuple[int, int]] = (),
    jobs: int = 1,
    cache: Optional[ScanCache] = None,
    chunk_size: int = 2000,
) -> Iterator[ScanRecord]:
    """One record per odd prime p with lower <= p <= upper, ascending."""
    if exact_limit is not None and exact_limit > upper:
        raise InvalidInput("exact limit exceeds the scan range")
    for m, r in classes:
        if m < 1:
            raise InvalidInput(f"bad modulus {m}")
    primes = [p for p in prime_array(max(lower, 3), upper + 1).tolist() if _in_classes(p, classes)]
    cached = cache.load() if cache is not None else {}

    def reusable(p: int) -> bool:
        rec = cached.get(p)
        if rec is None:
            return False
        wants_exact = exact_limit is not None and p <= exact_limit
        return (rec.h2p_actual is not None) == wants_exact and (rec.hK_conj is not None) == conjecture

    todo = [p for p in primes if not reusable(p)]
    chunks = [(todo[i : i + chunk_size], exact_limit, conjecture) for i in range(0, len(todo), chunk_size)]
    fresh = iter(_map_ordered(_records, chunks, jobs))
    pending: list[ScanRecord] = []
    for p in primes:
        if reusable(p):
            yield cached[p]
            continue
        if not pending:
            pending = list(next(fresh))
            if cache is not None:
                cache.append(pending)
            pending.reverse()
        yield pending.pop()


def format_records(records: Iterable[ScanRecord], fmt: str) -> str:
    records = list(records)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(SCHEMA_LINE + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.to_row())
        return buf.getvalue()
    if fmt == "json":
        import json

        return json.dumps([rec.as_dict() for rec in records], indent=1) + "\n"
    if fmt == "table":
        rows = [list(CSV_COLUMNS)] + [rec.to_row() for rec in records]
        widths = [max(len(r[i]) for r in rows) for i in range(len(CSV_COLUMNS))]
        return "".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in rows)
    raise InvalidInput(f"unknown format {fmt!r}")


# --- censuses ---------------------------------------------------------------


@dataclass(frozen=True)
class SymbolTable:
    """Per-prime symbols for p < limit: inv on p = 7 mod 8, q2 on p = 1 mod 8
    (0 where undefined)."""

    primes: np.ndarray
    inv: np.ndarray
    q2: np.ndarray


def symbol_table(limit: int) -> SymbolTable:
    primes = prime_array(3, limit)
    inv = np.zeros(len(primes), dtype=np.int8)
    q2 = np.zeros(len(primes), dtype=np.int8)
    for i, p in enumerate(primes.tolist()):
        if p % 16 == 15:
            inv[i] = invariant(p)
        elif p % 16 == 1:
            q2[i] = quartic_symbol_2(p)
    return SymbolTable(primes, inv, q2)


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


@dataclass(frozen=True)
class CensusReport:
    """Counts over primes p < X.

    count_inv_minus / count_inv_plus are the numbers of p = 15 (mod 32) with
    (2u/v) = -1 / +1. They equal the counts of 4 || h_K / 8 || h_K only if
    the conjectured equivalence holds.
    """

    X: int
    count_15mod32: int
    count_inv_minus: int
    count_inv_plus: int
    density_inv_minus_mod16: float
    density_twisted_mod16: float
    density_quartic_1mod16: float

    def as_dict(self) -> dict:
        d = asdict(self)
        d["note"] = "count_inv_minus/plus = #{4||h_K}/#{8||h_K} only under the conjecture"
        return d


def census(X: int, table: Optional[SymbolTable] = None) -> CensusReport:
    if X < 100:
        raise InvalidInput("census needs X >= 100")
    t = table if table is not None else symbol_table(X)
    keep = t.primes < X
    primes, inv, q2 = t.primes[keep], t.inv[keep], t.q2[keep]
    m32 = primes % 32 == 15
    m16 = primes % 16 == 15
    sign = np.where(((primes + 1) // 16) % 2 == 1, -1, 1)
    n16 = int(m16.sum())
    return CensusReport(
        X=X,
        count_15mod32=int(m32.sum()),
        count_inv_minus=int((m32 & (inv == -1)).sum()),
        count_inv_plus=int((m32 & (inv == 1)).sum()),
        density_inv_minus_mod16=_ratio(int((m16 & (inv == -1)).sum()), n16),
        density_twisted_mod16=_ratio(int((m16 & (sign * inv == -1)).sum()), n16),
        # 2 is prime but never in the numerator
        density_quartic_1mod16=_ratio(int(((primes % 16 == 1) & (q2 == -1)).sum()), len(primes) + 1),
    )


@dataclass(frozen=True)
class DensityRow:
    """Empirical ratios over p <= checkpoint. The h(-2p) columns use the
    Leonard-Williams criterion, not the class-number oracle."""

    checkpoint: int
    n_15mod16: int
    inv_minus: float
    twisted_minus: float
    quartic2_minus_1mod16: float
    h2p_ord3_15mod32: float
    h2p_ord3_31mod32: float


def density_table(X: int, checkpoints: Sequence[int], table: Optional[SymbolTable] = None) -> list[DensityRow]:
    checkpoints = list(checkpoints)
    if checkpoints != sorted(checkpoints) or (checkpoints and checkpoints[-1] > X):
        raise InvalidInput("checkpoints must be ascending and at most X")
    t = table if table is not None else symbol_table(X + 1)
    primes, inv, q2 = t.primes, t.inv, t.q2
    sign = np.where(((primes + 1) // 16) % 2 == 1, -1, 1)
    m16 = primes % 16 == 15
    m15 = primes % 32 == 15
    m31 = primes % 32 == 31
    ord3 = sign * inv == -1
    series = {
        "n16": np.cumsum(m16),
        "inv": np.cumsum(m16 & (inv == -1)),
        "tw": np.cumsum(m16 & ord3),
        "q2": np.cumsum((primes % 16 == 1) & (q2 == -1)),
        "n15": np.cumsum(m15),
        "o15": np.cumsum(m15 & ord3),
        "n31": np.cumsum(m31),
        "o31": np.cumsum(m31 & ord3),
    }
    rows = []
    for c in checkpoints:
        k = int(np.searchsorted(primes, c, side="right"))
        at = {key: int(arr[k - 1]) if k else 0 for key, arr in series.items()}
        n_all = k + (1 if c >= 2 else 0)
        rows.append(DensityRow(
            checkpoint=c,
            n_15mod16=at["n16"],
            inv_minus=_ratio(at["inv"], at["n16"]),
            twisted_minus=_ratio(at["tw"], at["n16"]),
            quartic2_minus_1mod16=_ratio(at["q2"], n_all),
            h2p_ord3_15mod32=_ratio(at["o15"], at["n15"]),
            h2p_ord3_31mod32=_ratio(at["o31"], at["n31"]),
        ))
    return rows


# --- verification campaigns -------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, witness) -> None:
        self.checked += 1
        if not passed:
            self.failures.append(witness)

    def as_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": len(self.failures),
                "witnesses": [str(w) for w in self.failures[:20]]}


def _h2p_ord2_chunk(primes: list[int]) -> list[tuple[int, int, int]]:
    out = []
    for p in primes:
        s = h2p(p)
        out.append((s.h, s.ord2, s.ambiguous))
    return out


def h2p_table(limit: int, jobs: int = 1) -> dict[int, tuple[int, int, int]]:
    """p -> (h, ord2, ambiguous) for odd primes p < limit."""
    primes = prime_array(3, limit).tolist()
    chunks = [primes[i : i + 1000] for i in range(0, len(primes), 1000)]
    table = {}
    for chunk, res in zip(chunks, _map_ordered(_h2p_ord2_chunk, chunks, jobs)):
        table.update(zip(chunk, res))
    return table


def oracle_campaign(limit: int, jobs: int = 1, table=None) -> list[SuiteResult]:
    """Predictions and genus facts against exact class numbers, odd p < limit."""
    table = table if table is not None else h2p_table(limit, jobs)
    agree = SuiteResult("h2p-prediction-vs-oracle")
    thm = SuiteResult("ord2-3-iff-twisted-invariant")
    rel = SuiteResult("relation-ord2-h2p-eq-hK-plus-1")
    genus = SuiteResult("ambiguous-2-and-h-even")
    for p, (h, ord2, amb) in sorted(table.items()):
        if p >= limit:
            continue
        pred = predict_ord2_h2p(p)
        ok = pred.value == ord2 if pred.exact else pred.value <= ord2
        agree.record(ok, (p, pred.value, pred.exact, ord2))
        if p % 16 == 15:
            thm.record((ord2 == 3) == (lw_sign(p) * invariant(p) == -1), p)
        rc = relation_check(p)
        if rc is not None:
            # the h(-2p) side must also be the true valuation
            rel.record(rc and pred.value == ord2, p)
        genus.record(amb == 2 and h % 2 == 0, (p, h, amb))
    return [agree, thm, rel, genus]


def lemma_campaign(limit: int, seed: int = 1, samples: int = 1000,
                   lemma41_limit: Optional[int] = None) -> list[SuiteResult]:
    lemma34 = SuiteResult("local-squares-15mod16")
    lemma41 = SuiteResult("invariant-independent-of-decomposition")
    spin = SuiteResult("twisted-spin-unit8-invariance")
    primes = prime_array(3, limit).tolist()
    l41 = limit if lemma41_limit is None else lemma41_limit
    for p in primes:
        if p % 16 == 15:
            lemma34.record(lemma34_suite(p).ok, p)
        if p % 8 == 7 and p < l41:
            target = invariant(p)
            for d in decompositions(p):
                lemma41.record(jacobi(2 * d.u, d.v) == target, (p, d.u, d.v))
    rng = random.Random(seed)
    for _ in range(samples):
        alpha = random_totally_positive(rng)
        spin.record(twisted_spin(unit_shift(alpha, 4)) == twisted_spin(alpha), alpha)
    return [lemma34, lemma41, spin]


def random_totally_positive(rng: random.Random, size: int = 10 ** 6) -> Zsqrt2:
    a = rng.randint(1, size)
    bound = isqrt((a * a - 1) // 2)
    return Zsqrt2(a, rng.randint(-bound, bound))


def unit_campaign(limit: int) -> SuiteResult:
    res = SuiteResult("unit-equals-half-square-of-norm2")
    for p in prime_array(3, limit).tolist():
        if p % 8 == 7:
            res.record(check_eps_eq_pi_squared_over_two(p).ok, p)
    return res


def verify(limit: int, seed: int = 1, jobs: int = 1) -> list[SuiteResult]:
    return oracle_campaign(limit, jobs) + lemma_campaign(limit, seed) + [unit_campaign(limit)]


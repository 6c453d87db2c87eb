"""Brute-force oracle: enumerate integer Heron triangles and pair them by exact invariants.

Deliberately naive. Enumeration is by largest side, so the pair set at a
bound N is a subset of the set at any larger bound.
"""

from __future__ import annotations

import csv
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, TextIO

from pydantic import BaseModel, ConfigDict, Field
from sympy.ntheory.primetest import is_square

from heronpairs.core.errors import OutOfBounds
from heronpairs.core.models import PairRecordModel, TrianglePairModel
from heronpairs.core.rationals import format_rational
from heronpairs.exact_geometry import HeronCertificate, Triangle, certify_heron
from heronpairs.families import PairKind, TrianglePair

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("kind", "a1", "b1", "c1", "a2", "b2", "c2", "circumradius", "other")


class SearchConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_side: int = Field(ge=3)
    kinds: frozenset[PairKind] = Field(default_factory=lambda: frozenset(PairKind))
    primitive_only: bool = False
    scalene_only: bool = False
    workers: int = Field(default=1, ge=1)


@dataclass(frozen=True)
class PairRecord:
    pair: TrianglePair
    key: tuple[Fraction, Fraction]

    def to_model(self) -> PairRecordModel:
        return PairRecordModel(
            pair=TrianglePairModel.from_pair(self.pair),
            key=(format_rational(self.key[0]), format_rational(self.key[1])),
        )


def _heron_with_largest_side(c: int) -> list[HeronCertificate]:
    """All Heron triangles a <= b <= c for one c, ascending by (b, a)."""
    out = []
    for b in range(1, c + 1):
        for a in range(max(1, c - b + 1), b + 1):
            h = (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b)
            if h > 0 and is_square(h):
                cert = certify_heron(Triangle(a, b, c))
                if cert is not None:
                    out.append(cert)
    return out


def enumerate_heron(max_side: int, workers: int = 1) -> Iterator[HeronCertificate]:
    """Every integer Heron triangle with sides <= max_side, ascending by (c, b, a).

    With workers > 1 the shards (one per largest side) run in a process pool;
    executor.map keeps shard order, so the output is unchanged.
    """
    shards = range(1, max_side + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for shard in executor.map(_heron_with_largest_side, shards, chunksize=8):
                yield from shard
        return
    for c in shards:
        yield from _heron_with_largest_side(c)


def _integer_sides(tri: Triangle) -> tuple[int, int, int]:
    return tuple(int(s) for s in tri.sides)  # type: ignore[return-value]


def _keep(pair: TrianglePair, cfg: SearchConfig) -> bool:
    first, second = pair.first.triangle, pair.second.triangle
    if cfg.scalene_only and (len(set(first.sides)) < 3 or len(set(second.sides)) < 3):
        return False
    if cfg.primitive_only and gcd(*_integer_sides(first), *_integer_sides(second)) != 1:
        return False
    return True


def _record_order(record: PairRecord) -> tuple:
    return (
        record.pair.kind.value,
        record.key,
        record.pair.first.triangle.sides,
        record.pair.second.triangle.sides,
    )


def find_pairs(cfg: SearchConfig) -> list[PairRecord]:
    """Every unordered pair of non-congruent Heron triangles sharing (R, other), per kind."""
    certs = list(enumerate_heron(cfg.max_side, cfg.workers))
    records: list[PairRecord] = []
    for kind in sorted(cfg.kinds, key=lambda k: k.value):
        groups: dict[tuple[Fraction, Fraction], list[HeronCertificate]] = defaultdict(list)
        for cert in certs:
            groups[(cert.circumradius, kind.other_of(cert))].append(cert)
        for key, members in groups.items():
            for first, second in combinations(members, 2):
                pair = TrianglePair(
                    first=first,
                    second=second,
                    kind=kind,
                    shared_circumradius=key[0],
                    shared_other=key[1],
                )
                if _keep(pair, cfg):
                    records.append(PairRecord(pair=pair, key=key))
    records.sort(key=_record_order)
    logger.info(
        "oracle search finished",
        extra={
            "max_side": cfg.max_side,
            "heron_triangles": len(certs),
            "pairs": len(records),
        },
    )
    return records


def cross_check_family(pair: TrianglePair, cfg: SearchConfig) -> bool:
    """True iff the oracle finds this pair (up to side order) under the same key."""
    if pair.max_side() > cfg.max_side:
        raise OutOfBounds(
            f"largest side {format_rational(pair.max_side())} exceeds max_side {cfg.max_side}"
        )
    sides = pair.first.triangle.sides + pair.second.triangle.sides
    if any(s.denominator != 1 for s in sides):
        return False
    narrowed = cfg.model_copy(update={"kinds": frozenset({pair.kind})})
    classes = pair.side_classes()
    return any(
        record.key == pair.key and record.pair.side_classes() == classes
        for record in find_pairs(narrowed)
    )


def write_jsonl(records: Iterable[PairRecord], out: TextIO) -> int:
    count = 0
    for record in records:
        out.write(record.to_model().model_dump_json() + "\n")
        count += 1
    return count


def write_csv(records: Iterable[PairRecord], out: TextIO) -> int:
    """Lossy: integer sides plus the key as "p/q" strings."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for record in records:
        first, second = record.pair.first.triangle, record.pair.second.triangle
        writer.writerow(
            [
                record.pair.kind.value,
                *(format_rational(s) for s in first.sides),
                *(format_rational(s) for s in second.sides),
                format_rational(record.key[0]),
                format_rational(record.key[1]),
            ]
        )
        count += 1
    return count

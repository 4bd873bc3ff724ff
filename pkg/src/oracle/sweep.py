from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

import pandas as pd
from joblib import Parallel, delayed

from src.combinatorics.partitions import Partition, Prime, enumerate_partitions
from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import SpechtCohError
from src.criteria.cohomology import CohomologyResult, Source, h1_twopart_psi, james_h0
from src.oracle.cocycles import h0_dim, h1_dim
from src.oracle.specht import build_specht_rep

logger = logging.getLogger("specht_coh.oracle")

COLUMNS = ["p", "partition", "dim", "h0_oracle", "h0_criterion", "h1_oracle", "h1_criterion", "match", "error"]


@dataclass(frozen=True)
class SweepRow:
    p: int
    partition: Partition
    dim: Optional[int] = None
    h0_oracle: Optional[int] = None
    h0_criterion: Optional[int] = None
    h1_oracle: Optional[int] = None
    h1_criterion: Optional[int] = None  # two-part shapes only
    error: Optional[str] = None

    @property
    def match(self) -> bool:
        if self.error is not None:
            return False
        if self.h0_oracle is not None and self.h0_oracle != self.h0_criterion:
            return False
        if self.h1_oracle is not None and self.h1_criterion is not None and self.h1_oracle != self.h1_criterion:
            return False
        return True

    def results(self) -> list[CohomologyResult]:
        out = []
        if self.h0_oracle is not None:
            out.append(CohomologyResult(0, self.h0_oracle, Source.ORACLE, self.p, self.partition))
        if self.h1_oracle is not None:
            out.append(CohomologyResult(1, self.h1_oracle, Source.ORACLE, self.p, self.partition))
        return out

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["partition"] = self.partition.to_json()
        rec["match"] = self.match
        return rec


def oracle_row(
    lam: Partition,
    p: int,
    degrees: Iterable[int],
    settings: Settings = DEFAULT_SETTINGS,
    raise_errors: bool = False,
) -> SweepRow:
    """One sweep row. Oracle errors are recorded in the row unless raise_errors is set."""
    degrees = set(degrees)
    h0_crit = james_h0(lam, p) if 0 in degrees else None
    h1_crit = h1_twopart_psi(lam.parts[0], lam.parts[1], p) if 1 in degrees and len(lam) == 2 else None
    try:
        rep = build_specht_rep(lam, p, settings)
        h0 = h0_dim(rep) if 0 in degrees else None
        h1 = h1_dim(rep, settings) if 1 in degrees else None
    except SpechtCohError as e:
        if raise_errors:
            raise
        logger.warning("oracle failed on %s mod %d: %s", lam, p, e)
        return SweepRow(int(p), lam, h0_criterion=h0_crit, h1_criterion=h1_crit, error=f"{type(e).__name__}: {e}")
    return SweepRow(int(p), lam, rep.dim, h0, h0_crit, h1, h1_crit)


def _sort_key(row: SweepRow) -> tuple:
    # by d, then decreasing lexicographic within d
    return (row.partition.d, tuple(-x for x in row.partition.parts))


def oracle_sweep(
    d_max: int,
    p: int,
    degrees: Iterable[int] = (0, 1),
    settings: Settings = DEFAULT_SETTINGS,
    d_min: int = 1,
) -> list[SweepRow]:
    p = Prime(p)
    degrees = tuple(sorted(set(degrees)))
    if not set(degrees) <= {0, 1}:
        raise ValueError(f"degrees must be among 0 and 1, got {degrees}")
    shapes = [lam for d in range(d_min, d_max + 1) for lam in enumerate_partitions(d, settings=settings)]
    rows = Parallel(n_jobs=settings.threads)(
        delayed(oracle_row)(lam, int(p), degrees, settings) for lam in shapes
    )
    return sorted(rows, key=_sort_key)


def to_frame(rows: list[SweepRow]) -> pd.DataFrame:
    records = []
    for row in rows:
        rec = row.to_record()
        rec["partition"] = str(row.partition)
        records.append(rec)
    df = pd.DataFrame.from_records(records, columns=COLUMNS)
    return df


def format_table(rows: list[SweepRow]) -> str:
    df = to_frame(rows)
    for col in ("dim", "h0_oracle", "h0_criterion", "h1_oracle", "h1_criterion"):
        df[col] = df[col].map(lambda v: "—" if v is None or pd.isna(v) else str(int(v)))
    df["error"] = df["error"].fillna("")
    return df.to_string(index=False)


def to_json_lines(rows: list[SweepRow]) -> str:
    return "".join(json.dumps(row.to_record(), sort_keys=True) + "\n" for row in rows)

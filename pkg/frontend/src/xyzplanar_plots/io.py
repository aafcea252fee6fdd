"""Readers for the experiment results CSV and the fit JSON.

These are pure readers: no physics is recomputed here.  The CSV schema is
one row per grid cell with the columns listed in REQUIRED_COLUMNS; the fit
JSON carries the scaling-model parameters (p_c, nu, A, B, C).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass


class SchemaError(ValueError):
    """Input file does not match the expected schema."""


REQUIRED_COLUMNS = [
    "kind",
    "decoder",
    "d",
    "p",
    "eta_or_custom",
    "px",
    "py",
    "pz",
    "trials",
    "fail_x",
    "fail_z",
    "fail_any",
    "rate_any",
    "se_any",
    "seed",
]


@dataclass(frozen=True)
class ResultRow:
    kind: str
    decoder: str
    d: int
    p: float
    eta_or_custom: str
    px: float
    py: float
    pz: float
    trials: int
    fail_x: int
    fail_z: int
    fail_any: int
    rate_any: float
    se_any: float

    @property
    def rate_x(self) -> float:
        return self.fail_x / self.trials

    @property
    def rate_z(self) -> float:
        return self.fail_z / self.trials

    def rate(self, category: str) -> float:
        return {"any": self.rate_any, "x": self.rate_x, "z": self.rate_z}[category]

    @property
    def eta(self) -> float:
        if self.eta_or_custom == "custom":
            raise SchemaError("row has a custom noise triple, not a numeric bias")
        return float(self.eta_or_custom)


def read_results(path: str) -> list[ResultRow]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file")
        missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise SchemaError(f"{path}: missing columns {missing}")
        rows = []
        for raw in reader:
            try:
                rows.append(
                    ResultRow(
                        kind=raw["kind"],
                        decoder=raw["decoder"],
                        d=int(raw["d"]),
                        p=float(raw["p"]),
                        eta_or_custom=raw["eta_or_custom"],
                        px=float(raw["px"]),
                        py=float(raw["py"]),
                        pz=float(raw["pz"]),
                        trials=int(raw["trials"]),
                        fail_x=int(raw["fail_x"]),
                        fail_z=int(raw["fail_z"]),
                        fail_any=int(raw["fail_any"]),
                        rate_any=float(raw["rate_any"]),
                        se_any=float(raw["se_any"]),
                    )
                )
            except (KeyError, ValueError) as exc:
                raise SchemaError(f"{path}: bad row {raw}: {exc}") from None
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


@dataclass(frozen=True)
class ScalingFit:
    p_c: float
    nu: float
    A: float
    B: float
    C: float

    def x(self, d, p):
        return (p - self.p_c) * d ** (1.0 / self.nu)

    def model(self, x):
        return self.A + self.B * x + self.C * x * x


def read_fit(path: str) -> ScalingFit:
    with open(path) as fh:
        doc = json.load(fh)
    try:
        return ScalingFit(
            p_c=float(doc["p_c"]),
            nu=float(doc["nu"]),
            A=float(doc["A"]),
            B=float(doc["B"]),
            C=float(doc["C"]),
        )
    except KeyError as exc:
        raise SchemaError(f"{path}: fit JSON missing {exc.args[0]}") from None

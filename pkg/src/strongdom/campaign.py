"""Seeded verification campaigns with CSV and JSON reports."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .bounds import THEOREMS
from .families import SamplingLimits, sample_instance
from .verify import Verification, verify_instance

__all__ = ["CampaignConfig", "CampaignReport", "run_campaign", "CSV_COLUMNS", "CSV_VERSION"]

CSV_VERSION = 1
CSV_COLUMNS = (
    "instance_id", "theorem", "seed", "lower_raw", "lower", "upper", "exact",
    "holds_lower", "holds_upper", "tight_lower", "tight_upper",
    "construction_size", "construction_valid", "timed_out", "violation", "flagged", "digest",
)

# Checked by default; the conjecture runs only when asked for.
DEFAULT_THEOREMS = tuple(t for t in THEOREMS if t != "2-gluing-lower-Kr")


@dataclass
class CampaignConfig:
    theorems: tuple[str, ...] = DEFAULT_THEOREMS
    samples: int = 200
    seed: int = 0
    timeout: float | None = 30.0
    limits: SamplingLimits = field(default_factory=lambda: SamplingLimits(min_order=2))
    cross_check: bool = False
    workers: int = 1

    def to_dict(self) -> dict:
        return {"theorems": list(self.theorems), "samples": self.samples, "seed": self.seed,
                "timeout": self.timeout, "limits": self.limits.to_dict(),
                "cross_check": self.cross_check}

    @property
    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def instance_seed(seed: int, theorem: str, index: int) -> str:
    return f"{seed}:{theorem}:{index}"


def _run_one(args) -> tuple[str, int, dict]:
    theorem, index, cfg = args
    rng = random.Random(instance_seed(cfg.seed, theorem, index))
    inst = sample_instance(theorem, rng, cfg.limits)
    res = verify_instance(theorem, inst, timeout=cfg.timeout, cross_check=cfg.cross_check)
    return theorem, index, _row(res, theorem, index, cfg.seed)


def _row(res: Verification, theorem: str, index: int, seed: int) -> dict:
    rep = res.report
    cons = res.construction
    return {
        "instance_id": f"{theorem}#{index:05d}",
        "theorem": theorem,
        "seed": instance_seed(seed, theorem, index),
        "lower_raw": rep.lower_raw,
        "lower": rep.lower,
        "upper": rep.upper,
        "exact": rep.exact,
        "holds_lower": rep.holds_lower,
        "holds_upper": rep.holds_upper,
        "tight_lower": rep.tight_lower,
        "tight_upper": rep.tight_upper,
        "construction_size": None if cons is None else cons.size,
        "construction_valid": None if cons is None else cons.valid,
        "timed_out": res.timed_out,
        "violation": res.violation,
        "flagged": res.flagged,
        "digest": rep.digest,
        "_detail": res.to_dict(),
    }


@dataclass
class CampaignReport:
    config: CampaignConfig
    rows: list[dict]

    def _count(self, key: str, theorem: str | None = None) -> int:
        return sum(1 for r in self.rows if r[key] and (theorem is None or r["theorem"] == theorem))

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.rows if r["violation"]]

    @property
    def flagged(self) -> list[dict]:
        return [r for r in self.rows if r["flagged"]]

    @property
    def timeouts(self) -> list[dict]:
        return [r for r in self.rows if r["timed_out"]]

    def summary(self) -> dict:
        per = {}
        for t in self.config.theorems:
            rows = [r for r in self.rows if r["theorem"] == t]
            per[t] = {
                "instances": len(rows),
                "holds": sum(1 for r in rows if r["holds_lower"] and r["holds_upper"]),
                "tight_lower": self._count("tight_lower", t),
                "tight_upper": self._count("tight_upper", t),
                "violations": self._count("violation", t),
                "flagged": self._count("flagged", t),
                "timeouts": self._count("timed_out", t),
            }
        return per

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# strongdom campaign csv v{CSV_VERSION}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(["" if r[c] is None else r[c] for c in CSV_COLUMNS])
        return buf.getvalue()

    def to_json(self) -> dict:
        # Full reproduction data only for rows that need attention.
        def detail(r):
            d = dict(r["_detail"])
            d["instance_id"] = r["instance_id"]
            d["seed"] = r["seed"]
            return d

        return {
            "provenance": {"tool": "strongdom", "version": __version__,
                           "config": self.config.to_dict(), "config_hash": self.config.digest},
            "summary": self.summary(),
            "totals": {"instances": len(self.rows), "violations": len(self.violations),
                       "flagged": len(self.flagged), "timeouts": len(self.timeouts)},
            "rows": [{c: r[c] for c in CSV_COLUMNS} for r in self.rows],
            "violations": [detail(r) for r in self.violations],
            "flagged": [detail(r) for r in self.flagged],
            "timeouts": [detail(r) for r in self.timeouts],
        }

    def write(self, out: str | Path) -> tuple[Path, Path]:
        """Write ``<out>.csv`` and ``<out>.json``."""
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        csv_path = out.with_suffix(".csv")
        json_path = out.with_suffix(".json")
        csv_path.write_text(self.to_csv())
        json_path.write_text(json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n")
        return csv_path, json_path


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    for t in cfg.theorems:
        if t not in THEOREMS:
            raise ValueError(f"unknown theorem id {t!r}")
    tasks = [(t, i, cfg) for t in cfg.theorems for i in range(cfg.samples)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=16))
    else:
        results = [_run_one(t) for t in tasks]
    rows = [row for _, _, row in sorted(results, key=lambda x: (x[2]["instance_id"]))]
    return CampaignReport(cfg, rows)

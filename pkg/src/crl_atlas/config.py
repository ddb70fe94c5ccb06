"""Shared run configuration, echoed verbatim into every output artifact."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    tol_on: float = 1e-8
    tol_off: float = 1e-3
    rank_samples: int = 2000
    multistarts: int = 50
    output_format: str = "json"

    def __post_init__(self) -> None:
        if self.tol_on <= 0 or self.tol_off <= 0:
            raise ValueError("tolerances must be positive")
        if self.tol_on > self.tol_off:
            raise ValueError("tol_on must not exceed tol_off")
        if self.rank_samples < 0 or self.multistarts < 0:
            raise ValueError("budgets must be nonnegative")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError("output_format must be json, csv or text")

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "tol_on": self.tol_on,
            "tol_off": self.tol_off,
            "rank_samples": self.rank_samples,
            "multistarts": self.multistarts,
            "output_format": self.output_format,
        }

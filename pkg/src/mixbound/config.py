"""Experiment configuration: one JSON document driving graph, chain,
parameter, solver, and cap choices. Round-trips losslessly."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .solvers import SOLVER_NAMES

DEFAULT_CAPS = {
    "expansion_bruteforce": 20,
    "enumeration": 10 ** 7,
    "mixing_steps": 10 ** 6,
    "good_walk_retries": 10 ** 4,
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Inputs for a benchmark run. The seed is mandatory because every
    run samples instances (and possibly solver starts)."""

    graph: str
    chain: str
    seed: int
    trials: int = 10
    solvers: tuple[str, ...] = ("steepest", "warm-start", "exhaustive")
    T: int | None = None
    L: int | None = None
    out: str | None = None
    format: str = "csv"
    caps: dict = field(default_factory=lambda: dict(DEFAULT_CAPS))

    def __post_init__(self):
        if self.seed is None:
            raise InputError("a seed is required")
        if self.trials < 1:
            raise InputError(f"trials must be >= 1, got {self.trials}")
        if self.format not in ("csv", "json"):
            raise InputError(f"format must be csv or json, got {self.format!r}")
        for s in self.solvers:
            if s not in SOLVER_NAMES:
                raise InputError(f"unknown solver {s!r}; expected one of {SOLVER_NAMES}")
        if (self.T is None) != (self.L is None):
            raise InputError("override T and L together or not at all")
        unknown = set(self.caps) - set(DEFAULT_CAPS)
        if unknown:
            raise InputError(f"unknown cap names: {sorted(unknown)}")

    def cap(self, name: str) -> int:
        return int(self.caps.get(name, DEFAULT_CAPS[name]))

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "chain": self.chain,
            "seed": self.seed,
            "trials": self.trials,
            "solvers": list(self.solvers),
            "T": self.T,
            "L": self.L,
            "out": self.out,
            "format": self.format,
            "caps": dict(self.caps),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        try:
            return cls(
                graph=doc["graph"],
                chain=doc["chain"],
                seed=doc["seed"],
                trials=doc.get("trials", 10),
                solvers=tuple(doc.get("solvers", SOLVER_NAMES)),
                T=doc.get("T"),
                L=doc.get("L"),
                out=doc.get("out"),
                format=doc.get("format", "csv"),
                caps={**DEFAULT_CAPS, **doc.get("caps", {})},
            )
        except KeyError as exc:
            raise InputError(f"config is missing required field {exc}") from exc

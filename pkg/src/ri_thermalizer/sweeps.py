"""Parameter sweeps over the collision model, with CSV output.

Sweep configurations are flat ``key = value`` text (``#`` starts a
comment).  Grids are either ``start:stop:count`` (linear) or an explicit
comma list.  Supported kinds:

* ``NstarVsJtau``       n* against the interaction product J*tau
* ``NstarVsBeta``       n* against the target inverse temperature
* ``TsimVsBeta``        simulation time against beta (SL crossing by default)
* ``TsimVsEpsilon``     simulation time against the precision target
* ``RandomEnsembleVsBeta``  mean n* of the fully randomized interaction

Every sweep starts from the maximally mixed state.  Records are emitted
as ``point,value,stderr,reachable`` with 12 significant digits; points
whose run hit the collision or time cap carry ``reachable=false`` with
the cap in the value field.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .collisions import CollisionConfig
from .errors import ConfigInvalid, IoError
from .models import ModelSpec, RandomFull, SystemSpec, AncillaSpec, flip_flop_model
from .simtime import nstar_simulated, tsim_simulated_sl

KINDS = (
    "NstarVsJtau",
    "NstarVsBeta",
    "TsimVsBeta",
    "TsimVsEpsilon",
    "RandomEnsembleVsBeta",
)
ENGINES = ("BruteForce", "Recursion", "OdeSL")

_DEFAULT_ENGINE = {
    "NstarVsJtau": "Recursion",
    "NstarVsBeta": "Recursion",
    "TsimVsBeta": "OdeSL",
    "TsimVsEpsilon": "OdeSL",
    "RandomEnsembleVsBeta": "BruteForce",
}


@dataclass(frozen=True)
class SweepSpec:
    """Validated sweep description; see module docstring for the kinds."""

    kind: str
    grid: tuple[float, ...]
    d: int = 3
    omega: float = 1.0
    beta: float = 1.0
    j_tau: float = math.pi / 2
    j: float = 1e-3
    gamma: float = 1.0
    epsilon: float = 1e-4
    engine: str = ""
    seed: int = 0
    repetitions: int = 1
    n_max: int = 100_000
    t_max: float = 1e4
    lo: float = 1e-3
    hi: float = math.pi * 1e-3
    tau: float = 100.0


@dataclass(frozen=True)
class SweepRecord:
    """One grid point: swept value, result, ensemble stderr, cap flag."""

    point: float
    value: float
    stderr: float
    reachable: bool


def _validated(spec: SweepSpec) -> SweepSpec:
    if spec.kind not in KINDS:
        raise ConfigInvalid(f"unknown kind {spec.kind!r}; expected one of {KINDS}")
    if not spec.grid:
        raise ConfigInvalid("grid must be nonempty")
    if any(b <= a for a, b in zip(spec.grid, spec.grid[1:])):
        raise ConfigInvalid("grid must be strictly increasing")
    engine = spec.engine or _DEFAULT_ENGINE[spec.kind]
    if engine not in ENGINES:
        raise ConfigInvalid(f"unknown engine {engine!r}; expected one of {ENGINES}")
    if spec.kind in ("NstarVsJtau", "NstarVsBeta") and engine == "OdeSL":
        raise ConfigInvalid(f"engine OdeSL cannot produce collision counts for {spec.kind}")
    if spec.kind == "RandomEnsembleVsBeta" and engine != "BruteForce":
        raise ConfigInvalid("RandomEnsembleVsBeta requires engine BruteForce")
    if not 0.0 < spec.epsilon < 1.0:
        raise ConfigInvalid("epsilon must lie in (0, 1)")
    if spec.kind == "TsimVsEpsilon" and not all(0.0 < e < 1.0 for e in spec.grid):
        raise ConfigInvalid("epsilon grid values must lie in (0, 1)")
    if spec.repetitions < 1:
        raise ConfigInvalid("repetitions must be >= 1")
    if spec.d < 2:
        raise ConfigInvalid("d must be >= 2")
    if spec.j <= 0 or spec.tau <= 0:
        raise ConfigInvalid("j and tau must be positive")
    if engine == "OdeSL" and spec.gamma <= 0:
        raise ConfigInvalid("gamma must be positive for the OdeSL engine")
    if spec.kind == "RandomEnsembleVsBeta" and not spec.lo < spec.hi:
        raise ConfigInvalid("need lo < hi for the randomized couplings")
    return replace(spec, engine=engine)


# ---------------------------------------------------------------------------
# Point evaluation
# ---------------------------------------------------------------------------


def _discrete_point(spec: SweepSpec, beta: float, j_tau: float, epsilon: float,
                    engine: str) -> tuple[float, bool]:
    tau = j_tau / spec.j
    model = flip_flop_model(spec.d, spec.omega, beta, spec.j)
    cfg = CollisionConfig(tau=tau, n_max=spec.n_max, epsilon=epsilon)
    rho0 = np.eye(spec.d, dtype=complex) / spec.d
    kernel = "recursion" if engine == "Recursion" else "brute_force"
    res = nstar_simulated(rho0, model, cfg, engine=kernel)
    if res.reachable:
        return float(res.n_star), True
    return float(spec.n_max), False


def _sl_point(spec: SweepSpec, beta: float, epsilon: float) -> tuple[float, bool]:
    p_a = 1.0 / (1.0 + math.exp(-beta * spec.omega))
    p0 = np.full(spec.d, 1.0 / spec.d)
    res = tsim_simulated_sl(p0, p_a, spec.gamma, epsilon, t_max=spec.t_max)
    if res.reachable:
        return float(res.t_sim), True
    return float(spec.t_max), False


def _ensemble_rep(spec: SweepSpec, beta: float, point_index: int, rep: int) -> tuple[float, bool]:
    seed = int(np.random.SeedSequence([spec.seed, point_index, rep]).generate_state(1, np.uint64)[0])
    model = ModelSpec(
        system=SystemSpec(d=spec.d, omega=spec.omega),
        ancilla=AncillaSpec(omega=spec.omega, beta=beta),
        interaction=RandomFull(lo=spec.lo, hi=spec.hi, seed=seed),
    )
    cfg = CollisionConfig(tau=spec.tau, n_max=spec.n_max, epsilon=spec.epsilon)
    rho0 = np.eye(spec.d, dtype=complex) / spec.d
    res = nstar_simulated(rho0, model, cfg, engine="brute_force")
    if res.reachable:
        return float(res.n_star), True
    return float(spec.n_max), False


def _evaluate_task(spec: SweepSpec, point_index: int, rep: int) -> tuple[float, bool]:
    point = spec.grid[point_index]
    kind = spec.kind
    if kind == "NstarVsJtau":
        return _discrete_point(spec, spec.beta, point, spec.epsilon, spec.engine)
    if kind == "NstarVsBeta":
        return _discrete_point(spec, point, spec.j_tau, spec.epsilon, spec.engine)
    if kind == "TsimVsBeta":
        if spec.engine == "OdeSL":
            return _sl_point(spec, point, spec.epsilon)
        value, ok = _discrete_point(spec, point, spec.j_tau, spec.epsilon, spec.engine)
        return value * (spec.j_tau / spec.j), ok
    if kind == "TsimVsEpsilon":
        if spec.engine == "OdeSL":
            return _sl_point(spec, spec.beta, point)
        value, ok = _discrete_point(spec, spec.beta, spec.j_tau, point, spec.engine)
        return value * (spec.j_tau / spec.j), ok
    if kind == "RandomEnsembleVsBeta":
        return _ensemble_rep(spec, point, point_index, rep)
    raise ConfigInvalid(f"unknown kind {kind!r}")


def _task_worker(args: tuple[SweepSpec, int, int]) -> tuple[float, bool]:
    return _evaluate_task(*args)


def run_sweep(spec: SweepSpec, parallel: int = 1) -> list[SweepRecord]:
    """Evaluate every grid point (and repetition) of a validated sweep.

    Tasks are independent; with parallel > 1 they run in a process pool,
    and results are assembled in grid order regardless of completion
    order, so output is deterministic for a given spec and seed.
    """
    spec = _validated(spec)
    reps = spec.repetitions if spec.kind == "RandomEnsembleVsBeta" else 1
    tasks = [(spec, pi, r) for pi in range(len(spec.grid)) for r in range(reps)]
    if parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            outcomes = list(pool.map(_task_worker, tasks, chunksize=1))
    else:
        outcomes = [_task_worker(t) for t in tasks]

    records = []
    for pi, point in enumerate(spec.grid):
        chunk = outcomes[pi * reps : (pi + 1) * reps]
        values = np.array([v for v, _ in chunk])
        reachable = all(ok for _, ok in chunk)
        stderr = 0.0
        if reps > 1:
            stderr = float(values.std(ddof=1) / math.sqrt(reps))
        records.append(
            SweepRecord(point=float(point), value=float(values.mean()),
                        stderr=stderr, reachable=reachable)
        )
    return records


# ---------------------------------------------------------------------------
# CSV and config I/O
# ---------------------------------------------------------------------------


def format_csv(records: list[SweepRecord]) -> str:
    lines = ["point,value,stderr,reachable"]
    for rec in records:
        flag = "true" if rec.reachable else "false"
        lines.append(f"{rec.point:.12g},{rec.value:.12g},{rec.stderr:.12g},{flag}")
    return "\n".join(lines) + "\n"


def emit_csv(records: list[SweepRecord], destination) -> None:
    """Write records as CSV to a path or an open text stream."""
    text = format_csv(records)
    try:
        if hasattr(destination, "write"):
            destination.write(text)
        else:
            with open(destination, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {destination!r}: {exc}") from exc


def parse_csv(text: str) -> list[SweepRecord]:
    """Inverse of emit_csv, for round-trip checks and downstream tooling."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    records = []
    for line in lines[1:]:
        point, value, stderr, flag = line.split(",")
        records.append(
            SweepRecord(float(point), float(value), float(stderr), flag == "true")
        )
    return records


_INT_KEYS = {"d", "seed", "repetitions", "n_max"}
_FLOAT_KEYS = {
    "omega", "beta", "jtau", "j", "gamma", "epsilon", "t_max", "lo", "hi", "tau",
}
_KEY_TO_FIELD = {"jtau": "j_tau"}


def _parse_grid(raw: str, lineno: int) -> tuple[float, ...]:
    try:
        if ":" in raw:
            parts = raw.split(":")
            if len(parts) != 3:
                raise ValueError("expected start:stop:count")
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            if count < 1:
                raise ValueError("count must be >= 1")
            return tuple(np.linspace(start, stop, count))
        return tuple(float(tok) for tok in raw.split(","))
    except ValueError as exc:
        raise ConfigInvalid(f"line {lineno}: bad grid {raw!r} ({exc})") from exc


def parse_config(text: str) -> SweepSpec:
    """Parse and validate flat key-value sweep configuration text."""
    values: dict = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigInvalid(f"line {lineno}: expected 'key = value', got {raw_line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key == "kind":
            values["kind"] = raw
        elif key == "grid":
            values["grid"] = _parse_grid(raw, lineno)
        elif key == "engine":
            values["engine"] = raw
        elif key in _INT_KEYS:
            try:
                values[key] = int(raw)
            except ValueError as exc:
                raise ConfigInvalid(f"line {lineno}: key {key!r} needs an integer") from exc
        elif key in _FLOAT_KEYS:
            try:
                values[_KEY_TO_FIELD.get(key, key)] = float(raw)
            except ValueError as exc:
                raise ConfigInvalid(f"line {lineno}: key {key!r} needs a number") from exc
        else:
            raise ConfigInvalid(f"line {lineno}: unknown key {key!r}")
    if "kind" not in values:
        raise ConfigInvalid("missing required key 'kind'")
    if "grid" not in values:
        raise ConfigInvalid("missing required key 'grid'")
    return _validated(SweepSpec(**values))

"""Decision sessions: per-expert judgment collection with persistence.

A session names the alternatives once and tracks one partially filled
judgment matrix per expert, each expert carrying a weight. Judgments are
entered one upper-triangle pair at a time; the reciprocal cell is always
derived, never stored, so no persisted state can violate reciprocity.

A :class:`SessionStore` keeps sessions in memory and, when given a path,
snapshots them all to a single JSON file after every mutation. Writes go
through a temp file and an atomic rename, so a crash never leaves a
half-written snapshot behind. Each session carries a version counter
bumped on every accepted write; callers that pass the version they last
saw get a ConflictError instead of silently losing a concurrent edit
(plain writes stay last-writer-wins).
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .errors import (
    ConflictError,
    IncompleteMatrix,
    IoError,
    NonPositiveEntry,
    NotFound,
    ScaleViolation,
    ValidationError,
    WeightError,
)
from .lls import DEFAULT_CONSISTENCY_TOL
from .matrix import (
    SAATY_MAX,
    SAATY_MIN,
    JudgmentMatrix,
    ScaleMode,
    validate_judgment_matrix,
)

SCHEMA_VERSION = 1

METHODS = ("lls", "se", "both")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


@dataclass
class SessionSettings:
    scale_mode: ScaleMode = ScaleMode.FREE_POSITIVE
    consistency_tol: float = DEFAULT_CONSISTENCY_TOL
    method: str = "lls"

    def __post_init__(self):
        if isinstance(self.scale_mode, str):
            self.scale_mode = ScaleMode(self.scale_mode)
        self.consistency_tol = float(self.consistency_tol)
        if self.consistency_tol <= 0.0:
            raise ValidationError("consistency_tol must be positive")
        if self.method not in METHODS:
            raise ValidationError(f"method must be one of {METHODS}, got {self.method!r}")

    def to_dict(self) -> dict:
        return {
            "scale_mode": self.scale_mode.value,
            "consistency_tol": self.consistency_tol,
            "method": self.method,
        }


@dataclass
class ExpertSlot:
    """One expert's weight and partially filled upper triangle."""

    name: str
    alpha: float
    judgments: dict = field(default_factory=dict)

    def required(self, n: int) -> int:
        return n * (n - 1) // 2

    def complete(self, n: int) -> bool:
        return len(self.judgments) == self.required(n)

    def partial_entries(self, n: int) -> np.ndarray:
        """Unit diagonal, judged pairs mirrored, NaN where not yet judged."""
        entries = np.full((n, n), np.nan)
        np.fill_diagonal(entries, 1.0)
        for (i, j), value in self.judgments.items():
            entries[i, j] = value
            entries[j, i] = 1.0 / value
        return entries


@dataclass
class DecisionSession:
    """Alternatives, experts with their matrices-in-progress, settings."""

    session_id: str
    labels: tuple[str, ...]
    experts: list[ExpertSlot]
    settings: SessionSettings = field(default_factory=SessionSettings)
    version: int = 1
    created_at: str = field(default_factory=_now)
    updated_at: str = field(default_factory=_now)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.experts)

    def expert(self, e: int) -> ExpertSlot:
        if not (0 <= e < len(self.experts)):
            raise NotFound(f"session {self.session_id!r} has no expert {e}")
        return self.experts[e]

    def expert_matrix(self, e: int) -> JudgmentMatrix:
        """The validated matrix for one expert; requires all pairs judged."""
        slot = self.expert(e)
        if not slot.complete(self.n):
            raise IncompleteMatrix(
                f"expert {e} has {len(slot.judgments)} of "
                f"{slot.required(self.n)} judgments"
            )
        return validate_judgment_matrix(
            slot.partial_entries(self.n),
            scale_mode=self.settings.scale_mode,
            labels=self.labels,
        )

    def to_snapshot(self) -> dict:
        return {
            "id": self.session_id,
            "labels": list(self.labels),
            "experts": [
                {
                    "name": s.name,
                    "alpha": s.alpha,
                    "judgments": [
                        [i, j, value] for (i, j), value in sorted(s.judgments.items())
                    ],
                }
                for s in self.experts
            ],
            "settings": self.settings.to_dict(),
            "version": self.version,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }

    @classmethod
    def from_snapshot(cls, obj: dict) -> "DecisionSession":
        experts = [
            ExpertSlot(
                name=s["name"],
                alpha=float(s["alpha"]),
                judgments={(int(i), int(j)): float(v) for i, j, v in s["judgments"]},
            )
            for s in obj["experts"]
        ]
        return cls(
            session_id=obj["id"],
            labels=tuple(obj["labels"]),
            experts=experts,
            settings=SessionSettings(**obj["settings"]),
            version=int(obj["version"]),
            created_at=obj["created_at"],
            updated_at=obj["updated_at"],
        )


def _validated_experts(experts) -> list[ExpertSlot]:
    if not experts:
        raise ValidationError("a session needs at least one expert")
    slots = []
    for entry in experts:
        name = entry.get("name") if isinstance(entry, dict) else None
        alpha = entry.get("alpha") if isinstance(entry, dict) else None
        if not isinstance(name, str) or not name:
            raise ValidationError("each expert needs a non-empty name")
        try:
            alpha = float(alpha)
        except (TypeError, ValueError):
            raise ValidationError(f"expert {name!r} needs a numeric alpha") from None
        slots.append(ExpertSlot(name=name, alpha=alpha))
    alphas = np.array([s.alpha for s in slots])
    if not np.all(np.isfinite(alphas)) or not np.all(alphas > 0.0):
        raise WeightError("expert weights must all be positive")
    total = alphas.sum()
    if not (1.0 - 1e-6 <= total <= 1.0 + 1e-6):
        raise WeightError(f"expert weights sum to {total!r}, expected 1")
    for s, alpha in zip(slots, alphas / total):
        s.alpha = float(alpha)
    return slots


class SessionStore:
    """In-memory session registry with an optional JSON snapshot file."""

    def __init__(self, path=None, id_factory=None):
        self._path = Path(path) if path is not None else None
        self._id_factory = id_factory or (lambda: uuid.uuid4().hex)
        self._lock = threading.RLock()
        self._sessions: dict[str, DecisionSession] = {}
        if self._path is not None and self._path.exists():
            self._load()

    @property
    def path(self):
        return self._path

    def _load(self) -> None:
        try:
            obj = json.loads(self._path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise IoError(f"cannot read session snapshot {self._path}: {exc}") from None
        if not isinstance(obj, dict) or obj.get("schema_version") != SCHEMA_VERSION:
            raise IoError(
                f"session snapshot {self._path} has unsupported schema "
                f"{obj.get('schema_version')!r}"
            )
        try:
            self._sessions = {
                sid: DecisionSession.from_snapshot(s)
                for sid, s in obj["sessions"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise IoError(f"session snapshot {self._path} is malformed: {exc}") from None

    def _persist(self) -> None:
        if self._path is None:
            return
        obj = {
            "schema_version": SCHEMA_VERSION,
            "sessions": {
                sid: s.to_snapshot() for sid, s in sorted(self._sessions.items())
            },
        }
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
        tmp = self._path.with_name(self._path.name + ".tmp")
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            tmp.write_text(text, encoding="utf-8")
            os.replace(tmp, self._path)
        except OSError as exc:
            raise IoError(f"cannot write session snapshot {self._path}: {exc}") from None

    def flush(self) -> None:
        """Rewrite the snapshot now (shutdown hook; mutations already persist)."""
        with self._lock:
            self._persist()

    def create_session(
        self,
        labels,
        experts=None,
        settings: SessionSettings | dict | None = None,
    ) -> DecisionSession:
        labels = tuple(labels or ())
        if len(labels) < 2:
            raise ValidationError("a session needs at least 2 labeled alternatives")
        if not all(isinstance(s, str) and s for s in labels):
            raise ValidationError("labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            raise ValidationError("labels must be distinct")
        if experts is None:
            experts = [{"name": "expert 1", "alpha": 1.0}]
        if settings is None:
            settings = SessionSettings()
        elif isinstance(settings, dict):
            unknown = set(settings) - {"scale_mode", "consistency_tol", "method"}
            if unknown:
                raise ValidationError(f"unknown settings: {sorted(unknown)}")
            try:
                settings = SessionSettings(**settings)
            except ValueError as exc:
                raise ValidationError(f"bad settings: {exc}") from None
        with self._lock:
            session = DecisionSession(
                session_id=self._id_factory(),
                labels=labels,
                experts=_validated_experts(experts),
                settings=settings,
            )
            self._sessions[session.session_id] = session
            self._persist()
            return session

    def get_session(self, session_id: str) -> DecisionSession:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise NotFound(f"no session {session_id!r}") from None

    def list_sessions(self) -> list[DecisionSession]:
        with self._lock:
            return sorted(self._sessions.values(), key=lambda s: (s.created_at, s.session_id))

    def delete_session(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise NotFound(f"no session {session_id!r}")
            del self._sessions[session_id]
            self._persist()

    def update_judgment(
        self,
        session_id: str,
        expert: int,
        i: int,
        j: int,
        value: float,
        expected_version: int | None = None,
    ) -> DecisionSession:
        """Record a_ij = value (and implicitly a_ji = 1/value) for one expert.

        Requires i < j: the upper triangle is the single source of truth
        and the diagonal is immutable. With expected_version given, a
        stale version raises ConflictError and changes nothing; without
        it, the last writer wins.
        """
        with self._lock:
            session = self.get_session(session_id)
            slot = session.expert(expert)
            if expected_version is not None and expected_version != session.version:
                raise ConflictError(
                    f"session {session_id!r} is at version {session.version}, "
                    f"caller expected {expected_version}"
                )
            if not (0 <= i < session.n and 0 <= j < session.n):
                raise ValidationError(f"indices ({i}, {j}) out of range for n={session.n}")
            if i >= j:
                raise ValidationError(
                    f"judgments address the upper triangle: need i < j, got ({i}, {j})"
                )
            value = float(value)
            if not np.isfinite(value) or value <= 0.0:
                raise NonPositiveEntry(f"judgment ({i}, {j}) must be a positive finite number")
            if session.settings.scale_mode is ScaleMode.STRICT_SAATY and not (
                SAATY_MIN <= value <= SAATY_MAX
            ):
                raise ScaleViolation(
                    f"judgment ({i}, {j}) = {value!r} outside the 1/9 .. 9 scale"
                )
            slot.judgments[(i, j)] = value
            session.version += 1
            session.updated_at = _now()
            self._persist()
            return session

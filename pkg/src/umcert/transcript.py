"""Machine-readable run transcripts: ordered verified stages plus an outcome.

A transcript records what a command was asked to do (the full inputs, so a
replay can re-verify without re-searching), the stages it went through with
their certificates and verified flags, and a final outcome.  The invariant
that a certified outcome implies every stage verified is enforced at
finishing time, and serialization is canonical (sorted keys, fixed
separators) so identical runs produce byte-identical transcripts.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field


def canonical_dumps(obj):
    """Deterministic JSON text for digests and byte-stable output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_digest(obj):
    return hashlib.sha256(canonical_dumps(obj).encode("ascii")).hexdigest()


class TranscriptError(ValueError):
    """A transcript violated its own invariants."""


@dataclass(frozen=True)
class Stage:
    """One verified step: a name, what it saw, and what it produced."""

    name: str
    inputs_digest: str
    certificate: object
    verified: bool

    def to_json(self):
        return {
            "name": self.name,
            "inputs_digest": self.inputs_digest,
            "certificate": self.certificate,
            "verified": self.verified,
        }

    @staticmethod
    def from_json(d):
        return Stage(
            name=d["name"],
            inputs_digest=d["inputs_digest"],
            certificate=d["certificate"],
            verified=bool(d["verified"]),
        )


@dataclass
class Transcript:
    """An append-only stage log that must be finished before serialization."""

    command: str
    inputs: dict
    seed: int | None = None
    stages: list = field(default_factory=list)
    outcome: dict | None = None

    def add_stage(self, name, certificate, verified):
        self.stages.append(
            Stage(
                name=name,
                inputs_digest=sha256_digest({"command": self.command, "inputs": self.inputs}),
                certificate=certificate,
                verified=bool(verified),
            )
        )

    def finish_certified(self):
        if not all(s.verified for s in self.stages):
            raise TranscriptError("cannot certify a transcript with unverified stages")
        self.outcome = {"status": "certified"}
        return self

    def finish_inconclusive(self, stage, detail=""):
        self.outcome = {"status": "inconclusive", "stage": stage, "detail": detail}
        return self

    def finish_error(self, kind, detail=""):
        self.outcome = {"status": "error", "kind": kind, "detail": detail}
        return self

    @property
    def certified(self):
        return self.outcome is not None and self.outcome.get("status") == "certified"

    def to_json(self):
        if self.outcome is None:
            raise TranscriptError("transcript is not finished")
        if self.outcome.get("status") == "certified" and not all(
            s.verified for s in self.stages
        ):
            raise TranscriptError("certified transcript carries an unverified stage")
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "stages": [s.to_json() for s in self.stages],
            "outcome": self.outcome,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def dumps(self):
        return canonical_dumps(self.to_json())

    @staticmethod
    def from_json(d):
        t = Transcript(
            command=d["command"],
            inputs=d["inputs"],
            seed=d.get("seed"),
        )
        t.stages = [Stage.from_json(s) for s in d.get("stages", [])]
        t.outcome = d.get("outcome")
        if t.outcome is None:
            raise TranscriptError("transcript has no outcome")
        if t.outcome.get("status") == "certified" and not all(s.verified for s in t.stages):
            raise TranscriptError("certified transcript carries an unverified stage")
        return t

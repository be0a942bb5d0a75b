"""The structured record every CLI command emits.

``timestamp`` holds the wall-clock time and the runtime; it is the only
field allowed to differ between two runs with the same inputs and seed.
"""

import datetime
import json
from dataclasses import asdict, dataclass, field
from importlib import resources

RESULTS = ("YES", "NO", "UNDECIDED", "pass", "fail", "found", "none", "ok", "error")

EXIT_CODES = {
    "YES": 0, "pass": 0, "found": 0, "ok": 0,
    "NO": 1, "fail": 1, "none": 1,
    "error": 2,
    "UNDECIDED": 3,
}


@dataclass
class Report:
    command: str
    inputs: dict
    result: str
    verdict: dict = None
    trail: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    seed: int = None
    data: dict = field(default_factory=dict)
    timestamp: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.result not in RESULTS:
            raise ValueError(f"unknown result {self.result!r}")
        if bool(self.counterexamples) != (self.result == "fail"):
            raise ValueError("counterexamples must be present exactly when the result is fail")

    @property
    def exit_code(self):
        return EXIT_CODES[self.result]

    def stamp(self, runtime):
        self.timestamp = {
            "at": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
            "runtime_s": round(runtime, 6),
        }
        return self

    def to_dict(self):
        return asdict(self)

    def to_json(self, deterministic=False):
        d = self.to_dict()
        if deterministic:
            d["timestamp"] = {}
        return json.dumps(d, indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        return cls(**d)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self):
        lines = [f"{self.command}: {self.result}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k}: {v}")
        if self.verdict:
            lines.append(f"  rule: {self.verdict['rule_id']}")
        for t in self.trail:
            note = f" [{t['note']}]" if t.get("note") else ""
            lines.append(f"  - {t['rule_id']}: {t['citation']}{note}")
        for k, v in self.data.items():
            if isinstance(v, list):
                lines.append(f"  {k}:")
                lines.extend(f"    {_line(item)}" for item in v)
            else:
                lines.append(f"  {k}: {_line(v)}")
        for k, v in self.stats.items():
            lines.append(f"  {k}: {v}")
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        for c in self.counterexamples:
            lines.append(f"  counterexample: {_line(c)}")
        return "\n".join(lines)


def _line(v):
    if isinstance(v, dict):
        return ", ".join(f"{k}={_line(x)}" for k, x in v.items())
    return str(v)


def load_schema():
    text = resources.files("sgbassian").joinpath("report_schema.json").read_text()
    return json.loads(text)

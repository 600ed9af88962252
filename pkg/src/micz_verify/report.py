"""Verification reports: one item per identity (per point where pointwise)."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any

PASS, FAIL, EXPECTED_FAIL = "pass", "fail", "expected-fail"
NORMAL_FORM, POINTWISE, FLOAT = "exact-normal-form", "exact-pointwise", "float"


class IdentityViolation(AssertionError):
    def __init__(self, item: "ReportItem"):
        super().__init__(f"{item.suite}/{item.id} failed at {item.witness}: {item.residual}")
        self.item = item


@dataclass
class ReportItem:
    suite: str
    id: str
    anchor: str
    strategy: str
    status: str
    witness: Any = None
    residual: Any = None
    millis: float | None = None


@dataclass
class VerificationReport:
    config: dict = field(default_factory=dict)
    items: list[ReportItem] = field(default_factory=list)

    def add(self, suite, id, anchor, strategy, ok, witness=None, residual=None,
            millis=None, expected_fail=False) -> ReportItem:
        if expected_fail:
            status = EXPECTED_FAIL if not ok else FAIL
        else:
            status = PASS if ok else FAIL
        item = ReportItem(suite, id, anchor, strategy, status, witness,
                          None if ok and not expected_fail and strategy != FLOAT else residual, millis)
        self.items.append(item)
        return item

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.items.extend(other.items)
        return self

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, EXPECTED_FAIL: 0}
        for item in self.items:
            counts[item.status] += 1
        return {"pass": counts[PASS], "fail": counts[FAIL], "expected_fail": counts[EXPECTED_FAIL]}

    @property
    def ok(self) -> bool:
        return all(item.status != FAIL for item in self.items)

    def failures(self) -> list[ReportItem]:
        return [item for item in self.items if item.status == FAIL]

    def select(self, suite: str | None = None, prefix: str | None = None) -> list[ReportItem]:
        return [it for it in self.items
                if (suite is None or it.suite == suite) and (prefix is None or it.id.startswith(prefix))]

    def raise_on_failure(self):
        bad = self.failures()
        if bad:
            raise IdentityViolation(bad[0])

    def to_dict(self, include_timings: bool = False) -> dict:
        items = []
        for it in self.items:
            d = asdict(it)
            if not include_timings:
                d["millis"] = None
            items.append(d)
        return {"config": self.config, "items": items, "summary": self.summary}

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls(data.get("config", {}), [ReportItem(**it) for it in data.get("items", [])])

    def to_text(self) -> str:
        lines = []
        for it in self.items:
            line = f"[{it.status:>13}] {it.suite:<12} {it.id:<40} {it.strategy}"
            if it.witness is not None:
                line += f" @ {_short(it.witness)}"
            if it.status != PASS and it.residual is not None:
                line += f" residual={_short(it.residual)}"
            lines.append(line)
        s = self.summary
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} expected_fail={s['expected_fail']}")
        return "\n".join(lines)


def _short(value, limit: int = 120) -> str:
    text = value if isinstance(value, str) else json.dumps(value)
    return text if len(text) <= limit else text[: limit - 3] + "..."


@contextmanager
def stopwatch():
    """Yields a one-element list receiving elapsed milliseconds."""
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = round((time.perf_counter() - t0) * 1000.0, 3)

"""Verification records and reports shared by every suite."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


PASS, FAIL = "pass", "fail"


@dataclass
class Record:
    id: str
    anchor: str
    status: str
    witness: object = None
    instances: int = 0

    def to_json(self):
        out = {"id": self.id, "anchor": self.anchor, "status": self.status,
               "instances": self.instances}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


@dataclass
class Report:
    suite: str
    params: dict
    records: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, rec):
        self.records.append(rec)
        return rec

    def check(self, id, anchor, ok, witness=None, instances=1):
        return self.add(Record(id, anchor, PASS if ok else FAIL,
                               None if ok else witness, instances))

    def extend(self, other):
        self.records.extend(other.records)
        self.extra.update(other.extra)

    @property
    def passed(self):
        return all(r.status == PASS for r in self.records)

    def failures(self):
        return [r for r in self.records if r.status != PASS]

    def summary(self):
        n = len(self.records)
        k = sum(r.status == PASS for r in self.records)
        out = {"total": n, "passed": k, "failed": n - k}
        out.update(self.extra)
        return out

    def to_json(self):
        return {"suite": self.suite,
                "params": {k: _plain(v) for k, v in self.params.items()},
                "records": [r.to_json() for r in self.records],
                "summary": {k: _plain(v) for k, v in self.summary().items()}}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def table(self):
        width = max([len(r.id) for r in self.records] + [2])
        lines = [f"{self.suite}  {_fmt_params(self.params)}"]
        for r in self.records:
            lines.append(f"  {r.id:<{width}}  {r.status:<4}  {r.anchor}")
        s = self.summary()
        lines.append(f"  {s['passed']}/{s['total']} passed")
        for k, v in self.extra.items():
            lines.append(f"  {k}: {_plain(v)}")
        return "\n".join(lines)


def _plain(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return str(v)


def _fmt_params(params):
    return " ".join(f"{k}={_plain(v)}" for k, v in params.items())

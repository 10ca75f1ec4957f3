"""Versioned JSON report documents."""

from __future__ import annotations

import json
from importlib import resources

from . import __version__

SCHEMA_VERSION = "1.0"


def _summary(checks, skipped):
    failed = [f"{c['claim_id']}@{c['instance_id']}" for c in checks if not c["verdict"]]
    forced = [f"{c['claim_id']}@{c['instance_id']}" for c in checks if not c["verdict"] and c["forced"]]
    return {
        "verdict": all(c["verdict"] for c in checks),
        "total": len(checks),
        "failed": failed,
        "forced_failures": forced,
        "skipped": len(skipped),
        "resource_limited": sum(1 for s in skipped if s["kind"] == "resource-limit"),
    }


def _key(c):
    return (c["claim_id"], c["instance_id"], json.dumps(c["witness"], sort_keys=True))


def build_report(command, instance_ids, checks, skipped, *, seed, limits, warnings=(), extra=None) -> dict:
    checks = sorted(checks, key=_key)
    skipped = sorted(skipped, key=lambda s: (s["instance_id"], s["op"], s["kind"], s["reason"]))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "command": command,
        "instance_id": ",".join(instance_ids),
        "instances": list(instance_ids),
        "seed": seed,
        "limits": {"degree_cap": limits.degree_cap, "pair_cap": limits.pair_cap},
        "timing": None,
        "summary": _summary(checks, skipped),
        "checks": checks,
        "skipped": skipped,
        "warnings": list(warnings),
    }
    if extra:
        doc.update(extra)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_schema() -> dict:
    return json.loads(resources.files("oideal").joinpath("schema/report-v1.json").read_text(encoding="utf-8"))


def summary_consistent(doc: dict) -> bool:
    return doc["summary"]["verdict"] == all(c["verdict"] for c in doc["checks"]) and \
        doc["summary"]["total"] == len(doc["checks"])

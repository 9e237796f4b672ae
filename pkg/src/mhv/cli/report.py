"""Deterministic JSON reports and their text summaries."""
import json
import sys


def build_report(suite_results, seed=None):
    report = {"suites": list(suite_results),
              "verdict": "pass" if all(s["failed"] == 0 for s in suite_results) else "fail"}
    if seed is not None:
        report["seed"] = seed
    return report


def dumps(report):
    return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def emit_report(report, path=None):
    """Write the canonical JSON (to ``path`` or stdout)."""
    text = dumps(report)
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text


def summary(report, timings=None):
    lines = []
    for i, s in enumerate(report["suites"]):
        t = f"  ({timings[i]:.1f}s)" if timings else ""
        status = "ok" if s["failed"] == 0 else "FAIL"
        lines.append(f"[{status}] {s['type']}#{s['index']}: {s['passed']} passed, "
                     f"{s['failed']} failed{t}")
        for c in s["counterexamples"][:5]:
            lines.append(f"    {c}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)

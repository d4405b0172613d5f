"""Regenerate the golden CLI reports under tests/golden/.

Runs the installed command-line entry point on the bundled example graphs
and freezes the JSON output.  Rerun after any intentional change to the
report schema, then review the diff before committing.
"""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
CASES = ["c3", "tree"]


def main() -> int:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name in CASES:
        graph = ROOT / "graphs" / f"{name}.txt"
        cmd = [sys.executable, "-m", "susygraph.cli", "report", str(graph), "--format", "json"]
        result = subprocess.run(cmd, capture_output=True, text=True)
        if result.returncode != 0:
            sys.stderr.write(f"{name}: exit {result.returncode}\n{result.stderr}")
            return 1
        out = GOLDEN / f"{name}_report.json"
        out.write_text(result.stdout)
        print(f"wrote {out.relative_to(ROOT)} ({len(result.stdout)} bytes)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

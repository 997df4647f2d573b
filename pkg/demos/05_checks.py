"""Running verification sweeps from Python and reading their reports.

The same sweeps are available as ``majdes check --suite NAME --max-n N``.
"""

import json
import tempfile
from pathlib import Path

from majdes import checks

with tempfile.TemporaryDirectory() as tmp:
    for name, max_n in [("unimodality", 20), ("catalan", 9), ("three-row", 14)]:
        out = Path(tmp) / f"{name}.json"
        report = checks.run_suite(name, max_n, out=out)
        print(f"{name:>12} max_n={max_n}: {report.verdict} "
              f"({report.tuples_checked} tuples, {report.elapsed_ms} ms)")
    print()
    print(json.dumps({k: v for k, v in json.loads(out.read_text()).items() if k != "counterexamples"},
                     indent=2, sort_keys=True))

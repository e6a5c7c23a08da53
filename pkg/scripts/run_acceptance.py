"""Run the acceptance gate and print one line per criterion."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-s", "tests/test_acceptance.py"],
        cwd=ROOT,
        capture_output=True,
        text=True,
        check=False,
    )
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith("[ACCEPT]") or ln.startswith("  d = 4")]
    print("\n".join(dict.fromkeys(lines)))
    print("acceptance:", "PASS" if proc.returncode == 0 else "FAIL")
    sys.exit(proc.returncode)

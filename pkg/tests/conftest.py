import os
import pathlib
import subprocess
import sys

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"


def run_cli(*args, stdin=None):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "idcolor.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr

"""Regenerate the golden CLI transcripts in corpus/.

Each case runs one CLI invocation and freezes its stdout and exit code.
Run from the repository root after an intentional output change:

    python3 tools/regen_corpus.py
"""

import io
import json
import sys
from contextlib import redirect_stdout
from pathlib import Path

from wcikit import cli

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

CASES = [
    ("check-qs-true", ["check", "8,8,8/2^4,3^5,5^3"]),
    ("check-qs-false", ["check", "8,8,8/2^3,3^4,5^3"]),
    ("check-index-json", ["check", "35/5,7,2^5,3^5", "--json"]),
    ("check-augmented-not-qs", ["check", "35,6/5,7,2^5,3^5", "--assert", "quasi_smooth"]),
    ("check-cy-smooth", ["check", "6,6/1^2,2^2,3^2"]),
    ("check-curve-json", ["check", "231,231,26/3^2,7^2,11^2,1^447", "--json"]),
    ("check-stripped-curve-assert", ["check", "231,231,26/11^2,7^2,3^2", "--assert", "smooth"]),
    ("base-locus-curve", ["base-locus", "231,231,26/3^2,7^2,11^2,1^447", "1"]),
    ("base-locus-free", ["base-locus", "6/1,2,3", "6", "--assert-empty"]),
    ("frobenius-2-3", ["frobenius", "2,3"]),
    ("frobenius-brauer-json", ["frobenius", "10,15,14,21", "--json"]),
    ("hilbert-x6-csv", ["hilbert", "6/1,2,3", "10"]),
    ("pair-witness", ["pair", "4/2,6"]),
    ("pair-equality", ["pair", "6,1/2,3"]),
    ("pair-split-json", ["pair", "6,6/2^2,3^2", "--h", "2", "--split", "3", "--json"]),
    ("enumerate-small", [
        "enumerate", "--max-codim", "1", "--max-vars", "3", "--max-weight", "3",
        "--max-degree", "6", "--quasi-smooth", "--well-formed", "--non-cone",
        "--fano", "--calabi-yau",
    ]),
    ("verify-prop-csv", [
        "verify", "prop-regular", "--max-codim", "2", "--max-vars", "4",
        "--max-weight", "8", "--max-degree", "16", "--csv",
    ]),
]


def main() -> int:
    CORPUS.mkdir(exist_ok=True)
    for name, argv in CASES:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = cli.run(argv)
        (CORPUS / f"{name}.json").write_text(
            json.dumps({"argv": argv, "exit": code}, indent=2) + "\n"
        )
        (CORPUS / f"{name}.out").write_text(buffer.getvalue())
        print(f"wrote {name} (exit {code}, {len(buffer.getvalue())} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

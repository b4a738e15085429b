"""Replay the golden CLI transcripts in corpus/ byte-for-byte."""

import json
from pathlib import Path

import pytest

from wcikit import cli

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
CASES = sorted(CORPUS.glob("*.json"), key=lambda p: p.name)


def test_corpus_present():
    assert len(CASES) >= 15


@pytest.mark.parametrize("case", CASES, ids=lambda p: p.stem)
def test_golden_transcript(case, capsys):
    spec = json.loads(case.read_text())
    expected = case.with_suffix(".out").read_text()
    code = cli.run(spec["argv"])
    out = capsys.readouterr().out
    assert code == spec["exit"]
    assert out == expected

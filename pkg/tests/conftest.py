import random
from pathlib import Path

import pytest

from convexcube import ALL, Relation

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

DIMS = ("Type", "Ville", "Éditeur")

# Tables 1 and 3 typed in by hand, independent of the CSV loader.
DOC1_ROWS = [
    (("Roman", "Marseille", "Gallimard"), 2),
    (("Roman", "Marseille", "Hachette"), 2),
    (("Scolaire", "Paris", "Hachette"), 1),
    (("Essai", "Paris", "Hachette"), 6),
    (("Scolaire", "Marseille", "Hachette"), 1),
]
DOC2_ROWS = [
    (("Scolaire", "Marseille", "Gallimard"), 3),
    (("Scolaire", "Paris", "Hachette"), 3),
    (("Scolaire", "Marseille", "Hachette"), 1),
    (("Roman", "Marseille", "Gallimard"), 3),
    (("Essai", "Paris", "Hachette"), 2),
    (("Essai", "Paris", "Gallimard"), 2),
    (("Essai", "Marseille", "Hachette"), 1),
]


def T(*labels):
    """Tuple literal where '*' is shorthand for ALL."""
    return tuple(ALL if x == "*" else x for x in labels)


@pytest.fixture(scope="session")
def doc1():
    return Relation.from_rows(DIMS, "Quantité", DOC1_ROWS)


@pytest.fixture(scope="session")
def doc2():
    return Relation.from_rows(DIMS, "Quantité", DOC2_ROWS)


def random_relation(rng: random.Random, max_dims=4, max_rows=8, labels=3, max_measure=6):
    n = rng.randint(1, max_dims)
    dims = [f"d{i}" for i in range(n)]
    rows = []
    for _ in range(rng.randint(1, max_rows)):
        row = tuple(f"v{rng.randrange(labels)}" for _ in range(n))
        rows.append((row, rng.randint(1, max_measure)))
    return Relation.from_rows(dims, "m", rows)


def random_pair(rng: random.Random, max_dims=4, max_rows=8):
    r1 = random_relation(rng, max_dims, max_rows)
    n = r1.arity
    rows = []
    for _ in range(rng.randint(1, max_rows)):
        row = tuple(f"v{rng.randrange(3)}" for _ in range(n))
        rows.append((row, rng.randint(1, 6)))
    r2 = Relation.from_rows(r1.dimensions, "m", rows)
    return r1, r2


D1, D2 = str(DATA / "document1.csv"), str(DATA / "document2.csv")

# golden file -> cube command line that must reproduce it byte for byte
CLI_GOLDENS = {
    "doc1_range_3_6": ["borders", D1, "--where", "sum >= 3 AND sum <= 6"],
    "doc1_iceberg_sum3": ["iceberg", D1, "--min", "3"],
    "doc1_cmc_sum6": ["borders", D1, "--where", "sum <= 6"],
    "diff_doc2_doc1_1_15": ["diff", D1, D2, "--min", "1/15", "--relative"],
    "emerging_doc2_doc1": ["emerge", D1, D2, "--s1", "1/3", "--s2", "1/5"],
    "emergence_report_doc2_doc1": ["emerge", D1, D2, "--s1", "1/3", "--s2", "1/5", "--report"],
}


def run_cli(argv, capsys):
    from convexcube.cli import main

    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# acceptance criterion -> list of (part, ok, note); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p[1] for p in parts)
        failed = "; ".join(f"{p[0]}: {p[2]}" for p in parts if not p[1])
        names = ", ".join(p[0] for p in parts)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({names})"
        terminalreporter.write_line(line + (f" -- {failed}" if failed else ""))

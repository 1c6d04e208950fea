import pathlib
import random

import pytest

from wifitaxa import (
    FrameSubtype,
    InformationElement,
    ManagementFrame,
    compose_signature,
    extract_profile,
    parse_management_frame,
)

FIXTURES = pathlib.Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def composed_signature(profile) -> str:
    """synth -> parse -> extract -> compose for one device profile."""
    probe = extract_profile(parse_management_frame(profile.probe_frame_bytes()))
    assoc = extract_profile(parse_management_frame(profile.assoc_frame_bytes()))
    return compose_signature(probe, assoc)


def random_elements(rng: random.Random, max_ies: int = 10):
    return tuple(
        InformationElement(rng.randrange(256), rng.randbytes(rng.randrange(0, 32)))
        for _ in range(rng.randrange(0, max_ies))
    )


def random_frame(rng: random.Random) -> ManagementFrame:
    subtype = rng.choice(
        (
            FrameSubtype.PROBE_REQUEST,
            FrameSubtype.ASSOCIATION_REQUEST,
            FrameSubtype.REASSOCIATION_REQUEST,
        )
    )
    fixed = subtype is not FrameSubtype.PROBE_REQUEST
    return ManagementFrame(
        subtype=subtype,
        source_mac=rng.randbytes(6),
        capabilities=rng.randrange(0x10000) if fixed else None,
        listen_interval=rng.randrange(0x10000) if fixed else None,
        elements=random_elements(rng),
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    rows = []
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", None) != "call":
                continue
            if "test_acceptance.py" in report.nodeid:
                rows.append((report.nodeid.split("::")[-1], status == "passed"))
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, ok in sorted(rows):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")

"""Command-line front end.

Subcommands: sign (emit signatures from a capture), identify (resolve them
against a database), db-check (distinctiveness lint), synth (write fixture
captures for built-in device profiles), stats (capture census).

Data goes to stdout as TSV (or JSON lines with --output jsonl); diagnostics
go to stderr.  Exit codes: 0 ok, 1 db-check violations, 2 unreadable or
invalid capture, 3 database parse failure, 4 unknown synth profile.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .ingest import IngestStats, PcapError, ingest_events, write_pcap
from .profiles import get_profile, profile_names
from .taxonomy_db import (
    Ambiguous,
    DbError,
    DuplicateEntry,
    Identification,
    SignatureDb,
    load_db,
    load_dhcp_os_rules,
    load_oui_table,
    validate_db,
)
from .tracker import DEFAULT_CACHE_CAPACITY, ClientTracker

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BAD_CAPTURE = 2
EXIT_BAD_DB = 3
EXIT_UNKNOWN_PROFILE = 4

UNKNOWN = "UNKNOWN"
AMBIGUOUS = "AMBIGUOUS"


def _mac_text(mac: bytes) -> str:
    return ":".join(f"{b:02x}" for b in mac)


class _Writer:
    """TSV or JSON-lines row writer over stdout."""

    def __init__(self, fmt: str):
        self.jsonl = fmt == "jsonl"

    def row(self, columns, **obj):
        if self.jsonl:
            print(json.dumps(obj, sort_keys=True))
        else:
            print("\t".join(columns))

    def summary(self, text: str, **obj):
        if self.jsonl:
            print(json.dumps(obj, sort_keys=True))
        else:
            print(f"# {text}")


def _fail(code: int, message: str) -> int:
    print(f"wifitaxa: {message}", file=sys.stderr)
    return code


def _load_database(args) -> SignatureDb:
    rules = load_dhcp_os_rules(args.dhcp_map) if getattr(args, "dhcp_map", None) else ()
    return load_db(args.db, rules)


def _run_capture(args):
    tracker = ClientTracker(cache_capacity=args.cache)
    stats = IngestStats()
    events = list(ingest_events(args.pcap, tracker, stats))
    return tracker, stats, events


def cmd_sign(args) -> int:
    writer = _Writer(args.output)
    try:
        tracker, stats, _ = _run_capture(args)
    except (OSError, PcapError) as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))
    for event in tracker.events:
        sig = event.signature
        mac = _mac_text(sig.mac)
        writer.row(
            (mac, sig.wifi4, sig.dhcp or ""),
            mac=mac, wifi4=sig.wifi4, dhcp=sig.dhcp,
        )
    if stats.malformed:
        print(f"wifitaxa: {stats.malformed} malformed records skipped", file=sys.stderr)
    return EXIT_OK


def cmd_identify(args) -> int:
    try:
        db = _load_database(args)
        if args.oui:
            load_oui_table(args.oui)  # validated; lookup matches raw prefixes
    except OSError as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))
    except DbError as exc:
        return _fail(EXIT_BAD_DB, str(exc))
    try:
        tracker, _, _ = _run_capture(args)
    except (OSError, PcapError) as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))

    writer = _Writer(args.output)
    total = identified = 0
    for mac in tracker.emitting_macs():
        total += 1
        result = tracker.identify(db, mac)
        if isinstance(result, Identification):
            identified += 1
            model = result.model
            basis = "+".join(("wifi4",) + result.basis)
        elif isinstance(result, Ambiguous):
            model = AMBIGUOUS
            basis = ",".join(result.models)
        else:
            model = UNKNOWN
            basis = "-"
        mac_text = _mac_text(mac)
        writer.row((mac_text, model, basis), mac=mac_text, model=model, basis=basis)
    writer.summary(
        f"identified {identified}/{total}", summary={"identified": identified, "total": total}
    )
    return EXIT_OK


def cmd_db_check(args) -> int:
    try:
        db = _load_database(args)
        oui_table = load_oui_table(args.oui) if args.oui else {}
    except OSError as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))
    except DuplicateEntry as exc:
        # a duplicate signature+qualifier pair is the thing this command
        # exists to flag, so report it as a violation, not a parse crash
        print(f"line {exc.line_no}: {exc}")
        return EXIT_VIOLATIONS
    except DbError as exc:
        return _fail(EXIT_BAD_DB, str(exc))
    violations = validate_db(db, oui_table)
    for entry, reason in violations:
        print(f"line {entry.line_no}: {entry.model}: {reason}")
    return EXIT_VIOLATIONS if violations else EXIT_OK


def cmd_synth(args) -> int:
    profile = get_profile(args.profile)
    if profile is None:
        print(f"wifitaxa: unknown profile {args.profile!r}", file=sys.stderr)
        print("known profiles: " + ", ".join(profile_names()), file=sys.stderr)
        return EXIT_UNKNOWN_PROFILE
    records = [
        (0, 0, profile.probe_frame_bytes()),
        (0, 500000, profile.assoc_frame_bytes()),
    ]
    try:
        write_pcap(args.out, records, link_type=105)
    except OSError as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))
    return EXIT_OK


def cmd_stats(args) -> int:
    db = None
    if args.db:
        try:
            db = _load_database(args)
        except OSError as exc:
            return _fail(EXIT_BAD_CAPTURE, str(exc))
        except DbError as exc:
            return _fail(EXIT_BAD_DB, str(exc))
    try:
        tracker, stats, _ = _run_capture(args)
    except (OSError, PcapError) as exc:
        return _fail(EXIT_BAD_CAPTURE, str(exc))

    summary = tracker.stats(db)
    rows = [
        ("total_clients", summary.total_clients),
        ("signatures_emitted", len(tracker.events)),
        ("distinct_signatures", summary.distinct_signatures),
    ]
    if db is not None:
        rows.append(("identified", summary.identified))
    rows.append(("malformed_records", stats.malformed))

    if args.output == "jsonl":
        print(json.dumps(dict(rows), sort_keys=True))
    else:
        for key, value in rows:
            print(f"{key}\t{value}")
    return EXIT_OK


def _add_capture_args(sub, with_cache=True):
    sub.add_argument(
        "--pcap", action="append", required=True, metavar="FILE",
        help="capture file; repeat to combine captures (e.g. wifi + dhcp)",
    )
    if with_cache:
        sub.add_argument(
            "--cache", type=int, default=DEFAULT_CACHE_CAPACITY, metavar="N",
            help="pre-association probe cache capacity (default %(default)s)",
        )


def _add_output_arg(sub):
    sub.add_argument(
        "--output", choices=("tsv", "jsonl"), default="tsv",
        help="data stream format (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wifitaxa",
        description="Passive Wi-Fi client taxonomy from management-frame signatures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sign = commands.add_parser("sign", help="emit client signatures from a capture")
    _add_capture_args(sign)
    _add_output_arg(sign)
    sign.set_defaults(func=cmd_sign)

    identify = commands.add_parser("identify", help="resolve capture clients against a database")
    _add_capture_args(identify)
    identify.add_argument("--db", required=True, metavar="FILE")
    identify.add_argument("--oui", metavar="FILE", help="OUI table (validated if given)")
    identify.add_argument("--dhcp-map", metavar="FILE", help="DHCP-OS rules file")
    _add_output_arg(identify)
    identify.set_defaults(func=cmd_identify)

    db_check = commands.add_parser("db-check", help="distinctiveness lint for a database")
    db_check.add_argument("--db", required=True, metavar="FILE")
    db_check.add_argument("--oui", metavar="FILE", help="OUI table for the Apple-OUI rule")
    db_check.set_defaults(func=cmd_db_check)

    synth = commands.add_parser("synth", help="write a fixture capture for a device profile")
    synth.add_argument("--profile", required=True, metavar="NAME")
    synth.add_argument("--out", required=True, metavar="FILE")
    synth.set_defaults(func=cmd_synth)

    stats = commands.add_parser("stats", help="capture census: clients, signatures, skips")
    _add_capture_args(stats)
    stats.add_argument("--db", metavar="FILE")
    stats.add_argument("--dhcp-map", metavar="FILE", help="DHCP-OS rules file")
    _add_output_arg(stats)
    stats.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

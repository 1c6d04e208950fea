"""Signature database: loading, qualifier-aware lookup, entry validation.

Entries key on the exact wifi4 string.  When several models share one
string, qualifiers tell them apart: an OUI qualifier requires the client
MAC to carry one of the listed vendor prefixes, a DHCP qualifier requires
the client's DHCP signature to match a named OS rule.  Among candidates
whose qualifiers pass, the most specific wins (dhcp > oui > unqualified).

The DB file is line-oriented UTF-8 so curation diffs stay reviewable:

    model<TAB>wifi4-signature<TAB>qualifiers

where qualifiers is empty or semicolon-separated `oui:xxxxxx` / `dhcp:<os>`
items.  Companion files: DHCP-OS rules (`os<TAB>1,121,33,...`) and the OUI
table (`xxxxxx<TAB>vendor-name`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .dhcp import render_dhcp_signature
from .signature import signature_is_valid

# OS names whose DHCP signature is shared by too many manufacturers to
# disambiguate anything.  Compared case-insensitively.
DEFAULT_COMMON_OS = frozenset({"android", "windows"})

_WPS_FIELD_RE = re.compile(r"(?:^|,)wps:([A-Za-z0-9_]+)")
_OUI_RE = re.compile(r"^[0-9a-f]{6}$")


class DbError(Exception):
    """Base class for database failures."""


class DbParseError(DbError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class DuplicateEntry(DbParseError):
    pass


@dataclass(frozen=True)
class DbEntry:
    model: str
    wifi4: str
    oui_qualifiers: frozenset[bytes] = frozenset()
    dhcp_os_qualifier: str | None = None
    line_no: int = 0

    @property
    def specificity(self) -> int:
        # dhcp outranks oui: a DHCP match encodes OS behaviour, which is
        # stronger evidence than a vendor prefix.
        return (2 if self.dhcp_os_qualifier else 0) + (1 if self.oui_qualifiers else 0)


@dataclass(frozen=True)
class DhcpOsRule:
    os_name: str
    option_list: tuple[int, ...]

    def __post_init__(self):
        if not self.option_list:
            raise ValueError(f"rule {self.os_name!r} has an empty option list")

    @property
    def signature(self) -> str:
        return render_dhcp_signature(self.option_list)


@dataclass(frozen=True)
class Identification:
    model: str
    basis: tuple[str, ...]  # qualifier kinds that fired: "dhcp", "oui"


@dataclass(frozen=True)
class Ambiguous:
    models: tuple[str, ...]


class SignatureDb:
    """Immutable after construction; safe for concurrent lookups."""

    def __init__(self, entries=(), dhcp_rules=()):
        self.entries: tuple[DbEntry, ...] = tuple(entries)
        self.dhcp_rules: dict[str, DhcpOsRule] = {
            r.os_name.lower(): r for r in dhcp_rules
        }
        self._by_wifi4: dict[str, list[DbEntry]] = {}
        for entry in self.entries:
            self._by_wifi4.setdefault(entry.wifi4, []).append(entry)

    def __len__(self):
        return len(self.entries)

    def candidates(self, wifi4: str) -> tuple[DbEntry, ...]:
        return tuple(self._by_wifi4.get(wifi4, ()))

    def rule_for(self, os_name: str) -> DhcpOsRule | None:
        return self.dhcp_rules.get(os_name.lower())


def _entry_key(entry: DbEntry):
    return (entry.wifi4, entry.oui_qualifiers, entry.dhcp_os_qualifier)


def _parse_qualifiers(text: str, path, line_no: int):
    ouis: set[bytes] = set()
    dhcp_os = None
    for item in filter(None, text.split(";")):
        kind, sep, value = item.partition(":")
        if not sep:
            raise DbParseError(path, line_no, f"bad qualifier {item!r}")
        if kind == "oui":
            value = value.lower()
            if not _OUI_RE.match(value):
                raise DbParseError(path, line_no, f"bad OUI {value!r}")
            ouis.add(bytes.fromhex(value))
        elif kind == "dhcp":
            if dhcp_os is not None:
                raise DbParseError(path, line_no, "more than one dhcp qualifier")
            if not value:
                raise DbParseError(path, line_no, "empty dhcp qualifier")
            dhcp_os = value
        else:
            raise DbParseError(path, line_no, f"unknown qualifier kind {kind!r}")
    return frozenset(ouis), dhcp_os


def _data_lines(path):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line


def load_db(path, dhcp_rules=()) -> SignatureDb:
    """Parse a signature database file, rejecting duplicate entries."""
    entries = []
    seen = set()
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) == 2:
            parts.append("")
        if len(parts) != 3:
            raise DbParseError(path, line_no, f"expected 2 or 3 fields, got {len(parts)}")
        model, wifi4, qualifier_text = parts
        if not model:
            raise DbParseError(path, line_no, "empty model name")
        if not signature_is_valid(wifi4):
            raise DbParseError(path, line_no, "wifi4 signature does not match grammar")
        ouis, dhcp_os = _parse_qualifiers(qualifier_text, path, line_no)
        entry = DbEntry(model, wifi4, ouis, dhcp_os, line_no)
        key = _entry_key(entry)
        if key in seen:
            raise DuplicateEntry(path, line_no, f"duplicate signature+qualifiers for {model!r}")
        seen.add(key)
        entries.append(entry)
    return SignatureDb(entries, dhcp_rules)


def load_dhcp_os_rules(path) -> tuple[DhcpOsRule, ...]:
    rules = []
    names = set()
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise DbParseError(path, line_no, "expected os-name<TAB>option-list")
        os_name, option_text = parts
        if os_name.lower() in names:
            raise DbParseError(path, line_no, f"duplicate rule {os_name!r}")
        try:
            options = tuple(int(o) for o in option_text.split(","))
        except ValueError:
            raise DbParseError(path, line_no, f"bad option list {option_text!r}") from None
        if not options or not all(0 <= o <= 255 for o in options):
            raise DbParseError(path, line_no, f"bad option list {option_text!r}")
        names.add(os_name.lower())
        rules.append(DhcpOsRule(os_name, options))
    return tuple(rules)


def load_oui_table(path) -> dict[bytes, str]:
    """Parse `xxxxxx<TAB>vendor-name` lines into a prefix table."""
    table: dict[bytes, str] = {}
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[1]:
            raise DbParseError(path, line_no, "expected oui<TAB>vendor-name")
        prefix_text, vendor = parts
        prefix_text = prefix_text.lower()
        if not _OUI_RE.match(prefix_text):
            raise DbParseError(path, line_no, f"bad OUI {parts[0]!r}")
        prefix = bytes.fromhex(prefix_text)
        if prefix in table:
            raise DbParseError(path, line_no, f"duplicate OUI {prefix_text}")
        table[prefix] = vendor
    return table


def _qualifiers_pass(db: SignatureDb, entry: DbEntry, mac: bytes, dhcp_sig: str | None):
    """None if a qualifier fails, else the tuple of qualifier kinds that fired."""
    fired = []
    if entry.dhcp_os_qualifier is not None:
        rule = db.rule_for(entry.dhcp_os_qualifier)
        if rule is None or dhcp_sig is None or dhcp_sig != rule.signature:
            return None
        fired.append("dhcp")
    if entry.oui_qualifiers:
        if mac[:3] not in entry.oui_qualifiers:
            return None
        fired.append("oui")
    return tuple(fired)


def lookup(
    db: SignatureDb, wifi4: str, mac: bytes, dhcp_sig: str | None = None
) -> Identification | Ambiguous | None:
    """Resolve a signature to a model.

    Returns None when nothing matches and Ambiguous when two entries pass
    their qualifiers at equal specificity; neither is an error.  Matching
    is byte-exact on the wifi4 string: near-miss strings are candidate new
    species, not fuzzy matches.
    """
    passing = []
    for entry in db.candidates(wifi4):
        fired = _qualifiers_pass(db, entry, mac, dhcp_sig)
        if fired is not None:
            passing.append((entry, fired))
    if not passing:
        return None
    best = max(entry.specificity for entry, _ in passing)
    top = [(e, fired) for e, fired in passing if e.specificity == best]
    if len(top) > 1:
        return Ambiguous(tuple(e.model for e, _ in top))
    entry, fired = top[0]
    return Identification(entry.model, fired)


def _descriptive_wps(wifi4: str) -> bool:
    """A WPS model name counts only when it actually describes the device.

    Early clients shipped a single-space name to work around AP bugs; that
    sanitizes to "_" and must not qualify an entry.
    """
    m = _WPS_FIELD_RE.search(wifi4)
    if not m:
        return False
    name = m.group(1)
    return len(name) >= 2 and name.strip("_") != ""


def _is_apple(vendor_name: str | None) -> bool:
    return vendor_name is not None and "apple" in vendor_name.lower()


def _entries_overlap(a: DbEntry, b: DbEntry) -> bool:
    """True when some (mac, dhcp) input would pass both at equal specificity."""
    if a.wifi4 != b.wifi4 or a.specificity != b.specificity:
        return False
    if a.dhcp_os_qualifier or b.dhcp_os_qualifier:
        if (a.dhcp_os_qualifier or "").lower() != (b.dhcp_os_qualifier or "").lower():
            return False
    if a.oui_qualifiers and b.oui_qualifiers:
        return bool(a.oui_qualifiers & b.oui_qualifiers)
    return True


def validate_entry(
    db: SignatureDb,
    candidate: DbEntry,
    oui_table: dict[bytes, str],
    common_os: frozenset[str] = DEFAULT_COMMON_OS,
) -> str | None:
    """Distinctiveness check for a database entry.

    Returns None when the entry is acceptable, otherwise the reason it is
    not.  An entry is acceptable when any one criterion holds:

      a. its signature carries a descriptive WPS model name;
      b. it has a DHCP-OS qualifier naming an OS that is not common across
         manufacturers;
      c. it has OUI qualifiers and none of them belong to Apple, whose OUI
         churn outruns any table we could maintain.

    Regardless of the criteria, an entry that could alias an existing entry
    is rejected.
    """
    for other in db.candidates(candidate.wifi4):
        if other is candidate:
            continue
        if _entries_overlap(candidate, other):
            return (
                f"aliases {other.model!r} (line {other.line_no}): "
                "identical signature with overlapping qualifiers"
            )

    if _descriptive_wps(candidate.wifi4):
        return None
    if candidate.dhcp_os_qualifier is not None:
        if candidate.dhcp_os_qualifier.lower() not in common_os:
            return None
        return (
            f"dhcp qualifier {candidate.dhcp_os_qualifier!r} names an OS too "
            "common to disambiguate"
        )
    if candidate.oui_qualifiers:
        apple = [p for p in candidate.oui_qualifiers if _is_apple(oui_table.get(p))]
        if not apple:
            return None
        return "OUI qualifier " + ",".join(sorted(p.hex() for p in apple)) + " is Apple"
    return "no distinctiveness criterion holds (no descriptive wps, dhcp or oui qualifier)"


def validate_db(
    db: SignatureDb,
    oui_table: dict[bytes, str],
    common_os: frozenset[str] = DEFAULT_COMMON_OS,
) -> list[tuple[DbEntry, str]]:
    """Run validate_entry over every entry against the rest of the database."""
    violations = []
    for entry in db.entries:
        reason = validate_entry(db, entry, oui_table, common_os)
        if reason is not None:
            violations.append((entry, reason))
    return violations

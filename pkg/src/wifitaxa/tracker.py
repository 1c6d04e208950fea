"""Per-client state: pairing probe and association profiles into signatures.

A signature needs both halves.  Association requests are kept on the
client's record, but probes arrive mostly from devices that are just
passing through and will never associate, so pre-association probes go
into a bounded cache that is pruned aggressively (least-recently-seen
eviction).  When a cached probe exists at association time the signature
is emitted immediately; otherwise emission waits for the next probe from
the now-associated client.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum

from .dhcp import DhcpMessageType, DhcpObservation, dhcp_signature
from .frame_codec import FrameSubtype, ManagementFrame
from .signature import (
    IE_SSID,
    ClientSignature,
    FrameProfile,
    compose_signature,
    extract_profile,
)
from .taxonomy_db import Identification, SignatureDb, lookup

DEFAULT_CACHE_CAPACITY = 1024


class ProbeKind(Enum):
    BROADCAST = "broadcast"
    DIRECTED = "directed"


def probe_kind(frame: ManagementFrame) -> ProbeKind:
    """Broadcast (wildcard SSID) or directed probe.

    Some chipsets send different IE inventories in each kind, so the kind
    is recorded alongside the profile even though composition currently
    just uses the most recent probe.
    """
    for ie in frame.elements:
        if ie.id == IE_SSID:
            return ProbeKind.DIRECTED if ie.payload else ProbeKind.BROADCAST
    return ProbeKind.BROADCAST


@dataclass
class ClientRecord:
    mac: bytes
    probe: FrameProfile | None = None
    probe_kind: ProbeKind | None = None
    assoc: FrameProfile | None = None
    dhcp: DhcpObservation | None = None
    last_seen: float = 0.0
    last_emitted: str | None = None


@dataclass(frozen=True)
class SignatureEvent:
    at: float
    signature: ClientSignature


@dataclass(frozen=True)
class TrackerStats:
    total_clients: int
    identified: int
    distinct_signatures: int


class ProbeCache:
    """Bounded MAC -> (profile, kind, timestamp) store, LRU on last sighting."""

    def __init__(self, capacity: int = DEFAULT_CACHE_CAPACITY):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._entries: OrderedDict[bytes, tuple[FrameProfile, ProbeKind, float]] = OrderedDict()

    def __len__(self):
        return len(self._entries)

    def put(self, mac: bytes, profile: FrameProfile, kind: ProbeKind, at: float):
        if mac in self._entries:
            self._entries.move_to_end(mac)
        self._entries[mac] = (profile, kind, at)
        while len(self._entries) > self.capacity:
            self._entries.popitem(last=False)

    def pop(self, mac: bytes):
        return self._entries.pop(mac, None)


class ClientTracker:
    """Single-writer: one ingestion sequence feeds observe_* calls."""

    def __init__(self, cache_capacity: int = DEFAULT_CACHE_CAPACITY):
        self.records: dict[bytes, ClientRecord] = {}
        self.probe_cache = ProbeCache(cache_capacity)
        self.events: list[SignatureEvent] = []

    def _record(self, mac: bytes) -> ClientRecord:
        record = self.records.get(mac)
        if record is None:
            record = self.records[mac] = ClientRecord(mac)
        return record

    def _maybe_emit(self, record: ClientRecord, at: float) -> ClientSignature | None:
        if record.probe is None or record.assoc is None:
            return None
        wifi4 = compose_signature(record.probe, record.assoc)
        if wifi4 == record.last_emitted:
            return None
        record.last_emitted = wifi4
        dhcp = dhcp_signature(record.dhcp) if record.dhcp is not None else None
        emitted = ClientSignature(mac=record.mac, wifi4=wifi4, dhcp=dhcp)
        self.events.append(SignatureEvent(at=at, signature=emitted))
        return emitted

    def observe_frame(self, frame: ManagementFrame, at: float) -> ClientSignature | None:
        """Feed one management frame; returns a signature if one was emitted."""
        profile = extract_profile(frame)
        mac = frame.source_mac

        if frame.subtype is FrameSubtype.PROBE_REQUEST:
            kind = probe_kind(frame)
            record = self.records.get(mac)
            if record is None or record.assoc is None:
                # Not associated yet: hold the probe in the bounded cache.
                self.probe_cache.put(mac, profile, kind, at)
                return None
            record.probe = profile
            record.probe_kind = kind
            record.last_seen = at
            return self._maybe_emit(record, at)

        # Association or reassociation: promote to a full client record.
        record = self._record(mac)
        record.assoc = profile
        record.last_seen = at
        cached = self.probe_cache.pop(mac)
        if cached is not None:
            record.probe, record.probe_kind, _ = cached
        return self._maybe_emit(record, at)

    def observe_dhcp(self, obs: DhcpObservation, at: float = 0.0) -> None:
        """Attach the latest DHCP observation to the client; never emits.

        Only client-sent Discover/Request messages carry the client's own
        option list; server replies on the same ports are ignored so they
        cannot overwrite the fingerprint.
        """
        if obs.message_type is DhcpMessageType.OTHER:
            return
        record = self._record(obs.client_mac)
        record.dhcp = obs
        record.last_seen = max(record.last_seen, at)

    def emitting_macs(self) -> list[bytes]:
        """MACs with at least one emitted signature, in first-emission order."""
        seen = []
        have = set()
        for event in self.events:
            mac = event.signature.mac
            if mac not in have:
                have.add(mac)
                seen.append(mac)
        return seen

    def identify(self, db: SignatureDb, mac: bytes):
        """Look up a client's latest emitted signature against a database."""
        record = self.records.get(mac)
        if record is None or record.last_emitted is None:
            return None
        dhcp = dhcp_signature(record.dhcp) if record.dhcp is not None else None
        return lookup(db, record.last_emitted, mac, dhcp)

    def stats(self, db: SignatureDb | None = None) -> TrackerStats:
        macs = self.emitting_macs()
        identified = 0
        if db is not None:
            identified = sum(
                1 for mac in macs if isinstance(self.identify(db, mac), Identification)
            )
        distinct = len({event.signature.wifi4 for event in self.events})
        return TrackerStats(
            total_clients=len(macs),
            identified=identified,
            distinct_signatures=distinct,
        )

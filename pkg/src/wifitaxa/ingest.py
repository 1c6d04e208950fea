"""Capture-file ingestion: classic pcap reading, demux, tracker driving.

Supports link types 105 (raw 802.11), 127 (radiotap) and 1 (Ethernet, for
DHCP captures).  Malformed payloads degrade to skips with a counted
diagnostic; they never abort the stream.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import dhcp, frame_codec
from .frame_codec import Encapsulation, FrameSubtype, ManagementFrame
from .tracker import ClientTracker

PCAP_MAGIC = 0xA1B2C3D4
LINKTYPE_ETHERNET = 1
LINKTYPE_IEEE802_11 = 105
LINKTYPE_IEEE802_11_RADIOTAP = 127

ETHERTYPE_IPV4 = 0x0800
IPPROTO_UDP = 17
DHCP_PORTS = (67, 68)


class PcapError(Exception):
    """Base class for capture-file failures."""


class BadMagic(PcapError):
    """File does not start with the classic pcap magic in either byte order."""


class TruncatedRecord(PcapError):
    """File ends inside a record header or record payload."""


@dataclass(frozen=True)
class CaptureRecord:
    ts_sec: int
    ts_usec: int
    link_type: int
    payload: bytes

    @property
    def timestamp(self) -> float:
        return self.ts_sec + self.ts_usec / 1_000_000


@dataclass(frozen=True)
class WifiMgmt:
    frame: ManagementFrame


@dataclass(frozen=True)
class Dhcp:
    obs: dhcp.DhcpObservation


@dataclass(frozen=True)
class Skip:
    reason: str
    malformed: bool = False


@dataclass
class IngestStats:
    records: int = 0
    wifi_frames: int = 0
    dhcp_packets: int = 0
    skips: int = 0
    malformed: int = 0
    skip_reasons: dict[str, int] = field(default_factory=dict)

    def count(self, event) -> None:
        self.records += 1
        if isinstance(event, WifiMgmt):
            self.wifi_frames += 1
        elif isinstance(event, Dhcp):
            self.dhcp_packets += 1
        else:
            self.skips += 1
            if event.malformed:
                self.malformed += 1
            self.skip_reasons[event.reason] = self.skip_reasons.get(event.reason, 0) + 1


def read_pcap(path) -> Iterator[CaptureRecord]:
    """Yield records in file order, honouring the file's byte order."""
    with open(path, "rb") as fh:
        header = fh.read(24)
        if len(header) < 24:
            raise BadMagic("file shorter than a pcap global header")
        for order in ("<", ">"):
            magic = struct.unpack(order + "I", header[:4])[0]
            if magic == PCAP_MAGIC:
                break
        else:
            raise BadMagic(f"magic {header[:4].hex()} is not a pcap header")
        _, _, _, _, _, _, network = struct.unpack(order + "IHHiIII", header)

        while True:
            rec_header = fh.read(16)
            if not rec_header:
                return
            if len(rec_header) < 16:
                raise TruncatedRecord("record header truncated")
            ts_sec, ts_usec, incl_len, _orig_len = struct.unpack(order + "IIII", rec_header)
            payload = fh.read(incl_len)
            if len(payload) < incl_len:
                raise TruncatedRecord(f"record payload truncated ({len(payload)}/{incl_len})")
            yield CaptureRecord(ts_sec, ts_usec, network, payload)


def write_pcap(path, records: Iterable[tuple[int, int, bytes]], link_type: int) -> None:
    """Write a little-endian classic pcap of (ts_sec, ts_usec, payload) tuples."""
    with open(path, "wb") as fh:
        fh.write(struct.pack("<IHHiIII", PCAP_MAGIC, 2, 4, 0, 0, 65535, link_type))
        for ts_sec, ts_usec, payload in records:
            fh.write(struct.pack("<IIII", ts_sec, ts_usec, len(payload), len(payload)))
            fh.write(payload)


def _demux_wifi(payload: bytes, encapsulation: Encapsulation):
    try:
        frame = frame_codec.parse_management_frame(payload, encapsulation)
    except frame_codec.FrameError as exc:
        return Skip(f"malformed-frame: {type(exc).__name__}", malformed=True)
    if frame.subtype is FrameSubtype.OTHER:
        return Skip("ignored-frame")
    return WifiMgmt(frame)


def _demux_ethernet(payload: bytes):
    if len(payload) < 14:
        return Skip("short-ethernet", malformed=True)
    ethertype = struct.unpack_from(">H", payload, 12)[0]
    if ethertype != ETHERTYPE_IPV4:
        return Skip("ignored-ethertype")

    ip_start = 14
    if len(payload) < ip_start + 20:
        return Skip("short-ipv4", malformed=True)
    vihl = payload[ip_start]
    if vihl >> 4 != 4:
        return Skip("not-ipv4")
    ihl = (vihl & 0xF) * 4
    if ihl < 20 or len(payload) < ip_start + ihl + 8:
        return Skip("short-ipv4", malformed=True)
    total_len = struct.unpack_from(">H", payload, ip_start + 2)[0]
    frag = struct.unpack_from(">H", payload, ip_start + 6)[0]
    if frag & 0x2000 or frag & 0x1FFF:
        return Skip("fragmented")
    if payload[ip_start + 9] != IPPROTO_UDP:
        return Skip("ignored-protocol")

    udp_start = ip_start + ihl
    sport, dport, udp_len = struct.unpack_from(">HHH", payload, udp_start)
    if sport not in DHCP_PORTS and dport not in DHCP_PORTS:
        return Skip("ignored-port")

    # Ethernet captures pad short frames; bound the payload by the declared
    # lengths where they are sane.
    end = len(payload)
    if 20 <= total_len <= end - ip_start:
        end = ip_start + total_len
    if 8 <= udp_len <= end - udp_start:
        end = udp_start + udp_len
    bootp = payload[udp_start + 8 : end]
    try:
        return Dhcp(dhcp.parse_dhcp(bootp))
    except dhcp.DhcpError as exc:
        return Skip(f"malformed-dhcp: {type(exc).__name__}", malformed=True)


def demux(record: CaptureRecord):
    """Classify one capture record as WifiMgmt, Dhcp or Skip."""
    if record.link_type == LINKTYPE_IEEE802_11:
        return _demux_wifi(record.payload, Encapsulation.RAW_80211)
    if record.link_type == LINKTYPE_IEEE802_11_RADIOTAP:
        return _demux_wifi(record.payload, Encapsulation.RADIOTAP)
    if record.link_type == LINKTYPE_ETHERNET:
        return _demux_ethernet(record.payload)
    return Skip("unsupported-linktype")


def ingest(paths, tracker: ClientTracker, stats: IngestStats | None = None) -> IngestStats:
    """Feed every record of the given pcap files through the tracker.

    Emitted signatures accumulate on tracker.events; callers that stream
    them out use ingest_events instead.
    """
    stats = stats if stats is not None else IngestStats()
    for _ in ingest_events(paths, tracker, stats):
        pass
    return stats


def ingest_events(paths, tracker: ClientTracker, stats: IngestStats):
    """Generator form of ingest: yields each ClientSignature as it is emitted."""
    if isinstance(paths, (str, bytes)) or hasattr(paths, "__fspath__"):
        paths = [paths]
    for path in paths:
        for record in read_pcap(path):
            event = demux(record)
            stats.count(event)
            if isinstance(event, WifiMgmt):
                emitted = tracker.observe_frame(event.frame, record.timestamp)
                if emitted is not None:
                    yield emitted
            elif isinstance(event, Dhcp):
                tracker.observe_dhcp(event.obs, record.timestamp)


def ethernet_dhcp_frame(bootp: bytes, src_mac: bytes, sport: int = 68, dport: int = 67) -> bytes:
    """Wrap a BOOTP payload as a broadcast UDP/IPv4/Ethernet frame (fixtures)."""
    udp = struct.pack(">HHHH", sport, dport, 8 + len(bootp), 0) + bootp
    total_len = 20 + len(udp)
    ip = bytearray(
        struct.pack(
            ">BBHHHBBH4s4s",
            0x45, 0, total_len, 0, 0, 64, IPPROTO_UDP, 0,
            bytes(4), b"\xff\xff\xff\xff",
        )
    )
    checksum = _ipv4_checksum(bytes(ip))
    ip[10:12] = struct.pack(">H", checksum)
    ether = b"\xff" * 6 + src_mac + struct.pack(">H", ETHERTYPE_IPV4)
    return ether + bytes(ip) + udp


def _ipv4_checksum(header: bytes) -> int:
    total = sum(struct.unpack(f">{len(header) // 2}H", header))
    total = (total & 0xFFFF) + (total >> 16)
    total = (total & 0xFFFF) + (total >> 16)
    return ~total & 0xFFFF

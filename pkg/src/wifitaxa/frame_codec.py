"""802.11 management frame codec.

Parses raw management frame bytes (optionally radiotap-encapsulated) into
structured frames for the signature extractor, and synthesizes frame bytes
from structured descriptions for fixtures and tests.

Only the three frame subtypes that carry taxonomy information are decoded
in full: Probe Request, Association Request and Reassociation Request.
Everything else parses to subtype OTHER with no elements.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from enum import Enum


class FrameError(Exception):
    """Base class for frame decode/encode failures."""


class TruncatedFrame(FrameError):
    """Buffer too short for the 802.11 MAC header or fixed parameters."""


class MalformedIE(FrameError):
    """An IE length field points past the end of the frame."""


class BadRadiotap(FrameError):
    """Radiotap header is inconsistent with the buffer."""


class OversizeIE(FrameError):
    """IE payload exceeds the one-byte length field (255 bytes)."""


class FrameSubtype(Enum):
    PROBE_REQUEST = "probe-req"
    ASSOCIATION_REQUEST = "assoc-req"
    REASSOCIATION_REQUEST = "reassoc-req"
    OTHER = "other"


class Encapsulation(Enum):
    RAW_80211 = "raw"
    RADIOTAP = "radiotap"


# Subtypes we keep, for frame control type=management (00).
_MGMT_SUBTYPE = {
    0x0: FrameSubtype.ASSOCIATION_REQUEST,
    0x2: FrameSubtype.REASSOCIATION_REQUEST,
    0x4: FrameSubtype.PROBE_REQUEST,
}

# Fixed-parameter bytes between the MAC header and the tagged parameters.
# Reassoc additionally carries the current-AP address.
_FIXED_LEN = {
    FrameSubtype.PROBE_REQUEST: 0,
    FrameSubtype.ASSOCIATION_REQUEST: 4,
    FrameSubtype.REASSOCIATION_REQUEST: 10,
}

MAC_HEADER_LEN = 24

BROADCAST = b"\xff" * 6
# addr1/addr3 for synthesized association frames; never inspected by the parser.
_SYNTH_BSSID = bytes.fromhex("020000000001")

_RADIOTAP_F_FCS = 0x10  # flags bit: FCS appended to the frame


@dataclass(frozen=True)
class InformationElement:
    """One tagged parameter: a Type-Length-Value tuple from a frame body."""

    id: int
    payload: bytes

    def __post_init__(self):
        if not 0 <= self.id <= 255:
            raise ValueError(f"IE id out of range: {self.id}")
        if len(self.payload) > 255:
            raise OversizeIE(f"IE {self.id} payload is {len(self.payload)} bytes")


@dataclass(frozen=True)
class VendorIdentity:
    """OUI plus first payload byte of a Vendor-Specific (id 221) IE."""

    oui: bytes
    subtype: int

    def __str__(self):
        return f"221({self.oui.hex()},{self.subtype})"


@dataclass(frozen=True)
class ManagementFrame:
    subtype: FrameSubtype
    source_mac: bytes
    capabilities: int | None = None
    listen_interval: int | None = None
    elements: tuple[InformationElement, ...] = field(default_factory=tuple)

    def __post_init__(self):
        has_fixed = self.subtype in (
            FrameSubtype.ASSOCIATION_REQUEST,
            FrameSubtype.REASSOCIATION_REQUEST,
        )
        if has_fixed and (self.capabilities is None or self.listen_interval is None):
            raise ValueError("association frames carry capabilities and listen interval")
        if not has_fixed and self.capabilities is not None:
            raise ValueError(f"{self.subtype.value} frames have no capabilities field")


def vendor_identity(ie: InformationElement) -> VendorIdentity | None:
    """Identity of a Vendor-Specific IE, or None if not one / too short."""
    if ie.id != 221 or len(ie.payload) < 4:
        return None
    return VendorIdentity(oui=ie.payload[:3], subtype=ie.payload[3])


def _parse_elements(body: bytes) -> tuple[InformationElement, ...]:
    elements = []
    pos = 0
    end = len(body)
    while pos < end:
        if pos + 2 > end:
            raise MalformedIE("IE header truncated")
        length = body[pos + 1]
        if pos + 2 + length > end:
            raise MalformedIE(f"IE {body[pos]} length {length} exceeds frame")
        elements.append(InformationElement(body[pos], body[pos + 2 : pos + 2 + length]))
        pos += 2 + length
    return tuple(elements)


def _strip_radiotap(data: bytes) -> bytes:
    """Drop the radiotap header, and the trailing FCS if the flags say so."""
    if len(data) < 8:
        raise BadRadiotap("shorter than minimum radiotap header")
    if data[0] != 0:
        raise BadRadiotap(f"unknown radiotap version {data[0]}")
    rt_len = struct.unpack_from("<H", data, 2)[0]
    if rt_len < 8 or rt_len > len(data):
        raise BadRadiotap(f"radiotap length {rt_len} exceeds buffer")

    # Present-word chain: bit 31 marks another 32-bit present word.
    pos = 4
    present = []
    while True:
        if pos + 4 > rt_len:
            raise BadRadiotap("present bitmap runs past radiotap length")
        word = struct.unpack_from("<I", data, pos)[0]
        present.append(word)
        pos += 4
        if not word & (1 << 31):
            break

    # We only consume the flags field (bit 1), which follows TSFT (bit 0,
    # 8 bytes, 8-byte aligned) when that is present.  Offsets are relative
    # to the start of the radiotap header.
    flags = None
    if present[0] & 0x2:
        fpos = pos
        if present[0] & 0x1:
            fpos = (fpos + 7) & ~7
            fpos += 8
        if fpos >= rt_len:
            raise BadRadiotap("flags field outside radiotap header")
        flags = data[fpos]

    frame = data[rt_len:]
    if flags is not None and flags & _RADIOTAP_F_FCS:
        if len(frame) < 4:
            raise TruncatedFrame("frame shorter than its FCS")
        frame = frame[:-4]
    return frame


def parse_management_frame(
    data: bytes, encapsulation: Encapsulation = Encapsulation.RAW_80211
) -> ManagementFrame:
    """Decode one frame buffer.

    Non-management frames, and management subtypes other than probe-req /
    assoc-req / reassoc-req, come back as subtype OTHER with no elements:
    they carry nothing the taxonomy uses, but the source address is still
    reported when present.
    """
    if encapsulation is Encapsulation.RADIOTAP:
        data = _strip_radiotap(data)
    if len(data) < MAC_HEADER_LEN:
        raise TruncatedFrame(f"{len(data)} bytes, need {MAC_HEADER_LEN}")

    fc0 = data[0]
    ftype = (fc0 >> 2) & 0x3
    subtype_bits = (fc0 >> 4) & 0xF
    source_mac = data[10:16]

    if ftype != 0 or subtype_bits not in _MGMT_SUBTYPE:
        return ManagementFrame(FrameSubtype.OTHER, source_mac)
    subtype = _MGMT_SUBTYPE[subtype_bits]

    body = data[MAC_HEADER_LEN:]
    fixed = _FIXED_LEN[subtype]
    if len(body) < fixed:
        raise TruncatedFrame(f"{subtype.value} fixed parameters truncated")

    capabilities = listen_interval = None
    if fixed:
        capabilities, listen_interval = struct.unpack_from("<HH", body)

    return ManagementFrame(
        subtype=subtype,
        source_mac=source_mac,
        capabilities=capabilities,
        listen_interval=listen_interval,
        elements=_parse_elements(body[fixed:]),
    )


def synthesize_frame(
    subtype: FrameSubtype,
    source_mac: bytes,
    elements,
    capabilities: int | None = None,
    listen_interval: int = 0,
    current_ap: bytes = _SYNTH_BSSID,
) -> bytes:
    """Build frame bytes that parse back to exactly the given structure."""
    if subtype not in _FIXED_LEN:
        raise ValueError(f"cannot synthesize subtype {subtype}")
    if len(source_mac) != 6:
        raise ValueError("source_mac must be 6 bytes")

    if subtype is FrameSubtype.PROBE_REQUEST:
        if capabilities is not None:
            raise ValueError("probe requests have no capabilities field")
        fc0 = 0x40
        dest = BROADCAST
    else:
        fc0 = 0x00 if subtype is FrameSubtype.ASSOCIATION_REQUEST else 0x20
        dest = current_ap
        if capabilities is None:
            capabilities = 0

    out = bytearray()
    out += bytes([fc0, 0x00])  # frame control
    out += b"\x00\x00"  # duration
    out += dest  # addr1
    out += source_mac  # addr2
    out += dest  # addr3
    out += b"\x00\x00"  # sequence control

    if subtype is not FrameSubtype.PROBE_REQUEST:
        out += struct.pack("<HH", capabilities, listen_interval)
        if subtype is FrameSubtype.REASSOCIATION_REQUEST:
            out += current_ap

    for ie in elements:
        if len(ie.payload) > 255:
            raise OversizeIE(f"IE {ie.id} payload is {len(ie.payload)} bytes")
        out += bytes([ie.id, len(ie.payload)])
        out += ie.payload
    return bytes(out)


def synthesize(frame: ManagementFrame) -> bytes:
    """Frame-object form of synthesize_frame (round-trip partner of parse)."""
    return synthesize_frame(
        frame.subtype,
        frame.source_mac,
        frame.elements,
        capabilities=frame.capabilities,
        listen_interval=frame.listen_interval or 0,
    )

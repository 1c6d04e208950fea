"""wifi4 signature extraction and composition.

A frame's signature lists its IE ids in wire order, then appends a fixed
sequence of extracted bitmask fields.  Multi-byte fields are rendered as
little-endian integers in hex; the Extended Capabilities body is rendered
byte-by-byte in wire order and keeps its full length.  The probe and assoc
halves are joined into one `wifi4|probe:...|assoc:...` string, which is the
database key and must stay bit-stable.
"""

from __future__ import annotations

import re
import struct
from dataclasses import dataclass

from .frame_codec import (
    FrameSubtype,
    InformationElement,
    ManagementFrame,
    VendorIdentity,
    vendor_identity,
)

# IEs that feed extracted fields.
IE_SSID = 0
IE_POWER_CAPABILITY = 33
IE_HT_CAPABILITIES = 45
IE_EXTENDED_CAPABILITIES = 127
IE_VHT_CAPABILITIES = 191
IE_VENDOR = 221
IE_EXTENSION = 255

WPS_OUI = bytes.fromhex("0050f2")
WPS_VENDOR_SUBTYPE = 4
# WPS attributes are (type, length, value) with big-endian 16-bit type/length.
WPS_ATTR_MODEL_NAME = 0x1023
WPS_ATTR_DEVICE_NAME = 0x1011


@dataclass(frozen=True)
class ExtensionTag:
    """Element ID Extension token: IE 255 with its extension id."""

    ext_id: int

    def __str__(self):
        return f"255({self.ext_id})"


# A token is an int (plain IE id), a VendorIdentity, or an ExtensionTag.
Token = int | VendorIdentity | ExtensionTag


@dataclass(frozen=True)
class FrameProfile:
    """Ordered IE tokens plus the extracted fields of one frame."""

    ie_tokens: tuple[Token, ...] = ()
    htcap: int | None = None
    htagg: int | None = None
    htmcs: int | None = None
    vhtcap: int | None = None
    vhtrxmcs: int | None = None
    vhttxmcs: int | None = None
    txpow: int | None = None
    extcap: bytes | None = None
    wps_name: str | None = None


@dataclass(frozen=True)
class ClientSignature:
    """An emitted signature: the wifi4 string, optional dhcp string, client MAC."""

    mac: bytes
    wifi4: str
    dhcp: str | None = None


# Machine-checkable grammar for composed signatures.  Field order is fixed;
# each field is optional and can only appear after at least one token.
_TOKEN = r"(?:\d+|221\([0-9a-f]{6},\d+\)|255\(\d+\))"
_FIELDS = (
    r"(?:,htcap:[0-9a-f]{4})?"
    r"(?:,htagg:[0-9a-f]{2})?"
    r"(?:,htmcs:[0-9a-f]{8})?"
    r"(?:,vhtcap:[0-9a-f]{8})?"
    r"(?:,vhtrxmcs:[0-9a-f]{8})?"
    r"(?:,vhttxmcs:[0-9a-f]{8})?"
    r"(?:,txpow:[0-9a-f]{4})?"
    r"(?:,extcap:(?:[0-9a-f]{2})+)?"
    r"(?:,wps:[A-Za-z0-9_]+)?"
)
_PART = rf"(?:{_TOKEN}(?:,{_TOKEN})*{_FIELDS})?"
SIGNATURE_RE = re.compile(rf"^wifi4\|probe:{_PART}\|assoc:{_PART}$")

_TAXONOMY_SUBTYPES = (
    FrameSubtype.PROBE_REQUEST,
    FrameSubtype.ASSOCIATION_REQUEST,
    FrameSubtype.REASSOCIATION_REQUEST,
)


def sanitize_wps_name(raw: bytes) -> str:
    """Keep [A-Za-z0-9] bytes, replace every other byte with an underscore."""
    return "".join(
        chr(b) if (0x30 <= b <= 0x39 or 0x41 <= b <= 0x5A or 0x61 <= b <= 0x7A) else "_"
        for b in raw
    )


def _wps_model_name(payload: bytes) -> str | None:
    """Model name from a WPS vendor IE body (after the OUI and subtype byte).

    Falls back to the Device Name attribute when Model Name is missing.
    Malformed attribute lists yield None rather than an error.
    """
    names: dict[int, bytes] = {}
    pos = 4  # skip OUI + vendor subtype
    while pos + 4 <= len(payload):
        attr_type, attr_len = struct.unpack_from(">HH", payload, pos)
        pos += 4
        if pos + attr_len > len(payload):
            return None
        if attr_type in (WPS_ATTR_MODEL_NAME, WPS_ATTR_DEVICE_NAME):
            names.setdefault(attr_type, payload[pos : pos + attr_len])
        pos += attr_len
    raw = names.get(WPS_ATTR_MODEL_NAME, names.get(WPS_ATTR_DEVICE_NAME))
    if not raw:
        return None
    return sanitize_wps_name(raw)


def _le_int(data: bytes) -> int:
    return int.from_bytes(data, "little")


def extract_profile(frame: ManagementFrame) -> FrameProfile:
    """Tokenize a frame's IEs and pull out the signature fields.

    Extraction is tolerant: an IE too short for a field leaves that field
    absent, because real captures contain nonconforming clients.
    """
    if frame.subtype not in _TAXONOMY_SUBTYPES:
        raise ValueError(f"no profile for subtype {frame.subtype.value}")

    tokens: list[Token] = []
    fields: dict[str, object] = {}

    def put(name, value):
        # First occurrence wins when a client repeats an IE.
        fields.setdefault(name, value)

    for ie in frame.elements:
        token: Token = ie.id
        if ie.id == IE_VENDOR:
            identity = vendor_identity(ie)
            if identity is not None:
                token = identity
                if identity.oui == WPS_OUI and identity.subtype == WPS_VENDOR_SUBTYPE:
                    name = _wps_model_name(ie.payload)
                    if name:
                        put("wps_name", name)
        elif ie.id == IE_EXTENSION and len(ie.payload) >= 1:
            token = ExtensionTag(ie.payload[0])
        tokens.append(token)

        body = ie.payload
        if ie.id == IE_HT_CAPABILITIES:
            if len(body) >= 2:
                put("htcap", _le_int(body[0:2]))
            if len(body) >= 3:
                put("htagg", body[2])
            if len(body) >= 7:
                put("htmcs", _le_int(body[3:7]))
        elif ie.id == IE_VHT_CAPABILITIES:
            if len(body) >= 4:
                put("vhtcap", _le_int(body[0:4]))
            if len(body) >= 8:
                put("vhtrxmcs", _le_int(body[4:8]))
            if len(body) >= 12:
                put("vhttxmcs", _le_int(body[8:12]))
        elif ie.id == IE_POWER_CAPABILITY:
            if len(body) >= 2:
                put("txpow", _le_int(body[0:2]))
        elif ie.id == IE_EXTENDED_CAPABILITIES:
            if len(body) >= 1:
                put("extcap", body)

    return FrameProfile(ie_tokens=tuple(tokens), **fields)


def render_token(token: Token) -> str:
    """Text form of one IE token, e.g. "45" or "221(0050f2,8)"."""
    return str(token)


def _render_part(profile: FrameProfile) -> str:
    pieces = [render_token(t) for t in profile.ie_tokens]
    if profile.htcap is not None:
        pieces.append(f"htcap:{profile.htcap:04x}")
    if profile.htagg is not None:
        pieces.append(f"htagg:{profile.htagg:02x}")
    if profile.htmcs is not None:
        pieces.append(f"htmcs:{profile.htmcs:08x}")
    if profile.vhtcap is not None:
        pieces.append(f"vhtcap:{profile.vhtcap:08x}")
    if profile.vhtrxmcs is not None:
        pieces.append(f"vhtrxmcs:{profile.vhtrxmcs:08x}")
    if profile.vhttxmcs is not None:
        pieces.append(f"vhttxmcs:{profile.vhttxmcs:08x}")
    if profile.txpow is not None:
        pieces.append(f"txpow:{profile.txpow:04x}")
    if profile.extcap is not None:
        pieces.append(f"extcap:{profile.extcap.hex()}")
    if profile.wps_name is not None:
        pieces.append(f"wps:{profile.wps_name}")
    return ",".join(pieces)


def compose_signature(probe: FrameProfile, assoc: FrameProfile) -> str:
    """The canonical wifi4 string for a probe/assoc profile pair."""
    return f"wifi4|probe:{_render_part(probe)}|assoc:{_render_part(assoc)}"


def signature_is_valid(text: str) -> bool:
    """True when text matches the wifi4 signature grammar."""
    return SIGNATURE_RE.match(text) is not None

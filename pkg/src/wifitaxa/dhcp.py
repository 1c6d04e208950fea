"""DHCP packet parsing and the supplemental dhcp signature string.

The signature lists the option numbers a client asks for in its Parameter
Request List (option 55), in the order they appear.  That list is distinctive
enough to separate devices whose wifi signatures collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class DhcpError(Exception):
    """Base class for DHCP decode failures."""


class NotDhcp(DhcpError):
    """BOOTP payload lacks the DHCP magic cookie."""


class TruncatedDhcp(DhcpError):
    """Packet ends inside the BOOTP header or an option."""


class DhcpMessageType(Enum):
    DISCOVER = 1
    REQUEST = 3
    OTHER = 0


BOOTP_HEADER_LEN = 236
MAGIC_COOKIE = b"\x63\x82\x53\x63"

OPT_PAD = 0
OPT_MESSAGE_TYPE = 53
OPT_PARAMETER_REQUEST_LIST = 55
OPT_END = 255

_CHADDR_OFFSET = 28


@dataclass(frozen=True)
class DhcpObservation:
    client_mac: bytes
    option_list: tuple[int, ...]
    message_type: DhcpMessageType


def parse_dhcp(data: bytes) -> DhcpObservation:
    """Decode one BOOTP payload (the UDP payload on ports 67/68)."""
    if len(data) < BOOTP_HEADER_LEN + 4:
        raise TruncatedDhcp(f"{len(data)} bytes, need {BOOTP_HEADER_LEN + 4}")
    if data[BOOTP_HEADER_LEN : BOOTP_HEADER_LEN + 4] != MAGIC_COOKIE:
        raise NotDhcp("magic cookie missing")

    client_mac = data[_CHADDR_OFFSET : _CHADDR_OFFSET + 6]

    message_type = DhcpMessageType.OTHER
    option_list: tuple[int, ...] = ()
    seen: set[int] = set()

    pos = BOOTP_HEADER_LEN + 4
    end = len(data)
    while pos < end:
        code = data[pos]
        if code == OPT_PAD:
            pos += 1
            continue
        if code == OPT_END:
            break
        if pos + 2 > end:
            raise TruncatedDhcp("option header truncated")
        length = data[pos + 1]
        if pos + 2 + length > end:
            raise TruncatedDhcp(f"option {code} length {length} exceeds packet")
        value = data[pos + 2 : pos + 2 + length]
        if code not in seen:
            seen.add(code)
            if code == OPT_MESSAGE_TYPE and length >= 1:
                if value[0] == DhcpMessageType.DISCOVER.value:
                    message_type = DhcpMessageType.DISCOVER
                elif value[0] == DhcpMessageType.REQUEST.value:
                    message_type = DhcpMessageType.REQUEST
            elif code == OPT_PARAMETER_REQUEST_LIST:
                option_list = tuple(value)
        pos += 2 + length

    return DhcpObservation(client_mac, option_list, message_type)


def dhcp_signature(obs: DhcpObservation) -> str:
    """Render the observation as a `dhcp|...` string."""
    return render_dhcp_signature(obs.option_list)


def render_dhcp_signature(option_list) -> str:
    return "dhcp|" + ",".join(str(o) for o in option_list)


def synthesize_dhcp(
    client_mac: bytes,
    option_list,
    message_type: DhcpMessageType = DhcpMessageType.REQUEST,
    xid: int = 0x3903F326,
) -> bytes:
    """Build a BOOTP payload that parses back to the given observation."""
    if len(client_mac) != 6:
        raise ValueError("client_mac must be 6 bytes")

    out = bytearray(BOOTP_HEADER_LEN)
    out[0] = 1  # op: BOOTREQUEST
    out[1] = 1  # htype: ethernet
    out[2] = 6  # hlen
    out[4:8] = xid.to_bytes(4, "big")
    out[_CHADDR_OFFSET : _CHADDR_OFFSET + 6] = client_mac

    out += MAGIC_COOKIE
    if message_type is not DhcpMessageType.OTHER:
        out += bytes([OPT_MESSAGE_TYPE, 1, message_type.value])
    if option_list:
        out += bytes([OPT_PARAMETER_REQUEST_LIST, len(option_list)])
        out += bytes(option_list)
    out += bytes([OPT_END])
    return bytes(out)

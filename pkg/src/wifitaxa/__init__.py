"""Passive Wi-Fi client taxonomy from management-frame and DHCP signatures."""

__version__ = "0.1.0"

from .dhcp import DhcpMessageType, DhcpObservation, dhcp_signature, parse_dhcp
from .frame_codec import (
    Encapsulation,
    FrameSubtype,
    InformationElement,
    ManagementFrame,
    VendorIdentity,
    parse_management_frame,
    synthesize_frame,
    vendor_identity,
)
from .signature import (
    SIGNATURE_RE,
    ClientSignature,
    FrameProfile,
    compose_signature,
    extract_profile,
    render_token,
    sanitize_wps_name,
    signature_is_valid,
)
from .taxonomy_db import (
    Ambiguous,
    DbEntry,
    DhcpOsRule,
    Identification,
    SignatureDb,
    load_db,
    load_dhcp_os_rules,
    load_oui_table,
    lookup,
    validate_entry,
)
from .tracker import ClientTracker, ProbeCache, ProbeKind, TrackerStats

__all__ = [
    "Ambiguous",
    "ClientSignature",
    "ClientTracker",
    "DbEntry",
    "DhcpMessageType",
    "DhcpObservation",
    "DhcpOsRule",
    "Encapsulation",
    "FrameProfile",
    "FrameSubtype",
    "Identification",
    "InformationElement",
    "ManagementFrame",
    "ProbeCache",
    "ProbeKind",
    "SIGNATURE_RE",
    "SignatureDb",
    "TrackerStats",
    "VendorIdentity",
    "compose_signature",
    "dhcp_signature",
    "extract_profile",
    "load_db",
    "load_dhcp_os_rules",
    "load_oui_table",
    "lookup",
    "parse_dhcp",
    "parse_management_frame",
    "render_token",
    "sanitize_wps_name",
    "signature_is_valid",
    "synthesize_frame",
    "validate_entry",
    "vendor_identity",
]

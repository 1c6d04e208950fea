"""Built-in client device profiles for fixture generation.

Each profile holds the probe and association IE inventories of one known
device, with payloads whose extracted fields reproduce that device's
reference signature.  Payload bytes an extractor never reads (rates, RSN
suites, channel lists) are representative filler.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .dhcp import DhcpMessageType, synthesize_dhcp
from .frame_codec import FrameSubtype, InformationElement, synthesize_frame


def _ie(ie_id: int, payload: bytes | str) -> InformationElement:
    if isinstance(payload, str):
        payload = bytes.fromhex(payload)
    return InformationElement(ie_id, payload)


def _ht_caps(htcap: int, htagg: int, htmcs: int) -> bytes:
    # cap info (2) + A-MPDU params (1) + MCS set (16) + ext caps (2)
    # + txbf (4) + ASEL (1) = 26 bytes
    return struct.pack("<HB", htcap, htagg) + struct.pack("<I", htmcs) + bytes(19)


def _vht_caps(vhtcap: int, rxmcs: int, txmcs: int) -> bytes:
    return struct.pack("<III", vhtcap, rxmcs, txmcs)


def _power(txpow: int) -> bytes:
    return struct.pack("<H", txpow)


def _vendor(oui_hex: str, subtype: int, extra: bytes | str = b"") -> InformationElement:
    if isinstance(extra, str):
        extra = bytes.fromhex(extra)
    return _ie(221, bytes.fromhex(oui_hex) + bytes([subtype]) + extra)


def _wps(name: str) -> InformationElement:
    body = b"\x10\x4a\x00\x01\x10"  # WPS version attribute
    body += struct.pack(">HH", 0x1023, len(name)) + name.encode("ascii")
    return _vendor("0050f2", 4, body)


_RATES_24 = "82848b962430486c"
_RATES_24_BASIC = "82848b96"
_RATES_5G = "8c129824b048606c"
_EXT_RATES = "0c1218243048606c"
_SSID = b"lab-ap"
_RSN = "0100000fac040100000fac040100000fac020000"
_CHANNELS_5G = "240464089505"
_CHANNELS_24 = "010d"
_RM_CAPS = bytes(5)
_INTERWORKING = b"\x0f"
_BCM = "000000000000"  # Broadcom 221(001018,2) 6-byte bitmask
_WMM = "000100"

IOS_DHCP_OPTIONS = (1, 3, 6, 15, 119, 252)
ANDROID_DHCP_OPTIONS = (1, 33, 3, 6, 15, 26, 28, 51, 58, 59)
CHROMEOS_DHCP_OPTIONS = (1, 121, 33, 3, 6, 12, 15, 26, 28, 51, 54, 58, 59, 119)


@dataclass(frozen=True)
class DeviceProfile:
    name: str
    model: str
    mac: bytes
    probe_elements: tuple[InformationElement, ...]
    assoc_elements: tuple[InformationElement, ...]
    dhcp_options: tuple[int, ...] | None = None

    def probe_frame_bytes(self) -> bytes:
        return synthesize_frame(FrameSubtype.PROBE_REQUEST, self.mac, self.probe_elements)

    def assoc_frame_bytes(self) -> bytes:
        return synthesize_frame(
            FrameSubtype.ASSOCIATION_REQUEST,
            self.mac,
            self.assoc_elements,
            capabilities=0x0431,
            listen_interval=10,
        )

    def dhcp_packet_bytes(self) -> bytes | None:
        if self.dhcp_options is None:
            return None
        return synthesize_dhcp(self.mac, self.dhcp_options, DhcpMessageType.REQUEST)


def _apple_phone(
    name, model, mac, htcap, htmcs, vht, probe_extcap, assoc_extcap, txpow,
    assoc_rrm=True,
):
    """The shared iPhone 6-era shape: 5GHz, VHT, Broadcom vendor IE."""
    ht = _ht_caps(htcap, 0x17, htmcs)
    vht_body = _vht_caps(*vht)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_5G),
        _ie(45, ht),
        _ie(127, probe_extcap),
        _ie(107, _INTERWORKING),
        _ie(191, vht_body),
        _vendor("0050f2", 8, "0000"),
        _vendor("001018", 2, _BCM),
    )
    assoc = [
        _ie(0, _SSID),
        _ie(1, _RATES_5G),
        _ie(33, _power(txpow)),
        _ie(36, _CHANNELS_5G),
        _ie(48, _RSN),
    ]
    if assoc_rrm:
        assoc.append(_ie(70, _RM_CAPS))
    assoc += [
        _ie(45, ht),
        _ie(127, assoc_extcap),
        _ie(191, vht_body),
        _vendor("001018", 2, _BCM),
        _vendor("0050f2", 2, _WMM),
    ]
    return DeviceProfile(
        name, model, mac, probe, tuple(assoc), dhcp_options=IOS_DHCP_OPTIONS
    )


def _iphone_n_style(name, model, mac, extcap, txpow, assoc_rrm):
    """The 802.11n-only iPhone 5 generation (BCM4334, no VHT)."""
    ht = _ht_caps(0x0062, 0x1A, 0x000000FF)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_24),
        _ie(45, ht),
        _ie(127, extcap),
        _ie(107, _INTERWORKING),
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 51, ht),
        _vendor("0050f2", 8, "0000"),
    )
    assoc = [
        _ie(0, _SSID),
        _ie(1, _RATES_24),
        _ie(33, _power(txpow)),
        _ie(36, _CHANNELS_24),
        _ie(48, _RSN),
        _ie(45, ht),
    ]
    if assoc_rrm:
        assoc.append(_ie(70, _RM_CAPS))
    assoc += [
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 51, ht),
        _vendor("0050f2", 2, _WMM),
    ]
    return DeviceProfile(
        name, model, mac, probe, tuple(assoc), dhcp_options=IOS_DHCP_OPTIONS
    )


def _qca_android(name, model, mac):
    """The Moto E / Xperia Z Ultra / Oneplus X shape: identical wifi signature."""
    ht = _ht_caps(0x012C, 0x03, 0x000000FF)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_24_BASIC),
        _ie(50, _EXT_RATES),
        _ie(3, b"\x01"),
        _ie(45, ht),
        _vendor("0050f2", 8, "0000"),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_24_BASIC),
        _ie(50, _EXT_RATES),
        _ie(33, _power(0x170D)),
        _ie(48, _RSN),
        _ie(70, _RM_CAPS),
        _ie(45, ht),
        _vendor("0050f2", 2, _WMM),
        _ie(127, "00000a0200000000"),
    )
    return DeviceProfile(name, model, mac, probe, assoc)


def _broadcom_iot(name, model, mac, dhcp_options):
    """The Roku / Withings / Dash shape: identical wifi signature, DHCP differs."""
    ht = _ht_caps(0x110C, 0x19, 0x000000FF)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_24_BASIC),
        _ie(50, _EXT_RATES),
        _ie(45, ht),
        _ie(3, b"\x0b"),
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 51, ht),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_24_BASIC),
        _ie(48, _RSN),
        _ie(50, _EXT_RATES),
        _ie(45, ht),
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 51, ht),
        _vendor("0050f2", 2, _WMM),
    )
    return DeviceProfile(name, model, mac, probe, assoc, dhcp_options=dhcp_options)


def _lg_g4():
    ht = _ht_caps(0x016F, 0x17, 0x000000FF)
    vht = _vht_caps(0x0F805932, 0x0000FFFE, 0x0000FFFE)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_24),
        _ie(3, b"\x06"),
        _ie(45, ht),
        _ie(127, "0000088001400040"),
        _ie(107, _INTERWORKING),
        _ie(191, vht),
        _vendor("506f9a", 16, "00"),
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 51, ht),
        _vendor("00904c", 4, "00"),
        _vendor("0050f2", 8, "0000"),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_24),
        _ie(33, _power(0x1D01)),
        _ie(36, _CHANNELS_24),
        _ie(48, _RSN),
        _ie(45, ht),
        _ie(127, "0000008001400040"),
        _ie(191, vht),
        _vendor("001018", 2, _BCM),
        _vendor("00904c", 4, "00"),
        _vendor("0050f2", 2, _WMM),
    )
    return DeviceProfile(
        "lg-g4", "LG G4", bytes.fromhex("a039f7040402"), probe, assoc,
        dhcp_options=ANDROID_DHCP_OPTIONS,
    )


def _galaxy_s5():
    ht = _ht_caps(0x006F, 0x17, 0x0000FFFF)
    vht = _vht_caps(0x0F815832, 0x0000FFFF, 0x0000FFFF)
    extcap = "0000088001400040"
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_5G),
        _ie(45, ht),
        _ie(127, extcap),
        _ie(107, _INTERWORKING),
        _ie(191, vht),
        _vendor("506f9a", 16, "00"),
        _vendor("00904c", 4, "00"),
        _vendor("0050f2", 8, "0000"),
        _vendor("001018", 2, _BCM),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_5G),
        _ie(33, _power(0xE20B)),
        _ie(36, _CHANNELS_5G),
        _ie(48, _RSN),
        _ie(45, ht),
        _ie(127, extcap),
        _ie(107, _INTERWORKING),
        _ie(191, vht),
        _vendor("00904c", 4, "00"),
        _vendor("001018", 2, _BCM),
        _vendor("0050f2", 2, _WMM),
    )
    return DeviceProfile(
        "galaxy-s5", "Samsung Galaxy S5", bytes.fromhex("8c7712550009"),
        probe, assoc, dhcp_options=ANDROID_DHCP_OPTIONS,
    )


def _nexus_6p():
    ht = _ht_caps(0x006F, 0x17, 0x0000FFFF)
    vht = _vht_caps(0x0F815832, 0x0000FFFF, 0x0000FFFF)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_5G),
        _ie(45, ht),
        _ie(191, vht),
        _wps("Nexus 6P"),
        _vendor("506f9a", 9, "02020025"),
        _vendor("001018", 2, _BCM),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_5G),
        _ie(33, _power(0xE002)),
        _ie(36, _CHANNELS_5G),
        _ie(48, _RSN),
        _ie(45, ht),
        _ie(191, vht),
        _vendor("001018", 2, _BCM),
        _vendor("0050f2", 2, _WMM),
    )
    return DeviceProfile(
        "nexus-6p", "Nexus 6P", bytes.fromhex("4846fb065001"), probe, assoc
    )


def _nexus_7():
    ht = _ht_caps(0x016E, 0x03, 0x000000FF)
    probe = (
        _ie(0, b""),
        _ie(1, _RATES_24),
        _ie(45, ht),
        _vendor("0050f2", 8, "0000"),
        _wps("Nexus 7"),
        _vendor("506f9a", 10, "00"),
        _vendor("506f9a", 9, "02020025"),
    )
    assoc = (
        _ie(0, _SSID),
        _ie(1, _RATES_24),
        _ie(33, _power(0x1E0D)),
        _ie(36, _CHANNELS_24),
        _ie(48, _RSN),
        _ie(45, ht),
        _vendor("0050f2", 2, _WMM),
        _ie(127, "00000a02"),
    )
    return DeviceProfile(
        "nexus-7-2013", "Nexus 7 (2013)", bytes.fromhex("08606e70130a"), probe, assoc
    )


def _build_profiles() -> dict[str, DeviceProfile]:
    profiles = [
        _apple_phone(
            "iphone-6s", "iPhone 6s", bytes.fromhex("28cfe901650a"),
            htcap=0x006F, htmcs=0x0000FFFF,
            vht=(0x0F815832, 0x0000FFFF, 0x0000FFFF),
            probe_extcap="0400088400000040", assoc_extcap="0400000000000040",
            txpow=0xE002,
        ),
        _apple_phone(
            "iphone-6", "iPhone 6", bytes.fromhex("f0dbf802600b"),
            htcap=0x0063, htmcs=0x000000FF,
            vht=(0x0F805032, 0x0000FFFE, 0x0000FFFE),
            probe_extcap="0400088400000040", assoc_extcap="0400000000000040",
            txpow=0xE002,
        ),
        _iphone_n_style(
            "iphone-5", "iPhone 5", bytes.fromhex("28cfe905000c"),
            extcap="00000004", txpow=0x1504, assoc_rrm=False,
        ),
        _iphone_n_style(
            "iphone-5s", "iPhone 5s", bytes.fromhex("f0dbf805050d"),
            extcap="00000804", txpow=0x1603, assoc_rrm=False,
        ),
        # Same device model seen behind an AP that sets the RRM beacon bits,
        # which makes IE 70 appear in the association request.
        _iphone_n_style(
            "iphone-5s-rrm", "iPhone 5s", bytes.fromhex("28cfe905050e"),
            extcap="00000804", txpow=0x1603, assoc_rrm=True,
        ),
        _lg_g4(),
        _galaxy_s5(),
        _nexus_6p(),
        _nexus_7(),
        _qca_android("moto-e-2nd-gen", "Moto E (2nd gen)", bytes.fromhex("90b6860e0203")),
        _qca_android("xperia-z-ultra", "Sony Xperia Z Ultra", bytes.fromhex("b4527e5a7504")),
        _qca_android("oneplus-x", "Oneplus X", bytes.fromhex("c0eefb580105")),
        _broadcom_iot(
            "roku-hd-2500", "Roku HD 2500", bytes.fromhex("b0a737250006"),
            dhcp_options=(1, 3, 6, 15, 12),
        ),
        _broadcom_iot(
            "withings-scale", "Withings Scale", bytes.fromhex("0024e45ca107"),
            dhcp_options=(1, 3, 28, 6),
        ),
        _broadcom_iot(
            "amazon-dash-button", "Amazon Dash Button", bytes.fromhex("74c246da5b08"),
            dhcp_options=(1, 3, 6),
        ),
    ]
    return {p.name: p for p in profiles}


DEVICE_PROFILES: dict[str, DeviceProfile] = _build_profiles()


def profile_names() -> list[str]:
    return sorted(DEVICE_PROFILES)


def get_profile(name: str) -> DeviceProfile | None:
    return DEVICE_PROFILES.get(name)

#!/usr/bin/env python3
"""Regenerate the committed fixture captures.

capture-wifi.pcap (link type 105): probe + association for every built-in
device profile, plus two noise records (a beacon, which the taxonomy
ignores, and a probe with a corrupt IE length, which counts as malformed).

capture-dhcp.pcap (link type 1): one broadcast DHCP request per profile
that has a known option list.

Both files are deterministic; tests compare them against fresh output.
"""

import pathlib

from wifitaxa.ingest import LINKTYPE_ETHERNET, LINKTYPE_IEEE802_11, ethernet_dhcp_frame, write_pcap
from wifitaxa.profiles import DEVICE_PROFILES

HERE = pathlib.Path(__file__).parent

# 24-byte MAC header with frame control 0x80 (beacon) and a minimal body.
BEACON = bytes.fromhex(
    "8000" "0000" "ffffffffffff" "020000000001" "020000000001" "0000"
    + "00" * 12
)
# Probe request whose single IE declares 32 payload bytes but carries none.
CORRUPT_PROBE = bytes.fromhex(
    "4000" "0000" "ffffffffffff" "020000badbad" "ffffffffffff" "0000" "dd20"
)


def wifi_records():
    ts = 1000
    for name in sorted(DEVICE_PROFILES):
        profile = DEVICE_PROFILES[name]
        yield ts, 0, profile.probe_frame_bytes()
        yield ts, 500000, profile.assoc_frame_bytes()
        ts += 1
    yield ts, 0, BEACON
    yield ts, 500000, CORRUPT_PROBE


def dhcp_records():
    ts = 2000
    for name in sorted(DEVICE_PROFILES):
        packet = DEVICE_PROFILES[name].dhcp_packet_bytes()
        if packet is None:
            continue
        yield ts, 0, ethernet_dhcp_frame(packet, DEVICE_PROFILES[name].mac)
        ts += 1


def main():
    write_pcap(HERE / "capture-wifi.pcap", wifi_records(), LINKTYPE_IEEE802_11)
    write_pcap(HERE / "capture-dhcp.pcap", dhcp_records(), LINKTYPE_ETHERNET)
    print("wrote capture-wifi.pcap and capture-dhcp.pcap")


if __name__ == "__main__":
    main()

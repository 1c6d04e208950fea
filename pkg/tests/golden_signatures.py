"""Frozen reference signatures for the built-in device profiles.

These strings are the published v4 signatures of real devices, with the
canonical field labels and the value corrections that fixtures/README.md
enumerates.  They are the expected output of synth -> sign and the wifi4
column of fixtures/db.tsv; change any byte here and the fixture database
must change with it.
"""

GOLDEN_WIFI4 = {
    "iphone-6s": (
        "wifi4|probe:0,1,45,127,107,191,221(0050f2,8),221(001018,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,extcap:0400088400000040"
        "|assoc:0,1,33,36,48,70,45,127,191,221(001018,2),221(0050f2,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,txpow:e002,extcap:0400000000000040"
    ),
    "nexus-6p": (
        "wifi4|probe:0,1,45,191,221(0050f2,4),221(506f9a,9),221(001018,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,wps:Nexus_6P"
        "|assoc:0,1,33,36,48,45,191,221(001018,2),221(0050f2,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,txpow:e002"
    ),
    "lg-g4": (
        "wifi4|probe:0,1,3,45,127,107,191,221(506f9a,16),221(001018,2),"
        "221(00904c,51),221(00904c,4),221(0050f2,8),"
        "htcap:016f,htagg:17,htmcs:000000ff,vhtcap:0f805932,vhtrxmcs:0000fffe,"
        "vhttxmcs:0000fffe,extcap:0000088001400040"
        "|assoc:0,1,33,36,48,45,127,191,221(001018,2),221(00904c,4),221(0050f2,2),"
        "htcap:016f,htagg:17,htmcs:000000ff,vhtcap:0f805932,vhtrxmcs:0000fffe,"
        "vhttxmcs:0000fffe,txpow:1d01,extcap:0000008001400040"
    ),
    "iphone-6": (
        "wifi4|probe:0,1,45,127,107,191,221(0050f2,8),221(001018,2),"
        "htcap:0063,htagg:17,htmcs:000000ff,vhtcap:0f805032,vhtrxmcs:0000fffe,"
        "vhttxmcs:0000fffe,extcap:0400088400000040"
        "|assoc:0,1,33,36,48,70,45,127,191,221(001018,2),221(0050f2,2),"
        "htcap:0063,htagg:17,htmcs:000000ff,vhtcap:0f805032,vhtrxmcs:0000fffe,"
        "vhttxmcs:0000fffe,txpow:e002,extcap:0400000000000040"
    ),
    "iphone-5": (
        "wifi4|probe:0,1,45,127,107,221(001018,2),221(00904c,51),221(0050f2,8),"
        "htcap:0062,htagg:1a,htmcs:000000ff,extcap:00000004"
        "|assoc:0,1,33,36,48,45,221(001018,2),221(00904c,51),221(0050f2,2),"
        "htcap:0062,htagg:1a,htmcs:000000ff,txpow:1504"
    ),
    "iphone-5s": (
        "wifi4|probe:0,1,45,127,107,221(001018,2),221(00904c,51),221(0050f2,8),"
        "htcap:0062,htagg:1a,htmcs:000000ff,extcap:00000804"
        "|assoc:0,1,33,36,48,45,221(001018,2),221(00904c,51),221(0050f2,2),"
        "htcap:0062,htagg:1a,htmcs:000000ff,txpow:1603"
    ),
    "iphone-5s-rrm": (
        "wifi4|probe:0,1,45,127,107,221(001018,2),221(00904c,51),221(0050f2,8),"
        "htcap:0062,htagg:1a,htmcs:000000ff,extcap:00000804"
        "|assoc:0,1,33,36,48,45,70,221(001018,2),221(00904c,51),221(0050f2,2),"
        "htcap:0062,htagg:1a,htmcs:000000ff,txpow:1603"
    ),
    "moto-e-2nd-gen": (
        "wifi4|probe:0,1,50,3,45,221(0050f2,8),"
        "htcap:012c,htagg:03,htmcs:000000ff"
        "|assoc:0,1,50,33,48,70,45,221(0050f2,2),127,"
        "htcap:012c,htagg:03,htmcs:000000ff,txpow:170d,extcap:00000a0200000000"
    ),
    "roku-hd-2500": (
        "wifi4|probe:0,1,50,45,3,221(001018,2),221(00904c,51),"
        "htcap:110c,htagg:19,htmcs:000000ff"
        "|assoc:0,1,48,50,45,221(001018,2),221(00904c,51),221(0050f2,2),"
        "htcap:110c,htagg:19,htmcs:000000ff"
    ),
    "galaxy-s5": (
        "wifi4|probe:0,1,45,127,107,191,221(506f9a,16),221(00904c,4),"
        "221(0050f2,8),221(001018,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,extcap:0000088001400040"
        "|assoc:0,1,33,36,48,45,127,107,191,221(00904c,4),221(001018,2),221(0050f2,2),"
        "htcap:006f,htagg:17,htmcs:0000ffff,vhtcap:0f815832,vhtrxmcs:0000ffff,"
        "vhttxmcs:0000ffff,txpow:e20b,extcap:0000088001400040"
    ),
    "nexus-7-2013": (
        "wifi4|probe:0,1,45,221(0050f2,8),221(0050f2,4),221(506f9a,10),221(506f9a,9),"
        "htcap:016e,htagg:03,htmcs:000000ff,wps:Nexus_7"
        "|assoc:0,1,33,36,48,45,221(0050f2,2),127,"
        "htcap:016e,htagg:03,htmcs:000000ff,txpow:1e0d,extcap:00000a02"
    ),
}

# The OUI triplet and the DHCP triplet share one wifi signature each.
GOLDEN_WIFI4["xperia-z-ultra"] = GOLDEN_WIFI4["moto-e-2nd-gen"]
GOLDEN_WIFI4["oneplus-x"] = GOLDEN_WIFI4["moto-e-2nd-gen"]
GOLDEN_WIFI4["withings-scale"] = GOLDEN_WIFI4["roku-hd-2500"]
GOLDEN_WIFI4["amazon-dash-button"] = GOLDEN_WIFI4["roku-hd-2500"]

GOLDEN_DHCP = {
    "iphone-6s": "dhcp|1,3,6,15,119,252",
    "iphone-6": "dhcp|1,3,6,15,119,252",
    "iphone-5": "dhcp|1,3,6,15,119,252",
    "iphone-5s": "dhcp|1,3,6,15,119,252",
    "iphone-5s-rrm": "dhcp|1,3,6,15,119,252",
    "roku-hd-2500": "dhcp|1,3,6,15,12",
    "withings-scale": "dhcp|1,3,28,6",
    "amazon-dash-button": "dhcp|1,3,6",
    "lg-g4": "dhcp|1,33,3,6,15,26,28,51,58,59",
    "galaxy-s5": "dhcp|1,33,3,6,15,26,28,51,58,59",
}

# Published OS option lists for the supplemental DHCP mechanism.
OS_DHCP_SIGNATURES = {
    "android": "dhcp|1,33,3,6,15,26,28,51,58,59",
    "chromeos": "dhcp|1,121,33,3,6,12,15,26,28,51,54,58,59,119",
    "ios": "dhcp|1,3,6,15,119,252",
}

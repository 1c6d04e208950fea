import json

import pytest

from wifitaxa.cli import main
from wifitaxa.ingest import LINKTYPE_IEEE802_11, write_pcap
from wifitaxa.profiles import DEVICE_PROFILES

from golden_signatures import GOLDEN_WIFI4

WIFI = "capture-wifi.pcap"
DHCP = "capture-dhcp.pcap"


def fixture_args(fixtures_dir, *extra, dhcp=True):
    args = ["--pcap", str(fixtures_dir / WIFI)]
    if dhcp:
        args += ["--pcap", str(fixtures_dir / DHCP)]
    return args + list(extra)


def db_args(fixtures_dir):
    return [
        "--db", str(fixtures_dir / "db.tsv"),
        "--dhcp-map", str(fixtures_dir / "dhcp-os.tsv"),
    ]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSign:
    def test_fixture_capture_emits_reference_signatures(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, ["sign", *fixture_args(fixtures_dir, dhcp=False)])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 15
        by_mac = {line.split("\t")[0]: line.split("\t") for line in lines}
        iphone_5s = DEVICE_PROFILES["iphone-5s"]
        mac = ":".join(f"{b:02x}" for b in iphone_5s.mac)
        assert by_mac[mac][1] == GOLDEN_WIFI4["iphone-5s"]
        assert by_mac[mac][2] == ""  # no dhcp observation in the wifi capture

    def test_dhcp_capture_first_fills_third_column(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys,
            ["sign", "--pcap", str(fixtures_dir / DHCP), "--pcap", str(fixtures_dir / WIFI)],
        )
        assert code == 0
        roku_mac = ":".join(f"{b:02x}" for b in DEVICE_PROFILES["roku-hd-2500"].mac)
        rows = {l.split("\t")[0]: l.split("\t") for l in out.splitlines()}
        assert rows[roku_mac][2] == "dhcp|1,3,6,15,12"

    def test_empty_capture_is_silent_success(self, capsys, tmp_path):
        path = tmp_path / "empty.pcap"
        write_pcap(path, [], LINKTYPE_IEEE802_11)
        code, out, _ = run(capsys, ["sign", "--pcap", str(path)])
        assert code == 0 and out == ""

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, ["sign", "--pcap", str(tmp_path / "nope.pcap")])
        assert code == 2 and "nope.pcap" in err

    def test_invalid_pcap_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.pcap"
        path.write_bytes(b"not a capture")
        code, _, err = run(capsys, ["sign", "--pcap", str(path)])
        assert code == 2 and "pcap" in err.lower()

    def test_jsonl_output(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, ["sign", *fixture_args(fixtures_dir, dhcp=False), "--output", "jsonl"]
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 15
        assert {"mac", "wifi4", "dhcp"} <= set(rows[0])


class TestIdentify:
    def test_fixture_devices_fully_identified(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, ["identify", *fixture_args(fixtures_dir), *db_args(fixtures_dir)]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "# identified 15/15"
        models = {line.split("\t")[1] for line in lines[:-1]}
        assert "UNKNOWN" not in models and "AMBIGUOUS" not in models
        bases = {line.split("\t")[2] for line in lines[:-1]}
        assert bases == {"wifi4", "wifi4+oui", "wifi4+dhcp"}

    def test_unknown_device_reported(self, capsys, tmp_path, fixtures_dir):
        path = tmp_path / "unknown.pcap"
        mac = bytes.fromhex("020000aa0001")
        from wifitaxa.frame_codec import FrameSubtype, InformationElement, synthesize_frame

        ies = (InformationElement(0, b""), InformationElement(1, b"\x82"))
        write_pcap(
            path,
            [
                (0, 0, synthesize_frame(FrameSubtype.PROBE_REQUEST, mac, ies)),
                (1, 0, synthesize_frame(FrameSubtype.ASSOCIATION_REQUEST, mac, ies, capabilities=0)),
            ],
            LINKTYPE_IEEE802_11,
        )
        code, out, _ = run(capsys, ["identify", "--pcap", str(path), *db_args(fixtures_dir)])
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split("\t")[1] == "UNKNOWN"
        assert lines[-1] == "# identified 0/1"

    def test_ambiguous_reported_distinctly(self, capsys, tmp_path):
        db = tmp_path / "db.tsv"
        sig = "wifi4|probe:0,1|assoc:0,1"
        db.write_text(f"A\t{sig}\toui:020000\nB\t{sig}\toui:020000;oui:020001\n")
        path = tmp_path / "cap.pcap"
        from wifitaxa.frame_codec import FrameSubtype, InformationElement, synthesize_frame

        mac = bytes.fromhex("020000aa0001")
        ies = (InformationElement(0, b""), InformationElement(1, b"\x82"))
        write_pcap(
            path,
            [
                (0, 0, synthesize_frame(FrameSubtype.PROBE_REQUEST, mac, ies)),
                (1, 0, synthesize_frame(FrameSubtype.ASSOCIATION_REQUEST, mac, ies, capabilities=0)),
            ],
            LINKTYPE_IEEE802_11,
        )
        code, out, _ = run(capsys, ["identify", "--pcap", str(path), "--db", str(db)])
        assert code == 0
        row = out.splitlines()[0].split("\t")
        assert row[1] == "AMBIGUOUS"
        assert set(row[2].split(",")) == {"A", "B"}
        assert out.splitlines()[-1] == "# identified 0/1"

    def test_bad_db_exits_3(self, capsys, fixtures_dir, tmp_path):
        db = tmp_path / "broken.tsv"
        db.write_text("model-without-signature\n")
        code, _, err = run(
            capsys,
            ["identify", *fixture_args(fixtures_dir, dhcp=False), "--db", str(db)],
        )
        assert code == 3 and "broken.tsv:1" in err

    def test_output_is_byte_stable(self, capsys, fixtures_dir):
        argv = ["identify", *fixture_args(fixtures_dir), *db_args(fixtures_dir)]
        first = run(capsys, argv)
        second = run(capsys, argv)
        assert first == second

    def test_jsonl_summary(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys,
            ["identify", *fixture_args(fixtures_dir), *db_args(fixtures_dir), "--output", "jsonl"],
        )
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[-1] == {"summary": {"identified": 15, "total": 15}}


class TestDbCheck:
    def test_fixture_db_is_clean(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys,
            [
                "db-check", "--db", str(fixtures_dir / "db.tsv"),
                "--oui", str(fixtures_dir / "oui.tsv"),
            ],
        )
        assert code == 0 and out == ""

    def test_identical_unqualified_entries_flagged(self, capsys, tmp_path):
        db = tmp_path / "db.tsv"
        sig = "wifi4|probe:0,1|assoc:0,1"
        db.write_text(f"A\t{sig}\t\nB\t{sig}\t\n")
        code, out, _ = run(capsys, ["db-check", "--db", str(db)])
        assert code == 1
        assert out.startswith("line 2:")

    def test_apple_oui_only_entry_flagged(self, capsys, tmp_path, fixtures_dir):
        db = tmp_path / "db.tsv"
        db.write_text("Maybe iPad\twifi4|probe:0,1|assoc:0,1\toui:28cfe9\n")
        code, out, _ = run(
            capsys, ["db-check", "--db", str(db), "--oui", str(fixtures_dir / "oui.tsv")]
        )
        assert code == 1 and "Apple" in out

    def test_overlapping_qualified_entries_flagged(self, capsys, tmp_path):
        db = tmp_path / "db.tsv"
        sig = "wifi4|probe:0,1|assoc:0,1"
        db.write_text(f"A\t{sig}\toui:000001;oui:000002\nB\t{sig}\toui:000002\n")
        code, out, _ = run(capsys, ["db-check", "--db", str(db)])
        assert code == 1 and "alias" in out

    def test_unparseable_db_exits_3(self, capsys, tmp_path):
        db = tmp_path / "db.tsv"
        db.write_text("Model\tnot-a-signature\t\n")
        code, _, err = run(capsys, ["db-check", "--db", str(db)])
        assert code == 3 and "grammar" in err


class TestSynth:
    @pytest.mark.parametrize("name", ["iphone-5s", "nexus-7-2013"])
    def test_synth_then_sign_reproduces_reference(self, capsys, tmp_path, name):
        out_path = tmp_path / f"{name}.pcap"
        code, _, _ = run(capsys, ["synth", "--profile", name, "--out", str(out_path)])
        assert code == 0
        code, out, _ = run(capsys, ["sign", "--pcap", str(out_path)])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1
        assert lines[0].split("\t")[1] == GOLDEN_WIFI4[name]

    def test_unknown_profile_exits_4_and_lists_known(self, capsys, tmp_path):
        code, _, err = run(
            capsys, ["synth", "--profile", "hoverboard", "--out", str(tmp_path / "x.pcap")]
        )
        assert code == 4
        assert "iphone-5s" in err and "roku-hd-2500" in err


class TestStats:
    def test_empty_capture_all_zero(self, capsys, tmp_path):
        path = tmp_path / "empty.pcap"
        write_pcap(path, [], LINKTYPE_IEEE802_11)
        code, out, _ = run(capsys, ["stats", "--pcap", str(path)])
        assert code == 0
        values = dict(line.split("\t") for line in out.splitlines())
        assert values == {
            "total_clients": "0",
            "signatures_emitted": "0",
            "distinct_signatures": "0",
            "malformed_records": "0",
        }

    def test_fixture_capture_census(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, ["stats", *fixture_args(fixtures_dir), *db_args(fixtures_dir)]
        )
        assert code == 0
        values = dict(line.split("\t") for line in out.splitlines())
        assert values == {
            "total_clients": "15",
            "signatures_emitted": "15",
            "distinct_signatures": "11",
            "identified": "15",
            "malformed_records": "1",
        }

    def test_identical_probing_twice_counts_once(self, capsys, tmp_path):
        device = DEVICE_PROFILES["iphone-6"]
        path = tmp_path / "twice.pcap"
        write_pcap(
            path,
            [
                (0, 0, device.probe_frame_bytes()),
                (1, 0, device.assoc_frame_bytes()),
                (2, 0, device.probe_frame_bytes()),
                (3, 0, device.assoc_frame_bytes()),
            ],
            LINKTYPE_IEEE802_11,
        )
        code, out, _ = run(capsys, ["stats", "--pcap", str(path)])
        assert code == 0
        values = dict(line.split("\t") for line in out.splitlines())
        assert values["distinct_signatures"] == "1"
        assert values["signatures_emitted"] == "1"


class TestFixtureDrift:
    def test_committed_captures_match_generator(self, fixtures_dir, tmp_path):
        import importlib.util

        spec = importlib.util.spec_from_file_location(
            "gen_fixtures", fixtures_dir / "gen_fixtures.py"
        )
        gen = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(gen)
        from wifitaxa.ingest import LINKTYPE_ETHERNET

        fresh_wifi = tmp_path / WIFI
        fresh_dhcp = tmp_path / DHCP
        write_pcap(fresh_wifi, gen.wifi_records(), LINKTYPE_IEEE802_11)
        write_pcap(fresh_dhcp, gen.dhcp_records(), LINKTYPE_ETHERNET)
        assert (fixtures_dir / WIFI).read_bytes() == fresh_wifi.read_bytes()
        assert (fixtures_dir / DHCP).read_bytes() == fresh_dhcp.read_bytes()

    def test_db_rows_match_reference_signatures(self, fixtures_dir):
        by_model = {}
        for line in (fixtures_dir / "db.tsv").read_text().splitlines():
            if not line or line.startswith("#"):
                continue
            model, wifi4, _ = line.split("\t")
            by_model.setdefault(model, set()).add(wifi4)
        for name, device in DEVICE_PROFILES.items():
            assert GOLDEN_WIFI4[name] in by_model[device.model]

use std::process::{Command, Output};

fn gdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdm"))
        .args(args)
        .env_remove("GDM_OUT_DIR")
        .output()
        .expect("gdm binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn field_table_gf16() {
    let text = stdout(&gdm(&["field", "--p", "2", "--m", "4", "--poly", "10011"]));
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[0], "i,power,coeff_vector,order,minimal_poly");
    assert_eq!(lines[5], "3,a^3,\"(1,0,0,0)\",5,x^4 + x^3 + x^2 + x + 1");
    assert_eq!(lines[16], "14,a^14,\"(1,0,0,1)\",15,x^4 + x^3 + 1");
}

#[test]
fn mux_demux_round_trip_through_the_binary() {
    let spectrum = stdout(&gdm(&["mux", "--frame", "0,1,1,0,1,0,0,0,1,0,1,1,0,0,1"]));
    assert_eq!(
        spectrum.trim(),
        "1,0,0,a^10,0,a^5,a^5,a^10,0,a^5,a^10,a^5,a^10,a^10,a^5"
    );
    let frame = stdout(&gdm(&["demux", "--spectrum", spectrum.trim()]));
    assert_eq!(frame.trim(), "0,1,1,0,1,0,0,0,1,0,1,1,0,0,1");
}

#[test]
fn errors_exit_nonzero_with_one_line() {
    for args in [
        &["field", "--poly", "11111"][..],
        &["field", "--p", "6"],
        &["mux", "--frame", "0,1,1,0"],
        &["demux", "--spectrum", "1,0,a^10,a^1,a^10", "--compress"],
        &["ser-analytic", "--snr", "5:1:1"],
        &["ser-mc", "--frames", "0"],
        &["roundtrip", "--frame", "0,1,1,0,1", "--corrupt-leader"],
    ] {
        let out = gdm(args);
        assert!(!out.status.success(), "{args:?} succeeded");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "), "{err}");
    }
}

#[test]
fn ser_outputs_to_files_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gdm"))
        .args([
            "ser-analytic",
            "--mod",
            "bpsk,16qam",
            "--snr",
            "0,6,12",
            "--out",
            "curves.csv",
        ])
        .args(["--plot", "plots/curves.svg"])
        .env("GDM_OUT_DIR", dir.path())
        .output()
        .unwrap();
    stdout(&out);
    for name in ["curves_bpsk.csv", "curves_16qam.csv"] {
        let csv = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert_eq!(csv.lines().count(), 4, "{name}");
    }
    let svg = std::fs::read_to_string(dir.path().join("plots/curves.svg")).unwrap();
    assert!(svg.starts_with("<svg"));

    let mc = dir.path().join("mc.csv");
    stdout(&gdm(&[
        "ser-mc",
        "--mod",
        "qpsk",
        "--snr",
        "2,4",
        "--frames",
        "300",
        "--out",
        mc.to_str().unwrap(),
    ]));
    let csv = std::fs::read_to_string(mc).unwrap();
    assert_eq!(csv.lines().next(), Some("snr_db,p_m,p_e,ci_radius"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn ser_mc_is_seed_deterministic() {
    let args = [
        "ser-mc",
        "--mod",
        "bpsk",
        "--snr",
        "3",
        "--frames",
        "700",
        "--compressed",
    ];
    let a = stdout(&gdm(&[&args[..], &["--seed", "5", "--threads", "1"]].concat()));
    let b = stdout(&gdm(&[&args[..], &["--seed", "5", "--threads", "6"]].concat()));
    let c = stdout(&gdm(&[&args[..], &["--seed", "6"]].concat()));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn roundtrip_reports_identity() {
    let text = stdout(&gdm(&["roundtrip", "--p", "3", "--m", "2", "--n", "8", "--seed", "4"]));
    assert!(text.contains("identity:   ok"), "{text}");
}

use std::fs;
use std::process::{Command, Output};

use ace_core::circuit::{parse_circuit, OpKind};

fn ace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn channel_for_phosphorus_donors() {
    let o = ace(&[
        "channel",
        "--preset",
        "P:Si",
        "--gate-time",
        "1e-6",
        "--quiet",
    ]);
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p_i,p_x,p_y,p_z,p_x_eff,p_z_eff,alpha"));
    let alpha: f64 = lines
        .next()
        .unwrap()
        .rsplit(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(alpha.log10().floor(), 6.0);
}

#[test]
fn schedule_writes_ace_memory() {
    let o = ace(&["schedule", "--template", "memory5", "--quiet"]);
    assert!(o.status.success());
    let c = parse_circuit(&stdout(&o)).unwrap();
    assert_eq!(
        (
            c.count(OpKind::Xec),
            c.count(OpKind::Zec),
            c.count(OpKind::Wait)
        ),
        (2, 7, 5)
    );
}

#[test]
fn sweep_is_byte_identical_and_config_driven() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.cfg");
    fs::write(
        &config,
        "# ACE versus conventional, two levels\ntemplate = memory5\nlevels = 2\np_total = 1e-5\nalpha = 1:100:log\nschemes = conventional,ace\nquiet = true\n",
    )
    .unwrap();
    let mut outputs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let o = ace(&[
            "sweep",
            "--config",
            config.to_str().unwrap(),
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push(fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    assert!(text.starts_with("alpha,p_total,scheme,levels,depth,p_fail_x,p_fail_z,p_fail_total\n"));
    assert_eq!(text.lines().count(), 1 + 21 * 2);
    assert!(!text.contains('\r'));

    // flags typed after the config win
    let o = ace(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--alpha",
        "10",
    ]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn simulation_repeats_across_runs_and_workers() {
    let base = [
        "simulate",
        "--template",
        "bell",
        "--p-total",
        "1e-3",
        "--alpha",
        "10",
        "--shots",
        "40000",
        "--seed",
        "11",
        "--quiet",
    ];
    let runs: Vec<String> = [None, None, Some("1"), Some("3")]
        .iter()
        .map(|w| {
            let mut args = base.to_vec();
            if let Some(w) = w {
                args.extend(["--workers", w]);
            }
            let o = ace(&args);
            assert!(o.status.success());
            stdout(&o)
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let row: Vec<&str> = runs[0].lines().nth(1).unwrap().split(',').collect();
    assert_eq!((row[8], row[9]), ("40000", "11"));
}

#[test]
fn verify_passes() {
    let o = ace(&["verify"]);
    assert!(o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("all checks pass"));
    assert!(stdout(&o).contains("weight1_corrected,21,21"));
}

#[test]
fn analyze_scheduled_input_as_given() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rect.ftc");
    fs::write(&path, "qubits 1\nZEC 0\nWAIT 0\nZEC 0\n").unwrap();
    let o = ace(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--p-total",
        "1e-3",
        "--alpha",
        "10",
        "--quiet",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",as_given,1,"));
}

#[test]
fn input_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &["bogus"],
        &["channel"],
        &[
            "channel",
            "--preset",
            "P:Si",
            "--p-total",
            "1e-3",
            "--alpha",
            "2",
        ],
        &["channel", "--preset", "unobtainium"],
        &["analyze", "--template", "memory5"],
        &[
            "analyze",
            "--input",
            "/nonexistent/circuit.ftc",
            "--p-total",
            "1e-5",
            "--alpha",
            "10",
        ],
        &[
            "sweep",
            "--template",
            "memory5",
            "--p-total",
            "1e-5",
            "--alpha",
            "100:1:log",
        ],
        &[
            "sweep",
            "--template",
            "memory5",
            "--p-total",
            "1e-5",
            "--alpha",
            "10",
            "--levels",
            "3",
        ],
        &[
            "simulate",
            "--template",
            "bell",
            "--p-total",
            "1e-3",
            "--alpha",
            "10",
            "--shots",
            "0",
        ],
        &[
            "schedule",
            "--template",
            "memory5",
            "--scheme",
            "ace_rebalanced",
        ],
        &["sweep", "--config", "/nonexistent.cfg"],
    ];
    for args in cases {
        let o = ace(args);
        assert_eq!(
            o.status.code(),
            Some(1),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ftc");
    fs::write(&path, "qubits 2\nCX 0 0\n").unwrap();
    let o = ace(&["schedule", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

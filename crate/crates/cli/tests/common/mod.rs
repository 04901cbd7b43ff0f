#![allow(dead_code)]

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("seqtrans").chain(args.iter().copied());
    let code = seqtrans_cli::run_app(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Corpus runs pinned by golden files: (file stem, arguments).
pub const GOLDEN_RUNS: &[(&str, &[&str])] = &[
    (
        "zeta_1_1",
        &[
            "-p",
            "zeta_dirichlet:z=1.1",
            "-N",
            "20",
            "-t",
            "levin_u",
            "-t",
            "rho",
            "-t",
            "epsilon",
        ],
    ),
    (
        "euler_1",
        &[
            "-p",
            "euler_factorial:x=1",
            "-N",
            "25",
            "-t",
            "weniger_delta",
            "-t",
            "epsilon",
        ],
    ),
    (
        "geometric",
        &[
            "-p",
            "geometric:s=5,c=-5,lambda=0.8",
            "-N",
            "10",
            "-t",
            "aitken",
            "-t",
            "theta",
            "-t",
            "levin_t",
        ],
    ),
    (
        "decay_half",
        &[
            "-p",
            "decay_model:s=1,alpha=0.5,beta=1,c0=1,c1=0.5",
            "-N",
            "30",
            "-t",
            "rho_osada:alpha=0.5",
            "-t",
            "bdg:alpha=0.5",
            "-t",
            "richardson",
        ],
    ),
    (
        "ln2",
        &[
            "-p",
            "power_series:function=ln1p,z=1",
            "-N",
            "12",
            "-t",
            "pade_epsilon",
            "-t",
            "levin_t",
            "-t",
            "theta_iterated",
            "--path",
            "staircase",
        ],
    ),
    (
        "expsum",
        &[
            "-p",
            "exponential_sum:s=2,c=3;1,lambda=0.5;-0.25",
            "-N",
            "10",
            "-t",
            "epsilon",
            "-t",
            "rho_iterated",
            "--path",
            "order_constant(1)",
        ],
    ),
];

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares `text` with the golden file, or rewrites it when
/// `SEQTRANS_BLESS` is set.
pub fn check_golden(name: &str, text: &str) -> Result<(), String> {
    let path = golden_dir().join(name);
    if std::env::var_os("SEQTRANS_BLESS").is_some() {
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want == text.as_bytes() {
        Ok(())
    } else {
        Err(format!("{name} differs from the golden file"))
    }
}

/// Every golden run in both formats; returns the failures.
pub fn golden_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for (stem, args) in GOLDEN_RUNS {
        for fmt in ["tsv", "json"] {
            let mut a = vec!["run"];
            a.extend_from_slice(args);
            a.extend_from_slice(&["-o", fmt]);
            let (code, out, err) = cli(&a);
            if code != 0 {
                bad.push(format!("{stem}.{fmt}: exit {code}: {err}"));
                continue;
            }
            if let Err(e) = check_golden(&format!("{stem}.{fmt}"), &out) {
                bad.push(e);
            }
        }
    }
    bad
}

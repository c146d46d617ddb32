use num_complex::Complex64;
use opcalc::ModelKind;
use qtoda_cli::*;
use std::process::Command;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn qtoda() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qtoda"))
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qtoda-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn default_config_is_valid() {
    let cfg = RunConfig::default();
    cfg.validate().unwrap();
    assert_eq!(cfg.periods(), (c(1.0, 0.0), c(1.3, 0.9)));
    assert_eq!(RunConfig::from_toml("").unwrap(), cfg);
    assert_eq!(cfg.hash().len(), 64);
    assert_eq!(cfg.hash(), RunConfig::default().hash());
}

#[test]
fn toml_fields_and_presets() {
    let cfg = RunConfig::from_toml(
        r#"
        preset = "conjugate"
        kappa1 = 0.1
        model = "qtoda"
        n = [2]
        seed = 9
        tier = "full"
        [tolerances]
        specfun = 1e-9
        "#,
    )
    .unwrap();
    assert_eq!(cfg.periods(), (c(1.0, 0.6), c(1.0, -0.6)));
    assert_eq!(cfg.model.kinds(), vec![ModelKind::QToda]);
    assert_eq!(cfg.tier, Tier::Full);
    assert_eq!(cfg.tolerances.specfun, Some(1e-9));
    let explicit = RunConfig::from_toml("preset = \"conjugate\"\nomega1 = [2.0, 0.0]").unwrap();
    assert_eq!(explicit.periods(), (c(2.0, 0.0), c(1.0, -0.6)));
    assert_ne!(cfg.hash(), RunConfig::default().hash());
}

#[test]
fn config_errors() {
    for bad in [
        "omega_1 = [1.0, 0.0]",
        "[tolerances]\nfoo = 1.0",
        "omega1 = [-1.0, 0.0]",
        "n = []",
        "n = [7]",
        "truncation = 0",
        "[quadrature]\ntol = 0.0",
        "[tolerances]\nkernels = -1.0",
        "model = \"toda3\"",
    ] {
        let e = RunConfig::from_toml(bad).unwrap_err();
        assert!(matches!(e, CliError::ConfigInvalid(_)), "{bad}: {e}");
        assert_eq!(e.exit_code(), 2);
    }
}

#[test]
fn resonance_guard() {
    let e = RunConfig::from_toml("preset = \"self-dual\"\nmethod = \"product\"").unwrap_err();
    assert!(e.to_string().contains("resonant"), "{e}");
    RunConfig::from_toml("preset = \"self-dual\"").unwrap();
}

#[test]
fn zero_tolerance_fails_deterministically() {
    let cfg = RunConfig {
        tolerances: Tolerances {
            specfun: Some(0.0),
            ..Default::default()
        },
        ..RunConfig::default()
    };
    for _ in 0..2 {
        let r = run_suite(Suite::Specfun, &cfg).unwrap();
        assert!(r.checks.iter().all(|c| !c.pass));
        let e = verdict(&r).unwrap_err();
        assert!(e.to_string().contains("specfun.quasi_periodicity"), "{e}");
        assert_eq!(e.exit_code(), 1);
    }
}

#[test]
fn same_seed_same_report() {
    let cfg = RunConfig::default();
    let a = run_suite(Suite::All, &cfg).unwrap();
    let b = run_suite(Suite::All, &cfg).unwrap();
    assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
    assert!(a.passed());
    let other = run_suite(Suite::All, &RunConfig { seed: 7, ..cfg }).unwrap();
    assert_ne!(
        a.check("specfun.reflection").unwrap().max_rel_residual,
        other.check("specfun.reflection").unwrap().max_rel_residual
    );
    assert_eq!(other.seed, 7);
}

#[test]
fn pass_matches_tolerance() {
    let r = run_suite(Suite::All, &RunConfig::default()).unwrap();
    for c in &r.checks {
        assert_eq!(c.pass, c.max_rel_residual <= c.tolerance, "{}", c.name);
        assert!(c.samples > 0, "{}", c.name);
        assert!(c.params.is_object());
    }
}

#[test]
fn report_schema() {
    let r = run_suite(Suite::Qweyl, &RunConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    keys.sort();
    assert_eq!(keys, ["checks", "config_hash", "seed", "suite"]);
    let mut keys: Vec<_> = v["checks"][0].as_object().unwrap().keys().cloned().collect();
    keys.sort();
    assert_eq!(
        keys,
        ["max_abs_residual", "max_rel_residual", "name", "params", "pass", "samples", "seconds", "tolerance"]
    );
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn tier_adds_quadrature_checks() {
    let core = check_defs(Suite::All, &RunConfig::default()).unwrap();
    let full = check_defs(
        Suite::All,
        &RunConfig {
            tier: Tier::Full,
            ..RunConfig::default()
        },
    )
    .unwrap();
    let names: Vec<_> = full.iter().map(|d| d.name.as_str()).filter(|n| !core.iter().any(|d| d.name == *n)).collect();
    assert_eq!(names, ["kernels.llm_quadrature", "kernels.q_commutativity", "spectral.reduced_baxter"]);
}

#[test]
fn model_tag_restricts_checks() {
    let cfg = RunConfig {
        model: ModelTag::Toda2,
        ..RunConfig::default()
    };
    let r = run_suite(Suite::Kernels, &cfg).unwrap();
    assert!(r.passed());
    assert_eq!(r.check("kernels.baxter").unwrap().samples, 75);
}

#[test]
fn dsine_at_origin_is_on_lattice() {
    let args = EvalArgs {
        at: Some(c(0.0, 0.0)),
        ..Default::default()
    };
    let e = eval_point(Target::Dsine, &args, &RunConfig::default()).unwrap_err();
    assert_eq!(e.to_string(), "OnLattice(zero, m=0, n=0)");
}

#[test]
fn dsine_value() {
    let args = EvalArgs {
        at: Some(c(0.3, -0.9)),
        ..Default::default()
    };
    let v = eval_point(Target::Dsine, &args, &RunConfig::default()).unwrap();
    assert_eq!(format_value(v[0].1), "1.14821727528992e0 2.77231307633808e-1");
}

#[test]
fn kernel_lattice_errors_name_the_factor() {
    let e: CliError = kernels::KernelError::OnLattice {
        factor: "UV",
        source: specfun::SpecError::OnLattice {
            z: c(0.0, 0.0),
            kind: specfun::LatticeKind::Pole,
            m: -1,
            n: -2,
        },
    }
    .into();
    assert_eq!(e.to_string(), "OnLattice(pole, m=-1, n=-2) in factor UV");
    assert_eq!(e.exit_code(), 1);
}

#[test]
fn t_tau_vanishes_at_its_root() {
    let args = EvalArgs {
        model: Some(ModelKind::QToda),
        n: Some(1),
        at_root: Some(1),
        ..Default::default()
    };
    let v = eval_point(Target::TTau, &args, &RunConfig::default()).unwrap();
    assert!(v[0].1.norm() < 1e-14, "{}", v[0].1);
    let args = EvalArgs {
        n: Some(3),
        at_root: Some(2),
        ..args
    };
    assert!(eval_point(Target::TTau, &args, &RunConfig::default()).unwrap()[0].1.norm() < 1e-12);
    let args = EvalArgs { at_root: Some(4), ..args };
    assert!(matches!(eval_point(Target::TTau, &args, &RunConfig::default()), Err(CliError::Parse(_))));
}

#[test]
fn kernel_q_seeded_is_reproducible() {
    let args = EvalArgs {
        n: Some(1),
        seed: Some(5),
        ..Default::default()
    };
    let cfg = RunConfig::default();
    let a = eval_point(Target::KernelQ, &args, &cfg).unwrap()[0].1;
    let b = eval_point(Target::KernelQ, &args, &cfg).unwrap()[0].1;
    assert!(a.is_finite());
    assert_eq!(a.re.to_bits(), b.re.to_bits());
    assert_eq!(a.im.to_bits(), b.im.to_bits());
    let other = eval_point(Target::KernelQ, &EvalArgs { seed: Some(6), ..args }, &cfg).unwrap()[0].1;
    assert_ne!(a, other);
}

#[test]
fn grid_csv_shape() {
    let args = EvalArgs::default();
    let grid: Grid = "-1,1,-0.5,0.5,4".parse().unwrap();
    let csv = eval_grid(Target::Dsine, &args, &RunConfig::default(), grid).unwrap();
    let rows: Vec<_> = csv.lines().collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.split(',').count() == 4));
    assert!("1,2,3".parse::<Grid>().is_err());
    assert!("0,1,0,1,1".parse::<Grid>().is_err());
}

#[test]
fn complex_parsing() {
    assert_eq!(parse_complex("-0.3,0.1").unwrap(), c(-0.3, 0.1));
    assert_eq!(parse_complex(" 2 ").unwrap(), c(2.0, 0.0));
    assert!(matches!(parse_complex("1,a"), Err(CliError::Parse(_))));
}

#[test]
fn binary_exit_codes() {
    let out = qtoda().args(["verify", "qweyl"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS qweyl.rmm"));

    let cfg = tmp("zero.toml");
    std::fs::write(&cfg, "[tolerances]\nspecfun = 0.0\n").unwrap();
    let out = qtoda().args(["verify", "specfun", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("specfun.quasi_periodicity"));

    let bad = tmp("bad.toml");
    std::fs::write(&bad, "colour = 3\n").unwrap();
    let out = qtoda().args(["verify", "all", "--config"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = qtoda().args(["eval", "dsine", "--at", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("OnLattice(zero, m=0, n=0)"));
}

#[test]
fn binary_json_report_and_seed() {
    let path = tmp("report.json");
    let out = qtoda()
        .args(["verify", "spectral", "--seed", "11", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.suite, "spectral");
    assert_eq!(r.seed, 11);
    let lib = run_suite(Suite::Spectral, &RunConfig { seed: 11, ..RunConfig::default() }).unwrap();
    assert_eq!(r.without_timing(), lib.without_timing());
}

#[test]
fn binary_eval_and_poles() {
    let out = qtoda().args(["eval", "t-tau", "--model", "qtoda", "--n", "1", "--at-root", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.starts_with("t_tau = "), "{s}");

    let out = qtoda().args(["eval", "kernel-l", "--at", "0.1", "--u", "0.2", "--v", "-0.3,0.05"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = qtoda().args(["eval", "dsine", "--at", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let path = tmp("poles.json");
    let out = qtoda().args(["poles", "--mmax", "1", "--n", "3", "--json"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let pts = v.as_array().unwrap();
    assert_eq!(pts.len(), 4);
    assert!(pts.iter().all(|p| p["order"] == 3));

    let out = qtoda().args(["poles", "--model", "toda2"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[]");
}

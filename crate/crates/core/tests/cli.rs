//! End-to-end runs of the binary on fixture files.

use std::path::{Path, PathBuf};
use std::process::Command;

use homanti::algebra::{check_axioms, HomLieAntialgebra};
use homanti::catalog::k1;
use homanti::cohomology::CochainComplex;
use homanti::deformations::NijenhuisCandidate;
use homanti::extensions::{cochain_to_omega, Omega};
use homanti::io::{from_json, to_canonical_json, AlgebraFile, OmegaFile, OperatorFile};
use homanti::matrix::Matrix;
use homanti::representation::adjoint_representation;
use homanti::scalar::{half, int};
use homanti::tensor::Tensor3;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homanti"))
        .args(args)
        .env_remove("HOMANTI_MAX_DEGREE")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write<T: serde::Serialize>(dir: &Path, name: &str, value: &T) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, to_canonical_json(value).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn k1_coboundary() -> Omega {
    let a = k1();
    let rho = adjoint_representation(&a).unwrap();
    let c = CochainComplex::new(&a, &rho).unwrap();
    let g = homanti::extensions::one_cochain(
        &c,
        &Matrix::from_rows(vec![vec![int(1)]]).unwrap(),
        &Matrix::from_rows(vec![vec![int(2), int(-1)], vec![int(0), int(3)]]).unwrap(),
    )
    .unwrap();
    cochain_to_omega(&c, &c.apply(&g).unwrap()).unwrap()
}

#[test]
fn extend_pipeline_writes_an_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.json", &OmegaFile::from_omega(&k1_coboundary()));
    let out = dir.path().join("ext.json");
    let (code, stdout, _) = run(&["extend", "k1", "--rep", "adjoint", "--cocycle", s(&w), "--algebra-out", s(&out)]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("cocycle: true"));
    let file: AlgebraFile = from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let big = file.to_algebra().unwrap();
    assert_eq!((big.even_dim(), big.odd_dim()), (2, 4));
    assert!(check_axioms(&big).passed());
    assert_eq!(run(&["check", s(&out)]).0, 0);
}

#[test]
fn extend_with_a_non_cocycle_fails() {
    let dir = tempfile::tempdir().unwrap();
    let mut omega = k1_coboundary();
    omega.w0.add_at(0, 0, 0, &int(1));
    let w = write(dir.path(), "w.json", &OmegaFile::from_omega(&omega));
    let (code, stdout, _) = run(&["--json", "extend", "k1", "--rep", "adjoint", "--cocycle", s(&w)]);
    assert_eq!(code, 1);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["verdict"], "fail");
    assert_eq!(report["cocycle"], false);
}

#[test]
fn deform_pipeline_at_one_third() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.json", &OmegaFile::from_omega(&k1_coboundary()));
    let out = dir.path().join("deformed.json");
    let (code, stdout, _) = run(&["deform", "k1", "--omega", s(&w), "--t", "1/3", "--algebra-out", s(&out)]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("condition (ii): pass"));
    assert_eq!(run(&["check", s(&out)]).0, 0);
    assert_eq!(run(&["deform", "k1", "--omega", s(&w), "--t", "-1"]).0, 0);
    assert_eq!(run(&["deform", "k1", "--omega", s(&w), "--t", "1/0"]).0, 2);
}

#[test]
fn deform_fails_when_only_the_cocycle_condition_holds() {
    let dir = tempfile::tempdir().unwrap();
    let base = HomLieAntialgebra::abelian(Matrix::identity(1), Matrix::identity(2)).unwrap();
    let mut w0 = Tensor3::zeros(1, 1, 1);
    w0.set(0, 0, 0, int(1));
    let mut w1 = Tensor3::zeros(1, 2, 2);
    w1.set(0, 0, 0, int(1));
    w1.set(0, 1, 1, half());
    let mut w2 = Tensor3::zeros(2, 2, 1);
    w2.set(0, 1, 0, half());
    w2.set(1, 0, 0, -half());
    let alg = write(dir.path(), "abelian.json", &AlgebraFile::from_algebra(&base));
    let w = write(dir.path(), "w.json", &OmegaFile::from_omega(&Omega { w0, w1, w2 }));
    let (code, stdout, _) = run(&["deform", s(&alg), "--omega", s(&w), "--t", "1"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("condition (i): fail"));
    assert!(stdout.contains("condition (ii): pass"));
}

#[test]
fn nijenhuis_identity_emits_omega_and_triviality() {
    let (code, stdout, _) = run(&["--json", "nijenhuis", "k1", "--phi", "id"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["verdict"], "pass");
    let omega: OmegaFile = serde_json::from_value(report["omega"].clone()).unwrap();
    let a = k1();
    let w = omega.to_omega(1, 2, 1, 2).unwrap();
    assert_eq!((&w.w0, &w.w1, &w.w2), (a.mu(), a.nu(), a.br()));
    let ts: Vec<&str> = report["triviality"].as_array().unwrap().iter().map(|s| s["t"].as_str().unwrap()).collect();
    assert_eq!(ts, ["1", "-1", "1/2", "1/3"]);
}

#[test]
fn nijenhuis_rejects_mismatched_scalars() {
    let dir = tempfile::tempdir().unwrap();
    let phi = NijenhuisCandidate {
        phi0: Matrix::identity(1),
        phi1: Matrix::scalar(2, &int(2)),
    };
    let file = write(dir.path(), "phi.json", &OperatorFile::from_candidate(&phi));
    let (code, stdout, _) = run(&["nijenhuis", "k1", "--phi", s(&file)]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL  nijenhuis-bracket"), "{stdout}");
}

#[test]
fn h2_on_an_idempotent_base() {
    let dir = tempfile::tempdir().unwrap();
    let mut mu = Tensor3::zeros(1, 1, 1);
    mu.set(0, 0, 0, int(1));
    let base = HomLieAntialgebra::new(
        1,
        2,
        mu,
        Tensor3::zeros(1, 2, 2),
        Tensor3::zeros(2, 2, 1),
        Matrix::identity(1),
        Matrix::identity(2),
    )
    .unwrap();
    let file = write(dir.path(), "idem.json", &AlgebraFile::from_algebra(&base));
    let (code, stdout, _) = run(&["--json", "h2", s(&file), "--rep", "trivial"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["dim"], 1);
    assert_eq!(report["representatives"][0]["extension_axioms"], "pass");
}

#[test]
fn conformal_check_is_reported_not_asserted() {
    let first = run(&["check", "conformal?r=2", "--window", "1"]);
    let second = run(&["check", "conformal?r=2", "--window", "1"]);
    assert_eq!(first, second);
    assert_eq!(first.0, 1);
    assert!(first.1.contains("pass  hom-associativity"));
    assert_eq!(run(&["export", "conformal?r=2"]).0, 2);
    assert_eq!(run(&["cohomology", "conformal?r=2", "--rep", "adjoint", "--degree", "1"]).0, 2);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["check", "no-such-algebra"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["cohomology", "k1", "--rep", "missing.json", "--degree", "2"]).0, 2);
    assert_eq!(run(&["cohomology", "k1", "--rep", "trivial:1", "--degree", "2"]).0, 2);
    assert_eq!(run(&["cohomology", "k1", "--rep", "adjoint", "--degree", "0"]).0, 2);
    assert_eq!(run(&["check", "k1-twisted?mu=0"]).0, 2);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout, _) = run(&["--json", "--out", s(&path), "check", "k1", "--multiplicative"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert!(report["multiplicativity"].is_object());
}

#[test]
fn cohomology_matches_library_dimensions() {
    let (code, stdout, _) = run(&["--json", "cohomology", "k1", "--rep", "adjoint", "--degree", "3"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    let a = k1();
    let rho = adjoint_representation(&a).unwrap();
    let dims = CochainComplex::new(&a, &rho).unwrap().cohomology_dim(3).unwrap();
    assert_eq!(report["cochain_dim"], dims.cochain_dim);
    assert_eq!(report["cocycle_dim"], dims.cocycle_dim);
    assert_eq!(report["coboundary_dim"], dims.coboundary_dim);
    assert_eq!(report["cohomology_dim"], dims.cohomology_dim);
    assert_eq!(report["modular_ranks_agree"], true);
}
